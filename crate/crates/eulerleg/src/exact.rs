//! Exact arithmetic backbone: arbitrary-precision rationals and dense
//! polynomials over them.
//!
//! Everything downstream that claims "exact" bottoms out here. `Rational` is
//! `num_rational::BigRational`, which already maintains the invariants the
//! rest of the crate relies on (fully reduced, positive denominator).
//! [`Polynomial`] is generic over its coefficient ring so that a polynomial
//! in x whose coefficients are polynomials in t is just
//! `Polynomial<Polynomial<Rational>>`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// The rational `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `x^k` for a nonnegative integer exponent.
pub fn pow(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Generalized binomial coefficient `C(top, k) = top (top−1) ⋯ (top−k+1) / k!`.
///
/// The upper argument may be any rational (negative integers and half-integers
/// included); the falling-factorial definition keeps the usual identities,
/// in particular `C(m, k) = 0` for integer `0 ≤ m < k`.
pub fn binomial_general(top: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= (top - int(j as i64)) / int(j as i64 + 1);
    }
    acc
}

/// `C(top, k)` for an integer upper argument.
pub fn binomial_int(top: i64, k: usize) -> Rational {
    binomial_general(&int(top), k)
}

/// Coefficient rings the polynomial type can sit over.
///
/// Blanket-implemented; `Rational` qualifies, and so does
/// `Polynomial<Rational>` itself, which is what lets polynomials nest.
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<C> Coeff for C where C: Clone + PartialEq + Zero + One + Neg<Output = C> + Sub<Output = C> {}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of the i-th
/// power. The zero polynomial is the empty coefficient list and the list
/// never ends in a zero, so `coeffs.len() − 1` is always the degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

pub type RationalPolynomial = Polynomial<Rational>;

impl<C: Coeff> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(k + 1);
        coeffs.resize_with(k, C::zero);
        coeffs.push(c);
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of the i-th power, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Product truncated to the first `cap` coefficients.
    pub fn mul_truncated(&self, rhs: &Self, cap: usize) -> Self {
        let mut out = Vec::new();
        out.resize_with(cap.min(self.coeffs.len() + rhs.coeffs.len()), C::zero);
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= cap || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= cap {
                    break;
                }
                let t = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = t;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Self::new(out)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Self::new(out)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = Vec::new();
        out.resize_with(self.coeffs.len() + rhs.coeffs.len() - 1, C::zero);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = t;
            }
        }
        Self::new(out)
    }
}

impl RationalPolynomial {
    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Render with a custom variable letter; see the `Display` impl for the
    /// format.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();

        let mut s = String::new();
        for (i, c) in ints.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            if !mag.is_one() || i == 0 {
                s.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => s.push_str(var),
                _ => {
                    s.push_str(var);
                    s.push('^');
                    s.push_str(&i.to_string());
                }
            }
        }
        if den.is_one() {
            s
        } else {
            format!("({s})/{den}")
        }
    }
}

/// Prints the polynomial in `t` over a common denominator, e.g.
/// `(3t^2 - 1)/2`.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl<C: Coeff> Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for Polynomial<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl<C: Coeff> $trait for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Self) -> Self {
                self.$inner(&rhs)
            }
        }
        impl<'a, C: Coeff> $trait for &'a Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Self) -> Polynomial<C> {
                self.$inner(rhs)
            }
        }
        impl<'a, C: Coeff> $trait<&'a Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<C: Coeff> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -self.clone()
    }
}
