//! Central coefficients of trinomial powers and the square-root generating
//! function that collects them.
//!
//! For B_n = [xⁿ](a + bx + cx²)ⁿ the closed multinomial form is
//!
//! ```text
//! B_n = Σ_j n!/(j!·j!·(n−2j)!) · aʲ b^(n−2j) cʲ ,   0 ≤ j ≤ n/2
//! ```
//!
//! and the B_n are exactly the Taylor coefficients of
//! F(x) = (1 − 2bx + (b² − 4ac)x²)^(−1/2). With a = (t−1)/2, b = t,
//! c = (t+1)/2 the discriminant collapses to 1 and F becomes the Legendre
//! generating function (1 − 2tx + x²)^(−1/2), so B_n = P_n(t).
//!
//! [`gf_coefficients`] expands F by composing the binomial series of
//! (1 + u)^(−1/2), deliberately not by any three-term recurrence, so it can
//! serve as an independent oracle against the other routes.

use num_traits::{One, Zero};

use crate::exact::{
    binomial_general, binomial_int, int, pow, ratio, Polynomial, Rational, RationalPolynomial,
};

/// Coefficients of the trinomial `a + bx + cx²`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrinomialParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl TrinomialParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        TrinomialParams { a, b, c }
    }

    /// The trinomial whose central coefficients are P_n(t).
    pub fn legendre(t: &Rational) -> Self {
        let half = ratio(1, 2);
        TrinomialParams {
            a: (t - Rational::one()) * &half,
            b: t.clone(),
            c: (t + Rational::one()) * &half,
        }
    }

    /// b² − 4ac.
    pub fn discriminant(&self) -> Rational {
        &self.b * &self.b - &self.a * &self.c * int(4)
    }
}

/// B_n by the closed multinomial sum; the multinomial is split as
/// C(n,j)·C(n−j,j) so everything stays in small exact binomials.
pub fn central_coeff(p: &TrinomialParams, n: usize) -> Rational {
    let mut sum = Rational::zero();
    for j in 0..=n / 2 {
        sum += binomial_int(n as i64, j)
            * binomial_int(n as i64 - j as i64, j)
            * pow(&p.a, j)
            * pow(&p.b, n - 2 * j)
            * pow(&p.c, j);
    }
    sum
}

/// B_n by brute force: expand (a + bx + cx²)ⁿ with repeated polynomial
/// multiplication and read off the middle coefficient.
pub fn central_coeff_by_expansion(p: &TrinomialParams, n: usize) -> Rational {
    RationalPolynomial::new(vec![p.a.clone(), p.b.clone(), p.c.clone()])
        .pow(n)
        .coeff(n)
}

/// P_n as a polynomial in t, extracted from the trinomial route: expand
/// T(t,x) = ((t−1)/2 + t·x + ((t+1)/2)·x²)ⁿ as a polynomial in x whose
/// coefficients are polynomials in t, and take the coefficient of xⁿ.
pub fn legendre_via_trinomial(n: usize) -> RationalPolynomial {
    let half = ratio(1, 2);
    let a = RationalPolynomial::new(vec![-&half, half.clone()]);
    let b = RationalPolynomial::monomial(Rational::one(), 1);
    let c = RationalPolynomial::new(vec![half.clone(), half]);
    Polynomial::new(vec![a, b, c]).pow(n).coeff(n)
}

/// First `count` Taylor coefficients of (1 − 2bx + disc·x²)^(−1/2), by
/// composing the binomial series of (1 + u)^(−1/2) with u = −2bx + disc·x².
pub fn gf_coefficients(b: &Rational, disc: &Rational, count: usize) -> Vec<Rational> {
    let u = RationalPolynomial::new(vec![Rational::zero(), b * int(-2), disc.clone()]);
    let mut series = RationalPolynomial::zero();
    let mut upow = RationalPolynomial::one();
    let minus_half = ratio(-1, 2);
    for k in 0..count {
        if k > 0 {
            upow = upow.mul_truncated(&u, count);
            if upow.is_zero() {
                break;
            }
        }
        series = series + upow.scale(&binomial_general(&minus_half, k));
    }
    (0..count).map(|i| series.coeff(i)).collect()
}

/// Residual of the three-term relation the central coefficients satisfy:
///
/// ```text
/// n·B_n − (2n−1)·b·B_{n−1} + (n−1)·(b²−4ac)·B_{n−2}
/// ```
///
/// which is identically zero (for unit discriminant and b = t this is the
/// Legendre recurrence shifted by one). Panics if `n < 2`.
pub fn section22_residual(p: &TrinomialParams, n: usize) -> Rational {
    assert!(n >= 2, "the relation needs n >= 2, got {n}");
    central_coeff(p, n) * int(n as i64) - central_coeff(p, n - 1) * &p.b * int(2 * n as i64 - 1)
        + central_coeff(p, n - 2) * p.discriminant() * int(n as i64 - 1)
}
