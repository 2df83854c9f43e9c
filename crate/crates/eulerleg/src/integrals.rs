//! Integral representations: the Laplace mean and its reciprocal-exponent
//! partner, the cosine-kernel family A_n(a, k) with its difference and
//! functional equations, and the singular integral between the roots of a
//! quadratic radicand.
//!
//! All quadrature-backed operations take a tolerance and return the value
//! together with the driver's last successive difference as `est_error`.
//! Identity checks return residuals measured relative to
//! max(1, |participating terms|), so they read as absolute residuals
//! wherever the terms are O(1) and stay meaningful where P_n explodes.

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exact::{binomial_int, int, pow, Rational};
use crate::quadrature::{
    gauss_chebyshev_rule, integrate_real_to_tolerance, integrate_to_tolerance, RuleKind,
};
use crate::{Error, Result};

use std::f64::consts::PI;

/// A quadrature-backed value and its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub est_error: f64,
}

/// A Laplace-representation value; `imag_residue` is the magnitude of the
/// discarded imaginary part (zero on the real-arithmetic branches).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceEstimate {
    pub value: f64,
    pub est_error: f64,
    pub imag_residue: f64,
}

fn laplace_integral(expo: i32, t: f64, tol: f64) -> Result<LaplaceEstimate> {
    debug_assert!(t >= 0.0);
    if t > 1.0 {
        let s = (t * t - 1.0).sqrt();
        let (v, est) = integrate_real_to_tolerance(
            |phi| (t + s * phi.cos()).powi(expo),
            0.0,
            PI,
            RuleKind::GaussLegendre,
            tol,
        )?;
        return Ok(LaplaceEstimate {
            value: v / PI,
            est_error: est / PI,
            imag_residue: 0.0,
        });
    }
    let s = (1.0 - t * t).sqrt();
    let (v, est) = integrate_to_tolerance(
        |phi| Complex64::new(t, s * phi.cos()).powi(expo),
        0.0,
        PI,
        RuleKind::GaussLegendre,
        tol,
    )?;
    let imag = (v.im / PI).abs();
    if imag >= tol {
        return Err(Error::ImaginaryResidue {
            real: v.re / PI,
            imag,
            tol,
        });
    }
    Ok(LaplaceEstimate {
        value: v.re / PI,
        est_error: est / PI,
        imag_residue: imag,
    })
}

/// Laplace mean with the positive exponent:
///
/// ```text
/// P_n(t) = (1/π) ∫₀^π (t + √(t²−1)·cosφ)ⁿ dφ
/// ```
///
/// For |t| < 1 the root is taken as i√(1−t²) and the computation runs in
/// complex arithmetic; the imaginary part of the mean must fall below `tol`
/// and is discarded. Expanding the power shows only even powers of the root
/// survive the integration, so the identity holds for every real t with no
/// branch adjustment; t = ±1 short-circuits to (±1)ⁿ.
pub fn laplace_positive(n: u32, t: f64, tol: f64) -> Result<LaplaceEstimate> {
    if t == 1.0 || t == -1.0 {
        let value = if t > 0.0 || n.is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        return Ok(LaplaceEstimate {
            value,
            est_error: 0.0,
            imag_residue: 0.0,
        });
    }
    // (−t ± √cosφ)ⁿ integrates to (−1)ⁿ times the value at −t, matching
    // the parity of P_n, so fold to t ≥ 0 once instead of trusting powi
    // with a negative complex base twice per node.
    let sign = if t < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    let r = laplace_integral(n as i32, t.abs(), tol)?;
    Ok(LaplaceEstimate {
        value: sign * r.value,
        ..r
    })
}

/// Reciprocal-exponent Laplace representation:
///
/// ```text
/// P_n(t) = (1/π) ∫₀^π dφ / (t + √(t²−1)·cosφ)^(n+1)
/// ```
///
/// Valid as written for t > 1 and, through the i√(1−t²) branch, for
/// 0 < t < 1. For negative t the base t + √(t²−1)cosφ lives in the other
/// component of the branch domain (the two are separated by the imaginary
/// axis, where the base can vanish) and the raw integral produces −P_n(t);
/// the evaluation therefore reflects through parity, P_n(t) = (−1)ⁿ P_n(−t),
/// and integrates at |t|. At t = 0 the integrand has a non-integrable pole
/// at φ = π/2 (the integral diverges, even as a principal value), which is a
/// domain error. t = ±1 short-circuits to (±1)ⁿ.
pub fn laplace_negative(n: u32, t: f64, tol: f64) -> Result<LaplaceEstimate> {
    if t == 1.0 || t == -1.0 {
        let value = if t > 0.0 || n.is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        return Ok(LaplaceEstimate {
            value,
            est_error: 0.0,
            imag_residue: 0.0,
        });
    }
    if t == 0.0 {
        return Err(Error::Domain(
            "reciprocal Laplace integrand has a pole on the path at t = 0".into(),
        ));
    }
    let sign = if t < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    let r = laplace_integral(-(n as i32) - 1, t.abs(), tol)?;
    Ok(LaplaceEstimate {
        value: sign * r.value,
        ..r
    })
}

/// |laplace_positive − laplace_negative| relative to max(1, |values|): the
/// two exponent conventions must produce the same polynomial value.
pub fn jacobi_relation_residual(n: u32, t: f64, tol: f64) -> Result<f64> {
    let p = laplace_positive(n, t, tol)?;
    let q = laplace_negative(n, t, tol)?;
    let scale = p.value.abs().max(q.value.abs()).max(1.0);
    Ok((p.value - q.value).abs() / scale)
}

/// Parameters of the cosine-kernel integral
/// A(a, k, n) = ∫₀^π cos(kφ) / (1 + a² − 2a·cosφ)ⁿ dφ.
///
/// `exponent` is the printed denominator exponent and may be negative or
/// zero (negative values put powers of the kernel in the numerator).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AFamilyPoint {
    a: f64,
    harmonic: u32,
    exponent: i32,
}

impl AFamilyPoint {
    /// Requires |a| < 1 so the kernel stays positive and the closed forms
    /// converge.
    pub fn new(a: f64, harmonic: u32, exponent: i32) -> Result<Self> {
        if !a.is_finite() || a.abs() >= 1.0 {
            return Err(Error::Domain(format!(
                "cosine-kernel parameter needs |a| < 1, got {a}"
            )));
        }
        Ok(AFamilyPoint {
            a,
            harmonic,
            exponent,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn harmonic(&self) -> u32 {
        self.harmonic
    }

    pub fn exponent(&self) -> i32 {
        self.exponent
    }
}

/// A(a, k, n) by direct quadrature. a = 0 short-circuits: the kernel is
/// identically 1, leaving π for k = 0 and 0 otherwise.
pub fn a_family_direct(p: &AFamilyPoint, tol: f64) -> Result<Estimate> {
    if p.a == 0.0 {
        let value = if p.harmonic == 0 { PI } else { 0.0 };
        return Ok(Estimate {
            value,
            est_error: 0.0,
        });
    }
    let a = p.a;
    let k = p.harmonic as f64;
    let expo = -p.exponent;
    let (value, est_error) = integrate_real_to_tolerance(
        |phi| (k * phi).cos() * (1.0 + a * a - 2.0 * a * phi.cos()).powi(expo),
        0.0,
        PI,
        RuleKind::GaussLegendre,
        tol,
    )?;
    Ok(Estimate { value, est_error })
}

/// Closed form of the reciprocal cosine-kernel integral, exactly:
///
/// ```text
/// ∫₀^π cos(kφ)/(1 + a² − 2a·cosφ)^(n+1) dφ  =  π · aᵏ/(1−a²)^(2n+1) · V
/// V = Σ_j C(n+k, k+j)·C(n−k, j)·a^(2j)
/// ```
///
/// Returns the rational factor multiplying π. The sum runs to j = n, where
/// the first binomial cuts it off; for n ≥ k the ordinary binomial
/// C(n−k, j) already vanishes past j = n−k, and for n < k that factor is
/// the falling-factorial value (−1)ʲ·C(k−n−1+j, j), nonzero through j = n.
pub fn a_family_explicit(a: &Rational, k: usize, n: usize) -> Result<Rational> {
    let one = int(1);
    if a.abs() >= one {
        return Err(Error::Domain(format!(
            "cosine-kernel parameter needs |a| < 1, got {a}"
        )));
    }
    let a2 = a * a;
    let mut v = Rational::zero();
    for j in 0..=n {
        v += binomial_int((n + k) as i64, k + j)
            * binomial_int(n as i64 - k as i64, j)
            * pow(&a2, j);
    }
    let denom = pow(&(one - a2), 2 * n + 1);
    Ok(pow(a, k) * v / denom)
}

/// Residual of the three-term difference equation in the exponent,
///
/// ```text
/// n(n−1)(1−a²)²·A_{n+1} = (n−1)(2n−1)(1+a²)·A_n + (k²−(n−1)²)·A_{n−1}
/// ```
///
/// relative to the largest participating term. Panics if `n < 2`.
pub fn a_family_difference_residual(a: f64, k: u32, n: u32, tol: f64) -> Result<f64> {
    assert!(n >= 2, "the difference equation needs n >= 2, got {n}");
    let value = |expo: i32| -> Result<f64> {
        Ok(a_family_direct(&AFamilyPoint::new(a, k, expo)?, tol)?.value)
    };
    let nf = n as f64;
    let kf = k as f64;
    let lhs = nf * (nf - 1.0) * (1.0 - a * a).powi(2) * value(n as i32 + 1)?;
    let mid = (nf - 1.0) * (2.0 * nf - 1.0) * (1.0 + a * a) * value(n as i32)?;
    let low = (kf * kf - (nf - 1.0) * (nf - 1.0)) * value(n as i32 - 1)?;
    let scale = lhs.abs().max(mid.abs()).max(low.abs()).max(1.0);
    Ok((lhs - mid - low).abs() / scale)
}

/// Residual of the functional equation tying the n-th positive kernel power
/// to the (n+1)-th reciprocal power,
///
/// ```text
/// C(n+k, k)·(1−a²)^(−n)·∫Δⁿcos(kφ)dφ
///   = C(−n−1+k, k)·(1−a²)^(n+1)·∫Δ^(−n−1)cos(kφ)dφ
/// ```
///
/// relative to the larger side (Δ = 1 + a² − 2a·cosφ; the right-hand
/// binomial takes a negative upper argument through the falling factorial).
pub fn a_family_functional_residual(a: f64, k: u32, n: u32, tol: f64) -> Result<f64> {
    let ku = k as usize;
    let positive_power = a_family_direct(&AFamilyPoint::new(a, k, -(n as i32))?, tol)?;
    let reciprocal = a_family_direct(&AFamilyPoint::new(a, k, n as i32 + 1)?, tol)?;
    let om = 1.0 - a * a;
    let left = binomial_int((n + k) as i64, ku).to_f64().unwrap()
        * om.powi(-(n as i32))
        * positive_power.value;
    let right = binomial_int(k as i64 - n as i64 - 1, ku).to_f64().unwrap()
        * om.powi(n as i32 + 1)
        * reciprocal.value;
    let scale = left.abs().max(right.abs()).max(1.0);
    Ok((left - right).abs() / scale)
}

/// Parameters of the singular integral G(n) = ∫ xⁿ/√|a² − 2bx + cx²| dx
/// taken between the roots of the radicand. The radicand must open upward
/// and have two real roots: a > 0, c > 0, b² − a²c > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct E606Params {
    a: f64,
    b: f64,
    c: f64,
}

impl E606Params {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::Domain(format!("needs a > 0, got {a}")));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Domain(format!("needs c > 0, got {c}")));
        }
        if !(b.is_finite() && b * b - a * a * c > 0.0) {
            return Err(Error::Domain(format!(
                "needs two real roots, b² − a²c > 0; got b = {b}, b² − a²c = {}",
                b * b - a * a * c
            )));
        }
        Ok(E606Params { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// Modulus-normalized singular integral between the roots of the radicand.
///
/// Substituting x = b/c + h·u with h = √(b²−a²c)/c maps the root interval
/// onto u ∈ [−1, 1] and turns the radicand into |a²−2bx+cx²| =
/// (b²−a²c)(1−u²)/c, so
///
/// ```text
/// G̃(n) = (1/√c) ∫₋₁¹ (b/c + h·u)ⁿ / √(1−u²) du,
/// ```
///
/// a Gauss-Chebyshev integral that ⌈(n+2)/2⌉ nodes evaluate exactly up to
/// rounding (the integrand is a degree-n polynomial in u).
pub fn e606_g_mod(p: &E606Params, n: u32) -> f64 {
    let h = (p.b * p.b - p.a * p.a * p.c).sqrt() / p.c;
    let center = p.b / p.c;
    let rule = gauss_chebyshev_rule((n as usize + 3) / 2);
    rule.apply(|u| (center + h * u).powi(n as i32)) / p.c.sqrt()
}

/// Residual of n·a²·G̃(n−1) = (2n+1)·b·G̃(n) − (n+1)·c·G̃(n+1), relative to
/// the largest participating term. Panics if `n < 1`.
pub fn e606_recurrence_residual(p: &E606Params, n: u32) -> f64 {
    assert!(n >= 1, "the recurrence needs n >= 1, got {n}");
    let nf = n as f64;
    let low = nf * p.a * p.a * e606_g_mod(p, n - 1);
    let mid = (2.0 * nf + 1.0) * p.b * e606_g_mod(p, n);
    let high = (nf + 1.0) * p.c * e606_g_mod(p, n + 1);
    let scale = low.abs().max(mid.abs()).max(high.abs()).max(1.0);
    (low - mid + high).abs() / scale
}

/// P_n(t) through the singular integral at (a, b, c) = (1, t, 1), which
/// requires t > 1 for the radicand to keep two real roots:
/// P_n(t) = G̃(n; 1, t, 1)/π.
pub fn e606_legendre(n: u32, t: f64) -> Result<Estimate> {
    if t.is_nan() || t <= 1.0 {
        return Err(Error::Domain(format!("requires t > 1, got {t}")));
    }
    let p = E606Params::new(1.0, t, 1.0)?;
    let value = e606_g_mod(&p, n) / PI;
    Ok(Estimate {
        value,
        est_error: (n as f64 + 2.0) * f64::EPSILON * value.abs(),
    })
}
