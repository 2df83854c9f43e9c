//! Truncated Gaussian hypergeometric series ₂F₁(a, b; c; x) and the Euler
//! transformation
//!
//! ```text
//! ₂F₁(a, b; c; x) = (1 − x)^(c−a−b) · ₂F₁(c−a, c−b; c; x),
//! ```
//!
//! the general principle behind the functional equation of the cosine-kernel
//! integrals. The series is summed inside |x| < 1 only; no analytic
//! continuation is attempted.

use num_complex::Complex64;

use crate::{Error, Result};

/// Parameters (a, b, c, x) of the series Σ (a)ₘ(b)ₘ/(c)ₘ · xᵐ/m!.
///
/// c must not be zero or a negative integer (the denominator Pochhammer
/// symbol would vanish) and |x| < 1. The stopping rule is guaranteed to
/// trigger for |x| ≤ 0.9.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    a: f64,
    b: f64,
    c: f64,
    x: f64,
}

impl HypergeometricParams {
    pub fn new(a: f64, b: f64, c: f64, x: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite() && x.is_finite()) {
            return Err(Error::Domain(
                "hypergeometric parameters must be finite".into(),
            ));
        }
        if c <= 0.0 && c == c.floor() {
            return Err(Error::Domain(format!(
                "c must not be zero or a negative integer, got {c}"
            )));
        }
        if x.abs() >= 1.0 {
            return Err(Error::Domain(format!("the series needs |x| < 1, got {x}")));
        }
        Ok(HypergeometricParams { a, b, c, x })
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

    pub fn x(&self) -> f64 {
        self.x
    }
}

const TERM_CAP: u32 = 10_000;

/// Partial sum of the hypergeometric series, terminated once two consecutive
/// terms are both below `tol` in magnitude (a single small term is not
/// trusted: a Pochhammer factor passing through zero produces one spurious
/// zero term). Capped at 10000 terms.
pub fn hyp2f1(p: &HypergeometricParams, tol: f64) -> Result<f64> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut prev_small = term.abs() < tol;
    for m in 0..TERM_CAP {
        let mf = m as f64;
        term *= (p.a + mf) * (p.b + mf) / ((p.c + mf) * (mf + 1.0)) * p.x;
        sum += term;
        let small = term.abs() < tol;
        if small && prev_small {
            return Ok(sum);
        }
        prev_small = small;
    }
    Err(Error::ToleranceNotReached {
        best: Complex64::new(sum, 0.0),
        est: term.abs(),
    })
}

/// |₂F₁(a, b; c; x) − (1−x)^(c−a−b)·₂F₁(c−a, c−b; c; x)|, both sides summed
/// with the same `tol`. Expected below 10·tol whenever both series converge.
pub fn euler_transform_residual(p: &HypergeometricParams, tol: f64) -> Result<f64> {
    let left = hyp2f1(p, tol)?;
    let q = HypergeometricParams::new(p.c - p.a, p.c - p.b, p.c, p.x)?;
    let right = (1.0 - p.x).powf(p.c - p.a - p.b) * hyp2f1(&q, tol)?;
    Ok((left - right).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const TOL: f64 = 1e-13;

    fn params(a: f64, b: f64, c: f64, x: f64) -> HypergeometricParams {
        HypergeometricParams::new(a, b, c, x).unwrap()
    }

    #[test]
    fn series_at_zero_is_one() {
        assert_eq!(hyp2f1(&params(0.7, 2.3, 1.1, 0.0), TOL).unwrap(), 1.0);
        assert_eq!(hyp2f1(&params(-4.0, 9.5, 0.5, 0.0), TOL).unwrap(), 1.0);
    }

    #[test]
    fn geometric_series() {
        assert_abs_diff_eq!(
            hyp2f1(&params(1.0, 1.0, 1.0, 0.5), TOL).unwrap(),
            2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn logarithmic_closed_form() {
        assert_abs_diff_eq!(
            hyp2f1(&params(1.0, 1.0, 2.0, 0.5), TOL).unwrap(),
            2.0 * std::f64::consts::LN_2,
            epsilon = 1e-12
        );
    }

    #[test]
    fn polynomial_cases_terminate_early() {
        // a = −2 truncates the series to a quadratic: 1 − 2·(b/c)x + (b)₂/(c)₂ x².
        let v = hyp2f1(&params(-2.0, 1.0, 1.0, 0.3), TOL).unwrap();
        assert_abs_diff_eq!(v, (1.0 - 0.3) * (1.0 - 0.3), epsilon = 1e-15);
    }

    #[test]
    fn symmetric_in_a_and_b_bitwise() {
        for (a, b, c, x) in [
            (0.25, 2.5, 1.375, 0.5),
            (1.0, 3.0, 0.5, -0.7),
            (-1.5, 0.8, 2.0, 0.3),
        ] {
            let lhs = hyp2f1(&params(a, b, c, x), TOL).unwrap();
            let rhs = hyp2f1(&params(b, a, c, x), TOL).unwrap();
            assert_eq!(lhs.to_bits(), rhs.to_bits(), "({a},{b},{c},{x})");
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(HypergeometricParams::new(1.0, 1.0, 0.0, 0.5).is_err());
        assert!(HypergeometricParams::new(1.0, 1.0, -3.0, 0.5).is_err());
        assert!(HypergeometricParams::new(1.0, 1.0, -2.5, 0.5).is_ok());
        assert!(HypergeometricParams::new(1.0, 1.0, 2.0, 1.0).is_err());
        assert!(HypergeometricParams::new(1.0, 1.0, 2.0, -1.2).is_err());
        assert!(HypergeometricParams::new(f64::NAN, 1.0, 2.0, 0.1).is_err());
    }

    #[test]
    fn term_cap_reports_tolerance_not_reached() {
        // tol = 0 can never satisfy |term| < tol, so the cap must trip.
        let err = hyp2f1(&params(1.0, 1.0, 2.0, 0.5), 0.0).unwrap_err();
        match err {
            Error::ToleranceNotReached { best, .. } => {
                assert_abs_diff_eq!(best.re, 2.0 * std::f64::consts::LN_2, epsilon = 1e-12);
            }
            other => panic!("expected ToleranceNotReached, got {other:?}"),
        }
    }

    #[test]
    fn euler_transform_worked_residuals() {
        assert!(euler_transform_residual(&params(1.0, 1.0, 2.0, 0.3), TOL).unwrap() < 1e-11);
        assert!(euler_transform_residual(&params(0.5, 1.5, 2.5, 0.4), TOL).unwrap() < 1e-10);
        assert_eq!(
            euler_transform_residual(&params(0.9, 4.2, 1.7, 0.0), TOL).unwrap(),
            0.0
        );
    }

    #[test]
    fn euler_transform_on_the_parameter_grid() {
        let vals = [0.25, 1.375, 2.5];
        for a in vals {
            for b in vals {
                for c in vals {
                    for x in [0.1, 0.3, 0.5] {
                        let r = euler_transform_residual(&params(a, b, c, x), TOL).unwrap();
                        assert!(r < 1e-10, "({a},{b},{c},{x}): {r}");
                    }
                }
            }
        }
    }
}
