//! The three-term recurrence, the crate's defining route to P_n, plus the
//! primitive-of-xⁿ linear solve that recovers P_n(t) without ever running
//! the recurrence forward.
//!
//! ```text
//! P_0 = 1,  P_1 = t,  (n+1) P_{n+1}(t) = (2n+1) t P_n(t) − n P_{n−1}(t)
//! ```

use num_traits::{One, Zero};

use crate::exact::{int, Rational, RationalPolynomial};
use crate::{Error, Result};

/// P_n as an exact polynomial in t.
pub fn legendre_poly(n: usize) -> RationalPolynomial {
    let mut prev = RationalPolynomial::one();
    if n == 0 {
        return prev;
    }
    let t = RationalPolynomial::monomial(Rational::one(), 1);
    let mut curr = t.clone();
    for k in 1..n {
        let next = (&t * &curr).scale(&int(2 * k as i64 + 1)) - prev.scale(&int(k as i64));
        prev = curr;
        curr = next.scale(&(Rational::one() / int(k as i64 + 1)));
    }
    curr
}

/// P_n(t) exactly, by the scalar recurrence (O(n) rational operations).
pub fn legendre_eval(n: usize, t: &Rational) -> Rational {
    let mut prev = Rational::one();
    if n == 0 {
        return prev;
    }
    let mut curr = t.clone();
    for k in 1..n {
        let next = (t * &curr * int(2 * k as i64 + 1) - &prev * int(k as i64)) / int(k as i64 + 1);
        prev = curr;
        curr = next;
    }
    curr
}

/// (P_n(x), P_n′(x)) in double precision.
///
/// The derivative comes from (1 − x²) P_n′ = n (P_{n−1} − x P_n) away from
/// the endpoints and from the exact values P_n′(±1) = (±1)^(n+1) n(n+1)/2
/// at x = ±1. For n = 0 the derivative is 0 by convention.
pub fn legendre_eval_with_derivative(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    if x == 1.0 || x == -1.0 {
        let nf = n as f64;
        let sign = if x > 0.0 {
            1.0
        } else if n.is_multiple_of(2) {
            -1.0
        } else {
            1.0
        };
        let value = if x > 0.0 || n.is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        return (value, sign * nf * (nf + 1.0) / 2.0);
    }
    let mut prev = 1.0;
    let mut curr = x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * curr - kf * prev) / (kf + 1.0);
        prev = curr;
        curr = next;
    }
    let nf = n as f64;
    (curr, nf * (prev - x * curr) / (1.0 - x * x))
}

/// Result of [`primitive_solve`]: the artanh coefficient (which is P_n(t))
/// and the companion polynomial Q_n in x of degree n − 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimitiveSolveResult {
    pub legendre_value: Rational,
    pub companion: RationalPolynomial,
}

/// Solves for the primitive of xⁿ/√(1 − 2xt + x²) in the closed form
///
/// ```text
/// ∫ xⁿ dx / s  =  P · artanh((x − t)/s) + Q(x) · s + C,   s = √(1 − 2xt + x²)
/// ```
///
/// Differentiating and clearing 1/s turns this into the exact polynomial
/// identity `P + Q′(x)(1 − 2xt + x²) + Q(x)(x − t) = xⁿ`, a triangular
/// system in the coefficients of Q that back-substitutes from degree n − 1
/// down; the constant row then yields P, which must be P_n(t). The identity
/// is re-checked exactly before returning.
pub fn primitive_solve(n: usize, t: &Rational) -> Result<PrimitiveSolveResult> {
    // Row m (coefficient of x^m): (m+1) q_{m+1} − (2m+1) t q_m + m q_{m−1}
    // + P·[m=0] = [m=n], with q_j = 0 outside 0..n−1.
    let mut q = vec![Rational::zero(); n];
    for m in (1..=n).rev() {
        let rhs = if m == n {
            Rational::one()
        } else {
            Rational::zero()
        };
        let qm = if m < n {
            q[m].clone()
        } else {
            Rational::zero()
        };
        let qm1 = if m + 1 < n {
            q[m + 1].clone()
        } else {
            Rational::zero()
        };
        q[m - 1] = (rhs + t * qm * int(2 * m as i64 + 1) - qm1 * int(m as i64 + 1)) / int(m as i64);
    }
    let q0 = q.first().cloned().unwrap_or_else(Rational::zero);
    let q1 = q.get(1).cloned().unwrap_or_else(Rational::zero);
    let delta_n0 = if n == 0 {
        Rational::one()
    } else {
        Rational::zero()
    };
    let legendre_value = delta_n0 + t * q0 - q1;

    let companion = RationalPolynomial::new(q);
    let radicand = RationalPolynomial::new(vec![Rational::one(), -(t * int(2)), Rational::one()]);
    let x_minus_t = RationalPolynomial::new(vec![-t.clone(), Rational::one()]);
    let lhs = RationalPolynomial::constant(legendre_value.clone())
        + companion.derivative() * radicand
        + &companion * &x_minus_t;
    if lhs != RationalPolynomial::monomial(Rational::one(), n) {
        return Err(Error::Internal(format!(
            "primitive ansatz failed to reproduce x^{n} at t = {t}"
        )));
    }
    Ok(PrimitiveSolveResult {
        legendre_value,
        companion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use num_traits::ToPrimitive;

    fn poly(cs: &[(i64, i64)]) -> RationalPolynomial {
        RationalPolynomial::new(cs.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn low_order_rows() {
        assert_eq!(legendre_poly(0), poly(&[(1, 1)]));
        assert_eq!(legendre_poly(1), poly(&[(0, 1), (1, 1)]));
        assert_eq!(legendre_poly(2), poly(&[(-1, 2), (0, 1), (3, 2)]));
        assert_eq!(legendre_poly(3), poly(&[(0, 1), (-3, 2), (0, 1), (5, 2)]));
        assert_eq!(
            legendre_poly(4),
            poly(&[(3, 8), (0, 1), (-30, 8), (0, 1), (35, 8)])
        );
        assert_eq!(
            legendre_poly(5),
            poly(&[(0, 1), (15, 8), (0, 1), (-70, 8), (0, 1), (63, 8)])
        );
        assert_eq!(
            legendre_poly(7),
            poly(&[
                (0, 1),
                (-35, 16),
                (0, 1),
                (315, 16),
                (0, 1),
                (-693, 16),
                (0, 1),
                (429, 16)
            ])
        );
    }

    #[test]
    fn sixth_row_quartic_and_quadratic_coefficients() {
        // P_6 = (231t^6 - 315t^4 + 105t^2 - 5)/16. The -315/16 (t^4) and
        // +105/16 (t^2) pair is easy to get wrong in transcription; pin it
        // straight off the recurrence.
        assert_eq!(
            legendre_poly(6),
            poly(&[
                (-5, 16),
                (0, 1),
                (105, 16),
                (0, 1),
                (-315, 16),
                (0, 1),
                (231, 16)
            ])
        );
        assert_eq!(legendre_eval(6, &ratio(1, 2)), ratio(331, 1024));
    }

    #[test]
    fn scalar_eval_worked_values() {
        assert_eq!(legendre_eval(4, &int(1)), int(1));
        assert_eq!(legendre_eval(7, &int(0)), int(0));
        assert_eq!(legendre_eval(5, &ratio(3, 2)), ratio(8469, 256));
        assert_eq!(legendre_eval(3, &int(2)), int(17));
    }

    #[test]
    fn scalar_eval_matches_polynomial_eval() {
        let ts = [int(0), int(1), int(-1), ratio(1, 2), ratio(-5, 3), int(3)];
        for n in 0..=20 {
            let p = legendre_poly(n);
            for t in &ts {
                assert_eq!(legendre_eval(n, t), p.eval(t), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn recurrence_residual_is_exactly_zero() {
        let t = RationalPolynomial::monomial(Rational::one(), 1);
        for n in 1..=30usize {
            let residual = legendre_poly(n + 1).scale(&int(n as i64 + 1))
                - (&t * &legendre_poly(n)).scale(&int(2 * n as i64 + 1))
                + legendre_poly(n - 1).scale(&int(n as i64));
            assert!(residual.is_zero(), "n={n}");
        }
    }

    #[test]
    fn parity_and_endpoints() {
        for n in 0..=30usize {
            let p = legendre_poly(n);
            for (i, c) in p.coeffs().iter().enumerate() {
                if i % 2 != n % 2 {
                    assert!(c.is_zero(), "n={n} coeff {i}");
                }
            }
            assert_eq!(p.eval(&int(1)), int(1));
            let want = if n % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(p.eval(&int(-1)), want);
        }
    }

    #[test]
    fn float_eval_worked_values() {
        assert_eq!(legendre_eval_with_derivative(0, 0.3), (1.0, 0.0));
        assert_eq!(legendre_eval_with_derivative(1, 0.5), (0.5, 1.0));
        assert_eq!(legendre_eval_with_derivative(2, 0.0), (-0.5, 0.0));
        assert_eq!(legendre_eval_with_derivative(4, 1.0), (1.0, 10.0));
        assert_eq!(legendre_eval_with_derivative(5, -1.0), (-1.0, 15.0));
        assert_eq!(legendre_eval_with_derivative(4, -1.0), (1.0, -10.0));
    }

    #[test]
    fn float_eval_tracks_exact_values() {
        let ts = [
            ratio(-9, 10),
            ratio(-1, 2),
            ratio(-1, 7),
            int(0),
            ratio(3, 10),
            ratio(1, 2),
            ratio(9, 10),
        ];
        for n in 0..=25usize {
            let p = legendre_poly(n);
            let dp = p.derivative();
            for t in &ts {
                let x = t.to_f64().unwrap();
                let (v, d) = legendre_eval_with_derivative(n, x);
                let ev = p.eval(t).to_f64().unwrap();
                let ed = dp.eval(t).to_f64().unwrap();
                assert!((v - ev).abs() <= 1e-13 * ev.abs().max(1.0), "n={n} t={t}");
                assert!((d - ed).abs() <= 1e-12 * ed.abs().max(1.0), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn endpoint_derivative_matches_exact_polynomial_derivative() {
        for n in 0..=25usize {
            let dp = legendre_poly(n).derivative();
            for x in [1.0, -1.0] {
                let (_, d) = legendre_eval_with_derivative(n, x);
                let exact = dp.eval(&int(x as i64)).to_f64().unwrap();
                assert_eq!(d, exact, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn primitive_solve_degenerate_orders() {
        let r0 = primitive_solve(0, &ratio(1, 3)).unwrap();
        assert_eq!(r0.legendre_value, int(1));
        assert!(r0.companion.is_zero());

        let r1 = primitive_solve(1, &ratio(7, 5)).unwrap();
        assert_eq!(r1.legendre_value, ratio(7, 5));
        assert_eq!(r1.companion, poly(&[(1, 1)]));
    }

    #[test]
    fn primitive_solve_cubic_at_two() {
        let r = primitive_solve(3, &int(2)).unwrap();
        assert_eq!(r.legendre_value, int(17));
        assert_eq!(r.companion, poly(&[(28, 3), (5, 3), (1, 3)]));
    }

    #[test]
    fn primitive_solve_agrees_with_recurrence() {
        let ts = [int(0), ratio(3, 2), ratio(-4, 7), int(5), ratio(-1, 2)];
        for n in 0..=20usize {
            for t in &ts {
                let r = primitive_solve(n, t).unwrap();
                assert_eq!(r.legendre_value, legendre_eval(n, t), "n={n} t={t}");
                if n > 0 {
                    assert_eq!(r.companion.degree(), Some(n - 1));
                    assert_eq!(r.companion.coeff(n - 1), Rational::one() / int(n as i64));
                }
            }
        }
    }
}
