//! Gaussian quadrature rules used by the integral representations.
//!
//! Gauss-Legendre nodes are the roots of P_m found by Newton iteration on
//! the crate's own recurrence evaluator, seeded with the Chebyshev-angle
//! approximation cos(π(k − 1/4)/(m + 1/2)). Only the positive half-axis is
//! solved; nodes are mirrored so the rule is symmetric to the last bit,
//! which in turn lets antisymmetric integrand parts cancel in pairs instead
//! of accumulating roundoff. Gauss-Chebyshev (first kind) nodes are
//! cos((2k−1)π/(2m)) with uniform weights π/m.

use num_complex::Complex64;
use num_traits::Zero;

use crate::recurrence::legendre_eval_with_derivative;
use crate::{Error, Result};

/// Which weight function a rule integrates against on [−1, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// Weight 1.
    GaussLegendre,
    /// Weight 1/√(1−u²).
    GaussChebyshev,
}

/// Nodes and weights of a quadrature rule on [−1, 1].
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    kind: RuleKind,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    /// Strictly increasing.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Σ wᵢ f(xᵢ).
    pub fn apply<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// m-point Gauss-Legendre rule. Each root is converged to a Newton step
/// below 1e−15 (100-iteration cap), which drives |P_m| to its attainable
/// floor; weights are 2/((1−x²) P_m′(x)²). Panics if `m == 0`.
pub fn gauss_legendre_rule(m: usize) -> Result<QuadratureRule> {
    assert!(m >= 1, "rule needs at least one node");
    let mf = m as f64;
    let mut positive = Vec::with_capacity(m / 2); // (node, weight), descending
    for k in 1..=m / 2 {
        let seed = (std::f64::consts::PI * (k as f64 - 0.25) / (mf + 0.5)).cos();
        let mut x = seed;
        let mut converged = false;
        for _ in 0..100 {
            let (p, dp) = legendre_eval_with_derivative(m, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-15 || p == 0.0 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Internal(format!(
                "Newton failed to converge for root {k} of P_{m}"
            )));
        }
        let (_, dp) = legendre_eval_with_derivative(m, x);
        positive.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }

    let mut nodes = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    for &(x, w) in &positive {
        nodes.push(-x);
        weights.push(w);
    }
    if m % 2 == 1 {
        let (_, dp) = legendre_eval_with_derivative(m, 0.0);
        nodes.push(0.0);
        weights.push(2.0 / (dp * dp));
    }
    for &(x, w) in positive.iter().rev() {
        nodes.push(x);
        weights.push(w);
    }
    debug_assert!(nodes.windows(2).all(|p| p[0] < p[1]));
    Ok(QuadratureRule {
        kind: RuleKind::GaussLegendre,
        nodes,
        weights,
    })
}

/// m-point Gauss-Chebyshev rule of the first kind: nodes cos((2k−1)π/(2m))
/// mirrored off the positive half-axis, uniform weights π/m. Exact for
/// ∫ p(u)/√(1−u²) du with p of degree ≤ 2m−1. Panics if `m == 0`.
pub fn gauss_chebyshev_rule(m: usize) -> QuadratureRule {
    assert!(m >= 1, "rule needs at least one node");
    let w = std::f64::consts::PI / m as f64;
    let mut positive = Vec::with_capacity(m / 2); // descending
    for k in 1..=m / 2 {
        positive.push(((2.0 * k as f64 - 1.0) * std::f64::consts::PI / (2.0 * m as f64)).cos());
    }
    let mut nodes = Vec::with_capacity(m);
    for &x in &positive {
        nodes.push(-x);
    }
    if m % 2 == 1 {
        nodes.push(0.0);
    }
    for &x in positive.iter().rev() {
        nodes.push(x);
    }
    debug_assert!(nodes.windows(2).all(|p| p[0] < p[1]));
    QuadratureRule {
        kind: RuleKind::GaussChebyshev,
        nodes,
        weights: vec![w; m],
    }
}

/// Integrates a complex-valued integrand over [lo, hi], doubling the node
/// count through m = 16, 32, …, 4096 until successive values differ by less
/// than `tol` (measured against max(1, |value|), so the criterion is
/// absolute near the origin and relative for large results). Returns the
/// value together with the last successive difference as the error
/// estimate. For the Chebyshev kind the implicit 1/√(1−u²) weight applies
/// in the mapped coordinate.
pub fn integrate_to_tolerance<F>(
    f: F,
    lo: f64,
    hi: f64,
    kind: RuleKind,
    tol: f64,
) -> Result<(Complex64, f64)>
where
    F: Fn(f64) -> Complex64,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut prev: Option<Complex64> = None;
    let mut last = Complex64::zero();
    let mut est = f64::INFINITY;
    let mut m = 16;
    while m <= 4096 {
        let rule = match kind {
            RuleKind::GaussLegendre => gauss_legendre_rule(m)?,
            RuleKind::GaussChebyshev => gauss_chebyshev_rule(m),
        };
        let mut sum = Complex64::zero();
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            sum += w * f(mid + half * x);
        }
        let value = half * sum;
        if let Some(p) = prev {
            let diff = (value - p).norm();
            if diff <= tol * value.norm().max(1.0) {
                return Ok((value, diff));
            }
            est = diff;
        }
        last = value;
        prev = Some(value);
        m *= 2;
    }
    Err(Error::ToleranceNotReached { best: last, est })
}

/// [`integrate_to_tolerance`] for real integrands.
pub fn integrate_real_to_tolerance<F>(
    f: F,
    lo: f64,
    hi: f64,
    kind: RuleKind,
    tol: f64,
) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let (value, est) = integrate_to_tolerance(|x| Complex64::new(f(x), 0.0), lo, hi, kind, tol)?;
    Ok((value.re, est))
}
