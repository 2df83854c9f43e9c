//! Named verification suites that sweep the identity grids of the other
//! modules and report per-check residuals.
//!
//! Exact checks (rational arithmetic) report `tol = 0` and use
//! `max_residual` as a count of mismatching points, so zero always means a
//! clean pass. Floating-point checks report the largest residual seen and
//! the threshold it was compared against; residuals follow the library-wide
//! convention of |residual| / max(1, |participating terms|).

use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::exact::{int, ratio, Rational, RationalPolynomial};
use crate::hypergeom::{euler_transform_residual, hyp2f1, HypergeometricParams};
use crate::integrals::{
    a_family_difference_residual, a_family_direct, a_family_explicit, a_family_functional_residual,
    e606_g_mod, e606_legendre, e606_recurrence_residual, jacobi_relation_residual,
    laplace_negative, laplace_positive, AFamilyPoint, E606Params,
};
use crate::recurrence::{
    legendre_eval, legendre_eval_with_derivative, legendre_poly, primitive_solve,
};
use crate::trinomial::{
    central_coeff, gf_coefficients, legendre_via_trinomial, section22_residual, TrinomialParams,
};
use crate::Error;

use std::f64::consts::PI;

/// Quadrature tolerance used internally by the suites; separate from the
/// pass/fail thresholds so a loosened threshold does not loosen the
/// integration itself.
const QTOL: f64 = 1e-10;

/// A named verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Recurrence,
    Jacobi,
    AFamily,
    E606,
    EulerTransform,
    Section22,
    All,
}

impl Suite {
    /// The individual suites, in the order `All` runs them.
    pub const LEAVES: [Suite; 6] = [
        Suite::Recurrence,
        Suite::Jacobi,
        Suite::AFamily,
        Suite::E606,
        Suite::EulerTransform,
        Suite::Section22,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrence => "recurrence",
            Suite::Jacobi => "jacobi",
            Suite::AFamily => "a-family",
            Suite::E606 => "e606",
            Suite::EulerTransform => "euler-transform",
            Suite::Section22 => "section22",
            Suite::All => "all",
        }
    }
}

/// Outcome of one check: how many grid points ran, the worst residual, the
/// threshold, and a label for the worst (or first failing) point.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub check: &'static str,
    pub points: usize,
    pub max_residual: f64,
    pub tol: f64,
    pub pass: bool,
    pub worst: Option<String>,
}

struct FloatCheck {
    suite: &'static str,
    check: &'static str,
    tol: f64,
    points: usize,
    max_residual: f64,
    worst: Option<String>,
}

impl FloatCheck {
    fn new(suite: &'static str, check: &'static str, tol: f64) -> Self {
        FloatCheck {
            suite,
            check,
            tol,
            points: 0,
            max_residual: 0.0,
            worst: None,
        }
    }

    fn record(&mut self, residual: f64, label: String) {
        let r = if residual.is_nan() {
            f64::INFINITY
        } else {
            residual
        };
        self.points += 1;
        if self.worst.is_none() || r > self.max_residual {
            self.max_residual = r;
            self.worst = Some(label);
        }
    }

    fn record_error(&mut self, err: &Error, label: String) {
        self.record(f64::INFINITY, format!("{label}: {err}"));
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            suite: self.suite,
            check: self.check,
            points: self.points,
            max_residual: self.max_residual,
            tol: self.tol,
            pass: self.max_residual < self.tol,
            worst: self.worst,
        }
    }
}

struct ExactCheck {
    suite: &'static str,
    check: &'static str,
    points: usize,
    failures: usize,
    worst: Option<String>,
}

impl ExactCheck {
    fn new(suite: &'static str, check: &'static str) -> Self {
        ExactCheck {
            suite,
            check,
            points: 0,
            failures: 0,
            worst: None,
        }
    }

    fn record(&mut self, ok: bool, label: String) {
        self.points += 1;
        if !ok {
            self.failures += 1;
            if self.worst.is_none() {
                self.worst = Some(label);
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            suite: self.suite,
            check: self.check,
            points: self.points,
            max_residual: self.failures as f64,
            tol: 0.0,
            pass: self.failures == 0,
            worst: self.worst,
        }
    }
}

/// Run a suite. `tol = None` uses each check's pinned threshold; `Some`
/// replaces the thresholds of the floating-point checks (exact checks are
/// unaffected: they either match or they do not).
pub fn run_suite(suite: Suite, tol: Option<f64>) -> Vec<CheckResult> {
    match suite {
        Suite::All => Suite::LEAVES
            .iter()
            .flat_map(|s| run_suite(*s, tol))
            .collect(),
        Suite::Recurrence => suite_recurrence(tol),
        Suite::Jacobi => suite_jacobi(tol),
        Suite::AFamily => suite_a_family(tol),
        Suite::E606 => suite_e606(tol),
        Suite::EulerTransform => suite_euler_transform(tol),
        Suite::Section22 => suite_section22(tol),
    }
}

fn suite_recurrence(tol: Option<f64>) -> Vec<CheckResult> {
    const SUITE: &str = "recurrence";
    let mut out = Vec::new();
    let polys: Vec<RationalPolynomial> = (0..=31).map(legendre_poly).collect();
    let t = RationalPolynomial::monomial(Rational::one(), 1);

    let mut c = ExactCheck::new(SUITE, "three-term residual is the zero polynomial");
    for n in 1..=30usize {
        let lhs = polys[n + 1].scale(&int(n as i64 + 1));
        let mid = &t * &polys[n].scale(&int(2 * n as i64 + 1));
        let low = polys[n - 1].scale(&int(n as i64));
        c.record((lhs - mid + low).is_zero(), format!("n={n}"));
    }
    out.push(c.finish());

    let mut c = ExactCheck::new(SUITE, "parity P_n(-t) = (-1)^n P_n(t)");
    for (n, p) in polys.iter().take(31).enumerate() {
        let ok = p
            .coeffs()
            .iter()
            .enumerate()
            .all(|(i, a)| a.is_zero() || i % 2 == n % 2);
        c.record(ok, format!("n={n}"));
    }
    out.push(c.finish());

    let mut c = ExactCheck::new(SUITE, "endpoint values P_n(1) = 1, P_n(-1) = (-1)^n");
    for (n, p) in polys.iter().take(31).enumerate() {
        let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
        let ok = p.eval(&int(1)) == int(1) && p.eval(&int(-1)) == sign;
        c.record(ok, format!("n={n}"));
    }
    out.push(c.finish());

    let mut rng = StdRng::seed_from_u64(7);
    let ts: Vec<Rational> = (0..20)
        .map(|_| ratio(rng.gen_range(-40i64..=40), rng.gen_range(1i64..=9)))
        .collect();
    let mut c = ExactCheck::new(SUITE, "primitive_solve value equals legendre_eval");
    for n in 0..=20usize {
        for tv in &ts {
            match primitive_solve(n, tv) {
                Ok(r) => c.record(
                    r.legendre_value == legendre_eval(n, tv),
                    format!("n={n} t={tv}"),
                ),
                Err(e) => c.record(false, format!("n={n} t={tv}: {e}")),
            }
        }
    }
    out.push(c.finish());

    let mut c = FloatCheck::new(
        SUITE,
        "derivative matches a central finite difference",
        tol.unwrap_or(1e-6),
    );
    let h = ratio(1, 1_000_000);
    for i in 0..20usize {
        let n = 1 + (i % 12);
        let num: i64 = rng.gen_range(-950..=950);
        let tv = ratio(num, 1000);
        let plus = legendre_eval(n, &(&tv + &h));
        let minus = legendre_eval(n, &(&tv - &h));
        let fd = ((plus - minus) / (&h * int(2))).to_f64().unwrap();
        let (_, d) = legendre_eval_with_derivative(n, tv.to_f64().unwrap());
        c.record(
            (d - fd).abs() / fd.abs().max(1.0),
            format!("n={n} t={num}/1000"),
        );
    }
    out.push(c.finish());

    out
}

fn suite_jacobi(tol: Option<f64>) -> Vec<CheckResult> {
    const SUITE: &str = "jacobi";
    let grid: [(f64, Rational); 9] = [
        (-0.9, ratio(-9, 10)),
        (-0.5, ratio(-1, 2)),
        (0.0, int(0)),
        (0.5, ratio(1, 2)),
        (0.9, ratio(9, 10)),
        (1.1, ratio(11, 10)),
        (1.5, ratio(3, 2)),
        (2.0, int(2)),
        (3.0, int(3)),
    ];
    let mut pos = FloatCheck::new(
        SUITE,
        "positive-exponent Laplace matches the exact value",
        tol.unwrap_or(1e-9),
    );
    let mut neg = FloatCheck::new(
        SUITE,
        "reciprocal-exponent Laplace matches the exact value",
        tol.unwrap_or(1e-9),
    );
    let mut rel = FloatCheck::new(
        SUITE,
        "the two Laplace integrals agree with each other",
        tol.unwrap_or(1e-9),
    );
    let mut imag = FloatCheck::new(
        SUITE,
        "imaginary residues stay small inside |t| < 1",
        tol.unwrap_or(1e-10),
    );
    let mut pole = ExactCheck::new(SUITE, "reciprocal integral reports the pole at t = 0");
    for n in 0..=15u32 {
        for (tf, tr) in &grid {
            let exact = legendre_eval(n as usize, tr).to_f64().unwrap();
            let scale = exact.abs().max(1.0);
            let label = format!("n={n} t={tf}");
            match laplace_positive(n, *tf, QTOL) {
                Ok(r) => {
                    pos.record((r.value - exact).abs() / scale, label.clone());
                    if tf.abs() < 1.0 {
                        imag.record(r.imag_residue, label.clone());
                    }
                }
                Err(e) => pos.record_error(&e, label.clone()),
            }
            if *tf == 0.0 {
                pole.record(
                    matches!(laplace_negative(n, 0.0, QTOL), Err(Error::Domain(_))),
                    label,
                );
                continue;
            }
            match laplace_negative(n, *tf, QTOL) {
                Ok(r) => {
                    neg.record((r.value - exact).abs() / scale, label.clone());
                    if tf.abs() < 1.0 {
                        imag.record(r.imag_residue, label.clone());
                    }
                }
                Err(e) => neg.record_error(&e, label.clone()),
            }
            match jacobi_relation_residual(n, *tf, QTOL) {
                Ok(r) => rel.record(r, label),
                Err(e) => rel.record_error(&e, label),
            }
        }
    }
    vec![
        pos.finish(),
        neg.finish(),
        rel.finish(),
        imag.finish(),
        pole.finish(),
    ]
}

fn suite_a_family(tol: Option<f64>) -> Vec<CheckResult> {
    const SUITE: &str = "a-family";
    let rtol = tol.unwrap_or(1e-9);
    let params: [(Rational, f64); 3] = [
        (ratio(3, 10), 0.3),
        (ratio(-3, 10), -0.3),
        (ratio(7, 10), 0.7),
    ];
    let mut out = Vec::new();

    let mut c = FloatCheck::new(SUITE, "explicit V-sum matches direct quadrature", rtol);
    for (ar, af) in &params {
        for k in 0..=4usize {
            for n in 0..=5usize {
                let label = format!("a={af} k={k} n={n}");
                let direct = AFamilyPoint::new(*af, k as u32, n as i32 + 1)
                    .and_then(|p| a_family_direct(&p, QTOL));
                match (a_family_explicit(ar, k, n), direct) {
                    (Ok(exact), Ok(est)) => {
                        let want = PI * exact.to_f64().unwrap();
                        c.record((est.value - want).abs() / PI, label);
                    }
                    (Err(e), _) | (_, Err(e)) => c.record_error(&e, label),
                }
            }
        }
    }
    out.push(c.finish());

    let mut c = FloatCheck::new(SUITE, "difference equation in the exponent", rtol);
    for (_, af) in &params {
        for k in 0..=4u32 {
            for n in 2..=5u32 {
                let label = format!("a={af} k={k} n={n}");
                match a_family_difference_residual(*af, k, n, QTOL) {
                    Ok(r) => c.record(r, label),
                    Err(e) => c.record_error(&e, label),
                }
            }
        }
    }
    out.push(c.finish());

    let mut c = FloatCheck::new(SUITE, "functional equation between exponent pairs", rtol);
    for (_, af) in &params {
        for k in 0..=4u32 {
            for n in 0..=5u32 {
                let label = format!("a={af} k={k} n={n}");
                match a_family_functional_residual(*af, k, n, QTOL) {
                    Ok(r) => c.record(r, label),
                    Err(e) => c.record_error(&e, label),
                }
            }
        }
    }
    out.push(c.finish());

    out
}

fn suite_e606(tol: Option<f64>) -> Vec<CheckResult> {
    const SUITE: &str = "e606";
    let mut out = Vec::new();
    let mut rng = StdRng::seed_from_u64(11);

    let mut c = FloatCheck::new(
        SUITE,
        "three-term recurrence residual",
        tol.unwrap_or(1e-10),
    );
    for _ in 0..5 {
        let a: f64 = rng.gen_range(0.3..1.2);
        let cc: f64 = rng.gen_range(0.3..1.5);
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let b = sign * a * cc.sqrt() * (1.1 + rng.gen_range(0.0..1.5));
        match E606Params::new(a, b, cc) {
            Ok(p) => {
                for n in 1..=10u32 {
                    c.record(
                        e606_recurrence_residual(&p, n),
                        format!("a={a:.3} b={b:.3} c={cc:.3} n={n}"),
                    );
                }
            }
            Err(e) => c.record_error(&e, format!("a={a:.3} b={b:.3} c={cc:.3}")),
        }
    }
    out.push(c.finish());

    let mut c = FloatCheck::new(
        SUITE,
        "singular-integral route matches the exact value",
        tol.unwrap_or(1e-9),
    );
    for n in 0..=15u32 {
        for (tf, tr) in [
            (1.1, ratio(11, 10)),
            (1.5, ratio(3, 2)),
            (2.0, int(2)),
            (3.0, int(3)),
        ] {
            let exact = legendre_eval(n as usize, &tr).to_f64().unwrap();
            let label = format!("n={n} t={tf}");
            match e606_legendre(n, tf) {
                Ok(r) => c.record((r.value - exact).abs() / exact.abs().max(1.0), label),
                Err(e) => c.record_error(&e, label),
            }
        }
    }
    out.push(c.finish());

    let mut c = FloatCheck::new(
        SUITE,
        "scale covariance under x -> 2x",
        tol.unwrap_or(1e-10),
    );
    let lambda = 2.0;
    let base = E606Params::new(1.0, 1.5, 1.0).expect("admissible by construction");
    let scaled = E606Params::new(1.0, lambda * 1.5, lambda * lambda).expect("admissible");
    for n in 0..=10u32 {
        let lhs = e606_g_mod(&base, n);
        let rhs = lambda.powi(n as i32 + 1) * e606_g_mod(&scaled, n);
        c.record((lhs - rhs).abs() / lhs.abs().max(1.0), format!("n={n}"));
    }
    out.push(c.finish());

    out
}

fn suite_euler_transform(tol: Option<f64>) -> Vec<CheckResult> {
    const SUITE: &str = "euler-transform";
    const STOL: f64 = 1e-13;
    let vals = [0.25, 1.375, 2.5];
    let xs = [0.1, 0.3, 0.5];
    let mut out = Vec::new();

    let mut c = FloatCheck::new(
        SUITE,
        "transformation residual on the parameter grid",
        tol.unwrap_or(1e-10),
    );
    for a in vals {
        for b in vals {
            for cc in vals {
                for x in xs {
                    let label = format!("a={a} b={b} c={cc} x={x}");
                    let r = HypergeometricParams::new(a, b, cc, x)
                        .and_then(|p| euler_transform_residual(&p, STOL));
                    match r {
                        Ok(r) => c.record(r, label),
                        Err(e) => c.record_error(&e, label),
                    }
                }
            }
        }
    }
    out.push(c.finish());

    let mut c = ExactCheck::new(SUITE, "series is symmetric in a and b at the bit level");
    for a in vals {
        for b in vals {
            for cc in vals {
                for x in xs {
                    let lhs = HypergeometricParams::new(a, b, cc, x).and_then(|p| hyp2f1(&p, STOL));
                    let rhs = HypergeometricParams::new(b, a, cc, x).and_then(|p| hyp2f1(&p, STOL));
                    let ok = match (lhs, rhs) {
                        (Ok(l), Ok(r)) => l.to_bits() == r.to_bits(),
                        _ => false,
                    };
                    c.record(ok, format!("a={a} b={b} c={cc} x={x}"));
                }
            }
        }
    }
    out.push(c.finish());

    out
}

fn suite_section22(_tol: Option<f64>) -> Vec<CheckResult> {
    const SUITE: &str = "section22";
    let mut out = Vec::new();
    let mut rng = StdRng::seed_from_u64(13);
    let mut triples = vec![(int(1), int(1), int(1))];
    for _ in 0..9 {
        triples.push((
            ratio(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4)),
            ratio(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4)),
            ratio(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4)),
        ));
    }

    let mut c = ExactCheck::new(SUITE, "generalized three-term relation residual is zero");
    for (a, b, cc) in &triples {
        let p = TrinomialParams::new(a.clone(), b.clone(), cc.clone());
        for n in 2..=12usize {
            c.record(
                section22_residual(&p, n).is_zero(),
                format!("a={a} b={b} c={cc} n={n}"),
            );
        }
    }
    out.push(c.finish());

    let mut c = ExactCheck::new(
        SUITE,
        "generating function matches the central coefficients",
    );
    for (a, b, cc) in triples.iter().take(5) {
        let p = TrinomialParams::new(a.clone(), b.clone(), cc.clone());
        let coeffs = gf_coefficients(b, &p.discriminant(), 12);
        for (k, got) in coeffs.iter().enumerate() {
            c.record(
                *got == central_coeff(&p, k),
                format!("a={a} b={b} c={cc} k={k}"),
            );
        }
    }
    out.push(c.finish());

    let mut c = ExactCheck::new(SUITE, "generating function reproduces the Legendre series");
    for t in [int(2), int(1), int(0), ratio(1, 2), ratio(-3, 2)] {
        let coeffs = gf_coefficients(&t, &int(1), 12);
        for (k, got) in coeffs.iter().enumerate() {
            c.record(*got == legendre_eval(k, &t), format!("t={t} k={k}"));
        }
    }
    out.push(c.finish());

    let mut c = ExactCheck::new(SUITE, "trinomial route equals the recurrence polynomials");
    for n in 0..=15usize {
        c.record(
            legendre_via_trinomial(n) == legendre_poly(n),
            format!("n={n}"),
        );
    }
    out.push(c.finish());

    out
}
