//! Residual and agreement suites behind `verify`.
//!
//! Every check reports a measured deviation and the tolerance it is held
//! to. Yes/no checks report 0 when they hold and 1 when they do not,
//! against a tolerance of 0.

use serde::Serialize;
use serde_json::json;

use super::output::num;
use super::{Document, Suite, Table};
use crate::bender::{self, BenderProblem};
use crate::dirac::{self, DiracFamily};
use crate::oracle::{self, quad_seminfinite};
use crate::oscillator::{self, OscillatorState};
use crate::param::Real;
use crate::powerlaw::{self, special, ConditionStatus, PowerLawFamily};
use crate::radial::RadialFunction;
use crate::specfn::{self, Laguerre};

/// μ values of the zero-energy identity matrix.
pub const MU_MATRIX: [f64; 7] = [-2.5, -1.5, -0.75, 1.0 / 6.0, 0.25, 1.5, 2.5];
pub const LAMBDA_MATRIX: [f64; 3] = [0.7, 1.0, 2.0];
pub const PCT_TOL: f64 = 1e-10;
pub const SPECIAL_POTENTIAL_TOL: f64 = 1e-12;
pub const SPECIAL_RATIO_TOL: f64 = 1e-10;
pub const ORTHONORMALITY_TOL: f64 = 1e-9;
pub const THETA_TOL: f64 = 1e-12;
pub const DIRAC_NORM_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

struct Collector {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Collector {
    fn new(suite: Suite) -> Self {
        Self {
            suite: suite.name(),
            checks: Vec::new(),
        }
    }

    fn within(&mut self, name: impl Into<String>, value: f64, tolerance: f64) {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            value,
            tolerance,
            passed: value <= tolerance,
        });
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool) {
        self.within(name, if ok { 0.0 } else { 1.0 }, 0.0);
    }

    /// Records an error from the library as a failed check.
    fn attempt<T>(&mut self, name: &str, r: crate::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.holds(format!("{name}: {e}"), false);
                None
            }
        }
    }
}

pub fn run(suites: &[Suite], residual_tol: f64, oracle_tol: f64) -> Vec<Check> {
    suites
        .iter()
        .flat_map(|&s| {
            let mut c = Collector::new(s);
            match s {
                Suite::Specfn => specfn_suite(&mut c),
                Suite::Oscillator => oscillator_suite(&mut c, residual_tol, oracle_tol),
                Suite::Powerlaw => powerlaw_suite(&mut c, residual_tol),
                Suite::Dirac => dirac_suite(&mut c, residual_tol),
                Suite::Bender => bender_suite(&mut c, residual_tol, oracle_tol),
                Suite::Oracle => oracle_suite(&mut c, oracle_tol),
            }
            c.checks
        })
        .collect()
}

pub fn document(checks: &[Check]) -> Document {
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut table = Table::new(vec!["suite", "name", "value", "tolerance", "passed"]);
    for c in checks {
        table.push(vec![
            c.suite.to_string(),
            c.name.clone(),
            num(c.value),
            num(c.tolerance),
            c.passed.to_string(),
        ]);
    }
    Document {
        json: json!({
            "passed": failed == 0,
            "total": checks.len(),
            "failed": failed,
            "checks": checks,
        }),
        table,
        passed: failed == 0,
    }
}

/// `L_n^a(x)` from the explicit sum `Σ (−1)^k C(n+a, n−k) x^k / k!`.
fn laguerre_by_sum(n: u32, a: f64, x: f64) -> f64 {
    (0..=n)
        .map(|k| {
            let binom: f64 = (1..=n - k)
                .map(|j| (a + (k + j) as f64) / j as f64)
                .product();
            let fact: f64 = (1..=k).map(|j| j as f64).product();
            (-1f64).powi(k as i32) * binom * x.powi(k as i32) / fact
        })
        .sum()
}

fn specfn_suite(c: &mut Collector) {
    let mut worst = 0.0f64;
    for n in 0..8 {
        for a in [-0.5, 0.0, 0.5, 2.0, 4.5] {
            let Some(p) = c.attempt("laguerre", Laguerre::new(n, a)) else {
                return;
            };
            for x in [0.1, 0.7, 2.0, 5.0] {
                let oracle = laguerre_by_sum(n, a, x);
                let scale = (0..=n)
                    .map(|k| laguerre_by_sum(k, a, x).abs())
                    .fold(1.0, f64::max);
                worst = worst.max((p.eval(x) - oracle).abs() / scale);
            }
        }
    }
    c.within("laguerre matches explicit sum", worst, 1e-12);

    let mut worst = 0.0f64;
    for n in 1..8 {
        for a in [0.0, 1.5] {
            let p = Laguerre::new(n, a).expect("valid order");
            let q = Laguerre::new(n - 1, a + 1.0).expect("valid order");
            for x in [0.3, 1.7, 4.0] {
                worst = worst.max((p.deriv(x) + q.eval(x)).abs() / q.eval(x).abs().max(1.0));
            }
        }
    }
    c.within(
        "derivative identity d/dx L_n^a = -L_{n-1}^{a+1}",
        worst,
        1e-12,
    );

    let known = [
        (0.5, 0.5 * std::f64::consts::PI.ln()),
        (1.0, 0.0),
        (10.0, 362_880f64.ln()),
        (3.5, (15.0 / 8.0 * std::f64::consts::PI.sqrt()).ln()),
    ];
    let worst = known
        .iter()
        .map(|&(x, v)| (specfn::log_gamma(x).unwrap_or(f64::NAN) - v).abs())
        .fold(0.0, f64::max);
    c.within("log_gamma at known points", worst, 1e-13);
}

fn oscillator_suite(c: &mut Collector, residual_tol: f64, oracle_tol: f64) {
    for gamma in [-0.5, 0.0, 1.5] {
        let mut worst = 0.0f64;
        for m in 0..=5u32 {
            for n in m..=5u32 {
                let a = OscillatorState::new(gamma, m, 1.0).expect("valid").phi();
                let b = OscillatorState::new(gamma, n, 1.0).expect("valid").phi();
                let Some(q) = c.attempt(
                    "overlap",
                    quad_seminfinite(|x| a.value(x) * b.value(x), 1e-12),
                ) else {
                    return;
                };
                let expected = if m == n { 1.0 } else { 0.0 };
                worst = worst.max(if q.converged {
                    (q.value - expected).abs()
                } else {
                    f64::INFINITY
                });
            }
        }
        c.within(
            format!("orthonormality gamma={gamma}"),
            worst,
            ORTHONORMALITY_TOL,
        );
    }

    let mut worst = 0.0f64;
    for gamma in [-0.5, 0.0, 0.75, 2.25] {
        for n in 0..5 {
            for lambda in [0.7, 1.0, 1.3] {
                let s = OscillatorState::new(gamma, n, lambda).expect("valid");
                worst = worst.max(oscillator::residual_a5(&s, &s.standard_grid()).max_relative);
            }
        }
    }
    c.within("wave equation residual", worst, residual_tol);

    let grid = oscillator::ladder_grid();
    for gamma in [-0.5, 0.0, 1.5] {
        for n in 0..3 {
            let Some(rep) = c.attempt("ladder", oscillator::ladder_check(gamma, n, &grid)) else {
                continue;
            };
            let dev = rep
                .l3_deviation
                .max((rep.raising_norm_ratio - 1.0).abs())
                .max((rep.raising_alignment - 1.0).abs())
                .max(rep.lowering_annihilation);
            c.within(
                format!("ladder gamma={gamma} n={n} (sigma={})", rep.sigma),
                dev,
                oracle_tol,
            );
        }
    }
}

fn table_row(
    c: &mut Collector,
    name: String,
    f: &PowerLawFamily,
    level: Option<f64>,
    expect: (bool, bool, ConditionStatus),
) {
    let report = match level {
        Some(v) => powerlaw::classify_level(f, v),
        None => Ok(powerlaw::classify(f)),
    };
    if let Some(r) = c.attempt(&name, report) {
        c.holds(name, (r.bounded, r.normalizable, r.condition) == expect);
    }
}

fn powerlaw_suite(c: &mut Collector, residual_tol: f64) {
    let mut worst = 0.0f64;
    let mut worst_pct = 0.0f64;
    let mut worst_gamma = 0.0f64;
    for &mu in &MU_MATRIX {
        for l in 0..3 {
            for n in 0..5 {
                for &lambda in &LAMBDA_MATRIX {
                    let Some(f) = c.attempt("family", PowerLawFamily::new(mu, lambda, l, n)) else {
                        return;
                    };
                    let grid = powerlaw::standard_grid(&f);
                    if let Some(rep) =
                        c.attempt("residual", powerlaw::schrodinger_residual(&f, &grid))
                    {
                        worst = worst.max(rep.max_relative);
                    }
                    worst_pct = worst_pct.max(
                        powerlaw::pct_identity_check(&f, &powerlaw::pct_grid(&f)).max_relative,
                    );
                    let gamma = -0.5 + (l as f64 + 0.5) * (mu + 0.5).abs();
                    worst_gamma =
                        worst_gamma.max((powerlaw::map_parameters(&f).gamma - gamma).abs());
                }
            }
        }
    }
    c.within("zero-energy residual over the matrix", worst, residual_tol);
    c.within(
        "transformation identity over the matrix",
        worst_pct,
        PCT_TOL,
    );
    c.within("gamma formula", worst_gamma, 1e-15);

    let q = |n, d| Real::ratio(n, d);
    let expect = [
        (11, vec![(0, 4), (1, 2), (2, 0)]),
        (13, vec![(0, 5), (1, 3), (2, 1)]),
        (10, vec![]),
    ];
    for (omega, pairs) in expect {
        let got = powerlaw::degenerate_pairs(q(3, 2), q(omega, 1), None);
        c.holds(
            format!("degenerate pairs mu=3/2 omega={omega}"),
            got.ok() == Some(pairs),
        );
    }

    use ConditionStatus::*;
    for mu in [-1.5, -0.75] {
        let f = PowerLawFamily::new(mu, 1.0, 0, 0).expect("valid");
        table_row(
            c,
            format!("table mu={mu} l=0"),
            &f,
            None,
            (false, false, NotApplicable),
        );
    }
    for mu in [1.5, 2.5] {
        let f = PowerLawFamily::new(mu, 1.0, 0, 0).expect("valid");
        table_row(
            c,
            format!("table mu={mu} l=0"),
            &f,
            None,
            (true, true, NotApplicable),
        );
    }
    for mu in [-1.5, -0.75, 1.5, 2.5] {
        for l in 1..3 {
            let f = PowerLawFamily::new(mu, 1.0, l, 0).expect("valid");
            table_row(
                c,
                format!("table mu={mu} l={l} satisfied"),
                &f,
                None,
                (true, true, Satisfied),
            );
            let level = powerlaw::condition_rhs(&f).expect("outside the confining band") - 0.25;
            table_row(
                c,
                format!("table mu={mu} l={l} violated"),
                &f,
                Some(level),
                (false, true, Violated),
            );
        }
    }
    for mu in [1.0 / 6.0, 0.25, -0.25] {
        for l in 0..3 {
            let f = PowerLawFamily::new(mu, 1.0, l, 0).expect("valid");
            table_row(
                c,
                format!("table mu={mu:.4} l={l}"),
                &f,
                None,
                (true, true, NotApplicable),
            );
        }
    }

    let mut worst_v = 0.0f64;
    let mut worst_ratio = 0.0f64;
    for &lambda in &LAMBDA_MATRIX {
        for l in 0..3 {
            for n in 0..5 {
                if let Some(rep) = c.attempt("special case", special::check(lambda, l, n)) {
                    worst_v = worst_v.max(rep.potential_max_relative);
                    worst_ratio = worst_ratio.max(rep.ratio_variation);
                }
            }
        }
    }
    c.within("mu=3/2 potential form", worst_v, SPECIAL_POTENTIAL_TOL);
    c.within(
        "mu=3/2 wavefunction ratio variation",
        worst_ratio,
        SPECIAL_RATIO_TOL,
    );

    let f = PowerLawFamily::new(-1.5, 1.0, 1, 0).expect("valid");
    let norm = powerlaw::norm(&f);
    c.holds(
        "exceptional: norm finite",
        norm.as_ref().is_ok_and(|r| r.finite && r.value.is_some()),
    );
    let level = powerlaw::condition_rhs(&f).expect("condition applies") - 0.25;
    if let Some(r) = c.attempt("exceptional", powerlaw::classify_level(&f, level)) {
        c.holds(
            "exceptional: unbounded yet normalizable",
            !r.bounded && r.normalizable,
        );
    }
}

fn dirac_suite(c: &mut Collector, residual_tol: f64) {
    for (beta, l) in [(0.5, 0), (0.5, 1), (3.0, 1), (-0.5, 1)] {
        let tag = format!("beta={beta} l={l}");
        let Some(f) = c.attempt(&tag, DiracFamily::with_default_alpha(beta, 1.0, l)) else {
            continue;
        };
        let grid = f.standard_grid();
        c.holds(format!("{tag} n forced to 0"), f.correspondence().n == 0);
        if let Some(theta) = c.attempt(&tag, dirac::lower_component_check(&f, 1.0, &grid)) {
            c.within(format!("{tag} lower component"), theta, THETA_TOL);
        }
        c.within(
            format!("{tag} upper equation residual"),
            dirac::residual_33(&f, &grid).max_relative,
            residual_tol,
        );
        let spinor = dirac::upper_spinor(&f);
        if let Some(q) = c.attempt(&tag, dirac::quadrature_norm(&spinor, 1e-12)) {
            let dev = if q.converged {
                (q.value - 1.0).abs()
            } else {
                f64::INFINITY
            };
            c.within(format!("{tag} norm"), dev, DIRAC_NORM_TOL);
        }
    }
}

fn bender_suite(c: &mut Collector, residual_tol: f64, oracle_tol: f64) {
    let mut worst = 0.0f64;
    for big_n in [-3, -1, 0, 1, 3] {
        for n in 0..4 {
            let p = BenderProblem::new(big_n, n).expect("N != -2");
            if let Some(rep) =
                c.attempt("bender residual", bender::residual(&p, &p.standard_grid()))
            {
                worst = worst.max(rep.max_relative);
            }
        }
    }
    c.within("eigenfunction residual", worst, residual_tol);
    for (big_n, expected) in [(0, [3.0, 7.0]), (-1, [2.0, 4.0])] {
        if let Some(s) = c.attempt("bender shooting", oracle::shoot_energy_bender(big_n, 2)) {
            let dev = s
                .values
                .iter()
                .zip(expected)
                .map(|(v, e)| (v - e).abs() / e)
                .fold(0.0, f64::max);
            c.within(format!("shooting N={big_n}"), dev, oracle_tol);
            c.holds(
                format!("shooting N={big_n} node order"),
                s.is_sturm_ordered(),
            );
        }
    }
}

fn oracle_suite(c: &mut Collector, oracle_tol: f64) {
    if let Some(s) = c.attempt("coupling shooting", oracle::shoot_coupling(1.5, 1.0, 1, 3)) {
        let dev = s
            .values
            .iter()
            .enumerate()
            .map(|(n, v)| {
                let d = (2.0 * n as f64 + 7.0) / 16.0;
                (v - d).abs() / d
            })
            .fold(0.0, f64::max);
        c.within("couplings mu=3/2 l=1", dev, oracle_tol);
        c.holds("node counts 0,1,2", s.node_counts == [0, 1, 2]);
    }
    for (mu, l) in [(2.5, 0), (0.25, 1), (-1.5, 1)] {
        let Some(s) = c.attempt("coupling shooting", oracle::shoot_coupling(mu, 1.0, l, 2)) else {
            continue;
        };
        let f = PowerLawFamily::new(mu, 1.0, l, 0).expect("valid");
        let dev = s
            .values
            .iter()
            .enumerate()
            .map(|(n, v)| {
                let d = f.with_n(n as u32).terms().attractive_coefficient;
                (v - d).abs() / d
            })
            .fold(0.0, f64::max);
        c.within(format!("couplings mu={mu} l={l}"), dev, oracle_tol);
    }
    if let Some(s) = c.attempt("bender shooting", oracle::shoot_energy_bender(1, 2)) {
        let dev = s
            .values
            .iter()
            .zip([4.0, 10.0])
            .map(|(v, e)| (v - e).abs() / e)
            .fold(0.0, f64::max);
        c.within("energies N=1", dev, oracle_tol);
    }
}
