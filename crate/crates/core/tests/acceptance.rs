//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Reference values are computed here independently of the library where a
//! cheap oracle exists: explicit Laguerre sums, brute-force enumeration,
//! hard-coded Gamma values and composite Simpson quadrature.

use std::time::Instant;

use zeroenergy::bender::{self, BenderProblem};
use zeroenergy::dirac::{self, DiracFamily};
use zeroenergy::oracle::{shoot_coupling, shoot_energy_bender};
use zeroenergy::oscillator::{self, OscillatorState};
use zeroenergy::param::Real;
use zeroenergy::powerlaw::{self, ConditionStatus, PowerLawFamily};
use zeroenergy::radial::{log_grid, RadialFunction};

const MU_MATRIX: [f64; 7] = [-2.5, -1.5, -0.75, 1.0 / 6.0, 0.25, 1.5, 2.5];
const LAMBDAS: [f64; 3] = [0.7, 1.0, 2.0];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn matrix() -> impl Iterator<Item = PowerLawFamily> {
    MU_MATRIX.into_iter().flat_map(|mu| {
        (0..3).flat_map(move |l| {
            (0..5).flat_map(move |n| {
                LAMBDAS
                    .into_iter()
                    .map(move |lam| PowerLawFamily::new(mu, lam, l, n).unwrap())
            })
        })
    })
}

/// `L_n^a(x) = Σ (−1)^k C(n+a, n−k) x^k / k!`.
fn laguerre_sum(n: u32, a: f64, x: f64) -> f64 {
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

fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, intervals: usize) -> f64 {
    let n = intervals + intervals % 2;
    let h = (b - a) / n as f64;
    let inner: f64 = (1..n)
        .map(|i| f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 })
        .sum();
    h / 3.0 * (f(a) + f(b) + inner)
}

fn ac1_zero_energy_identity() -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0;
    for f in matrix() {
        let rep = powerlaw::schrodinger_residual(&f, &powerlaw::standard_grid(&f)).unwrap();
        worst = worst.max(rep.max_relative);
        count += 1;
    }
    outcome(
        worst < 1e-8,
        format!("{count} families, max residual {worst:.2e} (tol 1e-8)"),
    )
}

fn ac2_transformation_identity() -> Outcome {
    let mut worst = 0.0f64;
    let mut worst_gamma = 0.0f64;
    for f in matrix() {
        worst = worst.max(powerlaw::pct_identity_check(&f, &powerlaw::pct_grid(&f)).max_relative);
        let gamma = -0.5 + (f.l() as f64 + 0.5) * (f.mu() + 0.5).abs();
        worst_gamma = worst_gamma.max((powerlaw::map_parameters(&f).gamma - gamma).abs());
    }
    outcome(
        worst < 1e-10 && worst_gamma < 1e-10,
        format!("max mismatch {worst:.2e}, gamma {worst_gamma:.2e} (tol 1e-10)"),
    )
}

fn enumerate_pairs(omega: i64) -> Vec<(u32, u32)> {
    // μ = 3/2: Ω = 2n + 1 + 2(2l+1) = 2n + 4l + 3
    let mut out = Vec::new();
    for l in 0..20u32 {
        for n in 0..40u32 {
            if 2 * n as i64 + 4 * l as i64 + 3 == omega {
                out.push((l, n));
            }
        }
    }
    out
}

fn ac3_degeneracy() -> Outcome {
    let mu = Real::ratio(3, 2);
    let a = powerlaw::degenerate_pairs(mu, Real::ratio(11, 1), None).unwrap();
    let b = powerlaw::degenerate_pairs(mu, Real::ratio(13, 1), None).unwrap();
    let ok = a == [(0, 4), (1, 2), (2, 0)]
        && b == [(0, 5), (1, 3), (2, 1)]
        && a == enumerate_pairs(11)
        && b == enumerate_pairs(13);
    outcome(ok, format!("omega=11 -> {a:?}, omega=13 -> {b:?}"))
}

fn ac4_table() -> Outcome {
    use ConditionStatus::*;
    // (row, mu values, l values, use violated level, bounded, normalizable, condition)
    type Row = (
        &'static str,
        &'static [f64],
        &'static [u32],
        bool,
        bool,
        bool,
        Option<ConditionStatus>,
    );
    let rows: [Row; 8] = [
        (
            "mu<-1/2 l=0",
            &[-2.5, -1.5, -0.75],
            &[0],
            false,
            false,
            false,
            Some(NotApplicable),
        ),
        (
            "mu<-1/2 l>0 satisfied",
            &[-2.5, -1.5, -0.75],
            &[1, 2],
            false,
            true,
            true,
            Some(Satisfied),
        ),
        (
            "mu<-1/2 l>0 violated",
            &[-2.5, -1.5, -0.75],
            &[1, 2],
            true,
            false,
            true,
            Some(Violated),
        ),
        (
            "mu>1/2 l=0",
            &[1.5, 2.5],
            &[0],
            false,
            true,
            true,
            Some(NotApplicable),
        ),
        (
            "mu>1/2 l>0 satisfied",
            &[1.5, 2.5],
            &[1, 2],
            false,
            true,
            true,
            Some(Satisfied),
        ),
        (
            "mu>1/2 l>0 violated",
            &[1.5, 2.5],
            &[1, 2],
            true,
            false,
            true,
            Some(Violated),
        ),
        (
            "|mu|<1/2 l=0",
            &[1.0 / 6.0, 0.25, -0.25],
            &[0],
            false,
            true,
            true,
            None,
        ),
        (
            "|mu|<1/2 l>0",
            &[1.0 / 6.0, 0.25, -0.25],
            &[1, 2],
            false,
            true,
            true,
            None,
        ),
    ];
    let mut failures = Vec::new();
    let mut cases = 0;
    for (name, mus, ls, violated, bounded, normalizable, condition) in rows {
        for &mu in mus {
            for &l in ls {
                let f = PowerLawFamily::new(mu, 1.0, l, 0).unwrap();
                let report = if violated {
                    let level = powerlaw::condition_rhs(&f).unwrap() - 0.25;
                    powerlaw::classify_level(&f, level).unwrap()
                } else {
                    powerlaw::classify(&f)
                };
                cases += 1;
                let cond_ok = condition.is_none_or(|c| c == report.condition);
                if report.bounded != bounded || report.normalizable != normalizable || !cond_ok {
                    failures.push(format!("{name} (mu={mu}, l={l})"));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("8 rows, {cases} cases, failures: {failures:?}"),
    )
}

fn ac5_special_case() -> Outcome {
    let mut worst_v = 0.0f64;
    let mut worst_ratio = 0.0f64;
    for lam in LAMBDAS {
        let z = lam.powi(4) / 32.0;
        for l in 0..3 {
            for n in 0..5 {
                let f = PowerLawFamily::new(1.5, lam, l, n).unwrap();
                let psi = powerlaw::wavefunction(&f).unwrap();
                let center = f.turning_scale();
                let mut ratios = Vec::new();
                for r in log_grid(center / 10.0, center * 10.0, 400) {
                    let expected =
                        z / r - (z / 2.0).sqrt() * (2.0 * l as f64 + n as f64 + 1.5) / r.powf(1.5);
                    let v = powerlaw::potential_eval(&f, r).unwrap();
                    let scale =
                        z / r + (z / 2.0).sqrt() * (2.0 * l as f64 + n as f64 + 1.5) / r.powf(1.5);
                    worst_v = worst_v.max((v - expected).abs() / scale);
                    let s = (2.0 * z * r).sqrt();
                    let lag = laguerre_sum(n, 4.0 * l as f64 + 2.0, 4.0 * s);
                    let printed = (z * r).powi(l as i32 + 1) * (-2.0 * s).exp() * lag;
                    // skip points next to a Laguerre zero
                    let lag_scale = (0..=n)
                        .map(|k| laguerre_sum(k, 4.0 * l as f64 + 2.0, 4.0 * s).abs())
                        .fold(1.0, f64::max);
                    if lag.abs() > 1e-3 * lag_scale {
                        ratios.push(psi.value(r) / printed);
                    }
                }
                let max = ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                let min = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
                let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
                worst_ratio = worst_ratio.max((max - min) / mean.abs());
            }
        }
    }
    outcome(
        worst_v < 1e-12 && worst_ratio < 1e-10,
        format!(
            "potential {worst_v:.2e} (tol 1e-12), ratio variation {worst_ratio:.2e} (tol 1e-10)"
        ),
    )
}

fn ac6_oracle() -> Outcome {
    let start = Instant::now();
    let s = shoot_coupling(1.5, 1.0, 1, 3).unwrap();
    let worst = s
        .values
        .iter()
        .enumerate()
        .map(|(n, v)| {
            let d = (2.0 * n as f64 + 7.0) / 16.0;
            (v - d).abs() / d
        })
        .fold(0.0, f64::max);
    let secs = start.elapsed().as_secs_f64();
    outcome(
        worst < 1e-6 && s.node_counts == [0, 1, 2] && secs < 60.0,
        format!(
            "D = {:?}, nodes {:?}, max rel err {worst:.2e} (tol 1e-6), {secs:.2}s",
            s.values, s.node_counts
        ),
    )
}

fn ac7_dirac() -> Outcome {
    // Γ((1 − 2κ)/β) for each case
    let cases = [
        (0.5, 0, 120.0),
        (0.5, 1, 362_880.0),
        (3.0, 1, 0.902_745_292_950_933_6),
        (-0.5, 1, 1.0),
    ];
    let mut worst_theta = 0.0f64;
    let mut worst_res = 0.0f64;
    let mut worst_norm = 0.0f64;
    let mut worst_form = 0.0f64;
    let mut n_zero = true;
    for (beta, l, gamma_value) in cases {
        let f = DiracFamily::with_default_alpha(beta, 1.0, l).unwrap();
        let grid = f.standard_grid();
        worst_theta = worst_theta.max(dirac::lower_component_check(&f, 1.0, &grid).unwrap());
        worst_res = worst_res.max(dirac::residual_33(&f, &grid).max_relative);
        let spinor = dirac::upper_spinor(&f);
        let q = dirac::quadrature_norm(&spinor, 1e-12).unwrap();
        worst_norm = worst_norm.max(if q.converged {
            (q.value - 1.0).abs()
        } else {
            f64::INFINITY
        });
        n_zero &= f.correspondence().n == 0;
        // the printed upper component with the printed constant
        let kappa = if beta > 0.0 {
            -(l as f64) - 1.0
        } else {
            l as f64
        };
        let c = (beta.abs() / gamma_value).sqrt();
        for r in log_grid(0.05, 5.0, 40) {
            let printed = c * r.powf(-kappa) * (-r.powf(beta) / 2.0).exp();
            worst_form = worst_form.max((spinor.upper.value(r) - printed).abs() / printed.abs());
        }
    }
    outcome(
        worst_theta < 1e-12 && worst_res < 1e-8 && worst_norm < 1e-8 && worst_form < 1e-12 && n_zero,
        format!(
            "theta {worst_theta:.2e} (1e-12), residual {worst_res:.2e} (1e-8), norm {worst_norm:.2e} (1e-8), printed form {worst_form:.2e}, n=0: {n_zero}"
        ),
    )
}

fn ac8_bender() -> Outcome {
    let mut worst = 0.0f64;
    for big_n in [-3, -1, 0, 1, 3] {
        for n in 0..4 {
            let p = BenderProblem::new(big_n, n).unwrap();
            worst = worst.max(
                bender::residual(&p, &p.standard_grid())
                    .unwrap()
                    .max_relative,
            );
        }
    }
    let mut worst_e = 0.0f64;
    let mut shot = Vec::new();
    for big_n in [0i64, -1] {
        let s = shoot_energy_bender(big_n, 2).unwrap();
        for (n, v) in s.values.iter().enumerate() {
            let e = (2.0 * n as f64 + 1.0) * (big_n + 2).abs() as f64 + 1.0;
            worst_e = worst_e.max((v - e).abs() / e);
        }
        shot.push(s.values);
    }
    outcome(
        worst < 1e-8 && worst_e < 1e-6,
        format!("residual {worst:.2e} (1e-8), shooting {shot:?} rel err {worst_e:.2e} (1e-6)"),
    )
}

fn ac9_oscillator() -> Outcome {
    let mut worst_orth = 0.0f64;
    for gamma in [-0.5, 0.0, 0.75, 2.0] {
        for m in 0..=5 {
            for n in m..=5 {
                let a = OscillatorState::new(gamma, m, 1.0).unwrap().phi();
                let b = OscillatorState::new(gamma, n, 1.0).unwrap().phi();
                let overlap = simpson(
                    |x| {
                        if x > 0.0 {
                            a.value(x) * b.value(x)
                        } else {
                            0.0
                        }
                    },
                    0.0,
                    14.0,
                    40_000,
                );
                let expected = if m == n { 1.0 } else { 0.0 };
                worst_orth = worst_orth.max((overlap - expected).abs());
            }
        }
    }
    let mut worst_res = 0.0f64;
    for gamma in [-0.5, 0.0, 0.75, 2.25] {
        for n in 0..5 {
            let s = OscillatorState::new(gamma, n, 1.0).unwrap();
            worst_res = worst_res.max(oscillator::residual_a5(&s, &s.standard_grid()).max_relative);
        }
    }
    let grid = oscillator::ladder_grid();
    let mut worst_ladder = 0.0f64;
    let mut signs = Vec::new();
    for gamma in [-0.5, 0.0, 1.5] {
        for n in 0..3 {
            let r = oscillator::ladder_check(gamma, n, &grid).unwrap();
            signs.push(r.sigma);
            worst_ladder = worst_ladder
                .max(r.l3_deviation)
                .max((r.raising_norm_ratio - 1.0).abs())
                .max((r.raising_alignment - 1.0).abs())
                .max(r.lowering_annihilation);
        }
    }
    let one_sign = signs.windows(2).all(|w| w[0] == w[1]);
    outcome(
        worst_orth < 1e-9 && worst_res < 1e-8 && worst_ladder < 1e-6 && one_sign,
        format!(
            "orthonormality {worst_orth:.2e} (1e-9), residual {worst_res:.2e} (1e-8), ladder {worst_ladder:.2e} (1e-6), global sign {}",
            signs[0]
        ),
    )
}

fn ac10_exceptional() -> Outcome {
    let f = PowerLawFamily::new(-1.5, 1.0, 1, 0).unwrap();
    let norm = powerlaw::norm(&f).unwrap();
    // independent: ∫ψ² dr with ψ = (λ^m r)^{-l} e^{-t/2}, t = λ² r^{2/m}, m = −2, λ = 1:
    // ψ = r^{-1} e^{-1/(2r)}, ∫ r^{-2} e^{-1/r} dr = 1
    let oracle = 1.0;
    let level = powerlaw::condition_rhs(&f).unwrap() - 0.25;
    let violated = powerlaw::classify_level(&f, level).unwrap();
    let exact = powerlaw::classify(&f);
    let value = norm.value.unwrap_or(f64::NAN);
    let ok = norm.finite
        && (value - oracle).abs() < 1e-9
        && !violated.bounded
        && violated.normalizable
        && violated.condition == ConditionStatus::Violated
        && exact.bounded;
    outcome(
        ok,
        format!(
            "norm finite={} value={value:.12} (oracle 1); violated level {level:.4}: bounded={} normalizable={}",
            norm.finite, violated.bounded, violated.normalizable
        ),
    )
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1", "zero-energy identity", ac1_zero_energy_identity),
        (
            "AC2",
            "transformation identity",
            ac2_transformation_identity,
        ),
        ("AC3", "degenerate pairs", ac3_degeneracy),
        ("AC4", "boundedness table", ac4_table),
        ("AC5", "mu = 3/2 special case", ac5_special_case),
        ("AC6", "shooting oracle", ac6_oracle),
        ("AC7", "Dirac suite", ac7_dirac),
        ("AC8", "half-line problem", ac8_bender),
        ("AC9", "oscillator suite", ac9_oscillator),
        ("AC10", "exceptional states", ac10_exceptional),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        if !result.passed {
            failed += 1;
        }
        println!(
            "{id:<5} {} {name}: {} [{:.2}s]",
            if result.passed { "PASS" } else { "FAIL" },
            result.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
