//! Library results against oracles that share no code with it.

use proptest::prelude::*;

use zeroenergy::bender::{self, BenderProblem};
use zeroenergy::dirac::{self, DiracFamily};
use zeroenergy::oracle::shoot_coupling;
use zeroenergy::param::Real;
use zeroenergy::powerlaw::{self, PowerLawFamily};
use zeroenergy::radial::{log_grid, RadialFunction};
use zeroenergy::specfn::{laguerre, log_gamma, Laguerre};

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

fn valid_mu() -> impl Strategy<Value = f64> {
    prop_oneof![-3.0..-0.55f64, -0.45..-0.05f64, 0.05..0.45f64, 0.55..3.0f64]
}

#[test]
fn exponents_match_direct_formula() {
    for mu in [-2.5, -0.75, 1.0 / 6.0, 1.5] {
        let m = 2.0 * mu + 1.0;
        let (p1, p2) = powerlaw::exponent_pair(mu).unwrap();
        assert!((p1 - (-2.0 * (mu - 0.5) / (mu + 0.5))).abs() < 1e-14);
        assert!((p2 - (-2.0 * mu / (mu + 0.5))).abs() < 1e-14);
        assert!((p1 - (4.0 / m - 2.0)).abs() < 1e-14);
    }
    for mu in [1e6, -1e6] {
        let (p1, p2) = powerlaw::exponent_pair(mu).unwrap();
        assert!((p1 + 2.0).abs() < 1e-5 && (p2 + 2.0).abs() < 1e-5);
    }
}

#[test]
fn potential_coefficients_match_closed_form() {
    for (mu, lam, l, n) in [(1.5, 1.0, 1, 2), (-0.75, 0.7, 0, 3), (0.25, 2.0, 2, 0)] {
        let f = PowerLawFamily::new(mu, lam, l, n).unwrap();
        let t = f.terms();
        let m: f64 = 2.0 * mu + 1.0;
        let k = (lam / m).powi(2);
        assert!((t.repulsive_coefficient - k * lam * lam / 2.0).abs() < 1e-14);
        let omega = 2.0 * n as f64 + 1.0 + (2.0 * l as f64 + 1.0) * (mu + 0.5).abs();
        assert!((t.attractive_coefficient - k * omega).abs() < 1e-14);
    }
}

/// ψ'' from fourth-order central differences, independent of the analytic jet.
#[test]
fn wavefunction_solves_equation_by_finite_differences() {
    for (mu, l, n) in [
        (1.5, 1, 2),
        (-1.5, 1, 1),
        (0.25, 0, 3),
        (1.0 / 6.0, 2, 1),
        (2.5, 0, 0),
    ] {
        let f = PowerLawFamily::new(mu, 1.0, l, n).unwrap();
        let psi = powerlaw::wavefunction(&f).unwrap();
        let t = f.terms();
        let center = f.turning_scale();
        let grid = log_grid(center / 4.0, center * 4.0, 25);
        let v = |x: f64| psi.value(x);
        let peak = grid.iter().map(|&r| v(r).abs()).fold(0.0, f64::max);
        for r in grid.into_iter().filter(|&r| v(r).abs() > 1e-3 * peak) {
            let h = 1e-3 * r;
            let d2 = (-v(r + 2.0 * h) + 16.0 * v(r + h) - 30.0 * v(r) + 16.0 * v(r - h)
                - v(r - 2.0 * h))
                / (12.0 * h * h);
            let q = (l * (l + 1)) as f64 / (r * r) + 2.0 * t.potential(r);
            let terms = (l * (l + 1)) as f64 / (r * r)
                + 2.0 * t.repulsive_coefficient * r.powf(t.repulsive_exponent)
                + 2.0 * t.attractive_coefficient * r.powf(t.attractive_exponent);
            let scale = d2.abs() + terms * v(r).abs();
            assert!(
                (d2 - q * v(r)).abs() < 1e-6 * scale.max(1e-300),
                "{mu} {l} {n} at {r}"
            );
        }
    }
}

#[test]
fn norm_matches_direct_integration() {
    // μ = 3/2, λ = 1: ψ = r^{l+1} e^{-√r/2} L_n^{4l+2}(√r); integrate in u = √r
    for (l, n) in [(0, 0), (0, 2), (1, 1)] {
        let f = PowerLawFamily::new(1.5, 1.0, l, n).unwrap();
        let report = powerlaw::norm(&f).unwrap();
        let order = 4.0 * l as f64 + 2.0;
        let direct = simpson(
            |u| {
                let r = u * u;
                let psi = r.powi(l as i32 + 1) * (-0.5 * u).exp() * laguerre_sum(n, order, u);
                psi * psi * 2.0 * u
            },
            0.0,
            400.0,
            200_000,
        );
        let value = report.value.unwrap();
        assert!(
            (value / direct - 1.0).abs() < 1e-9,
            "{l} {n}: {value} vs {direct}"
        );
    }
    let f = PowerLawFamily::new(-1.5, 1.0, 0, 0).unwrap();
    assert!(!powerlaw::norm(&f).unwrap().finite);
}

#[test]
fn bender_energies_by_shooting_at_n_one() {
    let s = zeroenergy::oracle::shoot_energy_bender(1, 2).unwrap();
    assert!((s.values[0] - 4.0).abs() < 4e-6);
    assert!((s.values[1] - 10.0).abs() < 1e-5);
    assert_eq!(bender::spectrum(1, 1).unwrap(), 10.0);
}

#[test]
fn dirac_constant_matches_gamma_values() {
    for (beta, l, gamma) in [
        (0.5, 0, 120.0),
        (3.0, 1, 0.902_745_292_950_933_6),
        (-0.5, 1, 1.0),
    ] {
        let f = DiracFamily::with_default_alpha(beta, 1.0, l).unwrap();
        let c = dirac::upper_spinor(&f).normalization.unwrap();
        assert!((c - (f64::abs(beta) / gamma).sqrt()).abs() < 1e-13);
    }
}

#[test]
fn shooting_agrees_off_the_special_case() {
    for (mu, lam, l) in [(2.5, 1.3, 1), (-0.75, 1.0, 1), (1.0 / 6.0, 0.8, 0)] {
        let s = shoot_coupling(mu, lam, l, 2).unwrap();
        let f = PowerLawFamily::new(mu, lam, l, 0).unwrap();
        for (n, v) in s.values.iter().enumerate() {
            let d = f.with_n(n as u32).terms().attractive_coefficient;
            assert!((v - d).abs() < 1e-6 * d, "{mu} {l} {n}: {v} vs {d}");
        }
        assert!(s.is_sturm_ordered());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laguerre_matches_explicit_sum(n in 0u32..10, a in -0.9f64..8.0, x in 0.0f64..12.0) {
        let v = laguerre(n, a, x).unwrap();
        let oracle = laguerre_sum(n, a, x);
        let scale = (0..=n).map(|k| laguerre_sum(k, a, x).abs()).fold(1.0, f64::max) * (1.0 + x).powi(n as i32);
        prop_assert!((v - oracle).abs() <= 1e-12 * scale);
    }

    #[test]
    fn laguerre_three_term_recurrence(n in 1u32..12, a in -0.5f64..5.0, x in 0.0f64..10.0) {
        let p = |k| Laguerre::new(k, a).unwrap().eval(x);
        let k = n as f64;
        let lhs = (k + 1.0) * p(n + 1);
        let rhs = (2.0 * k + 1.0 + a - x) * p(n) - (k + a) * p(n - 1);
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs() + rhs.abs()) * (1.0 + x).powi(n as i32));
    }

    #[test]
    fn log_gamma_recurrence(x in 0.1f64..40.0) {
        let lhs = log_gamma(x + 1.0).unwrap();
        let rhs = log_gamma(x).unwrap() + x.ln();
        prop_assert!((lhs - rhs).abs() < 1e-12 * (1.0 + lhs.abs()));
    }

    #[test]
    fn node_count_equals_n(mu in valid_mu(), l in 0u32..3, n in 0u32..6) {
        let f = PowerLawFamily::new(mu, 1.0, l, n).unwrap();
        let psi = powerlaw::wavefunction(&f).unwrap();
        let grid = powerlaw::standard_grid(&f);
        let mut fine = Vec::new();
        for w in grid.windows(2) {
            for k in 0..8 {
                fine.push(w[0] + (w[1] - w[0]) * k as f64 / 8.0);
            }
        }
        let signs: Vec<f64> = fine.iter().map(|&r| psi.value(r)).filter(|v| *v != 0.0).collect();
        let changes = signs.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
        prop_assert_eq!(changes, n as usize);
    }

    #[test]
    fn residual_small_across_parameters(mu in valid_mu(), lam in 0.5f64..2.5, l in 0u32..4, n in 0u32..6) {
        let f = PowerLawFamily::new(mu, lam, l, n).unwrap();
        let rep = powerlaw::schrodinger_residual(&f, &powerlaw::standard_grid(&f)).unwrap();
        prop_assert!(rep.passes(1e-8), "{:?}", rep);
    }

    #[test]
    fn beta_form_agrees(mu in valid_mu(), l in 0u32..4, n in 0u32..5) {
        let f = PowerLawFamily::new(mu, 1.0, l, n).unwrap();
        let d = powerlaw::beta_form_discrepancy(&f, &powerlaw::standard_grid(&f)).unwrap();
        prop_assert!(d < 1e-12);
    }

    #[test]
    fn degeneracy_matches_enumeration(num in -30i64..30, den in 1i64..7, omega_num in 1i64..80, omega_den in 1i64..4) {
        let mu = num_rational::Rational64::new(num, den);
        prop_assume!(num != 0 && mu != num_rational::Rational64::new(1, 2) && mu != num_rational::Rational64::new(-1, 2));
        let w = num_rational::Rational64::new(omega_num, omega_den);
        let pairs = powerlaw::degenerate_pairs(Real::Exact(mu), Real::Exact(w), None).unwrap();
        let a = mu + num_rational::Rational64::new(1, 2);
        let a = if a < num_rational::Rational64::from_integer(0) { -a } else { a };
        let mut brute = Vec::new();
        for l in 0..200u32 {
            for n in 0..200u32 {
                if num_rational::Rational64::from_integer(2 * n as i64 + 1) + a * (2 * l as i64 + 1) == w {
                    brute.push((l, n));
                }
            }
        }
        prop_assert_eq!(&pairs, &brute);
        // every degenerate pair sees the same potential
        let mu_f = *mu.numer() as f64 / *mu.denom() as f64;
        let terms: Vec<_> = pairs
            .iter()
            .map(|&(l, n)| PowerLawFamily::new(mu_f, 1.0, l, n).unwrap().terms())
            .collect();
        for t in &terms {
            prop_assert!((t.attractive_coefficient - terms[0].attractive_coefficient).abs() <= 1e-12 * t.attractive_coefficient);
        }
    }

    #[test]
    fn dirac_kappa_branch(beta in prop_oneof![-3.0..-0.1f64, 0.1..0.95f64, 1.05..1.95f64, 2.05..4.0f64], l in 0u32..4) {
        let f = DiracFamily::with_default_alpha(beta, 1.0, l).unwrap();
        let c = f.correspondence();
        prop_assert_eq!(c.n, 0);
        prop_assert_eq!(c.kappa, if beta > 0.0 { -(l as i64) - 1 } else { l as i64 });
        let grid = f.standard_grid();
        prop_assert!(dirac::lower_component_check(&f, 1.0, &grid).unwrap() < 1e-12);
        prop_assert!(dirac::residual_33(&f, &grid).passes(1e-8));
    }

    #[test]
    fn bender_residual_and_spacing(big_n in prop_oneof![-8i64..-2, -1i64..8], n in 0u32..5) {
        let p = BenderProblem::new(big_n, n).unwrap();
        prop_assert!(bender::residual(&p, &p.standard_grid()).unwrap().passes(1e-8));
        let next = BenderProblem::new(big_n, n + 1).unwrap();
        prop_assert_eq!(next.energy() - p.energy(), 2.0 * (big_n + 2).abs() as f64);
    }
}
