//! Shared machinery for the closed forms: every solution in this crate has
//! the shape `C r^q e^{-t/2} L_n^a(t)` with `t = c r^s`, so one evaluator
//! with analytic derivatives serves the oscillator, the power-law family,
//! the Dirac upper component and the half-line problem.

use serde::Serialize;

use crate::specfn::Laguerre;

/// Value with first and second radial derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Jet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

pub trait RadialFunction {
    fn jet(&self, r: f64) -> Jet;

    fn value(&self, r: f64) -> f64 {
        self.jet(r).value
    }
}

/// `exp(ln_scale) · r^power · e^{-t/2} · L_n^a(t)` with `t = coeff · r^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreProfile {
    pub ln_scale: f64,
    pub power: f64,
    pub coeff: f64,
    pub exponent: f64,
    pub poly: Laguerre,
}

impl LaguerreProfile {
    /// The Laguerre argument `t(r)`.
    pub fn argument(&self, r: f64) -> f64 {
        (self.coeff.ln() + self.exponent * r.ln()).exp()
    }

    /// Inverse of [`argument`](Self::argument).
    pub fn radius_at(&self, t: f64) -> f64 {
        ((t / self.coeff).ln() / self.exponent).exp()
    }

    pub fn scaled(mut self, factor: f64) -> Self {
        self.ln_scale += factor.ln();
        self
    }
}

impl RadialFunction for LaguerreProfile {
    fn jet(&self, r: f64) -> Jet {
        let q = self.power;
        let s = self.exponent;
        let t = self.argument(r);
        let t1 = s * t / r;
        let t2 = s * (s - 1.0) * t / (r * r);
        let base = (self.ln_scale + q * r.ln() - 0.5 * t).exp();
        let [l0, l1, l2] = self.poly.jet(t);
        // F(t) = e^{-t/2} L(t) up to the common exponential
        let f0 = l0;
        let f1 = l1 - 0.5 * l0;
        let f2 = l2 - l1 + 0.25 * l0;
        let g0 = f0;
        let g1 = f1 * t1;
        let g2 = f2 * t1 * t1 + f1 * t2;
        Jet {
            value: base * g0,
            d1: base * (q / r * g0 + g1),
            d2: base * (q * (q - 1.0) / (r * r) * g0 + 2.0 * q / r * g1 + g2),
        }
    }
}

/// An evaluable closed-form radial solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormSolution {
    profile: LaguerreProfile,
    normalized: bool,
}

impl ClosedFormSolution {
    pub fn new(profile: LaguerreProfile, normalized: bool) -> Self {
        Self {
            profile,
            normalized,
        }
    }

    pub fn profile(&self) -> &LaguerreProfile {
        &self.profile
    }

    /// True when the overall constant makes `∫ ψ² dr = 1`.
    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Interior zeros of the solution, located on the Laguerre argument.
    pub fn degree(&self) -> u32 {
        self.profile.poly.degree()
    }
}

impl RadialFunction for ClosedFormSolution {
    fn jet(&self, r: f64) -> Jet {
        self.profile.jet(r)
    }
}

/// `Σ c_i r^{e_i}`.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct PowerSum {
    pub terms: Vec<(f64, f64)>,
}

impl PowerSum {
    pub fn new(terms: Vec<(f64, f64)>) -> Self {
        Self { terms }
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.terms.iter().map(|&(c, e)| c * r.powf(e)).sum()
    }

    pub fn deriv(&self, r: f64) -> f64 {
        self.terms
            .iter()
            .filter(|&&(_, e)| e != 0.0)
            .map(|&(c, e)| c * e * r.powf(e - 1.0))
            .sum()
    }

    pub fn abs_sum(&self, r: f64) -> f64 {
        self.terms.iter().map(|&(c, e)| (c * r.powf(e)).abs()).sum()
    }

    /// Sum of `self + factor · other`.
    pub fn combined(&self, factor: f64, other: &PowerSum) -> PowerSum {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().map(|&(c, e)| (factor * c, e)));
        PowerSum { terms }
    }
}

/// Pointwise relative residual summary over a grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport {
    pub max_relative: f64,
    pub worst_r: f64,
    pub points_used: usize,
    pub points_skipped: usize,
}

impl ResidualReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.points_used > 0 && self.max_relative < tol
    }
}

/// Points where `|ψ| < SKIP_FRACTION · max|ψ|` are excluded from residuals.
pub const SKIP_FRACTION: f64 = 1e-12;

const RESIDUAL_FLOOR: f64 = 1e-300;

/// Residual summary from per-point `(value, residual, scale)` triples.
pub fn summarize<I>(points: I) -> ResidualReport
where
    I: IntoIterator<Item = (f64, f64, f64, f64)>,
{
    let points: Vec<(f64, f64, f64, f64)> = points.into_iter().collect();
    let peak = points
        .iter()
        .map(|p| p.1.abs())
        .filter(|v| v.is_finite())
        .fold(0.0, f64::max);
    let mut report = ResidualReport {
        max_relative: 0.0,
        worst_r: f64::NAN,
        points_used: 0,
        points_skipped: 0,
    };
    for (r, value, residual, scale) in points {
        if !(value.abs() >= SKIP_FRACTION * peak) || value == 0.0 {
            report.points_skipped += 1;
            continue;
        }
        let rel = residual.abs() / (scale + RESIDUAL_FLOOR);
        report.points_used += 1;
        if !(rel <= report.max_relative) {
            report.max_relative = rel;
            report.worst_r = r;
        }
    }
    report
}

/// Residual of `ψ'' = Q(r) ψ`, each point normalized by `|ψ''| + Σ|Q_i ψ|`.
pub fn equation_residual<F: RadialFunction + ?Sized>(
    solution: &F,
    q: &PowerSum,
    grid: &[f64],
) -> ResidualReport {
    summarize(grid.iter().map(|&r| {
        let jet = solution.jet(r);
        let residual = jet.d2 - q.eval(r) * jet.value;
        let scale = jet.d2.abs() + q.abs_sum(r) * jet.value.abs();
        (r, jet.value, residual, scale)
    }))
}

/// `n` logarithmically spaced points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 2);
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// Radii where the profile argument `t` spans `[t_lo, t_hi]` logarithmically,
/// in ascending `r`.
pub fn argument_grid(profile: &LaguerreProfile, t_lo: f64, t_hi: f64, n: usize) -> Vec<f64> {
    let mut grid: Vec<f64> = log_grid(t_lo, t_hi, n)
        .into_iter()
        .map(|t| profile.radius_at(t))
        .collect();
    grid.sort_by(f64::total_cmp);
    grid
}

/// Number of sign changes of `f` sampled on `grid`, ignoring exact zeros.
pub fn sign_changes<F: Fn(f64) -> f64>(f: F, grid: &[f64]) -> usize {
    let mut last = 0.0f64;
    let mut count = 0;
    for &r in grid {
        let v = f(r);
        if v == 0.0 || !v.is_finite() {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            count += 1;
        }
        last = v;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn profile(q: f64, c: f64, s: f64, n: u32, a: f64) -> LaguerreProfile {
        LaguerreProfile {
            ln_scale: 0.3,
            power: q,
            coeff: c,
            exponent: s,
            poly: Laguerre::new(n, a).unwrap(),
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        for p in [
            profile(2.0, 1.0, 0.5, 3, 6.0),
            profile(-1.0, 0.8, -4.0, 2, 1.5),
            profile(1.0, 2.0, 2.0, 4, 0.5),
        ] {
            for &r in &[0.3, 0.9, 1.7, 3.1] {
                let h = 1e-4 * r;
                let j = p.jet(r);
                // Richardson-extrapolated central differences
                let d1 = |h: f64| (p.value(r + h) - p.value(r - h)) / (2.0 * h);
                let d2 = |h: f64| (p.value(r + h) - 2.0 * j.value + p.value(r - h)) / (h * h);
                let fd1 = (4.0 * d1(0.5 * h) - d1(h)) / 3.0;
                let fd2 = (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
                let scale = j.d1.abs().max(j.value.abs() / r);
                assert!((j.d1 - fd1).abs() < 1e-7 * scale, "d1 at {r}");
                let scale2 = j.d2.abs().max(j.value.abs() / (r * r));
                assert!((j.d2 - fd2).abs() < 1e-4 * scale2, "d2 at {r}");
            }
        }
    }

    #[test]
    fn argument_inverse() {
        let p = profile(1.0, 0.49, -0.5, 1, 1.0);
        for &r in &[1e-3, 0.2, 5.0, 300.0] {
            assert_relative_eq!(p.radius_at(p.argument(r)), r, max_relative = 1e-13);
        }
    }

    #[test]
    fn grid_is_ascending_for_decreasing_argument() {
        let p = profile(0.0, 1.0, -2.0, 0, 0.0);
        let g = argument_grid(&p, 1e-2, 10.0, 50);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sign_change_counting() {
        let grid = log_grid(1e-3, 10.0, 500);
        assert_eq!(
            sign_changes(|x| (x - 1.0) * (x - 2.0) * (x - 5.0), &grid),
            3
        );
        assert_eq!(sign_changes(|x| x * x, &grid), 0);
    }
}
