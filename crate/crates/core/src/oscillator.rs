//! The three-dimensional oscillator in the `D⁺(γ)` representation of SO(2,1).
//!
//! `Φ_n^γ(x) = √(2λ n!/Γ(2γ+n+2)) (λx)^{2γ+3/2} e^{-λ²x²/2} L_n^{2γ+1}(λ²x²)`
//! solves
//!
//! ```text
//! [d²/dx² − (4γ(γ+1) + 3/4)/x² − λ⁴x² + 4λ²(γ+n+1)] Φ = 0.
//! ```
//!
//! The representation constant relates to the Hamiltonian coefficient through
//! `λ⁴ = (2τ₃ − 1)/16`; only `λ` is used here.

use serde::Serialize;

use crate::oracle::quad_interval;
use crate::radial::{
    equation_residual, log_grid, summarize, ClosedFormSolution, Jet, LaguerreProfile, PowerSum,
    RadialFunction, ResidualReport,
};
use crate::specfn::{ln_gamma, Laguerre};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillatorState {
    pub gamma: f64,
    pub n: u32,
    pub lambda: f64,
}

impl OscillatorState {
    pub fn new(gamma: f64, n: u32, lambda: f64) -> Result<Self> {
        if !(gamma >= -0.5 && gamma.is_finite()) {
            return Err(Error::invalid(format!(
                "gamma must be >= -1/2, got {gamma}"
            )));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::invalid(format!(
                "lambda must be positive, got {lambda}"
            )));
        }
        Ok(Self { gamma, n, lambda })
    }

    /// Coefficient of `1/x²` in the realization of the generators.
    pub fn eta(&self) -> f64 {
        -4.0 * self.gamma * (self.gamma + 1.0) - 0.75
    }

    /// Eigenvalue `γ(γ+1)` of the Casimir operator.
    pub fn casimir(&self) -> f64 {
        self.gamma * (self.gamma + 1.0)
    }

    /// `γ + n + 1`.
    pub fn l3_eigenvalue(&self) -> f64 {
        self.gamma + self.n as f64 + 1.0
    }

    pub fn with_n(&self, n: u32) -> Self {
        Self { n, ..*self }
    }

    /// The normalized wavefunction.
    pub fn phi(&self) -> ClosedFormSolution {
        let (g, n, lam) = (self.gamma, self.n as f64, self.lambda);
        let q = 2.0 * g + 1.5;
        let ln_norm = 0.5
            * (std::f64::consts::LN_2 + lam.ln() + ln_gamma(n + 1.0) - ln_gamma(2.0 * g + n + 2.0));
        let poly = Laguerre::new(self.n, 2.0 * g + 1.0).expect("order 2γ+1 > -1");
        ClosedFormSolution::new(
            LaguerreProfile {
                ln_scale: ln_norm + q * lam.ln(),
                power: q,
                coeff: lam * lam,
                exponent: 2.0,
                poly,
            },
            true,
        )
    }

    /// `Q(x)` in `Φ'' = Q Φ`, with `λ²` multiplied by `lambda_sq_factor`
    /// (1 for the true equation).
    pub fn wave_equation_with(&self, lambda_sq_factor: f64) -> PowerSum {
        let l2 = self.lambda * self.lambda * lambda_sq_factor;
        PowerSum::new(vec![
            (4.0 * self.casimir() + 0.75, -2.0),
            (l2 * l2, 2.0),
            (-4.0 * l2 * self.l3_eigenvalue(), 0.0),
        ])
    }

    pub fn wave_equation(&self) -> PowerSum {
        self.wave_equation_with(1.0)
    }

    /// 200 logarithmic points on `[1e-2, 10] / λ`.
    pub fn standard_grid(&self) -> Vec<f64> {
        log_grid(1e-2 / self.lambda, 10.0 / self.lambda, 200)
    }
}

/// `Φ_n^γ(x)` with its first two derivatives.
pub fn phi_eval(state: &OscillatorState, x: f64) -> Result<Jet> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    Ok(state.phi().jet(x))
}

pub fn residual_a5(state: &OscillatorState, grid: &[f64]) -> ResidualReport {
    equation_residual(&state.phi(), &state.wave_equation(), grid)
}

/// Residual of the wavefunction against the equation with `λ²` rescaled;
/// used to confirm the residual detects a wrong equation.
pub fn residual_a5_with(
    state: &OscillatorState,
    lambda_sq_factor: f64,
    grid: &[f64],
) -> ResidualReport {
    equation_residual(
        &state.phi(),
        &state.wave_equation_with(lambda_sq_factor),
        grid,
    )
}

/// `λ` of the frame where the realization's `x²/16` matches `λ⁴`.
pub const LADDER_LAMBDA: f64 = 0.5;

/// `(L₃ f, L₊ f, L₋ f)` from the differential realization
///
/// ```text
/// L₃ = d²/dx² + η/x² − x²/16
/// L± = [d²/dx² + η/x² + x²/16 ± (x d/dx + 1/2)/2] / √2
/// ```
fn generators(eta: f64, x: f64, f: Jet) -> (f64, f64, f64) {
    let common = f.d2 + eta * f.value / (x * x);
    let quartic = x * x * f.value / 16.0;
    let dilation = 0.5 * (x * f.d1 + 0.5 * f.value);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    (
        common - quartic,
        s * (common + quartic + dilation),
        s * (common + quartic - dilation),
    )
}

/// Individual terms of `L±f`, for scaling residuals.
fn generator_scale(eta: f64, x: f64, f: Jet) -> f64 {
    (f.d2.abs()
        + (eta * f.value / (x * x)).abs()
        + (x * x * f.value / 16.0).abs()
        + 0.5 * (x * f.d1).abs()
        + 0.25 * f.value.abs())
        * std::f64::consts::FRAC_1_SQRT_2
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LadderReport {
    pub gamma: f64,
    pub n: u32,
    /// Sign with `L₃Φ_n = σ(γ+n+1)Φ_n`.
    pub sigma: f64,
    /// `max |(L₃Φ)/Φ − σ(γ+n+1)| / (γ+n+1)` over the grid.
    pub l3_deviation: f64,
    /// Which printed operator raises `n` under this `σ`: `+1` for `L₊`, `−1` for `L₋`.
    pub raising_operator: i8,
    /// `‖L_raise Φ_n‖ / √((n+1)(n+2γ+2)/2)`.
    pub raising_norm_ratio: f64,
    /// `|⟨Φ_{n+1}, L_raise Φ_n⟩| / ‖L_raise Φ_n‖`; 1 when the image is along `Φ_{n+1}`.
    pub raising_alignment: f64,
    /// `max |L_lower Φ_0|` relative to the largest individual term.
    pub lowering_annihilation: f64,
}

impl LadderReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.l3_deviation < tol
            && (self.raising_norm_ratio - 1.0).abs() < tol
            && (self.raising_alignment - 1.0).abs() < tol
            && self.lowering_annihilation < tol
    }
}

/// Applies the differential realization of `L₃, L±` to `Φ_n^γ` at
/// `λ² = 1/4` and compares with the representation action.
///
/// Under the realization as written, `L₃` has eigenvalue `−(γ+n+1)`, so the
/// automorphism `L₃ → −L₃, L± → L∓` of the algebra applies: `L₋` raises
/// and `L₊` annihilates the ground state. The report determines `σ` from
/// the data and picks the raising operator accordingly.
pub fn ladder_check(gamma: f64, n: u32, grid: &[f64]) -> Result<LadderReport> {
    const TOL: f64 = 1e-12;
    let state = OscillatorState::new(gamma, n, LADDER_LAMBDA)?;
    if grid.iter().any(|&x| !(x > 0.0)) {
        return Err(Error::invalid("ladder grid must be strictly positive"));
    }
    let eta = state.eta();
    let phi = state.phi();
    let expected = state.l3_eigenvalue();

    let ratios: Vec<f64> = significant_points(&phi, grid)
        .map(|(x, f)| generators(eta, x, f).0 / f.value)
        .collect();
    if ratios.is_empty() {
        return Err(Error::invalid("ladder grid has no usable points"));
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let sigma = if mean < 0.0 { -1.0 } else { 1.0 };
    let l3_deviation = ratios
        .iter()
        .map(|r| (r - sigma * expected).abs() / expected)
        .fold(0.0, f64::max);

    let raising = |f: Jet, x: f64| {
        let (_, plus, minus) = generators(eta, x, f);
        if sigma > 0.0 {
            plus
        } else {
            minus
        }
    };
    let lowering = |f: Jet, x: f64| {
        let (_, plus, minus) = generators(eta, x, f);
        if sigma > 0.0 {
            minus
        } else {
            plus
        }
    };

    // The terms of L Φ cancel near the origin, so the integrals run in
    // ln x over [X_LO, X_HI]; the cut-off pieces are O(X_LO²) at γ = −1/2.
    const X_LO: f64 = 1e-6;
    const X_HI: f64 = 80.0;
    let in_log = |g: &dyn Fn(f64) -> f64| {
        quad_interval(
            |s| {
                let x = s.exp();
                g(x) * x
            },
            X_LO.ln(),
            X_HI.ln(),
            TOL,
        )
    };
    let next = state.with_n(n + 1).phi();
    let norm_sq = in_log(&|x| raising(phi.jet(x), x).powi(2))?;
    let overlap = in_log(&|x| raising(phi.jet(x), x) * next.value(x))?;
    if !(norm_sq.converged && overlap.converged) {
        return Err(Error::invalid("ladder quadrature did not converge"));
    }
    let norm = norm_sq.value.sqrt();
    let coefficient = ((n as f64 + 1.0) * (n as f64 + 2.0 * gamma + 2.0) / 2.0).sqrt();

    let ground = state.with_n(0).phi();
    let annihilation = summarize(grid.iter().map(|&x| {
        let f = ground.jet(x);
        (x, f.value, lowering(f, x), generator_scale(eta, x, f))
    }));

    Ok(LadderReport {
        gamma,
        n,
        sigma,
        l3_deviation,
        raising_operator: if sigma > 0.0 { 1 } else { -1 },
        raising_norm_ratio: norm / coefficient,
        raising_alignment: overlap.value.abs() / norm,
        lowering_annihilation: annihilation.max_relative,
    })
}

/// Grid points where `|Φ|` is not negligible, with the jet there.
fn significant_points<'a>(
    phi: &'a ClosedFormSolution,
    grid: &'a [f64],
) -> impl Iterator<Item = (f64, Jet)> + 'a {
    let peak = grid.iter().map(|&x| phi.value(x).abs()).fold(0.0, f64::max);
    grid.iter().filter_map(move |&x| {
        let f = phi.jet(x);
        (f.value.abs() >= 1e-8 * peak && f.value != 0.0).then_some((x, f))
    })
}

/// Default grid for the ladder checks, in the `λ² = 1/4` frame.
pub fn ladder_grid() -> Vec<f64> {
    log_grid(2e-2, 20.0, 200)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ground_state_value() {
        let s = OscillatorState::new(0.5, 0, 1.0).unwrap();
        let jet = phi_eval(&s, 1.0).unwrap();
        assert_relative_eq!(jet.value, (-0.5f64).exp(), max_relative = 1e-14);
        assert!(phi_eval(&s, 0.0).is_err());
    }

    #[test]
    fn eta_and_casimir() {
        let s = OscillatorState::new(0.5, 0, 1.0).unwrap();
        assert_relative_eq!(s.eta(), -3.75);
        assert_relative_eq!(-0.25 * (s.eta() + 0.75), s.casimir());
        assert!(OscillatorState::new(-0.6, 0, 1.0).is_err());
        assert!(OscillatorState::new(0.0, 0, 0.0).is_err());
    }

    #[test]
    fn residuals() {
        for (g, n, lam) in [(0.5, 0, 1.0), (2.25, 4, 0.7), (-0.5, 3, 1.3)] {
            let s = OscillatorState::new(g, n, lam).unwrap();
            let rep = residual_a5(&s, &s.standard_grid());
            assert!(rep.passes(1e-8), "{g} {n} {lam}: {rep:?}");
        }
        let s = OscillatorState::new(0.5, 0, 1.0).unwrap();
        assert!(residual_a5_with(&s, 1.01, &s.standard_grid()).max_relative > 1e-3);
    }

    #[test]
    fn spectrum_term_steps_by_four_lambda_squared() {
        let s = OscillatorState::new(0.8, 2, 0.9).unwrap();
        let e = |st: OscillatorState| -st.wave_equation().terms[2].0;
        assert_relative_eq!(e(s.with_n(3)) - e(s), 4.0 * 0.81, max_relative = 1e-14);
    }

    #[test]
    fn ladder_frame() {
        assert_relative_eq!(LADDER_LAMBDA.powi(4), 1.0 / 16.0, max_relative = 1e-15);
    }

    #[test]
    fn ladder_action() {
        for n in 0..3 {
            let rep = ladder_check(0.5, n, &ladder_grid()).unwrap();
            assert_eq!(rep.sigma, -1.0);
            assert!(rep.passes(1e-6), "{rep:?}");
        }
    }
}
