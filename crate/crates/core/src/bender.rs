//! The half-line problem `[−d²/dx² + x^{2(N+1)} − E x^N] ψ = 0`, `x ≥ 0`.
//!
//! It is the `l = 0` member of the power-law family with
//! `μ = −1/2 + 1/(N+2)` and `λ² = 2/|N+2|`, so `E_n = (2n+1)|N+2| + 1` and
//!
//! ```text
//! ψ_n ∝ P(x) e^{−λ² x^{N+2}/2} L_n^{1/|N+2|}(λ² x^{N+2}),
//! P = λ^{2/(N+2)} x for N > −2,   P = 1 for N < −2.
//! ```
//!
//! `N = −1` (S-wave Coulomb) and `N = 0` (S-wave oscillator) are accepted
//! here although the family excludes the matching `μ`.

use serde::Serialize;

use crate::powerlaw::PowerLawFamily;
use crate::radial::{
    argument_grid, equation_residual, ClosedFormSolution, LaguerreProfile, PowerSum, ResidualReport,
};
use crate::specfn::Laguerre;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BenderProblem {
    pub big_n: i64,
    pub n: u32,
}

impl BenderProblem {
    pub fn new(big_n: i64, n: u32) -> Result<Self> {
        if big_n == -2 {
            return Err(Error::InvalidN(big_n));
        }
        Ok(Self { big_n, n })
    }

    /// `|N + 2|`.
    pub fn width(&self) -> f64 {
        (self.big_n + 2).abs() as f64
    }

    pub fn mu(&self) -> f64 {
        -0.5 + 1.0 / (self.big_n + 2) as f64
    }

    pub fn lambda(&self) -> f64 {
        (2.0 / self.width()).sqrt()
    }

    /// `Ω = 2n + 1 + 1/|N+2|`.
    pub fn omega(&self) -> f64 {
        2.0 * self.n as f64 + 1.0 + 1.0 / self.width()
    }

    pub fn energy(&self) -> f64 {
        (2.0 * self.n as f64 + 1.0) * self.width() + 1.0
    }

    /// Laguerre order obtained from the family, `1/|N+2|`.
    pub fn laguerre_order(&self) -> f64 {
        1.0 / self.width()
    }

    /// `Q` in `ψ'' = Q ψ` with the given `E`.
    pub fn equation(&self, energy: f64) -> PowerSum {
        PowerSum::new(vec![
            (1.0, (2 * self.big_n + 2) as f64),
            (-energy, self.big_n as f64),
        ])
    }

    /// The eigenfunction with Laguerre order `order` and unit `a_n`.
    pub fn profile_with_order(&self, order: f64) -> Result<LaguerreProfile> {
        let s = (self.big_n + 2) as f64;
        let lambda = self.lambda();
        let (power, ln_scale) = if self.big_n > -2 {
            (1.0, 2.0 / s * lambda.ln())
        } else {
            (0.0, 0.0)
        };
        Ok(LaguerreProfile {
            ln_scale,
            power,
            coeff: lambda * lambda,
            exponent: s,
            poly: Laguerre::new(self.n, order)?,
        })
    }

    /// Radii spanning `λ² x^{N+2} ∈ [1e-3, 4Ω + 60]`.
    pub fn standard_grid(&self) -> Vec<f64> {
        let profile = self
            .profile_with_order(self.laguerre_order())
            .expect("order is positive");
        argument_grid(&profile, 1e-3, 4.0 * self.omega() + 60.0, 400)
    }
}

/// `E_n = (2n+1)|N+2| + 1`.
pub fn spectrum(big_n: i64, n: u32) -> Result<f64> {
    Ok(BenderProblem::new(big_n, n)?.energy())
}

pub fn eigenfunction(big_n: i64, n: u32) -> Result<ClosedFormSolution> {
    let p = BenderProblem::new(big_n, n)?;
    Ok(ClosedFormSolution::new(
        p.profile_with_order(p.laguerre_order())?,
        false,
    ))
}

pub fn residual(problem: &BenderProblem, grid: &[f64]) -> Result<ResidualReport> {
    residual_with_order(problem, problem.laguerre_order(), grid)
}

/// Residual of the eigenfunction built with an arbitrary Laguerre order,
/// e.g. `|N+2|` to test that alternative.
pub fn residual_with_order(
    problem: &BenderProblem,
    order: f64,
    grid: &[f64],
) -> Result<ResidualReport> {
    let solution = ClosedFormSolution::new(problem.profile_with_order(order)?, false);
    Ok(equation_residual(
        &solution,
        &problem.equation(problem.energy()),
        grid,
    ))
}

/// The matching power-law family, for `N ∉ {−2, −1, 0}`.
pub fn as_power_law(problem: &BenderProblem) -> Result<PowerLawFamily> {
    PowerLawFamily::new(problem.mu(), problem.lambda(), 0, problem.n)
}
