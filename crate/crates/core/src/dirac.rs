//! The radial Dirac problem at rest-mass energy `ε = 1` with vanishing even
//! potential and odd potential `𝒲(r) = (λ²β/2) r^{β−1}`.
//!
//! The upper component obeys
//!
//! ```text
//! [−d²/dr² + κ(κ+1)/r² + 𝒲² − 𝒲' + 2κ𝒲/r] φ = 0
//! ```
//!
//! which reproduces the power-law problem at `μ = ν = −1/2 + 1/β`, `n = 0`,
//! with `κ = −l−1` for `β > 0` and `κ = l` for `β < 0`. The solution
//! `φ = C (λ^{2/β} r)^{−κ} e^{−λ² r^β / 2}` makes the lower component
//! `θ = (α/2)(𝒲 + κ/r + d/dr) φ` vanish identically.

use serde::Serialize;

use crate::oracle::{quad_seminfinite, QuadResult};
use crate::radial::{
    equation_residual, log_grid, ClosedFormSolution, LaguerreProfile, PowerSum, RadialFunction,
    ResidualReport,
};
use crate::specfn::{ln_gamma, Laguerre};
use crate::{Error, Result};

pub const FINE_STRUCTURE: f64 = 1.0 / 137.035999;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Correspondence {
    pub nu: f64,
    pub kappa: i64,
    /// Coupling `A = λ²/(2ν+1) = λ²β/2`.
    pub coupling: f64,
    /// Always 0: the map is compatible only for the ground state.
    pub n: u32,
}

fn check_beta(beta: f64) -> Result<()> {
    if !beta.is_finite() || beta == 0.0 || beta == 1.0 || beta == 2.0 {
        return Err(Error::InvalidBeta(beta));
    }
    Ok(())
}

/// `ν = −1/2 + 1/β`; `κ = −l−1` for `β > 0`, `κ = l` for `β < 0`.
pub fn correspondence(beta: f64, lambda: f64, l: u32) -> Result<Correspondence> {
    check_beta(beta)?;
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::invalid(format!(
            "lambda must be positive, got {lambda}"
        )));
    }
    let nu = -0.5 + 1.0 / beta;
    let kappa = if beta > 0.0 {
        -(l as i64) - 1
    } else {
        l as i64
    };
    Ok(Correspondence {
        nu,
        kappa,
        coupling: lambda * lambda / (2.0 * nu + 1.0),
        n: 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiracFamily {
    beta: f64,
    lambda: f64,
    l: u32,
    alpha: f64,
    kappa: i64,
}

impl DiracFamily {
    pub fn new(beta: f64, lambda: f64, l: u32, alpha: f64) -> Result<Self> {
        let c = correspondence(beta, lambda, l)?;
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::invalid(format!(
                "alpha must be positive, got {alpha}"
            )));
        }
        Ok(Self {
            beta,
            lambda,
            l,
            alpha,
            kappa: c.kappa,
        })
    }

    pub fn with_default_alpha(beta: f64, lambda: f64, l: u32) -> Result<Self> {
        Self::new(beta, lambda, l, FINE_STRUCTURE)
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn kappa(&self) -> i64 {
        self.kappa
    }

    pub fn nu(&self) -> f64 {
        -0.5 + 1.0 / self.beta
    }

    pub fn correspondence(&self) -> Correspondence {
        correspondence(self.beta, self.lambda, self.l).expect("validated at construction")
    }

    /// `λ²β/2`.
    pub fn amplitude(&self) -> f64 {
        0.5 * self.lambda * self.lambda * self.beta
    }

    /// `(1 − 2κ)/β`, the Gamma argument of the norm.
    pub fn gamma_argument(&self) -> f64 {
        (1.0 - 2.0 * self.kappa as f64) / self.beta
    }

    pub fn is_normalizable(&self) -> bool {
        self.gamma_argument() > 0.0
    }

    /// Set for `κ = 0`, which is not a spin-orbit eigenvalue.
    pub fn warning(&self) -> Option<&'static str> {
        (self.kappa == 0)
            .then_some("kappa = 0 (l = 0, beta < 0) is outside the spin-orbit spectrum")
    }

    /// `𝒲²−𝒲'+2κ𝒲/r+κ(κ+1)/r²` expanded in powers of `r`, with `κ` given.
    fn reduced_equation(&self, kappa: f64) -> PowerSum {
        let a = self.amplitude();
        let b = self.beta;
        PowerSum::new(vec![
            (kappa * (kappa + 1.0), -2.0),
            (a * a, 2.0 * b - 2.0),
            (a * (2.0 * kappa - b + 1.0), b - 2.0),
        ])
    }

    /// `V` of the Schrödinger-like form,
    /// `(λ²β/4)[(λ²β/2) r^{2β−2} + (2κ−β+1) r^{β−2}]`.
    pub fn reduced_potential(&self, r: f64) -> f64 {
        let a = self.amplitude();
        let b = self.beta;
        0.5 * a
            * (a * r.powf(2.0 * b - 2.0) + (2.0 * self.kappa as f64 - b + 1.0) * r.powf(b - 2.0))
    }

    /// 200 logarithmic points where `λ² r^β ∈ [1e-3, 60]`.
    pub fn standard_grid(&self) -> Vec<f64> {
        let l2 = self.lambda * self.lambda;
        let r_at = |t: f64| ((t / l2).ln() / self.beta).exp();
        let (a, b) = (r_at(1e-3), r_at(60.0));
        log_grid(a.min(b), a.max(b), 200)
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "r must be positive and finite, got {r}"
        )))
    }
}

/// `𝒲(r) = (λ²β/2) r^{β−1}`, independent of `l`.
pub fn odd_potential(family: &DiracFamily, r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(family.amplitude() * r.powf(family.beta - 1.0))
}

/// `𝒲(r) = A / r^{(ν−1/2)/(ν+1/2)}` with `A = λ²/(2ν+1)`.
pub fn odd_potential_nu_form(family: &DiracFamily, r: f64) -> Result<f64> {
    check_radius(r)?;
    let nu = family.nu();
    let a = family.lambda * family.lambda / (2.0 * nu + 1.0);
    Ok(a / r.powf((nu - 0.5) / (nu + 0.5)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinorSolution {
    #[serde(skip)]
    pub upper: ClosedFormSolution,
    /// `C_l` when normalizable.
    pub normalization: Option<f64>,
    pub kappa: i64,
    pub warning: Option<&'static str>,
}

/// `φ = C (λ^{2/β} r)^{−κ} e^{−λ² r^β/2}`; `C = 1` when not normalizable.
pub fn upper_spinor(family: &DiracFamily) -> SpinorSolution {
    let b = family.beta;
    let kappa = family.kappa as f64;
    let ln_c = family
        .is_normalizable()
        .then(|| family.lambda.ln() / b + 0.5 * (b.abs().ln() - ln_gamma(family.gamma_argument())));
    let profile = LaguerreProfile {
        ln_scale: ln_c.unwrap_or(0.0) - kappa * 2.0 / b * family.lambda.ln(),
        power: -kappa,
        coeff: family.lambda * family.lambda,
        exponent: b,
        poly: Laguerre::new(0, 0.0).expect("valid order"),
    };
    SpinorSolution {
        upper: ClosedFormSolution::new(profile, ln_c.is_some()),
        normalization: ln_c.map(f64::exp),
        kappa: family.kappa,
        warning: family.warning(),
    }
}

/// `θ(r) = (α/2)(𝒲 + κ/r + d/dr) φ`, with the odd potential amplitude
/// multiplied by `amplitude_factor` (1 for the actual problem).
pub fn lower_component_with(
    family: &DiracFamily,
    solution: &SpinorSolution,
    amplitude_factor: f64,
    r: f64,
) -> Result<f64> {
    check_radius(r)?;
    let w = amplitude_factor * odd_potential(family, r)?;
    let jet = solution.upper.jet(r);
    Ok(0.5 * family.alpha * (w * jet.value + family.kappa as f64 / r * jet.value + jet.d1))
}

pub fn lower_component(family: &DiracFamily, solution: &SpinorSolution, r: f64) -> Result<f64> {
    lower_component_with(family, solution, 1.0, r)
}

/// `max |θ| / ((α/2)(|𝒲φ| + |κφ/r| + |φ'|))` over the grid.
pub fn lower_component_check(
    family: &DiracFamily,
    amplitude_factor: f64,
    grid: &[f64],
) -> Result<f64> {
    let solution = upper_spinor(family);
    let mut worst = 0.0f64;
    for &r in grid {
        let theta = lower_component_with(family, &solution, amplitude_factor, r)?;
        let jet = solution.upper.jet(r);
        if jet.value == 0.0 {
            continue;
        }
        let w = amplitude_factor * odd_potential(family, r)?;
        let scale = 0.5
            * family.alpha
            * ((w * jet.value).abs() + (family.kappa as f64 / r * jet.value).abs() + jet.d1.abs());
        worst = worst.max(theta.abs() / scale);
    }
    Ok(worst)
}

/// Residual of the upper-component equation with the given `κ`.
pub fn residual_33_with_kappa(family: &DiracFamily, kappa: f64, grid: &[f64]) -> ResidualReport {
    let solution = upper_spinor(family);
    equation_residual(&solution.upper, &family.reduced_equation(kappa), grid)
}

pub fn residual_33(family: &DiracFamily, grid: &[f64]) -> ResidualReport {
    residual_33_with_kappa(family, family.kappa as f64, grid)
}

/// Max relative gap between the operator form
/// `κ(κ+1)/r² + 𝒲² − 𝒲' + 2κ𝒲/r` and `κ(κ+1)/r² + 2V(r)`.
pub fn reduced_form_discrepancy(family: &DiracFamily, grid: &[f64]) -> Result<f64> {
    let a = family.amplitude();
    let b = family.beta;
    let k = family.kappa as f64;
    let mut worst = 0.0f64;
    for &r in grid {
        let w = odd_potential(family, r)?;
        let dw = a * (b - 1.0) * r.powf(b - 2.0);
        let centrifugal = k * (k + 1.0) / (r * r);
        let op = centrifugal + w * w - dw + 2.0 * k * w / r;
        let reduced = centrifugal + 2.0 * family.reduced_potential(r);
        let scale = centrifugal.abs() + w * w + dw.abs() + (2.0 * k * w / r).abs();
        worst = worst.max((op - reduced).abs() / scale);
    }
    Ok(worst)
}

/// `∫ φ² dr` by quadrature.
pub fn quadrature_norm(solution: &SpinorSolution, tol: f64) -> Result<QuadResult> {
    quad_seminfinite(|r| solution.upper.value(r).powi(2), tol)
}
