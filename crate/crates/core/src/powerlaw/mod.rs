//! The zero-energy power-law family.
//!
//! Mapping the oscillator through `r = x^m`, `m = 2μ+1`, gives at `E = 0`
//!
//! ```text
//! V(r) = a r^{p1} − D r^{p2},   a = λ⁴/(2m²),   D = (λ/m)² Ω,
//! p1 = −2(μ−1/2)/(μ+1/2),   p2 = −2μ/(μ+1/2),   Ω = 2n + 1 + (2l+1)|μ+1/2|
//! ```
//!
//! with `ψ = (λ^m r)^q e^{−t/2} L_n^{(2l+1)|μ+1/2|}(t)`, `t = λ² r^{2/m}`,
//! and `q = l+1` for `μ > −1/2`, `q = −l` for `μ < −1/2`.
//!
//! The values `μ ∈ {0, ±1/2}` are rejected: there one exponent vanishes or
//! is undefined (the oscillator, Coulomb and Morse problems).

mod classify;
mod degeneracy;
pub mod special;

pub use classify::{
    classify, classify_level, ClassificationReport, ConditionStatus, Limit, WellShape,
};
pub use degeneracy::{default_l_max, degenerate_pairs, omega_exact};

use serde::Serialize;

use crate::oracle::quad_seminfinite;
use crate::radial::{
    argument_grid, equation_residual, log_grid, summarize, ClosedFormSolution, LaguerreProfile,
    PowerSum, RadialFunction, ResidualReport,
};
use crate::specfn::Laguerre;
use crate::{Error, Result};

const EXCLUDED_TOL: f64 = 1e-12;

/// Which side of the excluded values `±1/2` the family sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `μ < −1/2`: inverse powers, `β = −1/(μ+1/2)`.
    BelowMinusHalf,
    /// `−1/2 < μ < 1/2`, `μ ≠ 0`: confining, `β > 1`.
    Confining,
    /// `μ > 1/2`: `0 < β < 1`, tail decays from above.
    AboveHalf,
}

pub fn check_mu(mu: f64) -> Result<()> {
    if !mu.is_finite()
        || mu.abs() < EXCLUDED_TOL
        || (mu - 0.5).abs() < EXCLUDED_TOL
        || (mu + 0.5).abs() < EXCLUDED_TOL
    {
        return Err(Error::InvalidMu(mu));
    }
    Ok(())
}

/// `(p1, p2)`: exponents of the repulsive and attractive terms.
pub fn exponent_pair(mu: f64) -> Result<(f64, f64)> {
    check_mu(mu)?;
    let h = mu + 0.5;
    Ok((-2.0 * (mu - 0.5) / h, -2.0 * mu / h))
}

/// `a r^{p1} − D r^{p2}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PotentialTerms {
    pub repulsive_coefficient: f64,
    pub repulsive_exponent: f64,
    pub attractive_coefficient: f64,
    pub attractive_exponent: f64,
}

impl PotentialTerms {
    pub fn potential(&self, r: f64) -> f64 {
        self.repulsive_coefficient * r.powf(self.repulsive_exponent)
            - self.attractive_coefficient * r.powf(self.attractive_exponent)
    }

    /// `l(l+1)/r² + 2V(r)` as a sum of powers, i.e. `Q` in `ψ'' = Q ψ`.
    pub fn effective(&self, l: u32) -> PowerSum {
        let ll = (l * (l + 1)) as f64;
        let mut terms = Vec::with_capacity(3);
        if ll != 0.0 {
            terms.push((ll, -2.0));
        }
        terms.push((2.0 * self.repulsive_coefficient, self.repulsive_exponent));
        terms.push((-2.0 * self.attractive_coefficient, self.attractive_exponent));
        PowerSum::new(terms)
    }

    pub fn with_attractive_coefficient(mut self, d: f64) -> Self {
        self.attractive_coefficient = d;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MappedParameters {
    pub energy: f64,
    pub gamma: f64,
    pub terms: PotentialTerms,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerLawFamily {
    mu: f64,
    lambda: f64,
    l: u32,
    n: u32,
}

impl PowerLawFamily {
    pub fn new(mu: f64, lambda: f64, l: u32, n: u32) -> Result<Self> {
        check_mu(mu)?;
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::invalid(format!(
                "lambda must be positive, got {lambda}"
            )));
        }
        Ok(Self { mu, lambda, l, n })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn with_n(&self, n: u32) -> Self {
        Self { n, ..*self }
    }

    pub fn with_l(&self, l: u32) -> Self {
        Self { l, ..*self }
    }

    /// `m = 2μ + 1`, the power in `r = x^m`.
    pub fn m(&self) -> f64 {
        2.0 * self.mu + 1.0
    }

    /// `|μ + 1/2|`.
    pub fn half_width(&self) -> f64 {
        (self.mu + 0.5).abs()
    }

    /// `β = 1/|μ + 1/2| > 0`.
    pub fn beta(&self) -> f64 {
        1.0 / self.half_width()
    }

    pub fn regime(&self) -> Regime {
        if self.mu < -0.5 {
            Regime::BelowMinusHalf
        } else if self.mu < 0.5 {
            Regime::Confining
        } else {
            Regime::AboveHalf
        }
    }

    /// `γ = −1/2 + (l + 1/2)|μ + 1/2|`.
    pub fn gamma(&self) -> f64 {
        -0.5 + (self.l as f64 + 0.5) * self.half_width()
    }

    /// `Ω = 2n + 1 + (2l+1)|μ+1/2|`.
    pub fn omega(&self) -> f64 {
        self.omega_at(self.n as f64)
    }

    /// `Ω` with the integer `n` replaced by a real `level`.
    pub fn omega_at(&self, level: f64) -> f64 {
        2.0 * level + 1.0 + (2.0 * self.l as f64 + 1.0) * self.half_width()
    }

    /// Laguerre order `(2l+1)|μ+1/2|`.
    pub fn laguerre_order(&self) -> f64 {
        (2.0 * self.l as f64 + 1.0) * self.half_width()
    }

    pub fn terms(&self) -> PotentialTerms {
        self.terms_at(self.n as f64)
    }

    /// Potential terms with `Ω` evaluated at a real `level`; integer levels
    /// are the exactly solvable members.
    pub fn terms_at(&self, level: f64) -> PotentialTerms {
        let (p1, p2) = exponent_pair(self.mu).expect("mu validated at construction");
        let k = (self.lambda / self.m()).powi(2);
        PotentialTerms {
            repulsive_coefficient: k * self.lambda * self.lambda / 2.0,
            repulsive_exponent: p1,
            attractive_coefficient: k * self.omega_at(level),
            attractive_exponent: p2,
        }
    }

    /// Prefactor power `q` in `(λ^m r)^q`.
    pub fn prefactor_power(&self) -> f64 {
        match self.regime() {
            Regime::BelowMinusHalf => -(self.l as f64),
            _ => self.l as f64 + 1.0,
        }
    }

    /// Radius where the two potential terms balance, `t = λ² r^{2/m} = 2Ω`.
    pub fn turning_scale(&self) -> f64 {
        self.radius_at_argument(2.0 * self.omega())
    }

    /// `r` with `λ² r^{2/m} = t`.
    pub fn radius_at_argument(&self, t: f64) -> f64 {
        ((t / (self.lambda * self.lambda)).ln() * self.m() / 2.0).exp()
    }

    /// The closed form with unit overall constant, `(λ^m r)^q e^{−t/2} L_n^a(t)`.
    pub fn raw_profile(&self) -> LaguerreProfile {
        let q = self.prefactor_power();
        LaguerreProfile {
            ln_scale: q * self.m() * self.lambda.ln(),
            power: q,
            coeff: self.lambda * self.lambda,
            exponent: 2.0 / self.m(),
            poly: Laguerre::new(self.n, self.laguerre_order()).expect("order is positive"),
        }
    }

    /// Exponent `p` in `∫ψ² dr ∝ ∫ t^p e^{−t} [L_n^a(t)]² dt`; the norm is
    /// finite iff `p > −1`.
    pub fn norm_exponent(&self) -> f64 {
        let m = self.m();
        let l = self.l as f64;
        match self.regime() {
            Regime::BelowMinusHalf => -1.0 + 0.5 * m.abs() * (2.0 * l - 1.0),
            _ => -1.0 + 0.5 * m * (2.0 * l + 3.0),
        }
    }

    /// Closed-rule normalizability: fails only for `μ < −1/2, l = 0`.
    pub fn is_normalizable(&self) -> bool {
        !(self.regime() == Regime::BelowMinusHalf && self.l == 0)
    }
}

pub fn map_parameters(family: &PowerLawFamily) -> MappedParameters {
    MappedParameters {
        energy: 0.0,
        gamma: family.gamma(),
        terms: family.terms(),
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

pub fn potential_eval(family: &PowerLawFamily, r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(family.terms().potential(r))
}

/// `l(l+1)/r² + 2V(r)`.
pub fn effective_potential_eval(family: &PowerLawFamily, r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(family.terms().effective(family.l()).eval(r))
}

/// The same effective potential written through `β`:
/// `r⁻² [l(l+1) + (β²λ⁴/4) y² − (β²λ²/2)(2n+1+(2l+1)/β) y]` with
/// `y = r^β` for `μ > −1/2` and `y = r^{−β}` for `μ < −1/2`.
pub fn effective_potential_beta_form(family: &PowerLawFamily, r: f64) -> Result<f64> {
    check_radius(r)?;
    let beta = family.beta();
    let lam2 = family.lambda() * family.lambda();
    let l = family.l() as f64;
    let y = match family.regime() {
        Regime::BelowMinusHalf => r.powf(-beta),
        _ => r.powf(beta),
    };
    let bracket = l * (l + 1.0) + beta * beta * lam2 * lam2 / 4.0 * y * y
        - beta * beta * lam2 / 2.0 * (2.0 * family.n() as f64 + 1.0 + (2.0 * l + 1.0) / beta) * y;
    Ok(bracket / (r * r))
}

/// Maximum relative gap between the two forms of the effective potential.
pub fn beta_form_discrepancy(family: &PowerLawFamily, grid: &[f64]) -> Result<f64> {
    let q = family.terms().effective(family.l());
    let mut worst = 0.0f64;
    for &r in grid {
        let a = q.eval(r);
        let b = effective_potential_beta_form(family, r)?;
        worst = worst.max((a - b).abs() / q.abs_sum(r));
    }
    Ok(worst)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormReport {
    pub finite: bool,
    /// `∫ψ² dr` for the unit-constant closed form, when finite.
    pub value: Option<f64>,
    /// Exponent `p` of the `t`-integrand at the origin.
    pub exponent: f64,
    pub quadrature_converged: bool,
    pub quadrature_error: f64,
}

const NORM_TOL: f64 = 1e-12;

/// `∫₀^∞ ψ² dr` for [`PowerLawFamily::raw_profile`], computed as
/// `(|m|/2) λ^{−m} ∫ t^p e^{−t} L² dt`.
pub fn norm(family: &PowerLawFamily) -> Result<NormReport> {
    let p = family.norm_exponent();
    let poly = family.raw_profile().poly;
    let res = quad_seminfinite(
        |t| {
            let l = poly.eval(t);
            (p * t.ln() - t).exp() * l * l
        },
        NORM_TOL,
    )?;
    let finite = p > -1.0;
    let m = family.m();
    let prefactor = 0.5 * m.abs() * (-m * family.lambda().ln()).exp();
    Ok(NormReport {
        finite,
        value: (finite && res.converged).then_some(prefactor * res.value),
        exponent: p,
        quadrature_converged: res.converged,
        quadrature_error: prefactor * res.error,
    })
}

/// The zero-energy wavefunction. Normalized when the norm is finite,
/// otherwise scaled so that `ψ = 1` at the turning scale.
pub fn wavefunction(family: &PowerLawFamily) -> Result<ClosedFormSolution> {
    let raw = family.raw_profile();
    let report = norm(family)?;
    if let Some(value) = report.value {
        return Ok(ClosedFormSolution::new(
            raw.scaled(value.sqrt().recip()),
            true,
        ));
    }
    let at = raw.value(family.turning_scale());
    let factor = if at != 0.0 && at.is_finite() {
        at.abs().recip()
    } else {
        1.0
    };
    Ok(ClosedFormSolution::new(raw.scaled(factor), false))
}

/// Radii spanning the Laguerre argument `t ∈ [1e-3, 4Ω + 60]`.
pub fn standard_grid(family: &PowerLawFamily) -> Vec<f64> {
    argument_grid(
        &family.raw_profile(),
        1e-3,
        4.0 * family.omega() + 60.0,
        400,
    )
}

/// Residual of `ψ'' = [l(l+1)/r² + 2V(r)] ψ`.
pub fn schrodinger_residual(family: &PowerLawFamily, grid: &[f64]) -> Result<ResidualReport> {
    schrodinger_residual_with(family, &family.terms(), grid)
}

/// Residual of the family's wavefunction against an arbitrary potential.
pub fn schrodinger_residual_with(
    family: &PowerLawFamily,
    terms: &PotentialTerms,
    grid: &[f64],
) -> Result<ResidualReport> {
    let psi = wavefunction(family)?;
    Ok(equation_residual(&psi, &terms.effective(family.l()), grid))
}

/// Grid in the oscillator coordinate `x`, with `λ²x² ∈ [1e-3, 1e2]`.
pub fn pct_grid(family: &PowerLawFamily) -> Vec<f64> {
    log_grid(
        1e-3f64.sqrt() / family.lambda(),
        10.0 / family.lambda(),
        200,
    )
}

pub fn pct_identity_check(family: &PowerLawFamily, grid_x: &[f64]) -> ResidualReport {
    pct_identity_check_with_gamma(family, family.gamma(), grid_x)
}

/// Compares `f(r) = −l(l+1)/r² − 2V(r)` with the transformed oscillator
/// equation
///
/// ```text
/// (g')⁻² [−(4γ(γ+1) + 3/4)/x² − λ⁴x² + 4λ²(γ+n+1) − g'''/(2g') + (3/4)(g''/g')²]
/// ```
///
/// at `r = g(x) = x^m`, using the supplied `γ`.
pub fn pct_identity_check_with_gamma(
    family: &PowerLawFamily,
    gamma: f64,
    grid_x: &[f64],
) -> ResidualReport {
    let m = family.m();
    let lam2 = family.lambda() * family.lambda();
    let n = family.n() as f64;
    let q = family.terms().effective(family.l());
    summarize(grid_x.iter().map(|&x| {
        let r = x.powf(m);
        let g1 = m * x.powf(m - 1.0);
        let g2_over_g1 = (m - 1.0) / x;
        let g3_over_g1 = (m - 1.0) * (m - 2.0) / (x * x);
        let pieces = [
            -(4.0 * gamma * (gamma + 1.0) + 0.75) / (x * x),
            -lam2 * lam2 * x * x,
            4.0 * lam2 * (gamma + n + 1.0),
            -0.5 * g3_over_g1,
            0.75 * g2_over_g1 * g2_over_g1,
        ];
        let inv = 1.0 / (g1 * g1);
        let mapped: f64 = pieces.iter().sum::<f64>() * inv;
        let direct = -q.eval(r);
        let scale = pieces.iter().map(|p| p.abs()).sum::<f64>() * inv + q.abs_sum(r);
        // the value column only serves the skip rule; every point counts
        (x, 1.0, mapped - direct, scale)
    }))
}

/// Condition for a potential well at zero energy in the `β` form:
/// `n > 2√(l(l+1)(1∓β))/(β(2∓β)) − (l+1/2)/β − 1/2`, upper sign for
/// `μ > 1/2`, lower for `μ < −1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundCondition {
    pub rhs: Option<f64>,
    pub level: f64,
    pub applicable: bool,
    pub satisfied: bool,
}

impl BoundCondition {
    pub fn status(&self) -> ConditionStatus {
        match (self.applicable, self.satisfied) {
            (false, _) => ConditionStatus::NotApplicable,
            (true, true) => ConditionStatus::Satisfied,
            (true, false) => ConditionStatus::Violated,
        }
    }
}

/// Right-hand side of the condition, defined for `|μ| > 1/2`.
pub fn condition_rhs(family: &PowerLawFamily) -> Option<f64> {
    let sign = match family.regime() {
        Regime::AboveHalf => -1.0,
        Regime::BelowMinusHalf => 1.0,
        Regime::Confining => return None,
    };
    let beta = family.beta();
    let l = family.l() as f64;
    Some(
        2.0 * (l * (l + 1.0) * (1.0 + sign * beta)).sqrt() / (beta * (2.0 + sign * beta))
            - (l + 0.5) / beta
            - 0.5,
    )
}

pub fn bound_condition(family: &PowerLawFamily) -> BoundCondition {
    bound_condition_at(family, family.n() as f64)
}

pub fn bound_condition_at(family: &PowerLawFamily, level: f64) -> BoundCondition {
    let rhs = condition_rhs(family);
    BoundCondition {
        rhs,
        level,
        applicable: rhs.is_some() && family.l() > 0,
        satisfied: rhs.is_none_or(|v| level > v),
    }
}
