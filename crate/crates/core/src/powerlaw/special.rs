//! `μ = 3/2`: a repulsive Coulomb term plus an attractive `r^{−3/2}` term,
//!
//! ```text
//! V(r) = Z/r − √(Z/2)(2l + n + 3/2)/r^{3/2},
//! ψ ∝ (Zr)^{l+1} e^{−2√(2Zr)} L_n^{4l+2}(4√(2Zr)),    Z = λ⁴/32.
//! ```

use serde::Serialize;

use super::{potential_eval, wavefunction, PowerLawFamily};
use crate::radial::{log_grid, RadialFunction};
use crate::specfn::Laguerre;
use crate::Result;

pub const MU: f64 = 1.5;

pub fn coulomb_charge(lambda: f64) -> f64 {
    lambda.powi(4) / 32.0
}

pub fn potential(z: f64, l: u32, n: u32, r: f64) -> f64 {
    z / r - (z / 2.0).sqrt() * (2.0 * l as f64 + n as f64 + 1.5) / r.powf(1.5)
}

/// The unnormalized printed wavefunction.
pub fn wavefunction_form(z: f64, l: u32, n: u32, r: f64) -> f64 {
    let s = (2.0 * z * r).sqrt();
    let poly = Laguerre::new(n, 4.0 * l as f64 + 2.0).expect("order is positive");
    (z * r).powi(l as i32 + 1) * (-2.0 * s).exp() * poly.eval(4.0 * s)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpecialCaseReport {
    pub lambda: f64,
    pub l: u32,
    pub n: u32,
    /// Max relative difference between the family potential and the
    /// Coulomb-like form.
    pub potential_max_relative: f64,
    /// `(max − min)/|mean|` of `ψ_family / ψ_form` over two decades in `r`.
    pub ratio_variation: f64,
}

impl SpecialCaseReport {
    pub fn passes(&self, potential_tol: f64, ratio_tol: f64) -> bool {
        self.potential_max_relative < potential_tol && self.ratio_variation < ratio_tol
    }
}

/// Compares the general family at `μ = 3/2` with the Coulomb-like forms on
/// two decades around the turning scale, skipping points next to
/// Laguerre zeros.
pub fn check(lambda: f64, l: u32, n: u32) -> Result<SpecialCaseReport> {
    let family = PowerLawFamily::new(MU, lambda, l, n)?;
    let z = coulomb_charge(lambda);
    let center = family.turning_scale();
    let grid = log_grid(center / 10.0, center * 10.0, 400);

    let mut potential_max_relative = 0.0f64;
    for &r in &grid {
        let a = potential_eval(&family, r)?;
        let b = potential(z, l, n, r);
        let scale = z / r + (z / 2.0).sqrt() * (2.0 * l as f64 + n as f64 + 1.5) / r.powf(1.5);
        potential_max_relative = potential_max_relative.max((a - b).abs() / scale);
    }

    let psi = wavefunction(&family)?;
    let values: Vec<(f64, f64)> = grid
        .iter()
        .map(|&r| (psi.value(r), wavefunction_form(z, l, n, r)))
        .collect();
    let peak = values.iter().map(|v| v.1.abs()).fold(0.0, f64::max);
    let ratios: Vec<f64> = values
        .iter()
        .filter(|v| v.1.abs() > 1e-6 * peak)
        .map(|v| v.0 / v.1)
        .collect();
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let (lo, hi) = ratios
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| {
            (a.min(x), b.max(x))
        });
    Ok(SpecialCaseReport {
        lambda,
        l,
        n,
        potential_max_relative,
        ratio_variation: (hi - lo) / mean.abs(),
    })
}
