use std::f64::consts::PI;

use serde::Serialize;

use super::{mismatch, RadialOde};
use crate::powerlaw::PowerLawFamily;
use crate::radial::PowerSum;
use crate::{Error, Result};

const BISECTION_TOL: f64 = 1e-10;
const MAX_BISECTIONS: usize = 200;
const MAX_DOUBLINGS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LevelDiagnostics {
    pub iterations: usize,
    pub bracket_width: f64,
    /// `|L_out − L_in| / max(|L_out|, |L_in|)` of the log-derivatives at the
    /// matching radius.
    pub log_derivative_gap: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShootingResult {
    pub values: Vec<f64>,
    pub node_counts: Vec<usize>,
    pub diagnostics: Vec<LevelDiagnostics>,
    pub domain: super::RadialDomain,
}

impl ShootingResult {
    /// Strictly increasing values with node count equal to the level index.
    pub fn is_sturm_ordered(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
            && self.node_counts.iter().enumerate().all(|(i, &n)| i == n)
    }
}

fn angle_or_below(ode: &RadialOde, param: f64) -> f64 {
    match ode.domain_for(param) {
        Ok(domain) => {
            let fixed = ode.clone().with_domain(domain);
            mismatch(&fixed, param)
                .map(|m| m.angle)
                .unwrap_or(f64::NEG_INFINITY)
        }
        Err(_) => f64::NEG_INFINITY,
    }
}

/// Finds the lowest `count` parameter values at which the regular solution
/// at the origin and the decaying solution at large `r` join smoothly.
///
/// The parameter must enter `Q` with a negative sign (more parameter, more
/// attraction), so the Prüfer angle mismatch is monotone and the `n`-th
/// root is where it equals `nπ`.
pub fn shoot(ode: &RadialOde, count: usize) -> Result<ShootingResult> {
    if count == 0 {
        return Err(Error::invalid("shooting needs at least one level"));
    }
    let target_top = (count as f64 - 0.5) * PI;
    let mut hi = ode.param_hint();
    let mut doublings = 0;
    while angle_or_below(ode, hi) <= target_top {
        hi *= 2.0;
        doublings += 1;
        if doublings > MAX_DOUBLINGS {
            return Err(Error::Shooting(format!("could not bracket {count} levels")));
        }
    }
    let domain = ode.domain_for(hi)?;
    let fixed = ode.clone().with_domain(domain);
    let at_zero = mismatch(&fixed, 0.0)?;
    if at_zero.angle >= 0.0 {
        return Err(Error::Shooting(format!(
            "mismatch at zero coupling is {}, expected negative",
            at_zero.angle
        )));
    }

    let mut values = Vec::with_capacity(count);
    let mut node_counts = Vec::with_capacity(count);
    let mut diagnostics = Vec::with_capacity(count);
    let mut lo = 0.0;
    for level in 0..count {
        let target = level as f64 * PI;
        let (mut a, mut b) = (lo, hi);
        let mut iterations = 0;
        while iterations < MAX_BISECTIONS && (b - a) > BISECTION_TOL * b.abs().max(1e-300) {
            let mid = 0.5 * (a + b);
            if mismatch(&fixed, mid)?.angle < target {
                a = mid;
            } else {
                b = mid;
            }
            iterations += 1;
        }
        let value = 0.5 * (a + b);
        let m = mismatch(&fixed, value)?;
        let converged = (b - a) <= BISECTION_TOL * b.abs().max(1e-300);
        values.push(value);
        node_counts.push(m.nodes());
        diagnostics.push(LevelDiagnostics {
            iterations,
            bracket_width: b - a,
            log_derivative_gap: m.relative_log_derivative_gap(),
            converged,
        });
        lo = value;
    }
    Ok(ShootingResult {
        values,
        node_counts,
        diagnostics,
        domain,
    })
}

/// The zero-energy radial equation with the repulsive power-law term of the
/// family held fixed and the attractive coefficient `D` as the shooting
/// parameter:
/// `u'' = [l(l+1)/r² + 2a r^{p1} − 2D r^{p2}] u`.
pub fn coupling_ode(mu: f64, lambda: f64, l: u32) -> Result<RadialOde> {
    let family = PowerLawFamily::new(mu, lambda, l, 0)?;
    if mu < -0.5 && l == 0 {
        return Err(Error::invalid(
            "mu < -1/2 with l = 0 has no normalizable zero-energy state to shoot for",
        ));
    }
    let terms = family.terms();
    let ll = (l * (l + 1)) as f64;
    let base = PowerSum::new(vec![
        (ll, -2.0),
        (2.0 * terms.repulsive_coefficient, terms.repulsive_exponent),
    ]);
    let coupling = PowerSum::new(vec![(-2.0, terms.attractive_exponent)]);
    let m = 2.0 * mu + 1.0;
    RadialOde::new(base, coupling, lambda.powf(-m), terms.repulsive_coefficient)
}

/// Recovers the first `count` attractive couplings `D_{l,n}` at zero energy.
pub fn shoot_coupling(mu: f64, lambda: f64, l: u32, count: usize) -> Result<ShootingResult> {
    if !(1..=6).contains(&count) {
        return Err(Error::invalid(format!(
            "count must be in 1..=6, got {count}"
        )));
    }
    shoot(&coupling_ode(mu, lambda, l)?, count)
}

/// `u'' = [x^{2(N+1)} − E x^N] u` with `E` as the shooting parameter.
pub fn bender_ode(big_n: i64) -> Result<RadialOde> {
    if big_n < -1 {
        return Err(Error::InvalidN(big_n));
    }
    let base = PowerSum::new(vec![(1.0, (2 * big_n + 2) as f64)]);
    let coupling = PowerSum::new(vec![(-1.0, big_n as f64)]);
    RadialOde::new(base, coupling, 1.0, 1.0)
}

/// Recovers the first `count` half-line eigenvalues `E` with `ψ(0) = 0`.
pub fn shoot_energy_bender(big_n: i64, count: usize) -> Result<ShootingResult> {
    if !(1..=4).contains(&count) {
        return Err(Error::invalid(format!(
            "count must be in 1..=4, got {count}"
        )));
    }
    shoot(&bender_ode(big_n)?, count)
}
