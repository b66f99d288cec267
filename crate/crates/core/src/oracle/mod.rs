//! Independent numerical verification.
//!
//! Nothing here evaluates a closed-form wavefunction: the quadrature
//! integrates whatever it is handed, the radial integrator only sees the
//! potential, and the shooting solver recovers the quantized couplings or
//! energies from the potential alone.

pub mod ode;
pub mod quad;
pub mod shoot;

use serde::Serialize;

use crate::radial::PowerSum;
use crate::{Error, Result};

pub use ode::{integrate_linear, IntegratorOptions, Sample, Trajectory};
pub use quad::{quad_interval, quad_seminfinite, QuadResult};
pub use shoot::{shoot, shoot_coupling, shoot_energy_bender, LevelDiagnostics, ShootingResult};

/// Radii used for one shooting problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialDomain {
    pub inner: f64,
    pub matching: f64,
    pub outer: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Outward,
    Inward,
}

/// `u'' = Q(r; p) u` with `Q(r; p) = base(r) + p · coupling(r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialOde {
    base: PowerSum,
    coupling: PowerSum,
    scale: f64,
    param_hint: f64,
    domain: Option<RadialDomain>,
}

// Decay action required beyond each turning point: e^{-40} ≈ 4e-18.
const START_ACTION: f64 = 40.0;
const SCAN_DECADES: f64 = 16.0;
const SCAN_PER_DECADE: usize = 24;
const MAX_START_DECADES: f64 = 14.0;

impl RadialOde {
    /// `scale` is the characteristic radius of the problem, `param_hint`
    /// a starting guess for the size of the shooting parameter.
    pub fn new(base: PowerSum, coupling: PowerSum, scale: f64, param_hint: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::invalid(format!(
                "radial scale must be positive, got {scale}"
            )));
        }
        if !(param_hint > 0.0 && param_hint.is_finite()) {
            return Err(Error::invalid(format!(
                "parameter hint must be positive, got {param_hint}"
            )));
        }
        Ok(Self {
            base,
            coupling,
            scale,
            param_hint,
            domain: None,
        })
    }

    pub fn with_domain(mut self, domain: RadialDomain) -> Self {
        self.domain = Some(domain);
        self
    }

    pub fn domain(&self) -> Option<RadialDomain> {
        self.domain
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn param_hint(&self) -> f64 {
        self.param_hint
    }

    pub fn q(&self, r: f64, param: f64) -> f64 {
        self.base.eval(r) + param * self.coupling.eval(r)
    }

    pub fn q_deriv(&self, r: f64, param: f64) -> f64 {
        self.base.deriv(r) + param * self.coupling.deriv(r)
    }

    /// Leading power `s` of the regular solution `u ~ r^s` at the origin, or
    /// `None` when a repulsive term more singular than `r^{-2}` forces an
    /// essential singularity.
    pub fn leading_exponent(&self, param: f64) -> Option<f64> {
        let q = self.base.combined(param, &self.coupling);
        let most_singular = q
            .terms
            .iter()
            .filter(|t| t.0 != 0.0)
            .map(|t| t.1)
            .fold(f64::INFINITY, f64::min);
        if most_singular < -2.0 {
            return None;
        }
        let centrifugal: f64 = q.terms.iter().filter(|t| t.1 == -2.0).map(|t| t.0).sum();
        Some(0.5 + (0.25 + centrifugal).sqrt())
    }

    /// Langer-modified `Q + 1/(4r²)` and its derivative.
    fn langer(&self, r: f64, param: f64) -> (f64, f64) {
        (
            self.q(r, param) + 0.25 / (r * r),
            self.q_deriv(r, param) - 0.5 / (r * r * r),
        )
    }

    /// WKB log-derivative of the branch that grows in the integration direction.
    fn start_slope(&self, r: f64, param: f64, direction: Direction) -> f64 {
        let (ql, dql) = self.langer(r, param);
        let sign = match direction {
            Direction::Outward => 1.0,
            Direction::Inward => -1.0,
        };
        if ql > 0.0 {
            sign * ql.sqrt() - dql / (4.0 * ql)
        } else {
            sign / r
        }
    }

    /// Chooses start radii beyond both turning points of `Q(·; param)` so the
    /// unwanted branch is suppressed by at least `e^{-40}`, and a matching
    /// radius at the bottom of the well.
    pub fn domain_for(&self, param: f64) -> Result<RadialDomain> {
        let n = (2.0 * SCAN_DECADES) as usize * SCAN_PER_DECADE;
        let step = std::f64::consts::LN_10 / SCAN_PER_DECADE as f64;
        let lo = self.scale.ln() - SCAN_DECADES * std::f64::consts::LN_10;
        let radii: Vec<f64> = (0..=n).map(|k| (lo + step * k as f64).exp()).collect();
        let ql: Vec<f64> = radii.iter().map(|&r| self.langer(r, param).0).collect();
        let first = ql.iter().position(|&v| v < 0.0);
        let last = ql.iter().rposition(|&v| v < 0.0);
        let (Some(a), Some(b)) = (first, last) else {
            return Err(Error::Shooting(format!(
                "no classically allowed region at parameter {param}"
            )));
        };
        let max_walk = (MAX_START_DECADES * SCAN_PER_DECADE as f64) as usize;
        let action = |i: usize, j: usize| {
            0.5 * (ql[i].max(0.0).sqrt() + ql[j].max(0.0).sqrt()) * (radii[i] - radii[j]).abs()
        };
        let mut inner = a;
        let mut acc = 0.0;
        while inner > 0 && a - inner < max_walk && acc < START_ACTION {
            acc += action(inner, inner - 1);
            inner -= 1;
        }
        let mut outer = b;
        acc = 0.0;
        while outer < n && outer - b < max_walk && acc < START_ACTION {
            acc += action(outer, outer + 1);
            outer += 1;
        }
        let q_min = (a..=b)
            .filter(|&i| ql[i] < 0.0)
            .min_by(|&i, &j| self.q(radii[i], param).total_cmp(&self.q(radii[j], param)))
            .expect("allowed region is non-empty");
        let matching = if q_min > a && q_min < b {
            radii[q_min]
        } else {
            (radii[a] * radii[b]).sqrt()
        };
        Ok(RadialDomain {
            inner: radii[inner],
            matching,
            outer: radii[outer],
        })
    }

    fn require_domain(&self) -> Result<RadialDomain> {
        self.domain.ok_or_else(|| {
            Error::invalid("radial ODE has no domain; call with_domain or domain_for")
        })
    }
}

/// Integrates from the inner (outward) or outer (inward) start radius to the
/// matching radius at parameter value `param`.
pub fn integrate_radial(ode: &RadialOde, param: f64, direction: Direction) -> Result<Trajectory> {
    let domain = ode.require_domain()?;
    let start = match direction {
        Direction::Outward => domain.inner,
        Direction::Inward => domain.outer,
    };
    let slope = ode.start_slope(start, param, direction);
    integrate_linear(
        |r| ode.q(r, param),
        start,
        domain.matching,
        1.0,
        slope,
        IntegratorOptions::default(),
    )
}

/// Matching data at the matching radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mismatch {
    /// Prüfer angle difference `θ_out − θ_in`; equals `nπ` at the `n`-th
    /// eigenvalue and increases monotonically with the attraction.
    pub angle: f64,
    pub log_derivative_out: f64,
    pub log_derivative_in: f64,
    pub nodes_out: usize,
    pub nodes_in: usize,
}

impl Mismatch {
    pub fn nodes(&self) -> usize {
        self.nodes_out + self.nodes_in
    }

    pub fn relative_log_derivative_gap(&self) -> f64 {
        let (a, b) = (self.log_derivative_out, self.log_derivative_in);
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn prufer_phase(end: &Sample, nodes: usize, k: f64) -> f64 {
    let sign = if nodes.is_multiple_of(2) { 1.0 } else { -1.0 };
    (sign * end.u).atan2(sign * end.du / k)
}

pub fn mismatch(ode: &RadialOde, param: f64) -> Result<Mismatch> {
    let domain = ode.require_domain()?;
    let light = IntegratorOptions {
        record: false,
        ..IntegratorOptions::default()
    };
    let q = |r: f64| ode.q(r, param);
    let out = integrate_linear(
        q,
        domain.inner,
        domain.matching,
        1.0,
        ode.start_slope(domain.inner, param, Direction::Outward),
        light,
    )?;
    let inn = integrate_linear(
        q,
        domain.outer,
        domain.matching,
        1.0,
        ode.start_slope(domain.outer, param, Direction::Inward),
        light,
    )?;
    let k = 1.0 / domain.matching;
    let theta_out = out.nodes as f64 * std::f64::consts::PI + prufer_phase(out.end(), out.nodes, k);
    let theta_in =
        -(inn.nodes as f64) * std::f64::consts::PI + prufer_phase(inn.end(), inn.nodes, k);
    Ok(Mismatch {
        angle: theta_out - theta_in,
        log_derivative_out: out.log_derivative(),
        log_derivative_in: inn.log_derivative(),
        nodes_out: out.nodes,
        nodes_in: inn.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn free_s_wave_is_linear() {
        let ode = RadialOde::new(PowerSum::default(), PowerSum::default(), 1.0, 1.0)
            .unwrap()
            .with_domain(RadialDomain {
                inner: 1e-6,
                matching: 2.0,
                outer: 10.0,
            });
        let t = integrate_radial(&ode, 0.0, Direction::Outward).unwrap();
        assert_relative_eq!(t.log_derivative(), 1.0 / 2.0, max_relative = 1e-8);
        for s in &t.samples {
            assert_relative_eq!(s.log_derivative(), 1.0 / s.r, max_relative = 1e-8);
        }
    }

    #[test]
    fn leading_exponents() {
        let centrifugal = PowerSum::new(vec![(6.0, -2.0), (1.0, -1.0)]);
        let ode = RadialOde::new(centrifugal, PowerSum::new(vec![(-1.0, -1.5)]), 1.0, 1.0).unwrap();
        assert_relative_eq!(ode.leading_exponent(0.3).unwrap(), 3.0);
        let essential = PowerSum::new(vec![(2.0, -2.0), (1.0, -4.0)]);
        let ode = RadialOde::new(essential, PowerSum::default(), 1.0, 1.0).unwrap();
        assert!(ode.leading_exponent(0.0).is_none());
    }

    #[test]
    fn domain_requires_a_well() {
        let ode = RadialOde::new(
            PowerSum::new(vec![(1.0, 0.0)]),
            PowerSum::default(),
            1.0,
            1.0,
        )
        .unwrap();
        assert!(ode.domain_for(0.0).is_err());
        assert!(integrate_radial(&ode, 0.0, Direction::Outward).is_err());
    }

    #[test]
    fn harmonic_domain_brackets_turning_points() {
        // u'' = (x² − E) u, turning point √E
        let ode = RadialOde::new(
            PowerSum::new(vec![(1.0, 2.0)]),
            PowerSum::new(vec![(-1.0, 0.0)]),
            1.0,
            1.0,
        )
        .unwrap();
        let d = ode.domain_for(7.0).unwrap();
        assert!(d.inner < 1e-3);
        assert!(d.outer > 7f64.sqrt() + 3.0);
        assert!(d.matching > d.inner && d.matching < d.outer);
    }
}
