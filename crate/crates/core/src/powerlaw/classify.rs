//! Boundedness and normalizability of the zero-energy states.
//!
//! A state is called bounded when the effective potential dips below zero
//! and is walled in on the outside: either it is confining (`+∞` at large
//! `r`) or it rises through a positive barrier before decaying to zero from
//! above. Limits follow from the dominant power at each end; the well and
//! barrier are located numerically on a logarithmic scan around the
//! turning scale and refined by golden-section search.

use serde::Serialize;

use super::{bound_condition_at, PowerLawFamily};
use crate::radial::PowerSum;
use crate::{Error, Result};

const SCAN_POINTS: usize = 2000;
/// Decades of the Laguerre argument `t` on each side of `t* = 2Ω`.
const SCAN_HALF_DECADES: f64 = 4.0;
const GOLDEN_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Limit {
    #[serde(rename = "+inf")]
    PlusInfinity,
    #[serde(rename = "-inf")]
    MinusInfinity,
    #[serde(rename = "0+")]
    ZeroFromAbove,
    #[serde(rename = "0-")]
    ZeroFromBelow,
    #[serde(rename = "finite")]
    Finite,
}

impl std::fmt::Display for Limit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Limit::PlusInfinity => "+inf",
            Limit::MinusInfinity => "-inf",
            Limit::ZeroFromAbove => "0+",
            Limit::ZeroFromBelow => "0-",
            Limit::Finite => "finite",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionStatus {
    Satisfied,
    Violated,
    NotApplicable,
}

/// Extrema found by the scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WellShape {
    /// Lowest point of the effective potential on the scan.
    pub r_min: f64,
    pub v_min: f64,
    /// Highest point outside `r_min`, when the potential turns over.
    pub r_barrier: Option<f64>,
    pub v_barrier: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub mu: f64,
    pub l: u32,
    /// Real value standing in for `n` in `Ω`.
    pub level: f64,
    pub limit_at_zero: Limit,
    pub limit_at_infinity: Limit,
    pub bounded: bool,
    pub normalizable: bool,
    pub condition: ConditionStatus,
    pub condition_rhs: Option<f64>,
    pub well: WellShape,
}

/// Limit of `Σ c r^e` as `r → 0` (`toward_zero`) or `r → ∞`.
fn limit(q: &PowerSum, toward_zero: bool) -> Limit {
    let live = q.terms.iter().filter(|t| t.0 != 0.0);
    let dominant = if toward_zero {
        live.clone().map(|t| t.1).fold(f64::INFINITY, f64::min)
    } else {
        live.clone().map(|t| t.1).fold(f64::NEG_INFINITY, f64::max)
    };
    if !dominant.is_finite() {
        return Limit::Finite;
    }
    let coef: f64 = live.filter(|t| t.1 == dominant).map(|t| t.0).sum();
    let grows = if toward_zero {
        dominant < 0.0
    } else {
        dominant > 0.0
    };
    match (dominant == 0.0, grows, coef > 0.0) {
        (true, _, _) => Limit::Finite,
        (false, true, true) => Limit::PlusInfinity,
        (false, true, false) => Limit::MinusInfinity,
        (false, false, true) => Limit::ZeroFromAbove,
        (false, false, false) => Limit::ZeroFromBelow,
    }
}

/// Golden-section search for a minimum of `f(e^s)` on `[a, b]` in `s = ln r`.
fn golden_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let h = |s: f64| f(s.exp());
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (h(c), h(d));
    while (b - a).abs() > GOLDEN_TOL * (1.0 + a.abs().max(b.abs())) {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = h(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = h(d);
        }
    }
    (0.5 * (a + b)).exp()
}

fn refine<F: Fn(f64) -> f64>(f: F, radii: &[f64], i: usize) -> f64 {
    let lo = radii[i.saturating_sub(1)].ln();
    let hi = radii[(i + 1).min(radii.len() - 1)].ln();
    golden_min(f, lo, hi)
}

fn scan_radii(family: &PowerLawFamily, level: f64) -> Vec<f64> {
    let t_star = 2.0 * family.omega_at(level).max(f64::MIN_POSITIVE);
    let span = SCAN_HALF_DECADES * std::f64::consts::LN_10;
    let mut radii: Vec<f64> = (0..SCAN_POINTS)
        .map(|i| {
            let u = -span + 2.0 * span * i as f64 / (SCAN_POINTS - 1) as f64;
            family.radius_at_argument(t_star * u.exp())
        })
        .collect();
    radii.sort_by(f64::total_cmp);
    radii
}

pub fn classify(family: &PowerLawFamily) -> ClassificationReport {
    classify_level(family, family.n() as f64).expect("integer levels have a positive coupling")
}

/// Classification with `n` replaced by a real `level` in the attractive
/// coupling. Non-integer levels do not carry an exact zero-energy state;
/// they model the part of parameter space where the well condition fails.
/// Normalizability is reported by the closed rule for the family.
pub fn classify_level(family: &PowerLawFamily, level: f64) -> Result<ClassificationReport> {
    let terms = family.terms_at(level);
    if !(terms.attractive_coefficient > 0.0) {
        return Err(Error::invalid(format!(
            "level {level} makes the attractive coupling non-positive"
        )));
    }
    let q = terms.effective(family.l());
    let limit_at_zero = limit(&q, true);
    let limit_at_infinity = limit(&q, false);

    let radii = scan_radii(family, level);
    let values: Vec<f64> = radii.iter().map(|&r| q.eval(r)).collect();
    let i_min = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("scan is non-empty");
    let r_min = refine(|r| q.eval(r), &radii, i_min);
    let v_min = q.eval(r_min).min(values[i_min]);

    let (r_barrier, v_barrier) = if i_min + 1 < radii.len() {
        let i_max = (i_min + 1..radii.len())
            .max_by(|&a, &b| values[a].total_cmp(&values[b]))
            .expect("non-empty range");
        if i_max + 1 < radii.len() && values[i_max] > values[radii.len() - 1] {
            let r = refine(|r| -q.eval(r), &radii, i_max);
            (Some(r), Some(q.eval(r)))
        } else {
            (None, None)
        }
    } else {
        (None, None)
    };

    let dips = v_min < 0.0;
    let walled = match limit_at_infinity {
        Limit::PlusInfinity => true,
        Limit::ZeroFromAbove => v_barrier.is_some_and(|v| v > 0.0),
        _ => false,
    };
    let condition = bound_condition_at(family, level);
    Ok(ClassificationReport {
        mu: family.mu(),
        l: family.l(),
        level,
        limit_at_zero,
        limit_at_infinity,
        bounded: dips && walled,
        normalizable: family.is_normalizable(),
        condition: condition.status(),
        condition_rhs: condition.rhs,
        well: WellShape {
            r_min,
            v_min,
            r_barrier,
            v_barrier,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powerlaw::condition_rhs;

    fn report(mu: f64, l: u32, n: u32) -> ClassificationReport {
        classify(&PowerLawFamily::new(mu, 1.0, l, n).unwrap())
    }

    #[test]
    fn reference_table_rows() {
        let r = report(-0.75, 0, 0);
        assert!(!r.bounded && !r.normalizable);
        let r = report(1.0 / 6.0, 0, 0);
        assert!(r.bounded && r.normalizable);
        let r = report(2.5, 0, 0);
        assert_eq!(r.limit_at_infinity, Limit::ZeroFromAbove);
        assert_eq!(r.limit_at_zero, Limit::MinusInfinity);
        assert!(r.bounded);
        let r = report(-1.5, 0, 0);
        assert_eq!(r.limit_at_zero, Limit::PlusInfinity);
        assert_eq!(r.limit_at_infinity, Limit::ZeroFromBelow);
        let r = report(-0.25, 0, 0);
        assert_eq!(r.limit_at_zero, Limit::ZeroFromBelow);
        assert_eq!(r.limit_at_infinity, Limit::PlusInfinity);
        assert!(r.bounded);
    }

    #[test]
    fn exact_states_with_l_have_a_well() {
        for mu in [-2.5, -1.5, -0.75, 1.5, 2.5] {
            for l in 1..3 {
                let r = report(mu, l, 0);
                assert!(r.bounded, "{mu} {l}: {r:?}");
                assert_eq!(r.condition, ConditionStatus::Satisfied);
                assert!(r.well.v_barrier.unwrap() > 0.0);
            }
        }
    }

    #[test]
    fn below_condition_is_unbounded() {
        for mu in [-1.5, 1.5, 2.5] {
            let f = PowerLawFamily::new(mu, 1.0, 1, 0).unwrap();
            let level = condition_rhs(&f).unwrap() - 0.25;
            let r = classify_level(&f, level).unwrap();
            assert!(!r.bounded && r.normalizable, "{mu}: {r:?}");
            assert_eq!(r.condition, ConditionStatus::Violated);
            assert!(r.well.v_min >= 0.0);
        }
    }

    #[test]
    fn non_positive_coupling_rejected() {
        let f = PowerLawFamily::new(1.5, 1.0, 0, 0).unwrap();
        assert!(classify_level(&f, -5.0).is_err());
    }

    #[test]
    fn golden_section_finds_minimum() {
        let r = golden_min(|r| (r.ln() - 0.7).powi(2), -3.0, 3.0);
        assert!((r.ln() - 0.7).abs() < 1e-8);
    }
}
