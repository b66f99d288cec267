//! States sharing one potential: integer pairs `(l, n)` with
//! `2n + 1 + (2l+1)|μ+1/2| = Ω`.

use num_rational::Rational64;

use super::check_mu;
use crate::param::Real;
use crate::{Error, Result};

const FLOAT_TOL: f64 = 1e-12;

fn abs(q: Rational64) -> Rational64 {
    if q < Rational64::from_integer(0) {
        -q
    } else {
        q
    }
}

/// Largest `l` that can reach `Ω` with `n = 0`, or `None` if even `l = 0`
/// overshoots.
pub fn default_l_max(mu: f64, omega: f64) -> Option<u32> {
    let a = (mu + 0.5).abs();
    let bound = ((omega - 1.0) / a - 1.0) / 2.0;
    (bound >= -FLOAT_TOL).then(|| (bound + FLOAT_TOL).floor().max(0.0) as u32)
}

/// `Ω` for a given pair, exact when `μ` is.
pub fn omega_exact(mu: Real, l: u32, n: u32) -> Real {
    match mu.exact() {
        Some(q) => {
            let a = abs(q + Rational64::new(1, 2));
            Real::Exact(Rational64::from_integer(2 * n as i64 + 1) + a * (2 * l as i64 + 1))
        }
        None => {
            Real::Approx(2.0 * n as f64 + 1.0 + (2.0 * l as f64 + 1.0) * (mu.value() + 0.5).abs())
        }
    }
}

/// All `(l, n)` with `l ≤ l_max` on the level `Ω`, ordered by `l`. Exact
/// rational arithmetic is used when both `μ` and `Ω` are exact.
pub fn degenerate_pairs(mu: Real, omega: Real, l_max: Option<u32>) -> Result<Vec<(u32, u32)>> {
    check_mu(mu.value())?;
    if !omega.value().is_finite() {
        return Err(Error::invalid("omega must be finite"));
    }
    let Some(l_max) = l_max.or_else(|| default_l_max(mu.value(), omega.value())) else {
        return Ok(Vec::new());
    };
    let mut pairs = Vec::new();
    match (mu.exact(), omega.exact()) {
        (Some(m), Some(w)) => {
            let a = abs(m + Rational64::new(1, 2));
            for l in 0..=l_max {
                let twice_n = w - Rational64::from_integer(1) - a * (2 * l as i64 + 1);
                if twice_n < Rational64::from_integer(0) {
                    break;
                }
                let n = twice_n / 2;
                if n.is_integer() {
                    pairs.push((l, *n.numer() as u32));
                }
            }
        }
        _ => {
            let a = (mu.value() + 0.5).abs();
            let w = omega.value();
            for l in 0..=l_max {
                let n = (w - 1.0 - a * (2.0 * l as f64 + 1.0)) / 2.0;
                if n < -FLOAT_TOL * w.abs().max(1.0) {
                    break;
                }
                let k = n.round();
                if (n - k).abs() <= FLOAT_TOL * w.abs().max(1.0) {
                    pairs.push((l, k.max(0.0) as u32));
                }
            }
        }
    }
    Ok(pairs)
}
