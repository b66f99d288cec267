//! Dormand-Prince 5(4) integration of the linear radial equation `u'' = Q(r) u`.
//!
//! The state `(u, u')` is rescaled whenever it drifts far from unity; the
//! accumulated factor is kept as a logarithm so growing and decaying
//! branches never overflow. Only ratios such as `u'/u` are meaningful
//! across a rescaling.

use serde::Serialize;

use crate::{Error, Result};

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const RESCALE_HIGH: f64 = 1e100;
const RESCALE_LOW: f64 = 1e-100;
const MAX_STEPS: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sample {
    pub r: f64,
    pub u: f64,
    pub du: f64,
    /// `(u, u')` here times `e^{log_scale}` is the unscaled solution.
    pub log_scale: f64,
}

impl Sample {
    pub fn log_derivative(&self) -> f64 {
        self.du / self.u
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    /// Sign changes of `u` strictly inside the integration range.
    pub nodes: usize,
    pub steps: usize,
    pub rejected: usize,
}

impl Trajectory {
    pub fn end(&self) -> &Sample {
        self.samples
            .last()
            .expect("trajectory has at least the start sample")
    }

    pub fn log_derivative(&self) -> f64 {
        self.end().log_derivative()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct IntegratorOptions {
    pub rtol: f64,
    pub record: bool,
}

impl Default for IntegratorOptions {
    fn default() -> Self {
        Self {
            rtol: 1e-10,
            record: true,
        }
    }
}

/// Integrates `u'' = q(r) u` from `r0` to `r1` (either direction) starting
/// from `(u0, du0)`.
pub fn integrate_linear<Q: Fn(f64) -> f64>(
    q: Q,
    r0: f64,
    r1: f64,
    u0: f64,
    du0: f64,
    opts: IntegratorOptions,
) -> Result<Trajectory> {
    if !(r0 > 0.0 && r1 > 0.0 && r0.is_finite() && r1.is_finite()) {
        return Err(Error::invalid(format!(
            "radial integration needs 0 < r0, r1 < inf, got {r0}, {r1}"
        )));
    }
    let dir = if r1 >= r0 { 1.0 } else { -1.0 };
    let rhs = |r: f64, y: [f64; 2]| [y[1], q(r) * y[0]];
    let step_cap = |r: f64| {
        let qr = q(r).abs();
        let mut cap = 0.25 * r;
        if qr > 0.0 {
            cap = cap.min(0.5 / qr.sqrt());
        }
        cap
    };

    let mut r = r0;
    let mut y = [u0, du0];
    let mut log_scale = 0.0;
    let mut samples = vec![Sample {
        r,
        u: y[0],
        du: y[1],
        log_scale,
    }];
    let mut last_sign = y[0].signum() * (y[0] != 0.0) as i32 as f64;
    let mut nodes = 0usize;
    let mut h = 1e-3 * r0.min(step_cap(r0));
    let mut k1 = rhs(r, y);
    let (mut steps, mut rejected) = (0usize, 0usize);

    while dir * (r1 - r) > 0.0 {
        if steps + rejected > MAX_STEPS {
            return Err(Error::Shooting(format!(
                "ODE step limit reached near r = {r}"
            )));
        }
        h = h.min(step_cap(r)).min((r1 - r).abs());
        let hs = dir * h;
        let stage = |c: f64, a: &[(f64, [f64; 2])]| {
            let mut yt = y;
            for (coef, k) in a {
                yt[0] += hs * coef * k[0];
                yt[1] += hs * coef * k[1];
            }
            rhs(r + c * hs, yt)
        };
        let k2 = stage(C2, &[(A21, k1)]);
        let k3 = stage(C3, &[(A31, k1), (A32, k2)]);
        let k4 = stage(C4, &[(A41, k1), (A42, k2), (A43, k3)]);
        let k5 = stage(C5, &[(A51, k1), (A52, k2), (A53, k3), (A54, k4)]);
        let k6 = stage(
            1.0,
            &[(A61, k1), (A62, k2), (A63, k3), (A64, k4), (A65, k5)],
        );
        let mut y_new = y;
        for i in 0..2 {
            y_new[i] += hs * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
        }
        let r_new = if (r1 - (r + hs)).abs() <= 1e-14 * r1 {
            r1
        } else {
            r + hs
        };
        let k7 = rhs(r_new, y_new);
        let mut err = [0.0; 2];
        for i in 0..2 {
            err[i] =
                hs * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
        }
        // Both components measured in units of u via the local radius.
        let size = (y[0].abs() + r * y[1].abs()).max(y_new[0].abs() + r_new * y_new[1].abs());
        let err_norm = (err[0].abs() + r * err[1].abs()) / (opts.rtol * size);
        if !err_norm.is_finite() {
            h *= 0.2;
            rejected += 1;
            if h < 1e-15 * r {
                return Err(Error::Shooting(format!("ODE step underflow near r = {r}")));
            }
            continue;
        }
        if err_norm > 1.0 {
            h *= (0.9 * err_norm.powf(-0.2)).max(0.2);
            rejected += 1;
            if h < 1e-15 * r {
                return Err(Error::Shooting(format!("ODE step underflow near r = {r}")));
            }
            continue;
        }
        steps += 1;
        r = r_new;
        y = y_new;
        k1 = k7;
        if y[0] != 0.0 {
            let sign = y[0].signum();
            if last_sign != 0.0 && sign != last_sign {
                nodes += 1;
            }
            last_sign = sign;
        }
        let size = y[0].abs() + r * y[1].abs();
        if size > RESCALE_HIGH || (size < RESCALE_LOW && size > 0.0) {
            log_scale += size.ln();
            y = [y[0] / size, y[1] / size];
            k1 = [k1[0] / size, k1[1] / size];
        }
        if opts.record || r == r1 {
            samples.push(Sample {
                r,
                u: y[0],
                du: y[1],
                log_scale,
            });
        }
        let grow = if err_norm == 0.0 {
            5.0
        } else {
            (0.9 * err_norm.powf(-0.2)).min(5.0)
        };
        h *= grow;
    }
    if samples.last().map(|s| s.r) != Some(r) {
        samples.push(Sample {
            r,
            u: y[0],
            du: y[1],
            log_scale,
        });
    }
    Ok(Trajectory {
        samples,
        nodes,
        steps,
        rejected,
    })
}
