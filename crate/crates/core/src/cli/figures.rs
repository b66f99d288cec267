//! Curve data behind the exponent plot and the three effective-potential
//! plots. Figures 2 to 4 emit one block per case `(a)`, `(b)`, `(c)`.

use serde_json::json;

use super::output::num;
use super::{Document, FiguresArgs, Table};
use crate::powerlaw::{self, PowerLawFamily};
use crate::{Error, Result};

const EXCLUDED_TOL: f64 = 1e-9;
const MAX_ROWS: usize = 10_000_000;
/// Decades of the Laguerre argument on each side of the turning scale.
const CURVE_HALF_DECADES: f64 = 3.0;

pub fn figure(a: &FiguresArgs) -> Result<Document> {
    match a.which {
        1 => exponents(&a.mu_range),
        2..=4 => effective(a),
        w => Err(Error::invalid(format!("no figure {w}"))),
    }
}

fn parse_range(spec: &str) -> Result<(f64, f64, f64)> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(Error::invalid(format!(
            "range must be start:stop:step, got {spec:?}"
        )));
    };
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Error::invalid(format!("bad number {s:?} in range")))
    };
    let (start, stop, step) = (parse(start)?, parse(stop)?, parse(step)?);
    if !(start.is_finite() && stop.is_finite() && step > 0.0 && stop >= start) {
        return Err(Error::invalid(
            "range needs finite start <= stop and step > 0",
        ));
    }
    if (stop - start) / step > MAX_ROWS as f64 {
        return Err(Error::invalid("range has too many points"));
    }
    Ok((start, stop, step))
}

fn exponents(range: &str) -> Result<Document> {
    let (start, stop, step) = parse_range(range)?;
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    let mut table = Table::new(vec!["mu", "p1", "p2"]);
    let mut rows = Vec::new();
    for i in 0..count {
        let mu = start + i as f64 * step;
        if [0.0, 0.5, -0.5]
            .iter()
            .any(|&x| (mu - x).abs() < EXCLUDED_TOL)
        {
            continue;
        }
        let (p1, p2) = powerlaw::exponent_pair(mu)?;
        table.push(vec![num(mu), num(p1), num(p2)]);
        rows.push(json!({"mu": mu, "p1": p1, "p2": p2}));
    }
    Ok(Document {
        json: json!({"which": 1, "rows": rows}),
        table,
        passed: true,
    })
}

struct Curve {
    label: &'static str,
    family: PowerLawFamily,
    level: f64,
}

fn in_regime(which: u8, mu: f64) -> bool {
    match which {
        2 => mu > 0.5,
        3 => mu.abs() < 0.5 && mu != 0.0,
        _ => mu < -0.5,
    }
}

fn curves(a: &FiguresArgs) -> Result<Vec<Curve>> {
    let default_mu = match a.which {
        2 => 2.5,
        3 => 0.25,
        _ => -1.5,
    };
    let mu = a.mu.map_or(default_mu, |m| m.value());
    if !in_regime(a.which, mu) {
        let regime = ["mu > 1/2", "1/2 > mu > -1/2, mu != 0", "mu < -1/2"][a.which as usize - 2];
        return Err(Error::invalid(format!(
            "figure {} needs {regime}, got mu = {mu}",
            a.which
        )));
    }
    if a.l == 0 {
        return Err(Error::invalid("the l > 0 curves need l >= 1"));
    }
    let at_n = |mu: f64, l: u32| -> Result<Curve> {
        Ok(Curve {
            label: "",
            family: PowerLawFamily::new(mu, a.lambda, l, a.n)?,
            level: a.n as f64,
        })
    };
    if a.which == 3 {
        let second = if a.mu.is_some() { -mu } else { -0.25 };
        let third = if a.mu.is_some() { mu } else { 1.0 / 6.0 };
        let (pos, neg) = if mu > 0.0 { (mu, second) } else { (second, mu) };
        return Ok(vec![
            Curve {
                label: "a",
                ..at_n(pos, 0)?
            },
            Curve {
                label: "b",
                ..at_n(neg, 0)?
            },
            Curve {
                label: "c",
                ..at_n(third, a.l)?
            },
        ]);
    }
    let with_l = PowerLawFamily::new(mu, a.lambda, a.l, a.n)?;
    let rhs = powerlaw::condition_rhs(&with_l).expect("regime has a condition");
    Ok(vec![
        Curve {
            label: "a",
            ..at_n(mu, 0)?
        },
        Curve {
            label: "b",
            ..at_n(mu, a.l)?
        },
        Curve {
            label: "c",
            family: with_l,
            level: rhs - 0.25,
        },
    ])
}

fn effective(a: &FiguresArgs) -> Result<Document> {
    if a.points < 2 {
        return Err(Error::invalid("need at least 2 points"));
    }
    let mut table = Table::new(vec!["curve", "mu", "l", "level", "r", "v_eff"]);
    let mut blocks = Vec::new();
    for curve in curves(a)? {
        let f = &curve.family;
        let report = powerlaw::classify_level(f, curve.level)?;
        let q = f.terms_at(curve.level).effective(f.l());
        let t_star = 2.0 * f.omega_at(curve.level);
        let span = CURVE_HALF_DECADES * std::f64::consts::LN_10;
        let mut radii: Vec<f64> = (0..a.points)
            .map(|i| {
                let u = -span + 2.0 * span * i as f64 / (a.points - 1) as f64;
                f.radius_at_argument(t_star * u.exp())
            })
            .collect();
        radii.sort_by(f64::total_cmp);
        let mut points = Vec::with_capacity(radii.len());
        for r in radii {
            let v = q.eval(r);
            table.push(vec![
                curve.label.to_string(),
                num(f.mu()),
                f.l().to_string(),
                num(curve.level),
                num(r),
                num(v),
            ]);
            points.push([r, v]);
        }
        blocks.push(json!({
            "curve": curve.label,
            "mu": f.mu(),
            "l": f.l(),
            "level": curve.level,
            "limit_at_zero": report.limit_at_zero,
            "limit_at_infinity": report.limit_at_infinity,
            "bounded": report.bounded,
            "normalizable": report.normalizable,
            "points": points,
        }));
    }
    Ok(Document {
        json: json!({"which": a.which, "lambda": a.lambda, "curves": blocks}),
        table,
        passed: true,
    })
}
