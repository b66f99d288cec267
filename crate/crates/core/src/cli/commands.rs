use serde_json::json;

use super::output::{num, opt};
use super::{
    figures, verify, BenderArgs, ClassifyArgs, Command, DegeneracyArgs, DiracArgs, Document,
    OracleArgs, PotentialArgs, Suite, Table,
};
use crate::bender::{self, BenderProblem};
use crate::dirac::{self, DiracFamily};
use crate::oracle;
use crate::powerlaw::{self, PowerLawFamily};
use crate::radial::{log_grid, RadialFunction};
use crate::{Error, Result};

pub fn dispatch(command: &Command) -> Result<Document> {
    match command {
        Command::Verify(a) => {
            let suites: Vec<Suite> = match a.suite {
                Some(s) => vec![s],
                None => Suite::ALL.to_vec(),
            };
            Ok(verify::document(&verify::run(
                &suites,
                a.residual_tol,
                a.oracle_tol,
            )))
        }
        Command::Classify(a) => classify(a),
        Command::Degeneracy(a) => degeneracy(a),
        Command::Potential(a) => potential(a),
        Command::Dirac(a) => dirac(a),
        Command::Bender(a) => bender(a),
        Command::Oracle(a) => oracle(a),
        Command::Figures(a) => figures::figure(a),
    }
}

fn classify(a: &ClassifyArgs) -> Result<Document> {
    let family = PowerLawFamily::new(a.mu.value(), a.lambda, a.l, a.n.unwrap_or(0))?;
    let report = match a.level {
        Some(level) => powerlaw::classify_level(&family, level)?,
        None => powerlaw::classify(&family),
    };
    let mut table = Table::new(vec![
        "mu",
        "l",
        "level",
        "limit_at_zero",
        "limit_at_infinity",
        "bounded",
        "normalizable",
        "condition",
        "condition_rhs",
    ]);
    let condition = serde_json::to_value(report.condition).expect("serializable");
    table.push(vec![
        num(report.mu),
        report.l.to_string(),
        num(report.level),
        report.limit_at_zero.to_string(),
        report.limit_at_infinity.to_string(),
        report.bounded.to_string(),
        report.normalizable.to_string(),
        condition.as_str().unwrap_or_default().to_string(),
        opt(report.condition_rhs),
    ]);
    Ok(Document {
        json: serde_json::to_value(report).expect("serializable"),
        table,
        passed: true,
    })
}

fn degeneracy(a: &DegeneracyArgs) -> Result<Document> {
    let pairs = powerlaw::degenerate_pairs(a.mu, a.omega, a.l_max)?;
    let mut table = Table::new(vec!["l", "n"]);
    for (l, n) in &pairs {
        table.push(vec![l.to_string(), n.to_string()]);
    }
    Ok(Document {
        json: json!({
            "mu": a.mu.value(),
            "omega": a.omega.value(),
            "exact": a.mu.exact().is_some() && a.omega.exact().is_some(),
            "pairs": pairs,
        }),
        table,
        passed: true,
    })
}

fn potential(a: &PotentialArgs) -> Result<Document> {
    let family = PowerLawFamily::new(a.mu.value(), a.lambda, a.l, a.n)?;
    if a.points < 2 {
        return Err(Error::invalid("need at least 2 points"));
    }
    let standard = powerlaw::standard_grid(&family);
    let lo = a.r_min.unwrap_or(standard[0]);
    let hi = a.r_max.unwrap_or(standard[standard.len() - 1]);
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::invalid(format!(
            "radial range must satisfy 0 < r-min < r-max, got {lo}, {hi}"
        )));
    }
    let psi = powerlaw::wavefunction(&family)?;
    let mut rows = Vec::with_capacity(a.points);
    let mut table = Table::new(vec!["r", "v", "v_eff", "psi"]);
    for r in log_grid(lo, hi, a.points) {
        let v = powerlaw::potential_eval(&family, r)?;
        let v_eff = powerlaw::effective_potential_eval(&family, r)?;
        let p = psi.value(r);
        table.push(vec![num(r), num(v), num(v_eff), num(p)]);
        rows.push(json!({"r": r, "v": v, "v_eff": v_eff, "psi": p}));
    }
    let mapped = powerlaw::map_parameters(&family);
    Ok(Document {
        json: json!({
            "mu": family.mu(),
            "lambda": family.lambda(),
            "l": family.l(),
            "n": family.n(),
            "energy": mapped.energy,
            "gamma": mapped.gamma,
            "terms": mapped.terms,
            "normalized": psi.is_normalized(),
            "rows": rows,
        }),
        table,
        passed: true,
    })
}

const DIRAC_RESIDUAL_TOL: f64 = 1e-8;
const DIRAC_THETA_TOL: f64 = 1e-12;
const DIRAC_NORM_TOL: f64 = 1e-8;

fn dirac(a: &DiracArgs) -> Result<Document> {
    let family = DiracFamily::new(a.beta.value(), a.lambda, a.l, a.alpha)?;
    let c = family.correspondence();
    let spinor = dirac::upper_spinor(&family);
    let grid = family.standard_grid();
    let residual = dirac::residual_33(&family, &grid);
    let theta = dirac::lower_component_check(&family, 1.0, &grid)?;
    let reduced = dirac::reduced_form_discrepancy(&family, &grid)?;
    let norm = dirac::quadrature_norm(&spinor, 1e-12)?;
    let norm_ok =
        !family.is_normalizable() || (norm.converged && (norm.value - 1.0).abs() < DIRAC_NORM_TOL);
    let passed = residual.passes(DIRAC_RESIDUAL_TOL) && theta < DIRAC_THETA_TOL && norm_ok;
    let norm_value = norm.converged.then_some(norm.value);
    let mut table = Table::new(vec![
        "beta",
        "lambda",
        "l",
        "nu",
        "kappa",
        "n",
        "coupling",
        "normalization",
        "quadrature_norm",
        "residual",
        "theta",
        "passed",
    ]);
    table.push(vec![
        num(family.beta()),
        num(family.lambda()),
        family.l().to_string(),
        num(c.nu),
        c.kappa.to_string(),
        c.n.to_string(),
        num(c.coupling),
        opt(spinor.normalization),
        opt(norm_value),
        num(residual.max_relative),
        num(theta),
        passed.to_string(),
    ]);
    Ok(Document {
        json: json!({
            "beta": family.beta(),
            "lambda": family.lambda(),
            "l": family.l(),
            "alpha": family.alpha(),
            "nu": c.nu,
            "kappa": c.kappa,
            "n": c.n,
            "coupling": c.coupling,
            "normalizable": family.is_normalizable(),
            "normalization": spinor.normalization,
            "warning": spinor.warning,
            "quadrature_norm": norm_value,
            "residual": residual.max_relative,
            "theta_max_relative": theta,
            "reduced_form_discrepancy": reduced,
            "passed": passed,
        }),
        table,
        passed,
    })
}

const BENDER_RESIDUAL_TOL: f64 = 1e-8;
const BENDER_SHOOT_TOL: f64 = 1e-6;

fn bender(a: &BenderArgs) -> Result<Document> {
    let levels: Vec<u32> = match (a.n, a.count) {
        (Some(n), _) => vec![n],
        (None, Some(c)) if c >= 1 => (0..c).collect(),
        (None, Some(_)) => return Err(Error::invalid("count must be at least 1")),
        (None, None) => vec![0],
    };
    let shot = if a.shoot {
        let count = *levels.iter().max().expect("non-empty") as usize + 1;
        Some(oracle::shoot_energy_bender(a.big_n, count)?)
    } else {
        None
    };
    let mut passed = true;
    let mut rows = Vec::new();
    let mut table = Table::new(vec!["N", "n", "energy", "residual", "shooting", "nodes"]);
    for &n in &levels {
        let problem = BenderProblem::new(a.big_n, n)?;
        let residual = bender::residual(&problem, &problem.standard_grid())?;
        passed &= residual.passes(BENDER_RESIDUAL_TOL);
        let energy = problem.energy();
        let (shooting, nodes) = match &shot {
            Some(s) => {
                let value = s.values[n as usize];
                passed &= (value - energy).abs() <= BENDER_SHOOT_TOL * energy;
                (Some(value), Some(s.node_counts[n as usize]))
            }
            None => (None, None),
        };
        table.push(vec![
            a.big_n.to_string(),
            n.to_string(),
            num(energy),
            num(residual.max_relative),
            opt(shooting),
            nodes.map(|k| k.to_string()).unwrap_or_default(),
        ]);
        rows.push(json!({
            "n": n,
            "energy": energy,
            "residual": residual.max_relative,
            "shooting": shooting,
            "nodes": nodes,
        }));
    }
    let p = BenderProblem::new(a.big_n, 0)?;
    Ok(Document {
        json: json!({
            "N": a.big_n,
            "mu": p.mu(),
            "lambda": p.lambda(),
            "laguerre_order": p.laguerre_order(),
            "levels": rows,
            "passed": passed,
        }),
        table,
        passed,
    })
}

fn oracle(a: &OracleArgs) -> Result<Document> {
    let family = PowerLawFamily::new(a.mu.value(), a.lambda, a.l, 0)?;
    let result = oracle::shoot_coupling(a.mu.value(), a.lambda, a.l, a.count)?;
    let mut passed = result.is_sturm_ordered();
    let mut rows = Vec::new();
    let mut table = Table::new(vec![
        "n",
        "coupling",
        "predicted",
        "relative_error",
        "nodes",
        "iterations",
        "converged",
    ]);
    for (k, (&value, diag)) in result.values.iter().zip(&result.diagnostics).enumerate() {
        let predicted = family.with_n(k as u32).terms().attractive_coefficient;
        let rel = (value - predicted).abs() / predicted;
        passed &= rel <= a.tol && diag.converged;
        let nodes = result.node_counts[k];
        table.push(vec![
            k.to_string(),
            num(value),
            num(predicted),
            num(rel),
            nodes.to_string(),
            diag.iterations.to_string(),
            diag.converged.to_string(),
        ]);
        rows.push(json!({
            "n": k,
            "coupling": value,
            "predicted": predicted,
            "relative_error": rel,
            "nodes": nodes,
            "diagnostics": diag,
        }));
    }
    Ok(Document {
        json: json!({
            "mu": family.mu(),
            "lambda": family.lambda(),
            "l": family.l(),
            "repulsive_coefficient": family.terms().repulsive_coefficient,
            "domain": result.domain,
            "levels": rows,
            "passed": passed,
        }),
        table,
        passed,
    })
}
