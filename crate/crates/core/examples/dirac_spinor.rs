//! Rest-mass Dirac solutions with a power-law odd potential.

use zeroenergy::dirac::{self, DiracFamily};

fn main() -> zeroenergy::Result<()> {
    for (beta, l) in [(0.5, 0), (0.5, 1), (3.0, 1), (-0.5, 1), (-0.5, 0)] {
        let family = DiracFamily::with_default_alpha(beta, 1.0, l)?;
        let c = family.correspondence();
        let spinor = dirac::upper_spinor(&family);
        let grid = family.standard_grid();
        let norm = if family.is_normalizable() {
            format!("{:.12}", dirac::quadrature_norm(&spinor, 1e-12)?.value)
        } else {
            "divergent".to_string()
        };
        println!(
            "beta = {beta:>4}, l = {l}: nu = {:.3}, kappa = {:>2}, C = {}, norm {}, residual {:.1e}, theta {:.1e}",
            c.nu,
            c.kappa,
            spinor.normalization.map_or("-".into(), |v| format!("{v:.6}")),
            norm,
            dirac::residual_33(&family, &grid).max_relative,
            dirac::lower_component_check(&family, 1.0, &grid)?,
        );
        if let Some(w) = spinor.warning {
            println!("    warning: {w}");
        }
    }
    Ok(())
}
