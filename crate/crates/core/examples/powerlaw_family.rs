//! The two-term power-law potential and its exact zero-energy state.

use zeroenergy::powerlaw::{self, PowerLawFamily};
use zeroenergy::radial::{log_grid, RadialFunction};

fn main() -> zeroenergy::Result<()> {
    let family = PowerLawFamily::new(1.5, 1.0, 1, 2)?;
    let mapped = powerlaw::map_parameters(&family);
    let t = mapped.terms;
    println!(
        "mu = 3/2, lambda = 1, l = 1, n = 2\nV(r) = {:.6} r^{} - {:.6} r^{}",
        t.repulsive_coefficient,
        t.repulsive_exponent,
        t.attractive_coefficient,
        t.attractive_exponent
    );
    println!(
        "oscillator energy {:.4}, gamma {:.4}",
        mapped.energy, mapped.gamma
    );

    let norm = powerlaw::norm(&family)?;
    println!("norm of the unit-constant state: {:?}", norm.value);

    let psi = powerlaw::wavefunction(&family)?;
    println!("\n{:>12} {:>14} {:>14}", "r", "V(r)", "psi(r)");
    for r in log_grid(0.1, 400.0, 12) {
        println!(
            "{r:>12.4} {:>14.6e} {:>14.6e}",
            t.potential(r),
            psi.value(r)
        );
    }

    let rep = powerlaw::schrodinger_residual(&family, &powerlaw::standard_grid(&family))?;
    println!("\nzero-energy residual {:.2e}", rep.max_relative);
    let pct = powerlaw::pct_identity_check(&family, &powerlaw::pct_grid(&family));
    println!("transformation identity mismatch {:.2e}", pct.max_relative);

    let special = powerlaw::special::check(1.0, 1, 2)?;
    println!(
        "Coulomb-like form: potential {:.1e}, wavefunction ratio variation {:.1e}",
        special.potential_max_relative, special.ratio_variation
    );
    Ok(())
}
