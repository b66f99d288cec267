//! Independent check: recover couplings and energies by shooting.

use zeroenergy::oracle::{shoot_coupling, shoot_energy_bender};
use zeroenergy::powerlaw::PowerLawFamily;

fn main() -> zeroenergy::Result<()> {
    let (mu, lambda, l) = (1.5, 1.0, 1);
    let result = shoot_coupling(mu, lambda, l, 3)?;
    let family = PowerLawFamily::new(mu, lambda, l, 0)?;
    println!("attractive couplings, mu = 3/2, l = 1");
    for (n, (v, d)) in result.values.iter().zip(&result.diagnostics).enumerate() {
        let exact = family.with_n(n as u32).terms().attractive_coefficient;
        println!(
            "  n = {n}: shot {v:.12}, closed form {exact:.12}, nodes {}, {} bisections",
            result.node_counts[n], d.iterations
        );
    }
    println!("  domain {:?}", result.domain);

    for big_n in [-1, 0, 1] {
        let s = shoot_energy_bender(big_n, 3)?;
        println!("half-line energies N = {big_n}: {:?}", s.values);
    }
    Ok(())
}
