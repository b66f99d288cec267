//! States sharing one potential: all (l, n) on the same level Omega.

use zeroenergy::param::Real;
use zeroenergy::powerlaw::{self, PowerLawFamily};

fn main() -> zeroenergy::Result<()> {
    let mu: Real = "3/2".parse()?;
    for omega in [11, 13, 10, 21] {
        let pairs = powerlaw::degenerate_pairs(mu, Real::ratio(omega, 1), None)?;
        println!("mu = {mu}, Omega = {omega}: {pairs:?}");
    }

    // every pair on a level sees the same potential
    let pairs = powerlaw::degenerate_pairs(mu, Real::ratio(11, 1), None)?;
    for (l, n) in pairs {
        let t = PowerLawFamily::new(mu.value(), 1.0, l, n)?.terms();
        println!("  (l, n) = ({l}, {n}): D = {}", t.attractive_coefficient);
    }

    let irrational = Real::Approx(std::f64::consts::SQRT_2);
    let omega = powerlaw::omega_exact(irrational, 2, 1);
    println!(
        "mu = sqrt 2, Omega = {:.6}: {:?}",
        omega.value(),
        powerlaw::degenerate_pairs(irrational, omega, None)?
    );
    Ok(())
}
