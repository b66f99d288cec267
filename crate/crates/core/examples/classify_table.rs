//! Boundedness and normalizability across the three regimes of mu.
//!
//! Rows marked "below condition" replace n by a real level under the
//! necessary condition for a well, which is where the exceptional
//! (unbounded but normalizable) states live.

use zeroenergy::powerlaw::{self, PowerLawFamily};

fn main() -> zeroenergy::Result<()> {
    println!(
        "{:>8} {:>2} {:>16} {:>6} {:>6} {:>8} {:>12} {:>15}",
        "mu", "l", "case", "V(0)", "V(inf)", "bounded", "normalizable", "condition"
    );
    for mu in [-1.5, -0.75, -0.25, 1.0 / 6.0, 1.5, 2.5] {
        for l in 0..3 {
            let family = PowerLawFamily::new(mu, 1.0, l, 0)?;
            let mut cases = vec![("n = 0", powerlaw::classify(&family))];
            if l > 0 {
                if let Some(rhs) = powerlaw::condition_rhs(&family) {
                    cases.push((
                        "below condition",
                        powerlaw::classify_level(&family, rhs - 0.25)?,
                    ));
                }
            }
            for (label, r) in cases {
                println!(
                    "{mu:>8.4} {l:>2} {label:>16} {:>6} {:>6} {:>8} {:>12} {:>15}",
                    r.limit_at_zero.to_string(),
                    r.limit_at_infinity.to_string(),
                    r.bounded,
                    r.normalizable,
                    format!("{:?}", r.condition),
                );
            }
        }
    }
    Ok(())
}
