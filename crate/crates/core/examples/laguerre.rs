//! Generalized Laguerre polynomials and the log-Gamma function.

use zeroenergy::specfn::{log_gamma, Laguerre};

fn main() -> zeroenergy::Result<()> {
    let order = 2.5;
    println!("L_n^{order}(x) for n = 0..4");
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "x", "n=0", "n=1", "n=2", "n=3", "n=4"
    );
    for x in [0.0, 0.5, 1.0, 2.0, 5.0] {
        let row: Vec<String> = (0..5)
            .map(|n| Laguerre::new(n, order).map(|p| format!("{:>12.6}", p.eval(x))))
            .collect::<Result<_, _>>()?;
        println!("{x:>6} {}", row.join(" "));
    }

    let p = Laguerre::new(3, 1.0)?;
    let [v, d1, d2] = p.jet(1.5);
    println!("\nL_3^1(1.5) = {v:.6}, first derivative {d1:.6}, second {d2:.6}");
    // x L'' + (a + 1 − x) L' + n L = 0
    println!(
        "Laguerre equation residual: {:.2e}",
        1.5 * d2 + (2.0 - 1.5) * d1 + 3.0 * v
    );

    println!(
        "\nln Γ(1/2) = {:.15} (ln √π = {:.15})",
        log_gamma(0.5)?,
        0.5 * std::f64::consts::PI.ln()
    );
    Ok(())
}
