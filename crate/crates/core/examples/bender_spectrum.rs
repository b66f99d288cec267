//! The half-line problem -psi'' + x^{2N+2} psi = E x^N psi.

use zeroenergy::bender::{self, BenderProblem};

fn main() -> zeroenergy::Result<()> {
    for big_n in [-3, -1, 0, 1, 3] {
        let energies: Vec<f64> = (0..4)
            .map(|n| bender::spectrum(big_n, n))
            .collect::<Result<_, _>>()?;
        let worst = (0..4)
            .map(|n| {
                let p = BenderProblem::new(big_n, n)?;
                Ok(bender::residual(&p, &p.standard_grid())?.max_relative)
            })
            .collect::<zeroenergy::Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        println!("N = {big_n:>2}: E = {energies:?}, worst residual {worst:.1e}");
    }

    // the Laguerre order must be 1/|N+2|; |N+2| fails once n > 0
    let p = BenderProblem::new(0, 1)?;
    let wrong = bender::residual_with_order(&p, p.width(), &p.standard_grid())?;
    println!(
        "N = 0, n = 1 with order |N+2|: residual {:.2e}",
        wrong.max_relative
    );
    Ok(())
}
