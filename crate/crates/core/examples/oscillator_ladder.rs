//! Oscillator states of the D⁺(γ) representation: the wave equation, and
//! the ladder action of the differential realization of the generators.

use zeroenergy::oscillator::{self, ladder_check, OscillatorState};

fn main() -> zeroenergy::Result<()> {
    for (gamma, n) in [(0.0, 0), (0.5, 2), (1.5, 4)] {
        let state = OscillatorState::new(gamma, n, 1.0)?;
        let rep = oscillator::residual_a5(&state, &state.standard_grid());
        println!(
            "gamma = {gamma}, n = {n}: wave equation residual {:.2e} over {} points",
            rep.max_relative, rep.points_used
        );
    }

    println!("\nladder action (lambda^2 = 1/4 frame)");
    let grid = oscillator::ladder_grid();
    for gamma in [-0.5, 0.0, 1.5] {
        for n in 0..3 {
            let r = ladder_check(gamma, n, &grid)?;
            println!(
                "gamma = {gamma:>4}, n = {n}: sigma = {:+}, raising operator L{}, |L Phi_n| / expected = {:.12}, annihilation {:.1e}",
                r.sigma,
                if r.raising_operator > 0 { "+" } else { "-" },
                r.raising_norm_ratio,
                r.lowering_annihilation,
            );
        }
    }
    Ok(())
}
