//! Evaluate the exact ground-state energies of the three solvable families
//! at a few parameter points, together with the derived exponents.
//!
//! ```bash
//! cargo run --example exact_energies
//! ```

use hallpost::models::{
    energy_calogero_1d, energy_calogero_d, energy_hyper_coulomb, Calogero1DParams, CalogeroDParams,
    HyperCoulombParams,
};

fn main() -> hallpost::Result<()> {
    println!("one-dimensional oscillator model, E = sqrt(N/8)[N^2-1+(beta-1)N(N-1)] omega");
    for (n, omega, g) in [(2, 1.0, 0.0), (3, 1.0, 2.0), (5, 1.0, 0.0), (5, 2.0, 6.0)] {
        let p = Calogero1DParams::new(n, omega, g)?;
        println!(
            "  N={n} omega={omega} g={g:<4} beta={:.6}  E = {:.12}",
            p.beta(),
            energy_calogero_1d(&p)
        );
    }

    println!("\nhypercentral Coulomb model, E = -alpha^2/(N[N-2+N(N-1)beta]^2)");
    for (n, g, alpha) in [(3, 0.0, 1.0), (5, 0.0, 1.0), (5, 2.0, 1.0), (8, 0.5, 2.0)] {
        let p = HyperCoulombParams::new(n, g, alpha)?;
        println!(
            "  N={n} alpha={alpha} g={g:<4} beta={:.6}  E = {:.6e}",
            p.beta(),
            energy_hyper_coulomb(&p)
        );
    }

    println!("\nD-dimensional model, E = sqrt(N/8)[D(N-1)+N(N-1)beta] omega");
    for (n, d, omega, g) in [
        (3, 2, 1.0, 0.0),
        (2, 3, 1.0, 2.0),
        (5, 3, 2.0, 0.0),
        (6, 4, 1.0, 3.0),
    ] {
        let p = CalogeroDParams::new(n, d, omega, g)?;
        println!(
            "  N={n} D={d} omega={omega} g={g:<4} beta={:.6} G={:.6}  E = {:.12}",
            p.beta(),
            p.three_body(),
            energy_calogero_d(&p)
        );
    }
    Ok(())
}
