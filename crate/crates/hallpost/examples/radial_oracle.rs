//! Solve the two-body radial reductions numerically and compare with the
//! closed forms: -u'' + (g/x^2) u + V(x) u = E u with an oscillator or
//! Coulomb tail. Finite differences, Sturm bisection for the lowest
//! eigenvalue, one grid-halving Richardson step.
//!
//! For the Coulomb kind both prefactor conventions are printed: the reduced
//! problem gives -lambda^2/(4 beta^2), while the N-body family formula
//! evaluated at N = 2 (with alpha^2 = lambda) gives -lambda/(8 beta^2).
//! The eigensolver decides: it reproduces the reduced value.
//!
//! ```bash
//! cargo run --release --example radial_oracle
//! ```

use hallpost::oracle::{solve_two_body_radial, RadialProblem};

fn main() -> hallpost::Result<()> {
    let cases = [
        (
            "oscillator omega=1 g=0",
            RadialProblem::oscillator(1.0, 0.0)?,
        ),
        (
            "oscillator omega=1 g=2",
            RadialProblem::oscillator(1.0, 2.0)?,
        ),
        (
            "oscillator omega=2 g=6",
            RadialProblem::oscillator(2.0, 6.0)?,
        ),
        ("coulomb    lambda=1 g=0", RadialProblem::coulomb(1.0, 0.0)?),
        ("coulomb    lambda=1 g=2", RadialProblem::coulomb(1.0, 2.0)?),
    ];
    for (name, prob) in cases {
        let e0 = solve_two_body_radial(&prob)?;
        let reference = prob.reference_energy()?;
        print!(
            "{name}: E0 = {e0:+.10}  closed form = {reference:+.10}  rel = {:.2e}",
            (e0 - reference).abs() / reference.abs()
        );
        match prob.hyper_family_n2() {
            Some(family) => println!("  [family formula at N=2: {:+.10}]", family?),
            None => println!(),
        }
    }
    Ok(())
}
