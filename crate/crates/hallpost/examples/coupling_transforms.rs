//! The generic Hall-Post rescalings on the abstract coupling tuple
//! (mass, one-body, two-body, three-body), plus the identity probes behind
//! the Coulomb-family bound: the Jensen margin of f(x) = -1/sqrt(x) and the
//! subset decomposition of the pair-square sum.
//!
//! ```bash
//! cargo run --example coupling_transforms
//! ```

use hallpost::bounds::{transform_general, transform_ti, CouplingTuple};
use hallpost::models::Configuration;
use hallpost::oracle::{convexity_probe, subset_identity_check};

fn main() -> hallpost::Result<()> {
    let t = CouplingTuple::new(1.0, 0.5, 2.0, 1.0)?;
    let (pre, t2) = transform_general(5, &t)?;
    println!(
        "generic bound at N=5: E_5 >= {pre} * E_4(m={}, g1={}, g2={}, g3={})",
        t2.mass, t2.one_body, t2.two_body, t2.three_body
    );

    let t = CouplingTuple::new(1.0, 0.0, 2.0, 1.0)?;
    let (pre, t2) = transform_ti(5, &t)?;
    println!(
        "improved (translation-invariant) bound: E_5 >= {pre:.6} * E_4(g2={}, g3={})",
        t2.two_body, t2.three_body
    );

    println!("\nJensen margin of f(x) = -1/sqrt(x), f(mean) - mean(f) >= 0:");
    for (points, weights) in [
        (vec![1.0, 4.0], vec![1.0, 1.0]),
        (vec![0.5, 2.0, 8.0], vec![1.0, 2.0, 3.0]),
        (vec![3.0, 3.0], vec![0.2, 0.8]),
    ] {
        println!(
            "  points {points:?} weights {weights:?} -> margin = {:+.6e}",
            convexity_probe(&points, &weights)?
        );
    }

    println!("\nsubset decomposition residual |sum_k S_k - (N-2) S| (machine zero):");
    for coords in [
        vec![0.0, 1.0, 2.0],
        vec![-1.0, 0.0, 1.0, 3.0],
        vec![-2.0, -0.3, 0.1, 1.4, 5.0],
    ] {
        let c = Configuration::new(coords.clone())?;
        println!("  x = {coords:?} -> {:.3e}", subset_identity_check(&c)?);
    }
    Ok(())
}
