//! Where the Hall-Post bounds saturate: analytic ratio limits at g -> 0 and
//! g -> infinity, their numeric attainment, the large-D saturation of the
//! D-dimensional family, and the large-N flattening of the one-dimensional
//! ratio towards 1 at fixed coupling.
//!
//! ```bash
//! cargo run --example saturation_limits
//! ```

use hallpost::bounds::{hp_report_calogero_1d, hp_report_calogero_d, ratio_limits, Model};

fn main() -> hallpost::Result<()> {
    println!("analytic limits at N = 5 (D = 3 where it applies):");
    for (model, d) in [
        (Model::Calogero1D, None),
        (Model::HyperCoulomb, None),
        (Model::CalogeroD, Some(3)),
    ] {
        let l = ratio_limits(model, 5, d)?;
        println!(
            "  {model:<13} R(g->0) = {:.9}   R(g->inf) = {:.9}",
            l.at_zero, l.at_infinity
        );
    }

    println!("\nnumeric approach to the strong-coupling limit (1D, N = 5):");
    for g in [1.0, 100.0, 1e4, 1e8] {
        let r = hp_report_calogero_1d(5, 1.0, g)?;
        println!("  g = {g:<9e} R = {:.9}", r.ratio);
    }

    println!("\nlarge-D saturation (N = 5, g = 1):");
    for d in [3u32, 10, 100, 10_000] {
        let r = hp_report_calogero_d(5, d, 1.0, 1.0)?;
        println!("  D = {d:<6} R = {:.12}", r.ratio);
    }

    println!("\nlarge-N flattening (1D, g = 1): the ratio goes to 1");
    for n in [10u32, 100, 1000] {
        let r = hp_report_calogero_1d(n, 1.0, 1.0)?;
        println!("  N = {n:<5} R - 1 = {:.6e}", r.ratio - 1.0);
    }
    Ok(())
}
