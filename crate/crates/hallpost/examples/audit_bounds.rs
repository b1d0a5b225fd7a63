//! Audit the Hall-Post inequalities for all three families over the default
//! parameter grids and print one summary line per model. The expected
//! outcome is zero violations everywhere; for the D-dimensional family the
//! audit also tracks the three-body rescaling margin that justifies the
//! chained bound.
//!
//! ```bash
//! cargo run --example audit_bounds
//! ```

use hallpost::bounds::{audit_grid, default_g_grid, Model};

fn main() -> hallpost::Result<()> {
    let grid = default_g_grid();

    for (model, n_range, d_range) in [
        (Model::Calogero1D, 3..=10, None),
        (Model::HyperCoulomb, 4..=10, None),
        (Model::CalogeroD, 4..=10, Some(2..=6)),
    ] {
        let outcome = audit_grid(model, n_range, d_range, &grid)?;
        let s = outcome.summary;
        println!(
            "{model:<13} points={:<4} violations={} errors={} worst_margin={:.6e}",
            s.points, s.violations, s.errors, s.worst_margin
        );
        if model == Model::CalogeroD {
            let min_rescale = outcome
                .rows
                .iter()
                .filter_map(|r| r.three_body_margin)
                .fold(f64::INFINITY, f64::min);
            println!(
                "{:<13} min three-body rescaling margin = {min_rescale:.6e}",
                ""
            );
        }
    }
    Ok(())
}
