//! Saturation ratio R_5 of the hypercentral Coulomb model as a function of
//! the coupling g, as CSV on stdout. The binding energies are negative, so
//! here the bound is satisfied while the ratio stays below 1; the curve
//! rises from about 0.5789 towards its strong-coupling limit (N-2)/(N-1).
//!
//! ```bash
//! cargo run --example fig2_hypercoulomb_ratio > fig2.csv
//! ```

use hallpost::cli::{figure_spec, ratio_curve, FigureKind};

fn main() -> hallpost::Result<()> {
    let spec = figure_spec(FigureKind::Fig2);
    println!("g,ratio,limit_at_infinity");
    for row in ratio_curve(&spec, 1.0, 1.0)? {
        println!("{},{},{}", row.g, row.ratio, row.limit_at_infinity);
    }
    Ok(())
}
