//! Saturation ratio R_5 of the one-dimensional model as a function of the
//! coupling g, as CSV on stdout: the curve starts at 6/5 for the pure
//! oscillator and decreases monotonically towards its strong-coupling limit
//! sqrt(5/4) (the constant last column).
//!
//! ```bash
//! cargo run --example fig1_calogero_ratio > fig1.csv
//! ```

use hallpost::cli::{figure_spec, ratio_curve, FigureKind};

fn main() -> hallpost::Result<()> {
    let spec = figure_spec(FigureKind::Fig1);
    println!("g,ratio,limit_at_infinity");
    for row in ratio_curve(&spec, 1.0, 1.0)? {
        println!("{},{},{}", row.g, row.ratio, row.limit_at_infinity);
    }
    Ok(())
}
