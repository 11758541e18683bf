//! Evolution of the three sequences: a_k toward 2, b_k toward 0, c_k
//! toward 1. Pipe the CSV into any plotter.
//!
//! Run with: cargo run --example series_evolution

use viete_unity::precision::PrecisionContext;
use viete_unity::report::{emit, figure1_series, OutputFormat};
use viete_unity::EvalMode;

fn main() -> viete_unity::Result<()> {
    let ctx = PrecisionContext::new(256)?;
    let points = figure1_series(30, &ctx, EvalMode::Stable);
    print!("{}", emit(&points, OutputFormat::Csv, 12, &ctx)?);
    Ok(())
}
