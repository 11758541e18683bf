//! Quantifying catastrophic cancellation: the literal 2 - a_k subtraction
//! sheds about two bits of relative precision per step, while the residual
//! recurrence r_k = r_{k-1}/(2 + a_k) stays at the rounding floor.
//!
//! Run with: cargo run --example precision_study

use viete_unity::precision::PrecisionContext;
use viete_unity::report::{emit, precision_study, OutputFormat};

fn main() -> viete_unity::Result<()> {
    let rows = precision_study(40, &[64, 128])?;
    let ctx = PrecisionContext::new(64)?;
    let text = emit(&rows, OutputFormat::Csv, 20, &ctx)?;
    // Print a readable subset; the full CSV is one line per (k, bits) pair.
    for (index, line) in text.lines().enumerate() {
        if index == 0 || index % 5 == 1 {
            println!("{line}");
        }
    }
    Ok(())
}
