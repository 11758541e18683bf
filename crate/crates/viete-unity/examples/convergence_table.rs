//! The convergence table: c_k climbing to 1, the error term eps_k halving
//! per step, and the scaled error 2^{k+1} eps_k closing in on pi.
//!
//! Run with: cargo run --example convergence_table

use viete_unity::precision::PrecisionContext;
use viete_unity::report::{emit, table1, OutputFormat};
use viete_unity::EvalMode;

fn main() -> viete_unity::Result<()> {
    let ctx = PrecisionContext::new(256)?;
    let rows = table1(4, 15, 20, &ctx, EvalMode::Stable)?;
    print!("{}", emit(&rows, OutputFormat::Markdown, 20, &ctx)?);

    // The two digit strings in every row chop a pair summing to exactly 1.
    let sample = &rows[0];
    println!();
    println!(
        "row k={}: c + eps = {}... + {}... -> digit columns sum to all nines",
        sample.k, sample.c_str, sample.eps_str
    );
    Ok(())
}
