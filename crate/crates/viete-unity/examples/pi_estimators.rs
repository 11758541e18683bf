//! The three pi estimators side by side: the infinite product over nested
//! radicals, the arctangent sum, and the scaled unity error term 2^{k+1}
//! (1 - c_k^m)/m, whose error contracts like m pi^2 / 2^{k+2}.
//!
//! Run with: cargo run --example pi_estimators

use viete_unity::estimators::{arctan_sum_quarter_pi, pi_from_unity, viete_product_pi};
use viete_unity::precision::PrecisionContext;
use viete_unity::report::{emit, OutputFormat};

fn main() -> viete_unity::Result<()> {
    let ctx = PrecisionContext::new(256)?;

    let mut estimates = Vec::new();
    for depth in [1, 2, 5, 10, 20] {
        estimates.push(viete_product_pi(depth, &ctx));
    }
    for depth in [1, 2, 10, 30] {
        estimates.push(arctan_sum_quarter_pi(depth, &ctx));
    }
    for (k, m) in [(4, 1), (15, 1), (15, 2), (30, 3), (40, 5)] {
        estimates.push(pi_from_unity(k, m, &ctx));
    }
    print!("{}", emit(&estimates, OutputFormat::Markdown, 20, &ctx)?);
    println!();
    println!("(the arctan-sum targets pi/4; the others target pi)");
    Ok(())
}
