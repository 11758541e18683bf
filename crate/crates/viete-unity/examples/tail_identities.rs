//! Tail behavior of the arctangent decomposition: the ratio b_{k+1}/b_k
//! climbing to 1/2 from below, the telescoped split residual (pi/4) 2^-L,
//! and the strict geometric majorant over the b tail.
//!
//! Run with: cargo run --example tail_identities

use viete_unity::estimators::{ratio_b, tail_bound_check, tail_split_check};
use viete_unity::precision::{pi_reference, PrecisionContext};
use viete_unity::RenderMode;

fn main() -> viete_unity::Result<()> {
    let ctx = PrecisionContext::new(256)?;

    println!("k, b_(k+1)/b_k (truncated to 20 digits)");
    for k in [1, 2, 5, 10, 20] {
        let ratio = ratio_b(k, &ctx);
        println!("{k}, {}", ratio.to_decimal(20, RenderMode::Truncate, &ctx)?);
    }

    println!();
    println!("split residual pi/4 - atan(c_k) - sum atan(b_l), l = k+1..L:");
    for (k, upper) in [(3u32, 10u32), (1, 2), (5, 20)] {
        let residual = tail_split_check(k, upper, &ctx);
        let closed = pi_reference(&ctx).mul_pow2(-2 - i64::from(upper));
        println!(
            "k={k:2} L={upper:2}: residual {} vs (pi/4)/2^L {}",
            residual.to_decimal(25, RenderMode::Truncate, &ctx)?,
            closed.to_decimal(25, RenderMode::Truncate, &ctx)?
        );
    }

    println!();
    println!("geometric majorant of the b tail:");
    for (k, upper) in [(2u32, 10u32), (5, 5), (0, 1)] {
        let bound = tail_bound_check(k, upper, &ctx);
        println!(
            "k={k} L={upper}: sum b = {}, sum geo = {}, strict: {}",
            bound.sum_b.to_decimal(12, RenderMode::Truncate, &ctx)?,
            bound.sum_geo.to_decimal(12, RenderMode::Truncate, &ctx)?,
            bound.holds
        );
    }
    Ok(())
}
