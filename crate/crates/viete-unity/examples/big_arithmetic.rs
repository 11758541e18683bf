//! Basics of the arbitrary-precision layer: contexts, square roots,
//! decimal rendering, exact comparison, and the two Machin-type pi routes.
//!
//! Run with: cargo run --example big_arithmetic

use viete_unity::precision::{pi_reference, pi_reference_euler, BigReal, PrecisionContext};
use viete_unity::RenderMode;

fn main() -> viete_unity::Result<()> {
    let ctx = PrecisionContext::new(256)?;

    let two = BigReal::two();
    let root2 = two.sqrt(&ctx)?;
    println!("sqrt(2)  = {}", root2.to_decimal(50, RenderMode::Truncate, &ctx)?);
    println!(
        "2-sqrt(2) = {}",
        two.sub(&root2, &ctx).to_decimal(50, RenderMode::Truncate, &ctx)?
    );

    // Exact comparison: squaring the rounded sqrt(2) does not land on 2.
    let squared = root2.mul(&root2, &ctx);
    println!(
        "sqrt(2)^2 vs 2: {:?}, off by {}",
        squared.cmp(&two),
        squared.sub(&two, &ctx).abs()
    );

    // Two independent arctangent decompositions of pi agree to the working
    // precision; either serves as the reference for every estimator.
    let classic = pi_reference(&ctx);
    let euler = pi_reference_euler(&ctx);
    println!("pi (atan 1/5, 1/239) = {}", classic.to_decimal(50, RenderMode::Truncate, &ctx)?);
    println!("pi (atan 1/2 + 1/3)  = {}", euler.to_decimal(50, RenderMode::Truncate, &ctx)?);
    println!("decomposition gap    = {}", classic.sub(&euler, &ctx).abs());

    Ok(())
}
