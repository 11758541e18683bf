//! c_k written out over square roots of twos alone, then parsed and
//! evaluated back to confirm the text means what the recurrence computes.
//!
//! Run with: cargo run --example expression_render

use viete_unity::precision::PrecisionContext;
use viete_unity::report::{eval_expression, render_ck_expression};
use viete_unity::sequence::c_recurrence;
use viete_unity::{EvalMode, RenderMode};

fn main() -> viete_unity::Result<()> {
    let ctx = PrecisionContext::new(256)?;
    for k in 1..=4 {
        let expr = render_ck_expression(k)?;
        let evaluated = eval_expression(&expr, &ctx)?;
        let direct = c_recurrence(k, &ctx, EvalMode::Stable)?;
        println!("c_{k} = {expr}");
        println!(
            "  evaluates to {} (recurrence gives {})",
            evaluated.to_decimal(20, RenderMode::Truncate, &ctx)?,
            direct.to_decimal(20, RenderMode::Truncate, &ctx)?
        );
        println!();
    }
    println!(
        "expression length doubles per step; k = 8 is the cap ({} bytes)",
        render_ck_expression(8)?.len()
    );
    Ok(())
}
