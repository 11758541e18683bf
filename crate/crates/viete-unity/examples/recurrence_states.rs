//! Walking the recurrence state by state: every field of the first few
//! steps, in both evaluation modes, plus the closed-form cross-check.
//!
//! Run with: cargo run --example recurrence_states

use viete_unity::precision::PrecisionContext;
use viete_unity::sequence::{c_closed_form, SequenceState};
use viete_unity::{EvalMode, RenderMode};

fn main() -> viete_unity::Result<()> {
    let ctx = PrecisionContext::new(256)?;
    let digits = 20;
    let show = |x: &viete_unity::BigReal| -> viete_unity::Result<String> {
        x.to_decimal(digits, RenderMode::Truncate, &ctx)
    };

    let mut state = SequenceState::initial(&ctx);
    loop {
        println!("k = {}", state.k);
        println!("  a   = {}", show(&state.a)?);
        println!("  r   = {}", show(&state.r)?);
        println!("  b   = {}", show(&state.b)?);
        println!("  c   = {}", show(&state.c)?);
        println!("  eps = {}", show(&state.eps)?);
        println!("  closed form (1-b)/(1+b) = {}", show(&c_closed_form(state.k, &ctx))?);
        if state.k == 5 {
            break;
        }
        state = state.advance(&ctx, EvalMode::Stable)?;
    }

    // Both modes agree bit-for-bit at step one and to twenty digits later.
    let naive = SequenceState::initial(&ctx).advance(&ctx, EvalMode::Naive)?;
    let stable = SequenceState::initial(&ctx).advance(&ctx, EvalMode::Stable)?;
    println!();
    println!("k = 2 residual, naive  mode: {}", show(&naive.r)?);
    println!("k = 2 residual, stable mode: {}", show(&stable.r)?);
    Ok(())
}
