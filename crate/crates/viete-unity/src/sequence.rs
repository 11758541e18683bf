//! The nested-radical recurrence set as an advanceable state machine.
//!
//! One step carries the radical `a_k = sqrt(2 + a_{k-1})`, the residual
//! `r_k = 2 - a_k`, the arctangent argument `b_k = sqrt(2 - a_k) / a_{k+1}`,
//! the composed argument `c_k = (c_{k-1} + b_k) / (1 - c_{k-1} b_k)` and the
//! error term `eps_k = 1 - c_k`.
//!
//! Two evaluation modes are kept side by side. The literal formulas compute
//! `2 - a_k` by direct subtraction, which cancels catastrophically as
//! `a_k -> 2` (about 2k bits of relative precision lost by step k). The
//! stable mode propagates the residual through `r_k = r_{k-1} / (2 + a_k)`,
//! which follows from `4 - a_k^2 = 2 - a_{k-1}` and never subtracts nearly
//! equal values. `eps` is likewise carried in the cancellation-free form
//! `2 b_k / (1 + b_k)`.

use crate::error::{Error, Result};
use crate::precision::{BigReal, PrecisionContext};

/// How the residual `2 - a_k` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalMode {
    /// Direct subtraction `2 - a_k`, exactly as the formulas are written.
    Naive,
    /// Residual recurrence `r_k = r_{k-1} / (2 + a_k)`.
    Stable,
}

/// One step of the recurrence set.
#[derive(Clone, Debug)]
pub struct SequenceState {
    /// Step index, starting at 1.
    pub k: u32,
    /// Nested radical `a_k`, in `[sqrt(2), 2)`.
    pub a: BigReal,
    /// Residual `r_k = 2 - a_k`, positive.
    pub r: BigReal,
    /// Arctangent argument `b_k`, in `(0, sqrt(2) - 1]`.
    pub b: BigReal,
    /// Composed argument `c_k`, in `[sqrt(2) - 1, 1)`.
    pub c: BigReal,
    /// Error term `eps_k = 1 - c_k`, in `(0, 2 - sqrt(2)]`.
    pub eps: BigReal,
}

fn eps_from_b(b: &BigReal, ctx: &PrecisionContext) -> BigReal {
    b.mul_pow2(1)
        .div(&BigReal::one().add(b, ctx), ctx)
        .expect("1 + b is positive")
}

impl SequenceState {
    /// The k = 1 state: `a = sqrt(2)`, `c = b = sqrt(2 - a_1) / a_2`.
    ///
    /// `2 - sqrt(2)` is well scaled, so the first residual is the same in
    /// both modes.
    pub fn initial(ctx: &PrecisionContext) -> Self {
        let two = BigReal::two();
        let a = two.sqrt(ctx).expect("2 is nonnegative");
        let r = two.sub(&a, ctx);
        let a_next = two.add(&a, ctx).sqrt(ctx).expect("2 + a is positive");
        let b = r
            .sqrt(ctx)
            .expect("residual is positive")
            .div(&a_next, ctx)
            .expect("a_2 is positive");
        let eps = eps_from_b(&b, ctx);
        Self {
            k: 1,
            a,
            c: b.clone(),
            b,
            r,
            eps,
        }
    }

    /// The k + 1 state.
    ///
    /// Signals [`Error::CompositionPole`] if `1 - c b` vanishes at working
    /// precision; mathematically it cannot (`c < 1`, `b < 1/2`), but the
    /// guard keeps a rounding anomaly from slipping through as nonsense.
    pub fn advance(&self, ctx: &PrecisionContext, mode: EvalMode) -> Result<Self> {
        let two = BigReal::two();
        let a_next = two.add(&self.a, ctx).sqrt(ctx)?;
        let r_next = match mode {
            EvalMode::Stable => self.r.div(&two.add(&a_next, ctx), ctx)?,
            EvalMode::Naive => two.sub(&a_next, ctx),
        };
        let a_after = two.add(&a_next, ctx).sqrt(ctx)?;
        let b_next = r_next.sqrt(ctx)?.div(&a_after, ctx)?;
        let denominator = BigReal::one().sub(&self.c.mul(&b_next, ctx), ctx);
        if denominator.sign() <= 0 {
            return Err(Error::CompositionPole);
        }
        let c_next = self.c.add(&b_next, ctx).div(&denominator, ctx)?;
        let eps_next = eps_from_b(&b_next, ctx);
        Ok(Self {
            k: self.k + 1,
            a: a_next,
            r: r_next,
            b: b_next,
            c: c_next,
            eps: eps_next,
        })
    }
}

/// The k-level nested radical `sqrt(2 + sqrt(2 + ... + sqrt(2)))`.
pub fn nested_radical_a(k: u32, ctx: &PrecisionContext) -> BigReal {
    assert!(k >= 1, "k must be positive");
    let two = BigReal::two();
    let mut a = two.sqrt(ctx).expect("2 is nonnegative");
    for _ in 1..k {
        a = two.add(&a, ctx).sqrt(ctx).expect("2 + a is positive");
    }
    a
}

fn state_at(k: u32, ctx: &PrecisionContext, mode: EvalMode) -> Result<SequenceState> {
    assert!(k >= 1, "k must be positive");
    let mut state = SequenceState::initial(ctx);
    for _ in 1..k {
        state = state.advance(ctx, mode)?;
    }
    Ok(state)
}

/// `b_k`, using the residual recurrence in stable mode.
pub fn b_of_k(k: u32, ctx: &PrecisionContext, mode: EvalMode) -> BigReal {
    state_at(k, ctx, mode)
        .expect("composition pole is unreachable from the initial state")
        .b
}

/// `c_k` obtained by iterating the composition from the initial state.
pub fn c_recurrence(k: u32, ctx: &PrecisionContext, mode: EvalMode) -> Result<BigReal> {
    Ok(state_at(k, ctx, mode)?.c)
}

/// Closed form `c_k = (1 - b_k) / (1 + b_k)`, the independent oracle for
/// [`c_recurrence`]. Uses stable-mode `b_k`; no subtraction of nearly equal
/// values occurs since `b_k <= sqrt(2) - 1`.
pub fn c_closed_form(k: u32, ctx: &PrecisionContext) -> BigReal {
    let b = b_of_k(k, ctx, EvalMode::Stable);
    let one = BigReal::one();
    one.sub(&b, ctx)
        .div(&one.add(&b, ctx), ctx)
        .expect("1 + b is positive")
}

/// Error term `eps_k` in the cancellation-free form `2 b_k / (1 + b_k)`,
/// algebraically equal to `1 - c_k` but with full relative precision even
/// when `c_k` is close to 1.
pub fn epsilon(k: u32, ctx: &PrecisionContext) -> BigReal {
    let b = b_of_k(k, ctx, EvalMode::Stable);
    eps_from_b(&b, ctx)
}

/// Arctangent-addition composition `(x + y) / (1 - x y)`.
///
/// Signals a pole when `1 - x y` is zero (or indistinguishable from zero)
/// at working precision.
pub fn arctan_compose(x: &BigReal, y: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    let denominator = BigReal::one().sub(&x.mul(y, ctx), ctx);
    if denominator.is_zero() {
        return Err(Error::CompositionPole);
    }
    x.add(y, ctx).div(&denominator, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::RenderMode;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(256).unwrap()
    }

    fn twenty(x: &BigReal, c: &PrecisionContext) -> String {
        x.to_decimal(20, RenderMode::Truncate, c).unwrap()
    }

    #[test]
    fn initial_state_fields() {
        let c = PrecisionContext::new(128).unwrap();
        let state = SequenceState::initial(&c);
        assert_eq!(state.k, 1);
        assert_eq!(twenty(&state.c, &c), "0.41421356237309504880");
        assert_eq!(twenty(&state.a, &c), "1.41421356237309504880");
        assert_eq!(twenty(&state.eps, &c), "0.58578643762690495119");
        assert_eq!(state.b, state.c);
    }

    #[test]
    fn advance_reproduces_worked_values() {
        let c = ctx();
        let s1 = SequenceState::initial(&c);
        let s2 = s1.advance(&c, EvalMode::Stable).unwrap();
        assert_eq!(twenty(&s2.c, &c), "0.66817863791929891999");
        let s3 = s2.advance(&c, EvalMode::Stable).unwrap();
        assert_eq!(twenty(&s3.c, &c), "0.82067879082866033097");
        let s4 = s3.advance(&c, EvalMode::Stable).unwrap();
        assert_eq!(twenty(&s4.c, &c), "0.90634716901914715794");
        assert_eq!(twenty(&s4.eps, &c), "0.09365283098085284205");
        assert_eq!(s4.k, 4);
    }

    #[test]
    fn naive_and_stable_agree_at_high_precision() {
        let c = ctx();
        let naive = c_recurrence(12, &c, EvalMode::Naive).unwrap();
        let stable = c_recurrence(12, &c, EvalMode::Stable).unwrap();
        assert_eq!(twenty(&naive, &c), twenty(&stable, &c));
    }

    #[test]
    fn nested_radical_values() {
        let c = ctx();
        assert_eq!(twenty(&nested_radical_a(1, &c), &c), "1.41421356237309504880");
        assert_eq!(twenty(&nested_radical_a(2, &c), &c), "1.84775906502257351225");
        // 2 - a_50 is about pi^2 / 4^51, below 2^-96.
        let a50 = nested_radical_a(50, &c);
        assert!(a50 < BigReal::two());
        assert!(a50 > BigReal::two().sub(&BigReal::power_of_two(-96), &c));
    }

    #[test]
    fn b_values() {
        let c = ctx();
        assert_eq!(
            twenty(&b_of_k(1, &c, EvalMode::Stable), &c),
            "0.41421356237309504880"
        );
        assert_eq!(
            twenty(&b_of_k(2, &c, EvalMode::Stable), &c),
            "0.19891236737965800691"
        );
    }

    #[test]
    fn c_recurrence_matches_printed_rows() {
        let c = ctx();
        assert_eq!(
            twenty(&c_recurrence(15, &c, EvalMode::Stable).unwrap(), &c),
            "0.99995206424931502866"
        );
        assert_eq!(
            twenty(&c_recurrence(10, &c, EvalMode::Stable).unwrap(), &c),
            "0.99846719455859369106"
        );
        let first = c_recurrence(1, &c, EvalMode::Stable).unwrap();
        assert_eq!(first, b_of_k(1, &c, EvalMode::Stable));
    }

    #[test]
    fn closed_form_matches_recurrence() {
        let c = ctx();
        assert_eq!(
            twenty(&c_closed_form(1, &c), &c),
            twenty(&c_recurrence(1, &c, EvalMode::Stable).unwrap(), &c)
        );
        assert_eq!(twenty(&c_closed_form(2, &c), &c), "0.66817863791929891999");
        assert_eq!(twenty(&c_closed_form(12, &c), &c), "0.99961657831851611515");
    }

    #[test]
    fn epsilon_values() {
        let c = ctx();
        assert_eq!(twenty(&epsilon(4, &c), &c), "0.09365283098085284205");
        assert_eq!(twenty(&epsilon(14, &c), &c), "0.00009586920364389480");
        assert_eq!(twenty(&epsilon(1, &c), &c), "0.58578643762690495119");
    }

    #[test]
    fn compose_basics() {
        let c = ctx();
        let zero = BigReal::zero();
        assert_eq!(arctan_compose(&zero, &zero, &c).unwrap(), zero);
        let one = BigReal::one();
        assert_eq!(arctan_compose(&one, &one, &c), Err(Error::CompositionPole));
    }

    #[test]
    fn compose_builds_c2() {
        let c = ctx();
        let c1 = c_recurrence(1, &c, EvalMode::Stable).unwrap();
        let b2 = b_of_k(2, &c, EvalMode::Stable);
        let composed = arctan_compose(&c1, &b2, &c).unwrap();
        assert_eq!(twenty(&composed, &c), "0.66817863791929891999");
    }

    #[test]
    fn residual_recurrence_holds() {
        let c = ctx();
        let mut state = SequenceState::initial(&c);
        let tolerance = BigReal::power_of_two(-240);
        for _ in 1..20 {
            let next = state.advance(&c, EvalMode::Stable).unwrap();
            let reconstructed = next.r.mul(&BigReal::two().add(&next.a, &c), &c);
            let gap = reconstructed.sub(&state.r, &c).abs();
            assert!(gap <= state.r.mul(&tolerance, &c));
            state = next;
        }
    }

    #[test]
    fn defining_relation_holds() {
        let c = ctx();
        let mut state = SequenceState::initial(&c);
        let tolerance = BigReal::power_of_two(-240);
        for _ in 1..20 {
            let next = state.advance(&c, EvalMode::Stable).unwrap();
            let back = next.a.mul(&next.a, &c).sub(&BigReal::two(), &c);
            let gap = back.sub(&state.a, &c).abs();
            assert!(gap <= state.a.mul(&tolerance, &c));
            state = next;
        }
    }
}
