//! The bundled invariant suite behind the `check` subcommand.
//!
//! Each check pins its precision and tolerance in code and reports one
//! pass/fail outcome. Together they exercise the oracle equivalences, the
//! convergence rates, the tail identities, and the cancellation study.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::estimators::{pi_from_unity, tail_bound_check, tail_split_check, viete_product_pi};
use crate::precision::{arctan_taylor, pi_reference, BigReal, PrecisionContext};
use crate::sequence::{c_closed_form, EvalMode, SequenceState};

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: String) -> Self {
        Self {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        Self {
            name,
            passed: false,
            detail,
        }
    }
}

fn ctx256() -> PrecisionContext {
    PrecisionContext::new(256).expect("256 bits is valid")
}

/// Relative agreement of the composition recurrence with the closed form
/// `(1 - b_k)/(1 + b_k)` for all k <= 64 at 256 bits, within 2^-240.
pub fn check_oracle_equivalence() -> CheckOutcome {
    const NAME: &str = "oracle-equivalence";
    let ctx = ctx256();
    let tolerance = BigReal::power_of_two(-240);
    let mut state = SequenceState::initial(&ctx);
    let mut worst = BigReal::zero();
    loop {
        let closed = c_closed_form(state.k, &ctx);
        let gap = state.c.sub(&closed, &ctx).abs();
        let bound = closed.mul(&tolerance, &ctx);
        if gap > bound {
            return CheckOutcome::fail(
                NAME,
                format!("k={}: |c_rec - c_closed| = {} > 2^-240 c", state.k, gap),
            );
        }
        if gap > worst {
            worst = gap;
        }
        if state.k == 64 {
            break;
        }
        state = state.advance(&ctx, EvalMode::Stable).expect("pole unreachable");
    }
    CheckOutcome::pass(NAME, format!("k <= 64, worst |c_rec - c_closed| = {worst}"))
}

/// `atan(b_k) = pi / 2^{k+2}` for k <= 40 at 256 bits, within relative
/// 2^-240.
pub fn check_arctan_b_identity() -> CheckOutcome {
    const NAME: &str = "arctan-b-identity";
    let ctx = ctx256();
    let pi = pi_reference(&ctx);
    let tolerance = BigReal::power_of_two(-240);
    let mut state = SequenceState::initial(&ctx);
    let mut worst = BigReal::zero();
    loop {
        let lhs = arctan_taylor(&state.b, &ctx).expect("b_k < 1/2");
        let rhs = pi.mul_pow2(-(i64::from(state.k) + 2));
        let gap = lhs.sub(&rhs, &ctx).abs();
        if gap > rhs.mul(&tolerance, &ctx) {
            return CheckOutcome::fail(
                NAME,
                format!("k={}: |atan(b_k) - pi/2^(k+2)| = {gap}", state.k),
            );
        }
        if gap > worst {
            worst = gap;
        }
        if state.k == 40 {
            break;
        }
        state = state.advance(&ctx, EvalMode::Stable).expect("pole unreachable");
    }
    CheckOutcome::pass(NAME, format!("k <= 40, worst gap = {worst}"))
}

/// `eps_{k+1} / eps_k` stays inside (0.49, 0.51) for 10 <= k <= 40.
pub fn check_error_halving() -> CheckOutcome {
    const NAME: &str = "error-halving";
    let ctx = ctx256();
    let low = BigReal::from_u64(49)
        .div(&BigReal::from_u64(100), &ctx)
        .expect("nonzero");
    let high = BigReal::from_u64(51)
        .div(&BigReal::from_u64(100), &ctx)
        .expect("nonzero");
    let mut state = SequenceState::initial(&ctx);
    while state.k < 10 {
        state = state.advance(&ctx, EvalMode::Stable).expect("pole unreachable");
    }
    let mut extremes = (f64::INFINITY, f64::NEG_INFINITY);
    while state.k <= 40 {
        let next = state.advance(&ctx, EvalMode::Stable).expect("pole unreachable");
        let ratio = next.eps.div(&state.eps, &ctx).expect("eps positive");
        if ratio <= low || ratio >= high {
            return CheckOutcome::fail(
                NAME,
                format!("k={}: eps ratio {} outside (0.49, 0.51)", state.k, ratio),
            );
        }
        let approx = ratio.to_f64();
        extremes.0 = extremes.0.min(approx);
        extremes.1 = extremes.1.max(approx);
        state = next;
    }
    CheckOutcome::pass(
        NAME,
        format!("10 <= k <= 40, ratios in [{:.6}, {:.6}]", extremes.0, extremes.1),
    )
}

/// Two-sided convergence rate of the unity-limit estimate: for m in
/// {1, 2, 3, 5} and 10 <= k <= 40 the error `|value - pi|` stays within
/// [0.5, 1.5] times its asymptote `m pi^2 / 2^{k+2}`.
pub fn check_unity_limit_rate() -> CheckOutcome {
    const NAME: &str = "unity-limit-rate";
    let ctx = ctx256();
    let pi = pi_reference(&ctx);
    let pi_squared = pi.mul(&pi, &ctx);
    for m in [1u32, 2, 3, 5] {
        for k in 10..=40u32 {
            let estimate = pi_from_unity(k, m, &ctx);
            let asymptote = pi_squared
                .mul(&BigReal::from_u64(u64::from(m)), &ctx)
                .mul_pow2(-(i64::from(k) + 2));
            let low = asymptote.mul_pow2(-1);
            let high = asymptote.mul(&BigReal::from_u64(3), &ctx).mul_pow2(-1);
            if estimate.abs_error < low || estimate.abs_error > high {
                return CheckOutcome::fail(
                    NAME,
                    format!(
                        "k={k} m={m}: |value - pi| = {} outside [0.5, 1.5] x m pi^2/2^(k+2)",
                        estimate.abs_error
                    ),
                );
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        "m in {1,2,3,5}, 10 <= k <= 40, error within [0.5, 1.5] x m pi^2/2^(k+2)".to_string(),
    )
}

/// `b_{k+1}/b_k` strictly increasing and strictly below 1/2 up to k = 60,
/// and within 1e-13 of 1/2 at k = 20.
pub fn check_b_ratio() -> CheckOutcome {
    const NAME: &str = "b-ratio-limit";
    let ctx = ctx256();
    let half = BigReal::one().mul_pow2(-1);
    let mut previous: Option<BigReal> = None;
    let mut gap_at_20 = None;
    let mut state = SequenceState::initial(&ctx);
    for k in 1..=60u32 {
        let next = state.advance(&ctx, EvalMode::Stable).expect("pole unreachable");
        let ratio = next.b.div(&state.b, &ctx).expect("b positive");
        if ratio >= half {
            return CheckOutcome::fail(NAME, format!("k={k}: ratio {ratio} not below 1/2"));
        }
        if let Some(prev) = &previous {
            if &ratio <= prev {
                return CheckOutcome::fail(NAME, format!("k={k}: ratio not strictly increasing"));
            }
        }
        if k == 20 {
            gap_at_20 = Some(half.sub(&ratio, &ctx).abs());
        }
        previous = Some(ratio);
        state = next;
    }
    let gap = gap_at_20.expect("k = 20 was visited");
    let bound = BigReal::one()
        .div(&BigReal::from_u64(10_000_000_000_000), &ctx)
        .expect("nonzero");
    if gap > bound {
        return CheckOutcome::fail(NAME, format!("|ratio(20) - 1/2| = {gap} > 1e-13"));
    }
    CheckOutcome::pass(
        NAME,
        format!("increasing, below 1/2 for k <= 60; |ratio(20) - 1/2| = {gap}"),
    )
}

/// Product-estimate error strictly decreasing with successive ratio in
/// [3.8, 4.2] for 5 <= K <= 25.
pub fn check_viete_error_contraction() -> CheckOutcome {
    const NAME: &str = "viete-error-contraction";
    let ctx = ctx256();
    let errors: Vec<BigReal> = (1..=26).map(|k| viete_product_pi(k, &ctx).abs_error).collect();
    for window in errors.windows(2) {
        if window[1] >= window[0] {
            return CheckOutcome::fail(NAME, "error not strictly decreasing".to_string());
        }
    }
    let mut ratios = Vec::new();
    for k in 5..=25usize {
        let ratio = errors[k - 1].div(&errors[k], &ctx).expect("error positive").to_f64();
        if !(3.8..=4.2).contains(&ratio) {
            return CheckOutcome::fail(
                NAME,
                format!("K={k}: successive error ratio {ratio:.6} outside [3.8, 4.2]"),
            );
        }
        ratios.push(ratio);
    }
    let (lo, hi) = ratios
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &r| {
            (a.min(r), b.max(r))
        });
    CheckOutcome::pass(NAME, format!("ratios in [{lo:.4}, {hi:.4}] for 5 <= K <= 25"))
}

/// Partial arctangent sums match `(pi/4)(1 - 2^-K)` within `2^-240 pi` for
/// K <= 60.
pub fn check_arctan_sum_closed_form() -> CheckOutcome {
    const NAME: &str = "arctan-sum-closed-form";
    let ctx = ctx256();
    let pi = pi_reference(&ctx);
    let quarter = pi.mul_pow2(-2);
    let tolerance = pi.mul_pow2(-240);
    let mut state = SequenceState::initial(&ctx);
    let mut sum = BigReal::zero();
    let mut worst = BigReal::zero();
    for k in 1..=60u32 {
        if k > 1 {
            state = state.advance(&ctx, EvalMode::Stable).expect("pole unreachable");
        }
        sum = sum.add(&arctan_taylor(&state.b, &ctx).expect("b < 1/2"), &ctx);
        let closed = quarter.sub(&quarter.mul_pow2(-i64::from(k)), &ctx);
        let gap = sum.sub(&closed, &ctx).abs();
        if gap > tolerance {
            return CheckOutcome::fail(NAME, format!("K={k}: gap {gap} > 2^-240 pi"));
        }
        if gap > worst {
            worst = gap;
        }
    }
    CheckOutcome::pass(NAME, format!("K <= 60, worst gap = {worst}"))
}

/// Tail-split residual equals `(pi/4) 2^-L` within `2^-240 pi` for every
/// 1 <= k < L <= 40.
pub fn check_tail_split_residual() -> CheckOutcome {
    const NAME: &str = "tail-split-residual";
    let ctx = ctx256();
    let pi = pi_reference(&ctx);
    let quarter = pi.mul_pow2(-2);
    let tolerance = pi.mul_pow2(-240);
    let mut worst = BigReal::zero();
    for upper in 2..=40u32 {
        let expected = quarter.mul_pow2(-i64::from(upper));
        for k in 1..upper {
            let residual = tail_split_check(k, upper, &ctx);
            let gap = residual.sub(&expected, &ctx).abs();
            if gap > tolerance {
                return CheckOutcome::fail(
                    NAME,
                    format!("k={k} L={upper}: |residual - (pi/4)2^-L| = {gap}"),
                );
            }
            if gap > worst {
                worst = gap;
            }
        }
    }
    CheckOutcome::pass(NAME, format!("all 1 <= k < L <= 40, worst gap = {worst}"))
}

/// The geometric majorant holds strictly for 50 seeded-random index pairs
/// with L > k >= 1.
pub fn check_tail_bound_randomized() -> CheckOutcome {
    const NAME: &str = "tail-bound-randomized";
    let ctx = ctx256();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_CAFE);
    for _ in 0..50 {
        let k = rng.gen_range(1..=30u32);
        let upper = k + rng.gen_range(1..=20u32);
        let bound = tail_bound_check(k, upper, &ctx);
        if !bound.holds {
            return CheckOutcome::fail(
                NAME,
                format!("k={k} L={upper}: sum b = {} not below {}", bound.sum_b, bound.sum_geo),
            );
        }
    }
    CheckOutcome::pass(NAME, "50 seeded pairs with L > k >= 1 all strict".to_string())
}

/// The cancellation study at 64-bit precision and k = 40: the literal
/// formulas lose more than 40 bits while the residual recurrence keeps 56,
/// both measured against a 512-bit oracle.
pub fn check_cancellation_study() -> CheckOutcome {
    const NAME: &str = "cancellation-study";
    let ctx = PrecisionContext::new(64).expect("64 bits is valid");
    let oracle_ctx = PrecisionContext::new(512).expect("512 bits is valid");
    let mut naive = SequenceState::initial(&ctx);
    let mut stable = SequenceState::initial(&ctx);
    let mut oracle = SequenceState::initial(&oracle_ctx);
    for _ in 1..40 {
        naive = naive.advance(&ctx, EvalMode::Naive).expect("pole unreachable");
        stable = stable.advance(&ctx, EvalMode::Stable).expect("pole unreachable");
        oracle = oracle.advance(&oracle_ctx, EvalMode::Stable).expect("pole unreachable");
    }
    let rel = |x: &BigReal| {
        x.sub(&oracle.b, &oracle_ctx)
            .abs()
            .div(&oracle.b, &oracle_ctx)
            .expect("oracle b positive")
    };
    let rel_naive = rel(&naive.b);
    let rel_stable = rel(&stable.b);
    if rel_naive <= BigReal::power_of_two(-40) {
        return CheckOutcome::fail(
            NAME,
            format!("naive b_40 relative error {rel_naive} unexpectedly below 2^-40"),
        );
    }
    if rel_stable >= BigReal::power_of_two(-56) {
        return CheckOutcome::fail(
            NAME,
            format!("stable b_40 relative error {rel_stable} not below 2^-56"),
        );
    }
    CheckOutcome::pass(
        NAME,
        format!("k=40 at 64 bits: naive rel err {rel_naive}, stable rel err {rel_stable}"),
    )
}

/// The full suite, in reporting order.
pub fn run_all_checks() -> Vec<CheckOutcome> {
    vec![
        check_oracle_equivalence(),
        check_arctan_b_identity(),
        check_error_halving(),
        check_unity_limit_rate(),
        check_b_ratio(),
        check_viete_error_contraction(),
        check_arctan_sum_closed_form(),
        check_tail_split_residual(),
        check_tail_bound_randomized(),
        check_cancellation_study(),
    ]
}
