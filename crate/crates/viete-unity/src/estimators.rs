//! Every pi-related formula and limit claim as a checkable estimator.
//!
//! Each estimator returns a [`PiEstimate`] carrying the computed value and
//! its absolute error against the Machin reference. The tail checks probe the
//! telescoping split `atan(1) = atan(c_k) + sum atan(b_l)` and the geometric
//! majorant of the `b` sequence.

use crate::precision::{arctan_taylor, pi_reference, BigReal, PrecisionContext};
use crate::sequence::{EvalMode, SequenceState};

/// Which formula produced an estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PiMethod {
    /// Infinite product `2/pi = prod a_k / 2`.
    VieteProduct,
    /// Partial sum `pi/4 = sum atan(b_k)`.
    ArctanSum,
    /// Scaled error term `pi = 2^{k+1} (1 - c_k^m) / m`.
    UnityLimit,
}

impl PiMethod {
    pub fn label(&self) -> &'static str {
        match self {
            PiMethod::VieteProduct => "viete",
            PiMethod::ArctanSum => "arctan-sum",
            PiMethod::UnityLimit => "unity",
        }
    }
}

/// A pi approximation with its parameters and error against the reference.
///
/// `abs_error` is `|value - target|` where the target is `pi` for the
/// product and unity-limit methods (the unity value is normalized by `m`)
/// and `pi/4` for the arctangent sum.
#[derive(Clone, Debug)]
pub struct PiEstimate {
    pub method: PiMethod,
    /// Depth used: K for the product and sum, k for the unity limit.
    pub depth: u32,
    /// Power m in the unity limit; 1 for the other methods.
    pub power: u32,
    pub value: BigReal,
    pub abs_error: BigReal,
}

/// Partial product `2 / prod_{k<=K} (a_k / 2)`.
pub fn viete_product_pi(depth: u32, ctx: &PrecisionContext) -> PiEstimate {
    assert!(depth >= 1, "depth must be positive");
    let two = BigReal::two();
    let mut a = two.sqrt(ctx).expect("2 is nonnegative");
    let mut product = a.mul_pow2(-1);
    for _ in 1..depth {
        a = two.add(&a, ctx).sqrt(ctx).expect("2 + a is positive");
        product = product.mul(&a.mul_pow2(-1), ctx);
    }
    let value = two.div(&product, ctx).expect("partial product is positive");
    let abs_error = value.sub(&pi_reference(ctx), ctx).abs();
    PiEstimate {
        method: PiMethod::VieteProduct,
        depth,
        power: 1,
        value,
        abs_error,
    }
}

/// Partial sum `sum_{k<=K} atan(b_k)`, whose target is `pi/4`.
pub fn arctan_sum_quarter_pi(depth: u32, ctx: &PrecisionContext) -> PiEstimate {
    assert!(depth >= 1, "depth must be positive");
    let mut state = SequenceState::initial(ctx);
    let mut sum = arctan_taylor(&state.b, ctx).expect("b_1 = sqrt(2) - 1 < 1/2");
    for _ in 1..depth {
        state = state.advance(ctx, EvalMode::Stable).expect("pole unreachable");
        let term = arctan_taylor(&state.b, ctx).expect("b_k decreases below 1/2");
        sum = sum.add(&term, ctx);
    }
    let quarter_pi = pi_reference(ctx).mul_pow2(-2);
    let abs_error = sum.sub(&quarter_pi, ctx).abs();
    PiEstimate {
        method: PiMethod::ArctanSum,
        depth,
        power: 1,
        value: sum,
        abs_error,
    }
}

/// Unity-limit estimate `2^{k+1} (1 - c_k^m) / m`.
///
/// `1 - c_k^m` is never formed by direct subtraction: it factors exactly as
/// `eps_k (1 + c_k + ... + c_k^{m-1})` with the cancellation-free `eps_k`,
/// so the estimate keeps full relative precision at large k.
pub fn pi_from_unity(k: u32, m: u32, ctx: &PrecisionContext) -> PiEstimate {
    assert!(k >= 1, "k must be positive");
    assert!(m >= 1, "m must be positive");
    let mut state = SequenceState::initial(ctx);
    for _ in 1..k {
        state = state.advance(ctx, EvalMode::Stable).expect("pole unreachable");
    }
    let mut geometric = BigReal::one();
    let mut power = BigReal::one();
    for _ in 1..m {
        power = power.mul(&state.c, ctx);
        geometric = geometric.add(&power, ctx);
    }
    let value = state
        .eps
        .mul(&geometric, ctx)
        .mul_pow2(i64::from(k) + 1)
        .div(&BigReal::from_u64(u64::from(m)), ctx)
        .expect("m is positive");
    let abs_error = value.sub(&pi_reference(ctx), ctx).abs();
    PiEstimate {
        method: PiMethod::UnityLimit,
        depth: k,
        power: m,
        value,
        abs_error,
    }
}

/// Successive ratio `b_{k+1} / b_k` in stable mode.
pub fn ratio_b(k: u32, ctx: &PrecisionContext) -> BigReal {
    assert!(k >= 1, "k must be positive");
    let mut state = SequenceState::initial(ctx);
    for _ in 1..k {
        state = state.advance(ctx, EvalMode::Stable).expect("pole unreachable");
    }
    let next = state.advance(ctx, EvalMode::Stable).expect("pole unreachable");
    next.b.div(&state.b, ctx).expect("b_k is positive")
}

/// Result of [`tail_bound_check`]: both partial sums and whether the strict
/// geometric majorant holds.
#[derive(Clone, Debug)]
pub struct TailBound {
    pub sum_b: BigReal,
    pub sum_geo: BigReal,
    pub holds: bool,
}

/// Compares `sum_{l=k+1..L} b_l` against the geometric majorant
/// `sum_{l=k+1..L} b_1 / 2^{l-1}`.
///
/// An empty range (`L = k`) yields `(0, 0, true)` so the inequality can be
/// property-tested over arbitrary index pairs. At `k = 0` the first majorant
/// term equals `b_1` itself, so strictness fails there by convention.
pub fn tail_bound_check(k: u32, upper: u32, ctx: &PrecisionContext) -> TailBound {
    assert!(upper >= k, "upper must be at least k");
    let mut sum_b = BigReal::zero();
    let mut sum_geo = BigReal::zero();
    if upper == k {
        return TailBound {
            sum_b,
            sum_geo,
            holds: true,
        };
    }
    let mut state = SequenceState::initial(ctx);
    let b1 = state.b.clone();
    for l in 1..=upper {
        if l > 1 {
            state = state.advance(ctx, EvalMode::Stable).expect("pole unreachable");
        }
        if l > k {
            sum_b = sum_b.add(&state.b, ctx);
            sum_geo = sum_geo.add(&b1.mul_pow2(1 - i64::from(l)), ctx);
        }
    }
    let holds = sum_b < sum_geo;
    TailBound {
        sum_b,
        sum_geo,
        holds,
    }
}

/// Residual `pi/4 - atan(c_k) - sum_{l=k+1..L} atan(b_l)`, which telescopes
/// to exactly `(pi/4) 2^-L`.
///
/// `pi/4 - atan(c_k)` is evaluated through the exact identity
/// `atan(1) - atan(c) = atan((1 - c) / (1 + c))` with the argument assembled
/// from `eps_k` as `eps_k / (2 - eps_k)`; that keeps the series argument
/// within its `|x| <= 1/2` contract (`c_k` itself exceeds 1/2 for k >= 2)
/// and stays cancellation-free.
pub fn tail_split_check(k: u32, upper: u32, ctx: &PrecisionContext) -> BigReal {
    assert!(k >= 1, "k must be positive");
    assert!(upper > k, "upper must exceed k");
    let mut state = SequenceState::initial(ctx);
    for _ in 1..k {
        state = state.advance(ctx, EvalMode::Stable).expect("pole unreachable");
    }
    let argument = state
        .eps
        .div(&BigReal::two().sub(&state.eps, ctx), ctx)
        .expect("2 - eps is positive");
    let mut residual = arctan_taylor(&argument, ctx).expect("eps/(2-eps) <= sqrt(2)-1");
    for _ in k..upper {
        state = state.advance(ctx, EvalMode::Stable).expect("pole unreachable");
        let term = arctan_taylor(&state.b, ctx).expect("b_k < 1/2");
        residual = residual.sub(&term, ctx);
    }
    residual
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
    fn viete_partial_products() {
        let c = ctx();
        let first = viete_product_pi(1, &c);
        assert_eq!(twenty(&first.value, &c), "2.82842712474619009760");
        let second = viete_product_pi(2, &c);
        assert_eq!(twenty(&second.value, &c), "3.06146745892071817382");
    }

    #[test]
    fn viete_error_contracts_by_four() {
        let c = ctx();
        let e20 = viete_product_pi(20, &c).abs_error;
        let e21 = viete_product_pi(21, &c).abs_error;
        let ratio = e20.div(&e21, &c).unwrap().to_f64();
        assert!((3.9..=4.1).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn arctan_sum_small_depths() {
        let c = ctx();
        let k1 = arctan_sum_quarter_pi(1, &c);
        assert_eq!(twenty(&k1.value, &c), "0.39269908169872415480");
        let k2 = arctan_sum_quarter_pi(2, &c);
        assert_eq!(twenty(&k2.value, &c), "0.58904862254808623221");
    }

    #[test]
    fn arctan_sum_error_matches_closed_form() {
        let c = ctx();
        // abs_error should be (pi/4) 2^-30 within 1 percent.
        let est = arctan_sum_quarter_pi(30, &c);
        let expected = pi_reference(&c).mul_pow2(-32);
        let rel = est
            .abs_error
            .sub(&expected, &c)
            .abs()
            .div(&expected, &c)
            .unwrap()
            .to_f64();
        assert!(rel < 0.01, "relative gap {rel}");
    }

    #[test]
    fn unity_limit_examples() {
        let c = ctx();
        let k15 = pi_from_unity(15, 1, &c);
        assert!((k15.value.to_f64() - 3.1415174).abs() < 1e-6);
        let k4 = pi_from_unity(4, 1, &c);
        assert!((k4.value.to_f64() - 2.9968906).abs() < 1e-6);
    }

    #[test]
    fn unity_limit_rate_at_depth_forty() {
        let c = ctx();
        // |value - pi| tracks m pi^2 / 2^{k+2}; at k = 40, m = 3 it must sit
        // below 1.5 times that asymptote.
        let est = pi_from_unity(40, 3, &c);
        let pi = pi_reference(&c);
        let asymptote = pi.mul(&pi, &c).mul(&BigReal::from_u64(3), &c).mul_pow2(-42);
        let bound = asymptote.mul(&BigReal::from_u64(3), &c).mul_pow2(-1);
        assert!(est.abs_error <= bound);
        assert!(est.abs_error >= asymptote.mul_pow2(-1));
    }

    #[test]
    fn ratio_b_values() {
        let c = ctx();
        assert_eq!(twenty(&ratio_b(1, &c), &c), "0.48021693505170998262");
        assert!(ratio_b(5, &c) < ratio_b(6, &c));
        let gap = ratio_b(20, &c)
            .sub(&BigReal::one().mul_pow2(-1), &c)
            .abs()
            .to_f64();
        assert!(gap <= 1e-13, "gap {gap}");
    }

    #[test]
    fn tail_bound_examples() {
        let c = ctx();
        let mid = tail_bound_check(2, 10, &c);
        assert!(mid.holds);
        assert!(mid.sum_b < mid.sum_geo);

        let empty = tail_bound_check(5, 5, &c);
        assert!(empty.holds);
        assert!(empty.sum_b.is_zero());
        assert!(empty.sum_geo.is_zero());

        let first = tail_bound_check(0, 1, &c);
        assert!(!first.holds);
        assert_eq!(first.sum_b, first.sum_geo);
    }

    #[test]
    fn tail_split_examples() {
        let c = ctx();
        let residual = tail_split_check(3, 10, &c);
        assert_eq!(twenty(&residual, &c), "0.00076699039394282061");
        let small = tail_split_check(1, 2, &c);
        assert_eq!(twenty(&small, &c), "0.19634954084936207740");
    }

    #[test]
    fn tail_split_residual_is_independent_of_k() {
        let c = ctx();
        let tolerance = pi_reference(&c).mul_pow2(-240);
        let reference = tail_split_check(1, 12, &c);
        for k in 2..12 {
            let other = tail_split_check(k, 12, &c);
            assert!(other.sub(&reference, &c).abs() <= tolerance);
        }
    }
}
