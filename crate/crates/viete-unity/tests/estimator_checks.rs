//! Estimator rates and identities, on thinner grids than the bundled
//! check suite so the two bodies of evidence are not carbon copies.

mod common;

use common::{ctx512, oracle_b, rel_gap, tan_series};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use viete_unity::estimators::{
    arctan_sum_quarter_pi, pi_from_unity, ratio_b, tail_bound_check, tail_split_check,
    viete_product_pi, PiMethod,
};
use viete_unity::precision::{pi_reference, BigReal, PrecisionContext};

fn ctx256() -> PrecisionContext {
    PrecisionContext::new(256).unwrap()
}

#[test]
fn viete_error_shrinks_fourfold() {
    let ctx = ctx256();
    let errors: Vec<BigReal> = (1..=26)
        .map(|depth| viete_product_pi(depth, &ctx).abs_error)
        .collect();
    for pair in errors.windows(2) {
        assert!(pair[1] < pair[0], "error must strictly decrease");
    }
    for depth in 5..=25usize {
        let ratio = errors[depth - 1].div(&errors[depth], &ctx).unwrap().to_f64();
        assert!((3.8..=4.2).contains(&ratio), "K={depth}: ratio {ratio}");
    }
}

#[test]
fn arctan_sum_matches_its_closed_form() {
    // value(K) = (pi/4)(1 - 2^-K) within 2^-240 pi, probed at several K.
    let ctx = ctx256();
    let pi = pi_reference(&ctx);
    let tolerance = pi.mul_pow2(-240);
    for depth in [1u32, 2, 7, 19, 33, 60] {
        let estimate = arctan_sum_quarter_pi(depth, &ctx);
        let closed = pi
            .mul_pow2(-2)
            .sub(&pi.mul_pow2(-2 - i64::from(depth)), &ctx);
        assert!(
            estimate.value.sub(&closed, &ctx).abs() <= tolerance,
            "K = {depth}"
        );
        assert_eq!(estimate.method, PiMethod::ArctanSum);
    }
}

#[test]
fn unity_limit_error_tracks_its_asymptote() {
    // |value - pi| within [0.5, 1.5] of m pi^2 / 2^{k+2}.
    let ctx = ctx256();
    let pi = pi_reference(&ctx);
    let pi_squared = pi.mul(&pi, &ctx);
    for m in [1u32, 2, 3, 5] {
        for k in [10u32, 17, 26, 40] {
            let estimate = pi_from_unity(k, m, &ctx);
            let asymptote = pi_squared
                .mul(&BigReal::from_u64(u64::from(m)), &ctx)
                .mul_pow2(-(i64::from(k) + 2));
            assert!(
                estimate.abs_error >= asymptote.mul_pow2(-1),
                "k={k} m={m}: error below half the asymptote"
            );
            assert!(
                estimate.abs_error
                    <= asymptote.mul(&BigReal::from_u64(3), &ctx).mul_pow2(-1),
                "k={k} m={m}: error above 1.5x the asymptote"
            );
        }
    }
}

#[test]
fn unity_limit_value_is_positive_and_converges() {
    let ctx = ctx256();
    let previous = pi_from_unity(10, 2, &ctx);
    let closer = pi_from_unity(20, 2, &ctx);
    assert!(closer.value.sign() > 0);
    assert!(closer.abs_error < previous.abs_error);
}

#[test]
fn epsilon_roughly_halves_per_step() {
    let ctx = ctx256();
    let mut state = viete_unity::SequenceState::initial(&ctx);
    while state.k < 10 {
        state = state.advance(&ctx, viete_unity::EvalMode::Stable).unwrap();
    }
    let low = BigReal::from_u64(49).div(&BigReal::from_u64(100), &ctx).unwrap();
    let high = BigReal::from_u64(51).div(&BigReal::from_u64(100), &ctx).unwrap();
    while state.k <= 40 {
        let next = state.advance(&ctx, viete_unity::EvalMode::Stable).unwrap();
        let ratio = next.eps.div(&state.eps, &ctx).unwrap();
        assert!(ratio > low && ratio < high, "k = {}", state.k);
        state = next;
    }
}

#[test]
fn b_ratio_climbs_toward_one_half_from_below() {
    let ctx = ctx256();
    let half = BigReal::one().mul_pow2(-1);
    let mut previous = ratio_b(1, &ctx);
    for k in 2..=30u32 {
        let ratio = ratio_b(k, &ctx);
        assert!(ratio > previous, "k = {k}");
        assert!(ratio < half, "k = {k}");
        previous = ratio;
    }
    // tan(x/2)/tan(x) = 1/2 - x^2/8 + O(x^4); at k = 20 the gap is ~7e-14.
    let gap = half.sub(&ratio_b(20, &ctx), &ctx);
    assert!(gap.sign() > 0);
    assert!(gap.to_f64() <= 1e-13);
}

#[test]
fn ratio_b_agrees_with_the_tangent_oracle() {
    let oracle = ctx512();
    let expected = oracle_b(2, &oracle).div(&oracle_b(1, &oracle), &oracle).unwrap();
    let actual = ratio_b(1, &oracle);
    assert!(rel_gap(&actual, &expected, &oracle) <= BigReal::power_of_two(-480));
    // tan(pi/16)/tan(pi/8) directly.
    let pi = pi_reference(&oracle);
    let direct = tan_series(&pi.mul_pow2(-4), &oracle)
        .div(&tan_series(&pi.mul_pow2(-3), &oracle), &oracle)
        .unwrap();
    assert!(rel_gap(&actual, &direct, &oracle) <= BigReal::power_of_two(-480));
}

#[test]
fn tail_split_residual_telescopes() {
    let ctx = ctx256();
    let pi = pi_reference(&ctx);
    let quarter = pi.mul_pow2(-2);
    let tolerance = pi.mul_pow2(-240);
    for (k, upper) in [(1u32, 2u32), (1, 12), (3, 10), (7, 25), (12, 40), (39, 40)] {
        let residual = tail_split_check(k, upper, &ctx);
        let expected = quarter.mul_pow2(-i64::from(upper));
        assert!(
            residual.sub(&expected, &ctx).abs() <= tolerance,
            "k={k} L={upper}"
        );
    }
}

#[test]
fn tail_bound_holds_on_seeded_pairs() {
    let ctx = ctx256();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..50 {
        let k = rng.gen_range(1..=25u32);
        let upper = k + rng.gen_range(1..=15u32);
        let bound = tail_bound_check(k, upper, &ctx);
        assert!(bound.holds, "k={k} L={upper}");
        assert!(bound.sum_b < bound.sum_geo);
    }
}

#[test]
fn tail_bound_edge_conventions() {
    let ctx = ctx256();
    let empty = tail_bound_check(7, 7, &ctx);
    assert!(empty.holds && empty.sum_b.is_zero() && empty.sum_geo.is_zero());
    let boundary = tail_bound_check(0, 1, &ctx);
    assert!(!boundary.holds);
    assert_eq!(boundary.sum_b, boundary.sum_geo);
}
