//! Shared test oracle: sine/cosine Maclaurin series evaluated at 512 bits.
//!
//! The closed forms `a_k = 2 cos(pi/2^{k+1})`, `b_k = tan(pi/2^{k+2})` and
//! `c_k = tan(pi/4 - pi/2^{k+2})` give a route to every sequence quantity
//! that never touches the nested radicals or the composition recurrence,
//! so they can referee both.

#![allow(dead_code)]

use viete_unity::precision::{pi_reference, BigReal, PrecisionContext};

pub const ORACLE_BITS: u32 = 512;

pub fn ctx512() -> PrecisionContext {
    PrecisionContext::new(ORACLE_BITS).expect("512 bits is valid")
}

fn alternating_series(first: BigReal, square: &BigReal, odd: bool, ctx: &PrecisionContext) -> BigReal {
    // cos: 1 - x^2/2! + x^4/4! - ...   (odd = false)
    // sin: x - x^3/3! + x^5/5! - ...   (odd = true)
    let working = ctx.working_bits() as i64;
    let mut term = first;
    let mut sum = term.clone();
    let mut n: u64 = if odd { 1 } else { 0 };
    loop {
        let divisor = BigReal::from_u64((n + 1) * (n + 2));
        term = term
            .mul(square, ctx)
            .div(&divisor, ctx)
            .expect("factorial step is nonzero");
        n += 2;
        let sum_order = sum.magnitude_order().expect("partial sum is nonzero");
        match term.magnitude_order() {
            None => break,
            Some(order) if order < sum_order - working => break,
            Some(_) => {}
        }
        sum = if (n / 2) % 2 == 1 {
            sum.sub(&term, ctx)
        } else {
            sum.add(&term, ctx)
        };
    }
    sum
}

/// Maclaurin cosine for |x| <= 1.
pub fn cos_series(x: &BigReal, ctx: &PrecisionContext) -> BigReal {
    let square = x.mul(x, ctx);
    alternating_series(BigReal::one(), &square, false, ctx)
}

/// Maclaurin sine for |x| <= 1.
pub fn sin_series(x: &BigReal, ctx: &PrecisionContext) -> BigReal {
    let square = x.mul(x, ctx);
    alternating_series(x.clone(), &square, true, ctx)
}

pub fn tan_series(x: &BigReal, ctx: &PrecisionContext) -> BigReal {
    sin_series(x, ctx)
        .div(&cos_series(x, ctx), ctx)
        .expect("cos is positive on |x| <= 1")
}

/// `a_k = 2 cos(pi / 2^{k+1})`.
pub fn oracle_a(k: u32, ctx: &PrecisionContext) -> BigReal {
    let angle = pi_reference(ctx).mul_pow2(-(i64::from(k) + 1));
    cos_series(&angle, ctx).mul_pow2(1)
}

/// `b_k = tan(pi / 2^{k+2})`.
pub fn oracle_b(k: u32, ctx: &PrecisionContext) -> BigReal {
    let angle = pi_reference(ctx).mul_pow2(-(i64::from(k) + 2));
    tan_series(&angle, ctx)
}

/// `c_k = tan(pi/4 - pi / 2^{k+2})`.
pub fn oracle_c(k: u32, ctx: &PrecisionContext) -> BigReal {
    let pi = pi_reference(ctx);
    let angle = pi.mul_pow2(-2).sub(&pi.mul_pow2(-(i64::from(k) + 2)), ctx);
    tan_series(&angle, ctx)
}

/// `|x - reference| / |reference|`.
pub fn rel_gap(x: &BigReal, reference: &BigReal, ctx: &PrecisionContext) -> BigReal {
    x.sub(reference, ctx)
        .abs()
        .div(&reference.abs(), ctx)
        .expect("reference is nonzero")
}
