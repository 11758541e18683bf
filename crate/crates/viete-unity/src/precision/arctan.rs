use super::{BigReal, PrecisionContext};
use crate::error::{Error, Result};

/// Maclaurin arctangent `x - x^3/3 + x^5/5 - ...` for `|x| <= 1/2`.
///
/// The series stops once the next term drops below `2^-(p+g)` times the
/// partial sum. Odd symmetry is exact: the sum runs on `|x|` and the sign is
/// applied afterwards.
pub fn arctan_taylor(x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    let half = BigReal::power_of_two(-1);
    if x.abs() > half {
        return Err(Error::ArctanArgumentTooLarge);
    }
    if x.is_zero() {
        return Ok(BigReal::zero());
    }
    let working = ctx.working_bits() as i64;
    let ax = x.abs();
    let square = ax.mul(&ax, ctx);
    let mut power = ax.clone();
    let mut sum = ax;
    let mut index: u64 = 0;
    loop {
        index += 1;
        power = power.mul(&square, ctx);
        let term = power
            .div(&BigReal::from_u64(2 * index + 1), ctx)
            .expect("odd denominator is nonzero");
        let sum_order = sum.magnitude_order().expect("partial sum is positive");
        match term.magnitude_order() {
            None => break,
            Some(order) if order < sum_order - working => break,
            Some(_) => {}
        }
        sum = if index % 2 == 1 {
            sum.sub(&term, ctx)
        } else {
            sum.add(&term, ctx)
        };
    }
    Ok(if x.sign() < 0 { sum.neg() } else { sum })
}

fn arctan_inverse(denominator: u64, ctx: &PrecisionContext) -> BigReal {
    let x = BigReal::one()
        .div(&BigReal::from_u64(denominator), ctx)
        .expect("denominator is nonzero");
    arctan_taylor(&x, ctx).expect("1/n <= 1/2 for n >= 2")
}

/// Reference pi from the Machin decomposition
/// `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi_reference(ctx: &PrecisionContext) -> BigReal {
    let lead = arctan_inverse(5, ctx).mul_pow2(4);
    let tail = arctan_inverse(239, ctx).mul_pow2(2);
    lead.sub(&tail, ctx)
}

/// Independent cross-check decomposition
/// `pi = 4 (atan(1/2) + atan(1/3))`.
pub fn pi_reference_euler(ctx: &PrecisionContext) -> BigReal {
    arctan_inverse(2, ctx)
        .add(&arctan_inverse(3, ctx), ctx)
        .mul_pow2(2)
}
