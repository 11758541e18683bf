use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::PrecisionContext;
use crate::error::{Error, Result};

/// An arbitrary-precision real number `sign * mag * 2^exp`.
///
/// Values are dyadic rationals in a unique normal form: zero is
/// `(+, 0, 0)` and a nonzero mantissa is odd, so structural equality is
/// value equality. Arithmetic rounds to nearest (ties to even) at the
/// context's working precision; each result is therefore within relative
/// error `2^(1-precision_bits)` of the exact real result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigReal {
    negative: bool,
    mag: BigUint,
    exp: i64,
}

impl BigReal {
    pub fn zero() -> Self {
        Self {
            negative: false,
            mag: BigUint::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    pub fn two() -> Self {
        Self::from_u64(2)
    }

    pub fn from_u64(value: u64) -> Self {
        Self::normalized(false, BigUint::from(value), 0)
    }

    pub fn from_i64(value: i64) -> Self {
        Self::normalized(value < 0, BigUint::from(value.unsigned_abs()), 0)
    }

    /// Exact power of two `2^exp`.
    pub fn power_of_two(exp: i64) -> Self {
        Self {
            negative: false,
            mag: BigUint::from(1u8),
            exp,
        }
    }

    fn normalized(negative: bool, mut mag: BigUint, mut exp: i64) -> Self {
        if mag.is_zero() {
            return Self::zero();
        }
        if let Some(tz) = mag.trailing_zeros() {
            if tz > 0 {
                mag >>= tz;
                exp += tz as i64;
            }
        }
        Self { negative, mag, exp }
    }

    pub fn is_zero(&self) -> bool {
        self.mag.is_zero()
    }

    /// -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        if self.mag.is_zero() {
            0
        } else if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            negative: false,
            mag: self.mag.clone(),
            exp: self.exp,
        }
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            Self {
                negative: !self.negative,
                mag: self.mag.clone(),
                exp: self.exp,
            }
        }
    }

    /// Exact scaling by `2^shift`.
    pub fn mul_pow2(&self, shift: i64) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            Self {
                negative: self.negative,
                mag: self.mag.clone(),
                exp: self.exp + shift,
            }
        }
    }

    /// Position of the most significant bit: `floor(log2 |x|) + 1`.
    /// `None` for zero.
    pub fn magnitude_order(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mag.bits() as i64)
        }
    }

    pub(crate) fn mantissa(&self) -> &BigUint {
        &self.mag
    }

    pub(crate) fn exponent(&self) -> i64 {
        self.exp
    }

    pub(crate) fn is_negative(&self) -> bool {
        self.negative
    }

    /// Exact value `±mag * 2^exp` in normal form.
    pub(crate) fn from_biguint_parts(negative: bool, mag: BigUint, exp: i64) -> Self {
        Self::normalized(negative, mag, exp)
    }

    /// Round `(negative, mag, exp)` to at most `bits` mantissa bits, ties to
    /// even. `sticky` records nonzero discarded bits below `mag` (from
    /// division or square-root remainders); callers guarantee that a sticky
    /// mantissa already carries more than `bits` bits.
    fn rounded(negative: bool, mut mag: BigUint, mut exp: i64, bits: u64, sticky: bool) -> Self {
        if mag.is_zero() {
            return Self::zero();
        }
        let len = mag.bits();
        if len <= bits {
            debug_assert!(!sticky, "sticky rounding requires surplus bits");
            return Self::normalized(negative, mag, exp);
        }
        let drop = len - bits;
        let round_bit = mag.bit(drop - 1);
        let tail = sticky
            || mag
                .trailing_zeros()
                .is_some_and(|tz| tz < drop.saturating_sub(1));
        mag >>= drop;
        exp += drop as i64;
        if round_bit && (tail || mag.bit(0)) {
            mag += 1u32;
        }
        Self::normalized(negative, mag, exp)
    }

    pub fn add(&self, other: &Self, ctx: &PrecisionContext) -> Self {
        self.add_signed(other, false, ctx)
    }

    pub fn sub(&self, other: &Self, ctx: &PrecisionContext) -> Self {
        self.add_signed(other, true, ctx)
    }

    fn add_signed(&self, other: &Self, negate_other: bool, ctx: &PrecisionContext) -> Self {
        let bits = ctx.working_bits();
        if other.is_zero() {
            return Self::rounded(self.negative, self.mag.clone(), self.exp, bits, false);
        }
        let other_neg = other.negative ^ negate_other;
        if self.is_zero() {
            return Self::rounded(other_neg, other.mag.clone(), other.exp, bits, false);
        }
        let exp = self.exp.min(other.exp);
        let lhs = &self.mag << (self.exp - exp) as u64;
        let rhs = &other.mag << (other.exp - exp) as u64;
        if self.negative == other_neg {
            return Self::rounded(self.negative, lhs + rhs, exp, bits, false);
        }
        match lhs.cmp(&rhs) {
            Ordering::Equal => Self::zero(),
            Ordering::Greater => Self::rounded(self.negative, lhs - rhs, exp, bits, false),
            Ordering::Less => Self::rounded(other_neg, rhs - lhs, exp, bits, false),
        }
    }

    pub fn mul(&self, other: &Self, ctx: &PrecisionContext) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::rounded(
            self.negative ^ other.negative,
            &self.mag * &other.mag,
            self.exp + other.exp,
            ctx.working_bits(),
            false,
        )
    }

    pub fn div(&self, other: &Self, ctx: &PrecisionContext) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let bits = ctx.working_bits();
        // Shift the numerator so the quotient carries at least bits + 1
        // mantissa bits; the remainder then only feeds the sticky bit.
        let surplus = self.mag.bits() as i64 - other.mag.bits() as i64;
        let shift = (bits as i64 + 2 - surplus).max(0) as u64;
        let (q, r) = (&self.mag << shift).div_rem(&other.mag);
        Ok(Self::rounded(
            self.negative ^ other.negative,
            q,
            self.exp - other.exp - shift as i64,
            bits,
            !r.is_zero(),
        ))
    }

    /// Square root by integer Newton iteration on the shifted significand,
    /// with the remainder driving a final rounding correction.
    pub fn sqrt(&self, ctx: &PrecisionContext) -> Result<Self> {
        if self.negative && !self.is_zero() {
            return Err(Error::SqrtOfNegative);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let bits = ctx.working_bits();
        let target = 2 * (bits + 2);
        let len = self.mag.bits();
        let mut shift = target.saturating_sub(len);
        if (self.exp - shift as i64) % 2 != 0 {
            shift += 1;
        }
        let scaled = &self.mag << shift;
        let root = scaled.sqrt();
        let exact = &root * &root == scaled;
        Ok(Self::rounded(
            false,
            root,
            (self.exp - shift as i64) / 2,
            bits,
            !exact,
        ))
    }

    /// Lossy conversion for diagnostics.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let len = self.mag.bits();
        let (top, exp) = if len > 64 {
            let top = (&self.mag >> (len - 64)).to_u64().unwrap_or(u64::MAX);
            (top, self.exp + (len - 64) as i64)
        } else {
            (self.mag.to_u64().unwrap_or(u64::MAX), self.exp)
        };
        let magnitude = if exp > 2000 {
            f64::INFINITY
        } else if exp < -2000 {
            0.0
        } else {
            top as f64 * (exp as f64).exp2()
        };
        if self.negative {
            -magnitude
        } else {
            magnitude
        }
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigReal {
    /// Exact ordering of the represented values.
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs_sign = self.sign();
        let rhs_sign = other.sign();
        if lhs_sign != rhs_sign {
            return lhs_sign.cmp(&rhs_sign);
        }
        if lhs_sign == 0 {
            return Ordering::Equal;
        }
        let magnitude = match (self.magnitude_order(), other.magnitude_order()) {
            (Some(a), Some(b)) if a != b => a.cmp(&b),
            _ => {
                let exp = self.exp.min(other.exp);
                let lhs = &self.mag << (self.exp - exp) as u64;
                let rhs = &other.mag << (other.exp - exp) as u64;
                lhs.cmp(&rhs)
            }
        };
        if self.negative {
            magnitude.reverse()
        } else {
            magnitude
        }
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scientific(20))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::RenderMode;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(128).unwrap()
    }

    #[test]
    fn integer_addition_is_exact() {
        let one = BigReal::one();
        let sum = one.add(&one, &ctx());
        assert_eq!(sum, BigReal::two());
    }

    #[test]
    fn division_by_three_to_twenty_digits() {
        let third = BigReal::one().div(&BigReal::from_u64(3), &ctx()).unwrap();
        assert_eq!(
            third.to_decimal(20, RenderMode::Truncate, &ctx()).unwrap(),
            "0.33333333333333333333"
        );
    }

    #[test]
    fn two_minus_sqrt_two() {
        let c = ctx();
        let diff = BigReal::two().sub(&BigReal::two().sqrt(&c).unwrap(), &c);
        assert_eq!(
            diff.to_decimal(20, RenderMode::Truncate, &c).unwrap(),
            "0.58578643762690495119"
        );
    }

    #[test]
    fn sqrt_examples() {
        let c = ctx();
        let root2 = BigReal::two().sqrt(&c).unwrap();
        assert_eq!(
            root2.to_decimal(20, RenderMode::Truncate, &c).unwrap(),
            "1.41421356237309504880"
        );
        assert_eq!(BigReal::from_u64(4).sqrt(&c).unwrap(), BigReal::two());
        assert_eq!(BigReal::zero().sqrt(&c).unwrap(), BigReal::zero());
        assert_eq!(
            BigReal::from_i64(-1).sqrt(&c),
            Err(Error::SqrtOfNegative)
        );
    }

    #[test]
    fn division_by_zero_is_a_pole() {
        assert_eq!(
            BigReal::one().div(&BigReal::zero(), &ctx()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn compare_orders_values() {
        assert!(BigReal::one() < BigReal::two());
        assert!(BigReal::from_i64(-3) < BigReal::from_i64(-2));
        assert!(BigReal::from_i64(-1) < BigReal::one());
    }

    #[test]
    fn negated_zero_is_canonical() {
        let zero = BigReal::zero();
        assert_eq!(zero.neg(), zero);
        assert_eq!(zero.neg().sign(), 0);
        let diff = BigReal::one().sub(&BigReal::one(), &ctx());
        assert_eq!(diff, zero);
    }

    #[test]
    fn squared_root_of_two_is_close_but_not_falsely_equal() {
        let c = PrecisionContext::new(256).unwrap();
        let root = BigReal::two().sqrt(&c).unwrap();
        let squared = root.mul(&root, &c);
        let gap = squared.sub(&BigReal::two(), &c).abs();
        assert!(gap < BigReal::power_of_two(-254).mul_pow2(1));
        if squared != BigReal::two() {
            assert_ne!(squared.cmp(&BigReal::two()), Ordering::Equal);
        }
    }

    #[test]
    fn mul_pow2_is_exact() {
        let c = ctx();
        let x = BigReal::from_u64(3).mul_pow2(-5);
        let y = BigReal::from_u64(3)
            .div(&BigReal::from_u64(32), &c)
            .unwrap();
        assert_eq!(x, y);
    }
}
