use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{BigReal, PrecisionContext};
use crate::error::{Error, Result};

/// How [`BigReal::to_decimal`] treats the first dropped digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderMode {
    /// Chop toward zero (the convention used throughout the reports).
    Truncate,
    /// Round half away from zero.
    Round,
}

fn pow10(exp: usize) -> BigUint {
    BigUint::from(10u32).pow(exp as u32)
}

impl BigReal {
    /// Decimal rendering with exactly `digits` fractional digits.
    ///
    /// Fails when the context's binary precision does not certify that many
    /// decimal digits.
    pub fn to_decimal(
        &self,
        digits: usize,
        mode: RenderMode,
        ctx: &PrecisionContext,
    ) -> Result<String> {
        assert!(digits >= 1, "digits must be positive");
        let needed = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u64
            + u64::from(ctx.guard_bits());
        if u64::from(ctx.precision_bits()) < needed {
            return Err(Error::InsufficientPrecision {
                digits,
                precision_bits: ctx.precision_bits(),
            });
        }

        // Exact integer N with |x| * 10^digits = N + frac, 0 <= frac < 1.
        let scaled = self.mantissa() * pow10(digits);
        let (mut whole, round_up) = if self.exponent() >= 0 {
            (scaled << self.exponent() as u64, false)
        } else {
            let shift = (-self.exponent()) as u64;
            let frac = &scaled & ((BigUint::one() << shift) - BigUint::one());
            let whole = scaled >> shift;
            let up = match mode {
                RenderMode::Truncate => false,
                RenderMode::Round => (frac << 1u8) >= (BigUint::one() << shift),
            };
            (whole, up)
        };
        if round_up {
            whole += 1u32;
        }

        let (int_part, frac_part) = whole.div_rem(&pow10(digits));
        let sign = if self.is_negative() && !whole.is_zero() {
            "-"
        } else {
            ""
        };
        Ok(format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = digits
        ))
    }

    /// Scientific rendering `d.dd...e±E` with `sig` significant digits,
    /// truncated toward zero. Purely representational, no context needed.
    pub fn to_scientific(&self, sig: usize) -> String {
        assert!(sig >= 1, "sig must be positive");
        if self.is_zero() {
            return "0".to_string();
        }
        // First estimate of floor(log10 |x|) from the binary magnitude.
        let order = self.magnitude_order().expect("nonzero");
        let mut dec_exp = (((order - 1) as f64) * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            let shift = sig as i64 - 1 - dec_exp;
            let mut num = self.mantissa().clone();
            let mut den = BigUint::one();
            if shift >= 0 {
                num *= pow10(shift as usize);
            } else {
                den *= pow10((-shift) as usize);
            }
            if self.exponent() >= 0 {
                num <<= self.exponent() as u64;
            } else {
                den <<= (-self.exponent()) as u64;
            }
            let leading = num / den;
            if leading.is_zero() {
                dec_exp -= 1;
                continue;
            }
            let text = leading.to_string();
            if text.len() > sig {
                dec_exp += (text.len() - sig) as i64;
                continue;
            }
            if text.len() < sig {
                dec_exp -= (sig - text.len()) as i64;
                continue;
            }
            let sign = if self.is_negative() { "-" } else { "" };
            return if sig == 1 {
                format!("{sign}{text}e{dec_exp}")
            } else {
                format!("{sign}{}.{}e{dec_exp}", &text[..1], &text[1..])
            };
        }
    }

    /// Parse a plain decimal literal (`-12.34`, `0.5`, `7`) at the context's
    /// working precision.
    pub fn parse_decimal(text: &str, ctx: &PrecisionContext) -> Result<Self> {
        let bad = || Error::InvalidDecimal(text.to_string());
        let stripped = text.trim();
        let (negative, body) = match stripped.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, stripped),
        };
        let (int_text, frac_text) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_text.is_empty() && frac_text.is_empty() {
            return Err(bad());
        }
        let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(int_text) || !all_digits(frac_text) {
            return Err(bad());
        }
        let joined = format!("{int_text}{frac_text}");
        let numerator: BigUint = joined.parse().map_err(|_| bad())?;
        let num = Self::from_biguint_parts(negative, numerator, 0);
        if frac_text.is_empty() {
            Ok(num)
        } else {
            let den = Self::from_biguint_parts(false, pow10(frac_text.len()), 0);
            num.div(&den, ctx)
        }
    }
}
