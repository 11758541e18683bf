//! Arbitrary-precision real arithmetic with explicit error contracts.
//!
//! [`BigReal`] is a binary floating significand with an explicit exponent.
//! Every operation rounds to nearest at `precision_bits + guard_bits`, so a
//! result is within relative error `2^(1-p)` of the exact value. The module
//! also carries the two primitives everything downstream needs: a Machin-type
//! pi reference and a Taylor arctangent for small arguments.

mod arctan;
mod real;
mod render;

pub use arctan::{arctan_taylor, pi_reference, pi_reference_euler};
pub use real::BigReal;
pub use render::RenderMode;

use crate::error::{Error, Result};

/// Working precision and rounding policy shared by all arithmetic.
///
/// `guard_bits` extra bits are carried internally so that chains of many
/// operations cannot erode the certified `precision_bits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionContext {
    precision_bits: u32,
    guard_bits: u32,
}

impl PrecisionContext {
    /// Smallest accepted working precision.
    pub const MIN_PRECISION_BITS: u32 = 16;
    /// Guard bits carried by [`PrecisionContext::new`].
    pub const DEFAULT_GUARD_BITS: u32 = 32;

    /// Context with the default guard bits.
    pub fn new(precision_bits: u32) -> Result<Self> {
        Self::with_guard_bits(precision_bits, Self::DEFAULT_GUARD_BITS)
    }

    /// Context with explicit guard bits.
    pub fn with_guard_bits(precision_bits: u32, guard_bits: u32) -> Result<Self> {
        if precision_bits < Self::MIN_PRECISION_BITS {
            return Err(Error::PrecisionBelowMinimum {
                bits: precision_bits,
                min: Self::MIN_PRECISION_BITS,
            });
        }
        Ok(Self {
            precision_bits,
            guard_bits,
        })
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn guard_bits(&self) -> u32 {
        self.guard_bits
    }

    /// Bits carried by internal arithmetic: `precision_bits + guard_bits`.
    pub fn working_bits(&self) -> u64 {
        u64::from(self.precision_bits) + u64::from(self.guard_bits)
    }
}
