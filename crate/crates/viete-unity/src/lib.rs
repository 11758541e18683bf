//! Arbitrary-precision study of the nested-radical recurrence set
//!
//! ```text
//! a_1 = sqrt(2),            a_k = sqrt(2 + a_{k-1}),
//! b_k = sqrt(2 - a_k) / a_{k+1},
//! c_1 = b_1,                c_k = (c_{k-1} + b_k) / (1 - c_{k-1} b_k),
//! ```
//!
//! whose composed argument `c_k` climbs to 1 while the scaled error term
//! `2^{k+1} (1 - c_k)` closes in on pi. The crate provides
//!
//! - [`precision`]: a binary big-float with guard bits, decimal rendering,
//!   a Taylor arctangent and a Machin-type pi reference;
//! - [`sequence`]: the recurrence as an advanceable state, in both the
//!   literal formulation and a cancellation-safe residual form, with the
//!   closed form `(1 - b_k)/(1 + b_k)` as an independent oracle;
//! - [`estimators`]: the product, arctangent-sum and unity-limit pi
//!   estimates plus the tail identities behind them;
//! - [`report`]: convergence tables, series data, the naive-vs-stable
//!   precision study and CSV/TSV/markdown emission;
//! - [`checks`]: the bundled invariant suite;
//! - [`cli`]: the `viete` binary's argument handling and dispatch.
//!
//! The `examples/` directory walks through each capability; `viete check`
//! runs the whole invariant suite from the command line.

pub mod checks;
pub mod cli;
mod error;
pub mod estimators;
pub mod precision;
pub mod report;
pub mod sequence;

pub use error::{Error, Result};
pub use precision::{BigReal, PrecisionContext, RenderMode};
pub use sequence::{EvalMode, SequenceState};
