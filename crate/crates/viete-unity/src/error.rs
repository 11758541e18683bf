use thiserror::Error;

/// Errors from precision arithmetic, sequence evaluation, and reporting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Working precision below the 16-bit minimum.
    #[error("precision below minimum: {bits} bits (need at least {min})")]
    PrecisionBelowMinimum { bits: u32, min: u32 },

    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Square root of a negative value.
    #[error("square root of a negative value")]
    SqrtOfNegative,

    /// The context does not certify the requested number of decimal digits.
    #[error("insufficient precision: {digits} decimal digits are not certified by {precision_bits} bits")]
    InsufficientPrecision { digits: usize, precision_bits: u32 },

    /// Series argument outside the |x| <= 1/2 contract.
    #[error("arctangent argument out of range: |x| must not exceed 1/2")]
    ArctanArgumentTooLarge,

    /// 1 - x*y vanished (or went negative) at working precision.
    #[error("arctangent composition pole: 1 - x*y vanished at working precision")]
    CompositionPole,

    /// Expression rendering requested beyond the size cap.
    #[error("expression for k = {k} exceeds the rendering cap (k <= {max})")]
    ExpressionTooDeep { k: u32, max: u32 },

    /// Malformed expression text.
    #[error("expression syntax error at byte {at}: {message}")]
    ExpressionSyntax { at: usize, message: String },

    /// Malformed decimal literal.
    #[error("invalid decimal literal: {0:?}")]
    InvalidDecimal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
