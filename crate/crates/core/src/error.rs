use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),

    #[error("index {index} out of range for {order} vertices")]
    IndexOutOfRange { index: u64, order: u64 },

    /// The enclosure never isolated a unique integer before the precision cap.
    #[error("precision exhausted: no certified integer at {cap_bits} bits")]
    PrecisionExhausted { cap_bits: u32 },

    /// The current working precision cannot decide a sign or domain test.
    /// The certification loop retries at a higher precision.
    #[error("inconclusive at {bits} bits: {what}")]
    Inconclusive { bits: u32, what: &'static str },

    #[error("argument outside the function domain: {0}")]
    Domain(&'static str),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
