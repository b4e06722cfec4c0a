//! Error types shared across the codec pipeline.

use thiserror::Error;

/// Failures surfaced by the core codec operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CodecError {
    /// An exact pairing result does not fit in 128 bits.
    #[error("pairing overflow: exact result does not fit in 128 bits")]
    PairingOverflow,
    /// An unpaired component does not fit back into 64 bits; the input was
    /// not produced by the matching pair operation.
    #[error("malformed code: recovered component does not fit in 64 bits")]
    MalformedCode,
    /// A non-finite component reached an operation defined on finite values.
    #[error("non-finite component: {0}")]
    NonFinite(f64),
    /// A sweep configuration violates its invariants.
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
}
