//! Relative roundtrip error and its streaming aggregation.

use crate::coords::Complex64;
use crate::error::CodecError;

/// Relative decode error: the Euclidean distance between `original` and
/// `decoded`, divided by the modulus of `original`.
///
/// At the origin the quotient is undefined; the distance is returned
/// unnormalized instead (0 when the two are equal, with -0.0 == +0.0), which
/// keeps the metric total. Errors on non-finite components.
pub fn error(original: Complex64, decoded: Complex64) -> Result<f64, CodecError> {
    for v in [original.re, original.im, decoded.re, decoded.im] {
        if !v.is_finite() {
            return Err(CodecError::NonFinite(v));
        }
    }
    let dx = original.re - decoded.re;
    let dy = original.im - decoded.im;
    let dist = (dx * dx + dy * dy).sqrt();
    let r1 = (original.re * original.re + original.im * original.im).sqrt();
    if r1 == 0.0 {
        Ok(dist)
    } else {
        Ok(dist / r1)
    }
}

/// Streaming max/mean aggregate of nonnegative error samples.
///
/// Merging is associative and commutative in count and max (sums can differ
/// by final-rounding ulps under re-association), so shards can accumulate
/// locally and reduce at the end.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ErrorStats {
    pub count: u64,
    pub max_error: f64,
    pub sum_error: f64,
}

impl ErrorStats {
    pub fn new() -> Self {
        Self::default()
    }

    /// Folds one error sample into the aggregate.
    pub fn update(&mut self, eps: f64) {
        debug_assert!(eps >= 0.0);
        self.count += 1;
        if eps > self.max_error {
            self.max_error = eps;
        }
        self.sum_error += eps;
    }

    /// Combines two aggregates: counts add, maxes max, sums add.
    pub fn merge(self, other: Self) -> Self {
        Self {
            count: self.count + other.count,
            max_error: self.max_error.max(other.max_error),
            sum_error: self.sum_error + other.sum_error,
        }
    }

    /// Arithmetic mean; 0 for an empty aggregate.
    pub fn mean(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.sum_error / self.count as f64
        }
    }
}
