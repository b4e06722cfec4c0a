//! Bit-exact mapping between binary64 values and 64-bit naturals.
//!
//! The bit pattern is read as an *unsigned* integer: bit 63 is the sign,
//! bits 62..52 the exponent field, bits 51..0 the significand field. Every
//! pattern — including NaN payloads, infinities and -0.0 — round-trips.

/// Returns the IEEE 754 bit pattern of `v` as an unsigned 64-bit natural.
///
/// Nonnegative finite values always map below 2^63 (sign bit clear), and the
/// mapping is order-preserving on them: `0 <= a < b` implies
/// `to_bits(a) < to_bits(b)`.
pub fn to_bits(v: f64) -> u64 {
    v.to_bits()
}

/// Exact inverse of [`to_bits`]; every 64-bit pattern is a valid input.
pub fn from_bits(n: u64) -> f64 {
    f64::from_bits(n)
}

/// Renders `n` as a fixed-width 64-character binary string, most significant
/// bit first, leading zeros included.
pub fn to_bitstring(n: u64) -> String {
    format!("{n:064b}")
}
