//! Exact pairing functions over wide naturals: Cantor, Szudzik, and Morton
//! bit interleaving, with exact inverses and an exact integer square root.
//!
//! All arithmetic here is integer arithmetic; nothing rounds.

use crate::error::CodecError;

/// Triangular number w(w+1)/2, or `None` if it does not fit in 128 bits.
/// One of the factors is always even, so it is halved before multiplying to
/// keep the computation exact.
fn triangular(w: u128) -> Option<u128> {
    let (a, b) = if w % 2 == 0 { (w / 2, w + 1) } else { (w, (w + 1) / 2) };
    a.checked_mul(b)
}

/// Cantor pairing: C = (p+q)(p+q+1)/2 + q.
///
/// Errors with [`CodecError::PairingOverflow`] when the exact result does not
/// fit in 128 bits; this never happens when both inputs are below 2^63 (any
/// pair of IEEE bit patterns with clear sign bits).
pub fn cantor_pair(p: u64, q: u64) -> Result<u128, CodecError> {
    let s = p as u128 + q as u128;
    triangular(s)
        .and_then(|t| t.checked_add(q as u128))
        .ok_or(CodecError::PairingOverflow)
}

/// Inverse of [`cantor_pair`].
///
/// Recovers w as the largest value with w(w+1)/2 <= c by binary search, which
/// avoids the 131-bit intermediate a literal floor((sqrt(8c+1)-1)/2) would
/// need. Errors with [`CodecError::MalformedCode`] when a recovered component
/// does not fit in 64 bits (c was not produced by `cantor_pair`).
pub fn cantor_unpair(c: u128) -> Result<(u64, u64), CodecError> {
    // Invariant: triangular(lo) <= c < triangular(hi); triangular(2^65) > u128::MAX.
    let mut lo: u128 = 0;
    let mut hi: u128 = 1 << 65;
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        match triangular(mid) {
            Some(t) if t <= c => lo = mid,
            _ => hi = mid,
        }
    }
    let w = lo;
    let q = c - triangular(w).expect("triangular(w) fits: it is <= c");
    let p = w - q;
    if p < (1 << 64) && q < (1 << 64) {
        Ok((p as u64, q as u64))
    } else {
        Err(CodecError::MalformedCode)
    }
}

/// Szudzik pairing: S = q^2 + p when p < q, else S = p^2 + p + q.
///
/// Total on all 64-bit inputs: the extreme pair maps to exactly 2^128 - 1,
/// so the result always fits.
pub fn szudzik_pair(p: u64, q: u64) -> u128 {
    let (p, q) = (p as u128, q as u128);
    if p < q {
        q * q + p
    } else {
        p * p + p + q
    }
}

/// Inverse of [`szudzik_pair`]. Total on all 128-bit inputs: with k = isqrt(s)
/// the remainder s - k^2 is at most 2k, so both components fit in 64 bits.
pub fn szudzik_unpair(s: u128) -> (u64, u64) {
    let k = isqrt(s);
    let rem = s - k * k;
    if rem < k {
        (rem as u64, k as u64)
    } else {
        (k as u64, (rem - k) as u64)
    }
}

/// Spreads the 64 bits of `x` to the even positions of a 128-bit value:
/// bit i of `x` moves to bit 2i.
///
/// Each step doubles the gap between groups and masks the strays:
///   abcd|efgh -> abcd0000efgh (by 32/16/8/4/2/1 with the matching masks).
fn spread(x: u64) -> u128 {
    let mut x = x as u128;
    x = (x | (x << 32)) & 0x0000_0000_ffff_ffff_0000_0000_ffff_ffff;
    x = (x | (x << 16)) & 0x0000_ffff_0000_ffff_0000_ffff_0000_ffff;
    x = (x | (x << 8)) & 0x00ff_00ff_00ff_00ff_00ff_00ff_00ff_00ff;
    x = (x | (x << 4)) & 0x0f0f_0f0f_0f0f_0f0f_0f0f_0f0f_0f0f_0f0f;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333_3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555_5555_5555_5555_5555;
    x
}

/// Inverse of [`spread`]: collects the even-position bits of `x` back into a
/// 64-bit value.
fn compact(x: u128) -> u64 {
    let mut x = x & 0x5555_5555_5555_5555_5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333_3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0f0f_0f0f_0f0f_0f0f_0f0f_0f0f_0f0f_0f0f;
    x = (x | (x >> 4)) & 0x00ff_00ff_00ff_00ff_00ff_00ff_00ff_00ff;
    x = (x | (x >> 8)) & 0x0000_ffff_0000_ffff_0000_ffff_0000_ffff;
    x = (x | (x >> 16)) & 0x0000_0000_ffff_ffff_0000_0000_ffff_ffff;
    x = (x | (x >> 32)) & 0x0000_0000_0000_0000_ffff_ffff_ffff_ffff;
    x as u64
}

/// Morton (Z-order) interleave of two 64-bit values into one 128-bit value.
///
/// Bit i of `a` lands at position 2i+1 and bit i of `b` at position 2i — the
/// first operand takes the more significant slot of each adjacent pair, so
/// `interleave(1, 0) == 2`.
pub fn interleave(a: u64, b: u64) -> u128 {
    (spread(a) << 1) | spread(b)
}

/// Exact inverse of [`interleave`] for every 128-bit value.
pub fn deinterleave(z: u128) -> (u64, u64) {
    (compact(z >> 1), compact(z))
}

/// Exact integer square root: the unique s with s^2 <= n < (s+1)^2.
///
/// Newton iteration seeded from a power of two at least sqrt(n); the sequence
/// decreases monotonically to the floor and every intermediate stays well
/// inside 128 bits.
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let next = (x + n / x) / 2;
        if next >= x {
            return x;
        }
        x = next;
    }
}
