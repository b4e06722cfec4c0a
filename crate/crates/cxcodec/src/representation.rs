//! The four encode/decode pipelines, plus the one-way normalized export.

use std::fmt;
use std::str::FromStr;

use crate::coords::{to_cartesian, to_polar, Complex64, PolarPoint};
use crate::error::CodecError;
use crate::float_bits::{from_bits, to_bits};
use crate::pairing;

/// The four encoding methods. Polar methods pair the bit patterns of
/// (modulus, angle); Cartesian interleaving pairs (re, im) directly and is
/// the only lossless pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    CartesianInterleave,
    PolarInterleave,
    PolarCantor,
    PolarSzudzik,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::CartesianInterleave,
        Method::PolarInterleave,
        Method::PolarCantor,
        Method::PolarSzudzik,
    ];

    /// The hyphenated name used on the CLI and in CSV column suffixes.
    pub fn name(self) -> &'static str {
        match self {
            Method::CartesianInterleave => "cartesian-interleave",
            Method::PolarInterleave => "polar-interleave",
            Method::PolarCantor => "polar-cantor",
            Method::PolarSzudzik => "polar-szudzik",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown method `{s}` (expected one of: cartesian-interleave, \
                     polar-interleave, polar-cantor, polar-szudzik)"
                )
            })
    }
}

/// A method tag plus the single wide natural standing in for a complex
/// number. The value is an opaque label: nothing here does arithmetic on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Representation {
    pub method: Method,
    pub value: u128,
}

/// Encodes a finite complex number under the given method.
///
/// The first operand of every pairing is x (Cartesian) or r (polar); polar
/// methods go through [`to_polar`] and pair the component bit patterns, which
/// stay below 2^63, so the Cantor/Szudzik results stay below 2^127.
pub fn encode(c: Complex64, method: Method) -> Result<Representation, CodecError> {
    if !c.re.is_finite() {
        return Err(CodecError::NonFinite(c.re));
    }
    if !c.im.is_finite() {
        return Err(CodecError::NonFinite(c.im));
    }
    let value = match method {
        Method::CartesianInterleave => pairing::interleave(to_bits(c.re), to_bits(c.im)),
        Method::PolarInterleave => {
            let p = to_polar(c)?;
            pairing::interleave(to_bits(p.r), to_bits(p.phi))
        }
        Method::PolarCantor => {
            let p = to_polar(c)?;
            pairing::cantor_pair(to_bits(p.r), to_bits(p.phi))?
        }
        Method::PolarSzudzik => {
            let p = to_polar(c)?;
            pairing::szudzik_pair(to_bits(p.r), to_bits(p.phi))
        }
    };
    Ok(Representation { method, value })
}

/// Decodes a representation back to a complex number.
///
/// Cartesian interleaving inverts bit-for-bit for every input. Polar methods
/// invert the pairing exactly and then convert coordinates, which is where
/// any loss comes from. Errors with [`CodecError::MalformedCode`] when Cantor
/// unpairing recovers a component wider than 64 bits.
pub fn decode(rep: Representation) -> Result<Complex64, CodecError> {
    match rep.method {
        Method::CartesianInterleave => {
            let (x, y) = pairing::deinterleave(rep.value);
            Ok(Complex64::new(from_bits(x), from_bits(y)))
        }
        Method::PolarInterleave => {
            let (r, phi) = pairing::deinterleave(rep.value);
            Ok(to_cartesian(PolarPoint { r: from_bits(r), phi: from_bits(phi) }))
        }
        Method::PolarCantor => {
            let (r, phi) = pairing::cantor_unpair(rep.value)?;
            Ok(to_cartesian(PolarPoint { r: from_bits(r), phi: from_bits(phi) }))
        }
        Method::PolarSzudzik => {
            let (r, phi) = pairing::szudzik_unpair(rep.value);
            Ok(to_cartesian(PolarPoint { r: from_bits(r), phi: from_bits(phi) }))
        }
    }
}

/// One-way export: the real quotient value / 10^37 rounded to nearest-even
/// binary64. 128-bit values overflow the 53-bit significand, so this cannot
/// be inverted; there is deliberately no denormalize.
pub fn normalize(rep: Representation) -> f64 {
    // Insert the decimal point 37 digits from the right and let the decimal
    // parser do the single correct rounding; dividing two already-rounded
    // floats would round twice.
    let digits = rep.value.to_string();
    let literal = if digits.len() > 37 {
        let (int, frac) = digits.split_at(digits.len() - 37);
        format!("{int}.{frac}")
    } else {
        format!("0.{digits:0>37}")
    };
    literal.parse::<f64>().expect("decimal literal is well-formed")
}
