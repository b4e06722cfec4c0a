//! Cartesian/polar conversion with a canonical angle range of [0, 2pi).
//!
//! atan2, sin and cos come from the `libm` crate rather than the platform
//! libm so conversions are bit-identical on every target.

use crate::error::CodecError;

/// A complex number as two binary64 components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex64 {
    pub re: f64,
    pub im: f64,
}

impl Complex64 {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Polar form: modulus `r >= 0` and angle `phi` in radians with
/// `0 <= phi < 2pi`; by convention `phi == 0` whenever `r == 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub phi: f64,
}

/// Converts to polar form. The modulus is the literal sqrt(x^2 + y^2) (safe
/// far beyond the 9.2e18 component scale this codec targets), the angle a
/// quadrant-correct arctangent shifted into [0, 2pi).
///
/// Errors on non-finite components.
pub fn to_polar(c: Complex64) -> Result<PolarPoint, CodecError> {
    if !c.re.is_finite() {
        return Err(CodecError::NonFinite(c.re));
    }
    if !c.im.is_finite() {
        return Err(CodecError::NonFinite(c.im));
    }
    let r = (c.re * c.re + c.im * c.im).sqrt();
    let mut phi = libm::atan2(c.im, c.re);
    if phi < 0.0 {
        phi += std::f64::consts::TAU;
    }
    // Canonicalize the leftovers to an exact +0.0: a -0.0 angle, an angle that
    // rounded up to exactly 2pi, and any signed-zero origin (r == 0 forces
    // phi == 0, and keeps the angle's sign bit clear for the pairing layer).
    if phi == 0.0 || phi >= std::f64::consts::TAU || r == 0.0 {
        phi = 0.0;
    }
    Ok(PolarPoint { r, phi })
}

/// Converts back to Cartesian form: x = r cos(phi), y = r sin(phi).
pub fn to_cartesian(p: PolarPoint) -> Complex64 {
    Complex64::new(p.r * libm::cos(p.phi), p.r * libm::sin(p.phi))
}
