//! Pack a complex number into a single wide natural number — and get it
//! back.
//!
//! Four methods are provided. `cartesian-interleave` bit-interleaves the
//! IEEE 754 patterns of the real and imaginary parts into one 128-bit value
//! and is exactly invertible. The three polar methods convert to modulus and
//! angle first and then combine the two bit patterns with Morton
//! interleaving, Cantor pairing, or Szudzik pairing; the pairing layer is
//! exact, so their (tiny) roundtrip error comes entirely from the coordinate
//! conversion.
//!
//! ```
//! use cxcodec::representation::{decode, encode};
//! use cxcodec::{Complex64, Method};
//!
//! let c = Complex64::new(1.5, -2.25);
//! let rep = encode(c, Method::CartesianInterleave).unwrap();
//! assert_eq!(decode(rep).unwrap(), c);
//! ```

pub mod coords;
pub mod dataset;
pub mod error;
pub mod experiment;
pub mod float_bits;
pub mod literal;
pub mod metrics;
pub mod pairing;
pub mod representation;

pub use coords::{Complex64, PolarPoint};
pub use error::CodecError;
pub use representation::{Method, Representation};
