//! Textual complex literals.
//!
//! Grammar: `<real><sign><imag>i` with optional sign on the real part and
//! scientific notation in either component — `1.5-2.25i`, `-0.5+1i`,
//! `6.777e18+3.6e18i`. Pure-real (`3.5`) and pure-imaginary (`2i`, `-i`)
//! forms are accepted. No whitespace anywhere.

use thiserror::Error;

use crate::coords::Complex64;

/// Parse failure with the byte offset of the offending character or
/// component.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid complex literal at offset {offset}: {reason}")]
pub struct ParseComplexError {
    pub offset: usize,
    pub reason: &'static str,
}

fn fail(offset: usize, reason: &'static str) -> ParseComplexError {
    ParseComplexError { offset, reason }
}

/// Parses a component with `f64`'s grammar (correctly-rounded nearest-even).
/// The character whitelist in [`parse_complex`] has already excluded the
/// `inf`/`nan` spellings `f64::from_str` would otherwise admit.
fn parse_component(text: &str, offset: usize, reason: &'static str) -> Result<f64, ParseComplexError> {
    text.parse::<f64>().map_err(|_| fail(offset, reason))
}

/// Parses a complex literal into its exact binary64 components.
pub fn parse_complex(text: &str) -> Result<Complex64, ParseComplexError> {
    if text.is_empty() {
        return Err(fail(0, "empty literal"));
    }
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            return Err(fail(i, "whitespace is not allowed"));
        }
        if !matches!(ch, '0'..='9' | '.' | '+' | '-' | 'e' | 'E' | 'i') {
            return Err(fail(i, "unexpected character"));
        }
    }

    let Some(body) = text.strip_suffix('i') else {
        let re = parse_component(text, 0, "malformed real component")?;
        return Ok(Complex64::new(re, 0.0));
    };

    // The last +/- that is neither the leading sign nor an exponent sign
    // separates real from imaginary; without one the literal is pure
    // imaginary.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));

    let (re, imag_text, imag_offset) = match split {
        Some(i) => {
            let re = parse_component(&body[..i], 0, "malformed real component")?;
            (re, &body[i..], i)
        }
        None => (0.0, body, 0),
    };

    let im = match imag_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => parse_component(imag_text, imag_offset, "malformed imaginary component")?,
    };
    Ok(Complex64::new(re, im))
}

/// Canonical rendering: shortest-roundtrip scientific components, explicit
/// sign separator, trailing `i`. Parsing the result reproduces the input
/// bit-for-bit, so render-parse is a fixed point.
pub fn render_complex(c: Complex64) -> String {
    format!("{:e}{:+e}i", c.re, c.im)
}
