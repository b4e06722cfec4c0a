use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2, TAU};

use cxcodec::coords::{to_cartesian, to_polar, Complex64, PolarPoint};
use cxcodec::error::CodecError;
use cxcodec::experiment::{generate, SweepConfig};
use cxcodec::metrics::error;
use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RE: f64 = 6.7771673222051697e18;
const IM: f64 = 3.6003875414142131e18;
const R_BITS: u64 = 4889396296485818748;
const PHI_BITS: u64 = 4602468698391823727;
const DECODED_IM_BITS: u64 = 4884430403359071802;

#[test]
fn worked_example_converts_exactly() {
    let p = to_polar(Complex64::new(RE, IM)).unwrap();
    assert_eq!(p.r.to_bits(), R_BITS);
    assert_eq!(p.r, 7.67416362618991e18);
    assert_eq!(p.phi.to_bits(), PHI_BITS);
    assert_eq!(p.phi, 0.4883359535588942);

    let c = to_cartesian(p);
    assert_eq!(c.re.to_bits(), RE.to_bits());
    assert_eq!(c.im.to_bits(), DECODED_IM_BITS);
    assert_eq!(c.im, 3.6003875414142126e18);
}

#[test]
fn axis_and_quadrant_cases() {
    let east = to_polar(Complex64::new(1.0, 0.0)).unwrap();
    assert_eq!((east.r, east.phi), (1.0, 0.0));

    let north = to_polar(Complex64::new(0.0, 1.0)).unwrap();
    assert_eq!((north.r, north.phi), (1.0, FRAC_PI_2));

    // Third quadrant: atan2 is negative and gets shifted up by 2pi.
    let southwest = to_polar(Complex64::new(-1.0, -1.0)).unwrap();
    assert_eq!(southwest.r, SQRT_2);
    assert_eq!(southwest.phi, 5.0 * FRAC_PI_4);
}

#[test]
fn to_cartesian_trivial_points() {
    assert_eq!(to_cartesian(PolarPoint { r: 1.0, phi: 0.0 }), Complex64::new(1.0, 0.0));
    assert_eq!(to_cartesian(PolarPoint { r: 0.0, phi: 0.0 }), Complex64::new(0.0, 0.0));
}

#[test]
fn origin_and_signed_zeros_canonicalize_to_zero_angle() {
    for (re, im) in [(0.0, 0.0), (-0.0, 0.0), (0.0, -0.0), (-0.0, -0.0)] {
        let p = to_polar(Complex64::new(re, im)).unwrap();
        assert_eq!(p.r.to_bits(), 0, "origin modulus must be +0.0");
        assert_eq!(p.phi.to_bits(), 0, "origin angle must be +0.0 for ({re:?}, {im:?})");
    }

    // atan2 of a negative zero on the positive real axis is -0.0; the
    // canonical angle keeps its sign bit clear.
    let p = to_polar(Complex64::new(1.0, -0.0)).unwrap();
    assert_eq!(p.phi.to_bits(), 0);

    // A tiny negative angle rounds up to exactly 2pi after the shift and
    // must fold back to the bottom of the range.
    let p = to_polar(Complex64::new(1.0, -1e-300)).unwrap();
    assert_eq!(p.phi, 0.0);
    assert!(p.phi.to_bits() < 1 << 63);
}

#[test]
fn non_finite_components_are_rejected() {
    for c in [
        Complex64::new(f64::NAN, 0.0),
        Complex64::new(0.0, f64::INFINITY),
        Complex64::new(f64::NEG_INFINITY, 1.0),
    ] {
        assert!(matches!(to_polar(c), Err(CodecError::NonFinite(_))));
    }
}

#[test]
fn angle_range_and_sign_bits_hold_for_arbitrary_finite_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    while checked < 1_000_000 {
        let c = Complex64::new(f64::from_bits(rng.next_u64()), f64::from_bits(rng.next_u64()));
        if !c.is_finite() {
            continue;
        }
        checked += 1;
        let p = to_polar(c).unwrap();
        assert!(p.r >= 0.0);
        assert!((0.0..TAU).contains(&p.phi));
        // Both moduli and angles keep the IEEE sign bit clear, which is what
        // licenses the Cantor/Szudzik pipelines.
        assert!(p.r.to_bits() < 1 << 63);
        assert!(p.phi.to_bits() < 1 << 63);
    }
}

#[test]
fn roundtrip_error_stays_small_at_codec_scale() {
    let cfg = SweepConfig { seed: 10, ..SweepConfig::default() };
    for c in generate(&cfg).unwrap() {
        let back = to_cartesian(to_polar(c).unwrap());
        let eps = error(c, back).unwrap();
        assert!(eps <= 5e-15, "conversion error {eps:e} too large for {c:?}");
    }
}
