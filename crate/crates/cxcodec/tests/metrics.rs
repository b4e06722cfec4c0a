use cxcodec::coords::Complex64;
use cxcodec::error::CodecError;
use cxcodec::metrics::{error, ErrorStats};
use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn worked_example_error_is_exact() {
    let original = c(6.7771673222051697e18, 3.6003875414142131e18);
    let decoded = c(6.7771673222051697e18, 3.6003875414142126e18);
    let eps = error(original, decoded).unwrap();
    assert_eq!(eps, 6.671736816409259e-17);
    assert_eq!(eps.to_bits(), 4364897195249767151);
}

#[test]
fn simple_distances() {
    assert_eq!(error(c(1.0, 2.0), c(1.0, 2.0)).unwrap(), 0.0);
    // Distance 1 at modulus 5.
    assert_eq!(error(c(3.0, 4.0), c(3.0, 3.0)).unwrap(), 0.2);
}

#[test]
fn reflexive_on_any_finite_input() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..10_000 {
        let v = c(f64::from_bits(rng.next_u64()), f64::from_bits(rng.next_u64()));
        if !v.is_finite() {
            continue;
        }
        assert_eq!(error(v, v).unwrap(), 0.0);
    }
}

#[test]
fn normalization_is_one_sided() {
    // Same numerator, different denominator: the argument order matters.
    let a = c(3.0, 4.0);
    let b = c(3.0, 3.0);
    assert_ne!(error(a, b).unwrap(), error(b, a).unwrap());
}

#[test]
fn origin_falls_back_to_unnormalized_distance() {
    // Equal up to zero signs: no error.
    assert_eq!(error(c(0.0, 0.0), c(0.0, 0.0)).unwrap(), 0.0);
    assert_eq!(error(c(0.0, 0.0), c(-0.0, 0.0)).unwrap(), 0.0);
    assert_eq!(error(c(-0.0, -0.0), c(0.0, 0.0)).unwrap(), 0.0);
    // Otherwise the plain Euclidean distance.
    assert_eq!(error(c(0.0, 0.0), c(3.0, 4.0)).unwrap(), 5.0);
}

#[test]
fn non_finite_components_are_rejected() {
    let good = c(1.0, 1.0);
    for bad in [c(f64::NAN, 0.0), c(0.0, f64::INFINITY), c(f64::NEG_INFINITY, f64::NAN)] {
        assert!(matches!(error(bad, good), Err(CodecError::NonFinite(_))));
        assert!(matches!(error(good, bad), Err(CodecError::NonFinite(_))));
    }
}

#[test]
fn stats_update_tracks_count_max_and_mean() {
    let mut s = ErrorStats::new();
    assert_eq!((s.count, s.max_error, s.mean()), (0, 0.0, 0.0));

    s.update(0.5);
    assert_eq!((s.count, s.max_error, s.mean()), (1, 0.5, 0.5));

    s.update(0.1);
    assert_eq!((s.count, s.max_error, s.mean()), (2, 0.5, 0.3));
}

#[test]
fn merge_adds_counts_and_sums_and_maxes_maxes() {
    let mut a = ErrorStats::new();
    a.update(0.25);
    a.update(0.75);
    let mut b = ErrorStats::new();
    b.update(0.5);
    b.update(0.5);
    b.update(1.5);

    let merged = a.merge(b);
    assert_eq!(merged.count, 5);
    assert_eq!(merged.max_error, 1.5);
    assert_eq!(merged.sum_error, 3.5);

    // Merging with the empty aggregate is the identity.
    assert_eq!(a.merge(ErrorStats::new()), a);
    assert_eq!(ErrorStats::new().merge(a), a);
}

#[test]
fn merge_is_associative_up_to_final_rounding() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..1_000 {
        let mut parts = [ErrorStats::new(), ErrorStats::new(), ErrorStats::new()];
        for part in &mut parts {
            for _ in 0..(rng.next_u64() % 8) {
                let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                part.update(u * 1e-15);
            }
        }
        let [a, b, c] = parts;
        let left = a.merge(b).merge(c);
        let right = a.merge(b.merge(c));
        assert_eq!(left.count, right.count);
        assert_eq!(left.max_error.to_bits(), right.max_error.to_bits());
        // Each association order rounds twice, so the two sums can sit up to
        // two roundings apart (a little more across a power-of-two boundary).
        let ulps = (left.sum_error.to_bits() as i64 - right.sum_error.to_bits() as i64).abs();
        assert!(ulps <= 4, "sum re-association drifted {ulps} ulps");
    }
}
