//! Seeded random sweep over the encoding methods, plus a single-input trace
//! listing every intermediate value.
//!
//! Reproducibility contract: the sample stream is ChaCha8 (rand_chacha),
//! seeded with `seed_from_u64`. Sample j occupies stream words [4j, 4j+4) —
//! two u64 draws of two 32-bit words each — so any contiguous sample range
//! can be generated independently by seeking, and the sampled set depends
//! only on (seed, sample_count), never on the shard layout.

use std::collections::BTreeMap;
use std::thread;

use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coords::{to_polar, Complex64};
use crate::error::CodecError;
use crate::float_bits::{to_bits, to_bitstring};
use crate::metrics::{error, ErrorStats};
use crate::pairing;
use crate::representation::{decode, encode, Method, Representation};

const WORDS_PER_SAMPLE: u128 = 4;

/// Sweep parameters. The default bound is the largest signed 64-bit integer
/// as a binary64, so components span the full long-integer range.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub seed: u64,
    pub sample_count: u64,
    pub component_bound: f64,
    pub methods: Vec<Method>,
    pub shard_count: u32,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            sample_count: 1_000_000,
            component_bound: 9.223372036854775807e18,
            methods: Method::ALL.to_vec(),
            shard_count: 1,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CodecError> {
        if self.sample_count == 0 {
            return Err(CodecError::InvalidConfig("sample_count must be at least 1"));
        }
        if !self.component_bound.is_finite() || self.component_bound <= 0.0 {
            return Err(CodecError::InvalidConfig(
                "component_bound must be positive and finite",
            ));
        }
        if self.shard_count == 0 {
            return Err(CodecError::InvalidConfig("shard_count must be at least 1"));
        }
        Ok(())
    }
}

/// Maps one u64 draw onto [-bound, bound). The 53 high bits give
/// u in [0, 1); u -> 2u - 1 is exact, so only the final multiply rounds and
/// the result is identical on every platform.
fn component_from(x: u64, bound: f64) -> f64 {
    let u = (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    (2.0 * u - 1.0) * bound
}

fn rng_at(seed: u64, sample_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_word_pos(WORDS_PER_SAMPLE * sample_index as u128);
    rng
}

/// Deterministic stream of complex samples; see the module docs for the
/// stream layout.
pub struct Samples {
    rng: ChaCha8Rng,
    remaining: u64,
    bound: f64,
}

impl Iterator for Samples {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let re = component_from(self.rng.next_u64(), self.bound);
        let im = component_from(self.rng.next_u64(), self.bound);
        Some(Complex64::new(re, im))
    }
}

fn sample_range(seed: u64, bound: f64, start: u64, end: u64) -> Samples {
    Samples { rng: rng_at(seed, start), remaining: end - start, bound }
}

/// The full sample stream for `cfg`: exactly `sample_count` values, each
/// component uniform over [-component_bound, +component_bound).
pub fn generate(cfg: &SweepConfig) -> Result<Samples, CodecError> {
    cfg.validate()?;
    Ok(sample_range(cfg.seed, cfg.component_bound, 0, cfg.sample_count))
}

fn shard_bound(n: u64, k: u64, i: u64) -> u64 {
    ((n as u128 * i as u128) / k as u128) as u64
}

fn run_shard(
    cfg: &SweepConfig,
    methods: &[Method],
    start: u64,
    end: u64,
) -> Result<Vec<ErrorStats>, CodecError> {
    let mut stats = vec![ErrorStats::new(); methods.len()];
    for c in sample_range(cfg.seed, cfg.component_bound, start, end) {
        for (m, s) in methods.iter().zip(stats.iter_mut()) {
            let decoded = decode(encode(c, *m)?)?;
            s.update(error(c, decoded)?);
        }
    }
    Ok(stats)
}

/// Runs the sweep: every sample is encoded, decoded and error-measured under
/// every requested method (independently per method).
///
/// Shards split the sample range contiguously and run on their own threads;
/// the shard layout cannot change which samples are drawn, so max and count
/// are shard-invariant and only the sum's rounding order varies.
pub fn run_sweep(cfg: &SweepConfig) -> Result<BTreeMap<Method, ErrorStats>, CodecError> {
    cfg.validate()?;
    let mut methods: Vec<Method> = Vec::new();
    for &m in &cfg.methods {
        if !methods.contains(&m) {
            methods.push(m);
        }
    }

    let k = cfg.shard_count as u64;
    let ranges: Vec<(u64, u64)> = (0..k)
        .map(|i| (shard_bound(cfg.sample_count, k, i), shard_bound(cfg.sample_count, k, i + 1)))
        .collect();

    let shard_results: Vec<Result<Vec<ErrorStats>, CodecError>> = thread::scope(|scope| {
        let methods = &methods;
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(start, end)| scope.spawn(move || run_shard(cfg, methods, start, end)))
            .collect();
        // Join in spawn order so the merge sequence is deterministic.
        handles
            .into_iter()
            .map(|h| h.join().expect("shard thread panicked"))
            .collect()
    });

    let mut merged = vec![ErrorStats::new(); methods.len()];
    for shard in shard_results {
        for (acc, s) in merged.iter_mut().zip(shard?) {
            *acc = acc.merge(s);
        }
    }
    Ok(methods.into_iter().zip(merged).collect())
}

/// An ordered list of (label, value) lines covering every intermediate of a
/// single encode/decode cycle under all four methods.
///
/// Label order is fixed: `re`, `im`, `r`, `phi`; the same four as
/// `<name> bits` long integers and `<name> bits binary` 64-bit strings; one
/// `<method>` line per method holding the representation value; then
/// `<method> re`, `<method> im`, `<method> error` for each method. Floats
/// render in shortest-roundtrip scientific notation, integers in decimal.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    pub entries: Vec<(String, String)>,
}

impl TraceRecord {
    /// The value printed for `label`, if present.
    pub fn get(&self, label: &str) -> Option<&str> {
        self.entries.iter().find(|(l, _)| l == label).map(|(_, v)| v.as_str())
    }
}

/// Computes every intermediate for one complex number. The polar methods
/// share the single coordinate conversion shown on the `r`/`phi` lines.
pub fn trace(c: Complex64) -> Result<TraceRecord, CodecError> {
    let polar = to_polar(c)?;
    let named = [("re", c.re), ("im", c.im), ("r", polar.r), ("phi", polar.phi)];

    let mut entries: Vec<(String, String)> = Vec::new();
    for (label, v) in named {
        entries.push((label.to_string(), format!("{v:e}")));
    }
    for (label, v) in named {
        entries.push((format!("{label} bits"), to_bits(v).to_string()));
    }
    for (label, v) in named {
        entries.push((format!("{label} bits binary"), to_bitstring(to_bits(v))));
    }

    let (r_bits, phi_bits) = (to_bits(polar.r), to_bits(polar.phi));
    let values = [
        (Method::CartesianInterleave, pairing::interleave(to_bits(c.re), to_bits(c.im))),
        (Method::PolarInterleave, pairing::interleave(r_bits, phi_bits)),
        (Method::PolarCantor, pairing::cantor_pair(r_bits, phi_bits)?),
        (Method::PolarSzudzik, pairing::szudzik_pair(r_bits, phi_bits)),
    ];
    for (m, v) in values {
        entries.push((m.name().to_string(), v.to_string()));
    }
    for (m, v) in values {
        let decoded = decode(Representation { method: m, value: v })?;
        let eps = error(c, decoded)?;
        entries.push((format!("{} re", m.name()), format!("{:e}", decoded.re)));
        entries.push((format!("{} im", m.name()), format!("{:e}", decoded.im)));
        entries.push((format!("{} error", m.name()), format!("{eps:e}")));
    }
    Ok(TraceRecord { entries })
}
