//! Segmented parity sieve for Ω_P and the empirical averages
//! S_P(x) = (1/x) Σ_{n≤x} Λ_P^H(n).
//!
//! Parities are produced by flipping one bit per multiple of each prime
//! power p^k in the window, so no integer is ever factored. Memory is
//! proportional to the segment, not to x.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::{PrimeSet, Rational, Sign, ShiftSet};
use crate::error::{Error, Result};

pub const DEFAULT_SEGMENT_LENGTH: u64 = 1 << 22;

const WIDTH_LIMIT: u64 = i64::MAX as u64;

/// A window of Ω parities: bit `m - start` is set iff the counted quantity
/// at `m` is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityBits {
    start: u64,
    len: usize,
    words: Vec<u64>,
}

impl ParityBits {
    fn zeroed(start: u64, len: usize) -> Self {
        // one spare word so shifted reads never run off the end
        ParityBits {
            start,
            len,
            words: vec![0; len / 64 + 3],
        }
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Parity at offset `i` from the window start.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "offset {i} outside window of length {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Parity at the integer `m`.
    pub fn at(&self, m: u64) -> bool {
        self.get((m - self.start) as usize)
    }

    pub fn sign_at(&self, m: u64) -> Sign {
        Sign::from_parity(self.at(m))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    /// Number of set bits among the first `n` offsets.
    pub fn count_ones_prefix(&self, n: usize) -> u64 {
        let n = n.min(self.len);
        let full = n / 64;
        let mut c: u64 = self.words[..full].iter().map(|w| w.count_ones() as u64).sum();
        if n % 64 != 0 {
            c += (self.words[full] & ((1u64 << (n % 64)) - 1)).count_ones() as u64;
        }
        c
    }

    pub fn count_ones(&self) -> u64 {
        self.count_ones_prefix(self.len)
    }

    fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// 64 bits starting at offset `bit`.
    fn word_at(&self, bit: usize) -> u64 {
        let (w, s) = (bit / 64, bit % 64);
        if s == 0 {
            self.words[w]
        } else {
            (self.words[w] >> s) | (self.words[w + 1] << (64 - s))
        }
    }

    fn clear_tail(&mut self) {
        let full = self.len / 64;
        if self.len % 64 != 0 {
            self.words[full] &= (1u64 << (self.len % 64)) - 1;
        } else {
            self.words[full] = 0;
        }
        for w in &mut self.words[full + 1..] {
            *w = 0;
        }
    }
}

fn check_window(start: u64, end: u64) -> Result<()> {
    if start == 0 || start >= end {
        return Err(Error::EmptyRange { start, end });
    }
    if end - 1 > WIDTH_LIMIT {
        return Err(Error::Overflow {
            value: start,
            shift: end - start,
        });
    }
    Ok(())
}

fn sieve_window(set: &PrimeSet, start: u64, end: u64) -> ParityBits {
    let mut bits = ParityBits::zeroed(start, (end - start) as usize);
    for p in set.iter() {
        let mut pk = p as u128;
        while pk < end as u128 {
            let q = pk as u64;
            let first = start.div_ceil(q) * q;
            let mut i = first - start;
            let len = end - start;
            while i < len {
                bits.flip(i as usize);
                i += q;
            }
            pk *= p as u128;
        }
    }
    bits
}

/// Ω_P(m) mod 2 for every m in `[start, end)`.
pub fn sieve_parities(set: &PrimeSet, start: u64, end: u64) -> Result<ParityBits> {
    check_window(start, end)?;
    Ok(sieve_window(set, start, end))
}

fn combine_shifts(raw: &ParityBits, shifts: &ShiftSet, start: u64, len: usize) -> ParityBits {
    let mut out = ParityBits::zeroed(start, len);
    let nwords = len.div_ceil(64);
    for h in shifts.iter() {
        let base = (start + h - raw.start) as usize;
        for (w, slot) in out.words[..nwords].iter_mut().enumerate() {
            *slot ^= raw.word_at(base + 64 * w);
        }
    }
    out.clear_tail();
    out
}

/// Λ_P^H(n) parities for every n in `[start, end)`: the XOR of the Ω_P
/// parities at n + h over h ∈ H.
pub fn shifted_parities(set: &PrimeSet, shifts: &ShiftSet, start: u64, end: u64) -> Result<ParityBits> {
    let reach = shifts.max().unwrap_or(0);
    check_window(start, end)?;
    check_window(start, end.checked_add(reach).ok_or(Error::Overflow { value: end, shift: reach })?)?;
    let raw = sieve_window(set, start, end + reach);
    Ok(combine_shifts(&raw, shifts, start, (end - start) as usize))
}

/// Parameters for [`running_average`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveConfig {
    pub segment_length: u64,
    pub x_max: u64,
    /// A sample is emitted at every multiple of the stride, and at `x_max`.
    pub sample_stride: u64,
    /// Worker threads for segment sieving; 1 runs on the calling thread.
    pub threads: usize,
}

impl SieveConfig {
    pub fn new(x_max: u64) -> Self {
        SieveConfig {
            segment_length: DEFAULT_SEGMENT_LENGTH,
            x_max,
            sample_stride: x_max.max(1),
            threads: 1,
        }
    }

    pub fn with_stride(mut self, stride: u64) -> Self {
        self.sample_stride = stride;
        self
    }

    pub fn with_segment_length(mut self, len: u64) -> Self {
        self.segment_length = len;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn validate(&self, shifts: &ShiftSet) -> Result<()> {
        let reach = shifts.max().unwrap_or(0);
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.x_max == 0 {
            return bad("x_max must be positive".into());
        }
        if self.sample_stride == 0 {
            return bad("sample_stride must be positive".into());
        }
        if self.threads == 0 {
            return bad("threads must be positive".into());
        }
        if self.segment_length <= reach {
            return bad(format!(
                "segment_length {} must exceed max shift {reach}",
                self.segment_length
            ));
        }
        if self.segment_length > 1 << 40 {
            return bad(format!("segment_length {} too large", self.segment_length));
        }
        if self.x_max.checked_add(reach).map_or(true, |e| e > WIDTH_LIMIT) {
            return bad(format!("x_max + max(H) exceeds {WIDTH_LIMIT}"));
        }
        Ok(())
    }

    fn sample_points(&self) -> Vec<u64> {
        let mut xs: Vec<u64> = (1..=self.x_max / self.sample_stride)
            .map(|k| k * self.sample_stride)
            .collect();
        if xs.last() != Some(&self.x_max) {
            xs.push(self.x_max);
        }
        xs
    }
}

/// One partial sum: `sum = Σ_{n≤x} Λ_P^H(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sample {
    pub x: u64,
    pub sum: i64,
}

impl Sample {
    /// S_P(x) = sum / x, exactly.
    pub fn average(&self) -> Rational {
        Rational::new(BigInt::from(self.sum), BigInt::from(self.x))
    }

    pub fn average_f64(&self) -> f64 {
        self.sum as f64 / self.x as f64
    }

    /// #{n ≤ x : Λ(n) = −1}.
    pub fn minus_count(&self) -> u64 {
        ((self.x as i64 - self.sum) / 2) as u64
    }
}

/// Partial averages of Λ_P^H at increasing x.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignSeries {
    pub samples: Vec<Sample>,
}

impl SignSeries {
    pub fn last(&self) -> Option<&Sample> {
        self.samples.last()
    }

    /// The sample taken at exactly `x`, if any.
    pub fn at(&self, x: u64) -> Option<&Sample> {
        self.samples
            .binary_search_by_key(&x, |s| s.x)
            .ok()
            .map(|i| &self.samples[i])
    }

    /// CSV with header `x,sum,average`; averages use `digits` significant digits.
    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = String::from("x,sum,average\n");
        for s in &self.samples {
            out.push_str(&format!(
                "{},{},{}\n",
                s.x,
                s.sum,
                crate::report::decimal(&s.average(), digits)
            ));
        }
        out
    }
}

struct SegmentTally {
    minus_total: u64,
    // (x, minus count over n in [segment start, x])
    sample_minus: Vec<(u64, u64)>,
}

fn tally_segment(set: &PrimeSet, shifts: &ShiftSet, start: u64, end: u64, samples: &[u64]) -> SegmentTally {
    let reach = shifts.max().unwrap_or(0);
    let raw = sieve_window(set, start, end + reach);
    let len = (end - start) as usize;
    let combined = combine_shifts(&raw, shifts, start, len);
    let lo = samples.partition_point(|&x| x < start);
    let hi = samples.partition_point(|&x| x < end);
    SegmentTally {
        minus_total: combined.count_ones(),
        sample_minus: samples[lo..hi]
            .iter()
            .map(|&x| (x, combined.count_ones_prefix((x - start + 1) as usize)))
            .collect(),
    }
}

/// Exact partial sums of Λ_P^H(n) for n ≤ x at the configured sample points.
///
/// Segments are sieved independently (in parallel when `cfg.threads > 1`)
/// and merged in order, so the output does not depend on the segment
/// length or thread count.
pub fn running_average(set: &PrimeSet, shifts: &ShiftSet, cfg: &SieveConfig) -> Result<SignSeries> {
    cfg.validate(shifts)?;
    let samples = cfg.sample_points();
    let seg = cfg.segment_length;
    let segments: Vec<(u64, u64)> = (0..cfg.x_max.div_ceil(seg))
        .map(|k| (1 + k * seg, (1 + (k + 1) * seg).min(cfg.x_max + 1)))
        .collect();

    let tallies: Vec<SegmentTally> = if cfg.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        pool.install(|| {
            segments
                .par_iter()
                .map(|&(a, b)| tally_segment(set, shifts, a, b, &samples))
                .collect()
        })
    } else {
        segments
            .iter()
            .map(|&(a, b)| tally_segment(set, shifts, a, b, &samples))
            .collect()
    };

    let mut out = SignSeries::default();
    let mut minus_before = 0u64;
    for t in tallies {
        for (x, m) in t.sample_minus {
            let minus = minus_before + m;
            out.samples.push(Sample {
                x,
                sum: x as i64 - 2 * minus as i64,
            });
        }
        minus_before += t.minus_total;
    }
    Ok(out)
}

/// #{n ≤ x : Λ_P^H(n) = −1} / x.
pub fn empirical_density(set: &PrimeSet, shifts: &ShiftSet, x: u64) -> Result<Rational> {
    let cfg = SieveConfig::new(x);
    let series = running_average(set, shifts, &cfg)?;
    let last = series.last().expect("x_max is always sampled");
    Ok(Rational::new(
        BigInt::from(last.minus_count()),
        BigInt::from(x),
    ))
}
