//! Pointwise evaluation of Ω_P, λ_P and the shifted products Λ_P^H, plus
//! the set types every other module builds on.

use std::fmt;
use std::ops::Mul;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::primes;

/// Exact rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// A finite set of primes, stored sorted. Each element has been checked
/// for primality on construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    pub fn new(mut primes: Vec<u64>) -> Result<Self> {
        primes.sort_unstable();
        for w in primes.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicatePrime(w[0]));
            }
        }
        if let Some(&p) = primes.iter().find(|&&p| !primes::is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeSet { primes })
    }

    pub fn empty() -> Self {
        PrimeSet::default()
    }

    /// Every prime `p <= limit`.
    pub fn up_to(limit: u64) -> Self {
        PrimeSet {
            primes: primes::primes_up_to(limit),
        }
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn max(&self) -> Option<u64> {
        self.primes.last().copied()
    }

    pub fn symmetric_difference(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet {
            primes: sorted_symmetric_difference(&self.primes, &other.primes),
        }
    }

    /// Adds `p`, which must be prime and absent.
    pub fn with(&self, p: u64) -> Result<PrimeSet> {
        let mut v = self.primes.clone();
        v.push(p);
        PrimeSet::new(v)
    }

    /// Keeps the primes for which `keep` holds.
    pub fn filter(&self, mut keep: impl FnMut(u64) -> bool) -> PrimeSet {
        PrimeSet {
            primes: self.primes.iter().copied().filter(|&p| keep(p)).collect(),
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.primes)
    }
}

/// A finite set H of non-negative shifts, stored sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ShiftSet {
    shifts: Vec<u64>,
}

impl ShiftSet {
    /// Duplicate shifts are rejected, not merged.
    pub fn new(mut shifts: Vec<u64>) -> Result<Self> {
        shifts.sort_unstable();
        for w in shifts.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateShift(w[0]));
            }
        }
        Ok(ShiftSet { shifts })
    }

    pub fn empty() -> Self {
        ShiftSet::default()
    }

    pub(crate) fn from_sorted_unchecked(shifts: Vec<u64>) -> Self {
        debug_assert!(shifts.windows(2).all(|w| w[0] < w[1]));
        ShiftSet { shifts }
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.shifts
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.shifts.iter().copied()
    }

    /// d = |H|.
    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    pub fn min(&self) -> Option<u64> {
        self.shifts.first().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.shifts.last().copied()
    }

    pub fn contains(&self, h: u64) -> bool {
        self.shifts.binary_search(&h).is_ok()
    }

    pub fn symmetric_difference(&self, other: &ShiftSet) -> ShiftSet {
        ShiftSet {
            shifts: sorted_symmetric_difference(&self.shifts, &other.shifts),
        }
    }

    /// H + a.
    pub fn translate(&self, a: u64) -> ShiftSet {
        ShiftSet {
            shifts: self.shifts.iter().map(|h| h + a).collect(),
        }
    }

    /// H − min(H); the empty set maps to itself.
    pub fn normalized(&self) -> ShiftSet {
        match self.min() {
            Some(m) if m > 0 => ShiftSet {
                shifts: self.shifts.iter().map(|h| h - m).collect(),
            },
            _ => self.clone(),
        }
    }

    pub fn differences(&self) -> DiffSet {
        DiffSet::of(self)
    }
}

impl fmt::Display for ShiftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.shifts)
    }
}

/// Ĥ: the positive pairwise differences of a shift set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiffSet {
    diffs: Vec<u64>,
}

impl DiffSet {
    pub fn of(h: &ShiftSet) -> DiffSet {
        let s = h.as_slice();
        let mut diffs: Vec<u64> = s
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| s[i + 1..].iter().map(move |&b| b - a))
            .collect();
        diffs.sort_unstable();
        diffs.dedup();
        DiffSet { diffs }
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.diffs
    }

    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }

    /// Whether `p` divides some element.
    pub fn divisible_by(&self, p: u64) -> bool {
        self.diffs.iter().any(|&d| d % p == 0)
    }
}

/// A value in {+1, −1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != rhs.is_minus())
    }
}

fn positive(n: i64) -> Result<u64> {
    if n < 1 {
        Err(Error::NonPositive(n))
    } else {
        Ok(n as u64)
    }
}

fn omega_unchecked(set: &PrimeSet, mut n: u64) -> u32 {
    let mut count = 0;
    for p in set.iter() {
        if p > n {
            break;
        }
        while n % p == 0 {
            n /= p;
            count += 1;
        }
    }
    count
}

/// Ω_P(n): the number of prime factors of `n` lying in `set`, with multiplicity.
pub fn omega(set: &PrimeSet, n: i64) -> Result<u32> {
    Ok(omega_unchecked(set, positive(n)?))
}

/// λ_P(n) = (−1)^Ω_P(n).
pub fn lambda(set: &PrimeSet, n: i64) -> Result<Sign> {
    Ok(Sign::from_parity(omega(set, n)? % 2 == 1))
}

/// Λ_P^H(n) = ∏_{h∈H} λ_P(n + h); +1 for the empty shift set.
pub fn shifted_lambda(set: &PrimeSet, shifts: &ShiftSet, n: i64) -> Result<Sign> {
    let n = positive(n)?;
    let mut odd = false;
    for h in shifts.iter() {
        let m = n
            .checked_add(h)
            .filter(|&m| m <= i64::MAX as u64)
            .ok_or(Error::Overflow { value: n, shift: h })?;
        odd ^= omega_unchecked(set, m) % 2 == 1;
    }
    Ok(Sign::from_parity(odd))
}

/// Primes dividing some element of Ĥ.
pub fn exceptional_primes(shifts: &ShiftSet) -> PrimeSet {
    let mut out: Vec<u64> = shifts
        .differences()
        .as_slice()
        .iter()
        .flat_map(|&d| primes::prime_divisors(d))
        .collect();
    out.sort_unstable();
    out.dedup();
    PrimeSet { primes: out }
}

fn sorted_symmetric_difference(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn write_set(f: &mut fmt::Formatter<'_>, xs: &[u64]) -> fmt::Result {
    let body: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    f.pad(&format!("{{{}}}", body.join(",")))
}
