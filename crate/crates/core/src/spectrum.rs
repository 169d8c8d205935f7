//! Correlations κ_P^H = ∏_{p∈P} (1 − 2η_p^H), truncation intervals for
//! small infinite sets, the spectrum endpoint α_H and target construction.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{exceptional_primes, PrimeSet, Rational, ShiftSet};
use crate::density::DensityCache;
use crate::error::{Error, Result};
use crate::primes::primes_above;

/// Default number of candidate primes [`construct_target`] may scan.
pub const DEFAULT_PRIME_BUDGET: usize = 1_000_000;

/// Exact κ_P^H with its local factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correlation {
    pub value: Rational,
    /// (p, 1 − 2η_p^H) for each p ∈ P, in increasing p.
    pub factors: Vec<(u64, Rational)>,
}

impl Correlation {
    fn empty() -> Self {
        Correlation {
            value: Rational::one(),
            factors: Vec::new(),
        }
    }

    fn push(&mut self, p: u64, factor: Rational) {
        self.value *= &factor;
        self.factors.push((p, factor));
    }
}

fn factor(cache: &DensityCache, p: u64, shifts: &ShiftSet) -> Result<Rational> {
    let eta = cache.eta_local(p, shifts)?;
    Ok(Rational::one() - eta * Rational::from_integer(BigInt::from(2)))
}

/// 1 − 2d/(p+1), the factor at a non-exceptional prime.
fn generic_factor(d: usize, p: u64) -> Rational {
    Rational::one() - Rational::new(BigInt::from(2 * d), BigInt::from(p) + 1)
}

/// κ_P^H for a finite prime set.
pub fn kappa_finite(set: &PrimeSet, shifts: &ShiftSet) -> Result<Correlation> {
    let cache = DensityCache::new();
    let mut out = Correlation::empty();
    for p in set.iter() {
        out.push(p, factor(&cache, p, shifts)?);
    }
    Ok(out)
}

/// `center ± radius`, containing κ for the full set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationInterval {
    pub center: Rational,
    pub radius: Rational,
}

impl CorrelationInterval {
    pub fn lower(&self) -> Rational {
        &self.center - &self.radius
    }

    pub fn upper(&self) -> Rational {
        &self.center + &self.radius
    }

    pub fn contains(&self, x: &Rational) -> bool {
        (x - &self.center).abs() <= self.radius
    }
}

/// κ for a small set given as a finite part plus an upper bound `tail_sum`
/// on Σ 1/(p+1) over the omitted primes. The radius is 2·|H|·tail_sum.
pub fn kappa_truncated(
    finite: &PrimeSet,
    tail_sum: &Rational,
    shifts: &ShiftSet,
) -> Result<CorrelationInterval> {
    if tail_sum.is_negative() {
        return Err(Error::NegativeTailSum);
    }
    let center = kappa_finite(finite, shifts)?.value;
    let radius = Rational::from_integer(BigInt::from(2 * shifts.len())) * tail_sum;
    Ok(CorrelationInterval { center, radius })
}

/// α_H = min_p (1 − 2η_p^H) with the prime attaining it, and the spectrum
/// interval [min(α_H, 0), 1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumDescription {
    pub alpha: Rational,
    pub witness_prime: u64,
    pub lower: Rational,
    pub upper: Rational,
}

/// Only exceptional primes and the smallest non-exceptional prime can
/// attain the minimum: beyond that the factor 1 − 2d/(p+1) increases in p.
pub fn alpha_h(shifts: &ShiftSet) -> Result<SpectrumDescription> {
    if shifts.is_empty() {
        return Err(Error::EmptyShiftSet);
    }
    let cache = DensityCache::new();
    let exceptional = exceptional_primes(shifts);
    let first_generic = primes_above(1)
        .find(|&p| !exceptional.contains(p))
        .expect("finitely many exceptional primes");
    let mut best: Option<(Rational, u64)> = None;
    for p in exceptional.iter().chain(std::iter::once(first_generic)) {
        let f = factor(&cache, p, shifts)?;
        if best.as_ref().map_or(true, |(b, bp)| f < *b || (f == *b && p < *bp)) {
            best = Some((f, p));
        }
    }
    let (alpha, witness_prime) = best.unwrap();
    let lower = if alpha < Rational::zero() {
        alpha.clone()
    } else {
        Rational::zero()
    };
    Ok(SpectrumDescription {
        alpha,
        witness_prime,
        lower,
        upper: Rational::one(),
    })
}

/// Γ_H = [min(α_H, 0), 1].
pub fn spectrum_describe(shifts: &ShiftSet) -> Result<SpectrumDescription> {
    alpha_h(shifts)
}

/// Finds a finite prime set whose correlation is within `epsilon` of
/// `target`, scanning at most [`DEFAULT_PRIME_BUDGET`] candidate primes.
pub fn construct_target(
    shifts: &ShiftSet,
    target: &Rational,
    epsilon: &Rational,
    floor: u64,
) -> Result<PrimeSet> {
    construct_target_with_budget(shifts, target, epsilon, floor, DEFAULT_PRIME_BUDGET)
}

/// As [`construct_target`] with an explicit prime budget.
///
/// Positive targets are reached greedily: non-exceptional primes above
/// `floor` are taken in increasing order whenever the running product stays
/// at or above the target. A negative target β is reached by building
/// β/α_H first, avoiding the witness prime of α_H, and then adjoining it.
pub fn construct_target_with_budget(
    shifts: &ShiftSet,
    target: &Rational,
    epsilon: &Rational,
    floor: u64,
    budget: usize,
) -> Result<PrimeSet> {
    if !epsilon.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    let out_of_range = |lower: &Rational| Error::TargetOutOfRange {
        target: crate::report::fraction(target),
        lower: crate::report::fraction(lower),
    };
    if *target > Rational::one() {
        return Err(out_of_range(&Rational::zero()));
    }
    if target.is_positive() {
        return greedy(shifts, target, epsilon, floor, budget, None);
    }
    let desc = alpha_h(shifts)?;
    if *target <= desc.lower {
        return Err(out_of_range(&desc.lower));
    }
    if target.is_zero() {
        return greedy(shifts, target, epsilon, floor, budget, None);
    }
    // α_H < target < 0, so target/α_H ∈ (0, 1)
    let inner_target = target / &desc.alpha;
    let inner = greedy(shifts, &inner_target, epsilon, floor, budget, Some(desc.witness_prime))?;
    inner.with(desc.witness_prime)
}

fn greedy(
    shifts: &ShiftSet,
    target: &Rational,
    epsilon: &Rational,
    floor: u64,
    budget: usize,
    avoid: Option<u64>,
) -> Result<PrimeSet> {
    let exceptional = exceptional_primes(shifts);
    let d = shifts.len();
    let mut current = Rational::one();
    let mut chosen = Vec::new();
    let mut scanned = 0usize;
    let mut candidates = primes_above(floor).filter(|&p| !exceptional.contains(p) && Some(p) != avoid);
    while &current - target > *epsilon {
        if scanned == budget {
            return Err(Error::PrimeBudgetExhausted(budget));
        }
        let p = candidates.next().expect("infinitely many primes");
        scanned += 1;
        let next = &current * generic_factor(d, p);
        if next >= *target {
            current = next;
            chosen.push(p);
        }
    }
    PrimeSet::new(chosen)
}
