//! Exact local densities η_p^H = δ{n : Λ_p^H(n) = −1} and their
//! combination η_P^H over a finite prime set.
//!
//! For a single prime the value follows from a double recursion on H:
//!
//! * `H = ∅` gives 0 and `H = {h}` gives 1/(p+1);
//! * if the shifts fall into more than one residue class mod p, the
//!   classes contribute disjoint sets and their densities add;
//! * if every shift is ≡ i (mod p), only n ≡ −i can contribute, and
//!   dividing out p maps the problem to H₁ = (H − i)/p, complemented when
//!   |H| is odd: η(H) = η(H₁)/p or (1 − η(H₁))/p.
//!
//! The last case strictly lowers max(H), so the recursion terminates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{PrimeSet, Rational, ShiftSet};
use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Which rule produced a node of a density derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Empty,
    Singleton,
    /// Sum over residue classes mod p.
    Split,
    /// All shifts ≡ `residue` (mod p); child is (H − residue)/p.
    Scale { residue: u64, odd: bool },
}

/// One step of a recorded derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceNode {
    pub shifts: ShiftSet,
    pub rule: Rule,
    pub value: Rational,
    pub children: Vec<TraceNode>,
}

impl TraceNode {
    /// Recomputes the value from the leaves up, following each node's rule.
    pub fn replay(&self, p: u64) -> Rational {
        let pr = Rational::from_integer(BigInt::from(p));
        match &self.rule {
            Rule::Empty => Rational::zero(),
            Rule::Singleton => Rational::new(BigInt::one(), BigInt::from(p) + 1),
            Rule::Split => self.children.iter().map(|c| c.replay(p)).sum(),
            Rule::Scale { odd, .. } => {
                let v = self.children[0].replay(p);
                if *odd {
                    (Rational::one() - v) / pr
                } else {
                    v / pr
                }
            }
        }
    }

    fn render(&self, p: u64, depth: usize, out: &mut String) {
        let name = |h: &ShiftSet| format!("eta_{p}{h}");
        let rhs = match &self.rule {
            Rule::Empty => "0".to_string(),
            Rule::Singleton => format!("1/({p}+1)"),
            Rule::Split => self
                .children
                .iter()
                .map(|c| name(&c.shifts))
                .collect::<Vec<_>>()
                .join(" + "),
            Rule::Scale { odd: false, .. } => format!("{}/{p}", name(&self.children[0].shifts)),
            Rule::Scale { odd: true, .. } => format!("(1 - {})/{p}", name(&self.children[0].shifts)),
        };
        out.push_str(&format!(
            "{}{} = {} = {}\n",
            "  ".repeat(depth),
            name(&self.shifts),
            rhs,
            crate::report::fraction(&self.value)
        ));
        for c in &self.children {
            c.render(p, depth + 1, out);
        }
    }
}

/// η_p^H together with an optional derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDensity {
    pub prime: u64,
    pub shifts: ShiftSet,
    pub value: Rational,
    pub trace: Option<TraceNode>,
}

impl LocalDensity {
    /// Indented derivation, one line per recursion step.
    pub fn render_trace(&self) -> Option<String> {
        self.trace.as_ref().map(|t| {
            let mut s = String::new();
            t.render(self.prime, 0, &mut s);
            s
        })
    }
}

impl fmt::Display for LocalDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eta_{}{} = {}", self.prime, self.shifts, crate::report::fraction(&self.value))
    }
}

fn singleton(p: u64) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(p) + 1)
}

fn depth_cap(p: u64, shifts: &ShiftSet) -> usize {
    let top = shifts.max().unwrap_or(0) as u128 + 1;
    let mut log = 0usize;
    let mut pk = 1u128;
    while pk < top {
        pk *= p as u128;
        log += 1;
    }
    64 * (1 + log)
}

/// Memo table for η_p^H keyed by (p, H − min H). Safe to share between
/// threads; concurrent writers store identical values.
#[derive(Debug, Default)]
pub struct DensityCache {
    memo: RwLock<HashMap<(u64, ShiftSet), Rational>>,
}

impl DensityCache {
    pub fn new() -> Self {
        DensityCache::default()
    }

    pub fn len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Exact η_p^H.
    pub fn eta_local(&self, p: u64, shifts: &ShiftSet) -> Result<Rational> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let cap = depth_cap(p, shifts);
        Ok(self.eval(p, shifts, 0, cap, false)?.0)
    }

    /// Exact η_p^H with the full derivation recorded. Bypasses the memo
    /// table so every step appears in the trace.
    pub fn eta_local_traced(&self, p: u64, shifts: &ShiftSet) -> Result<LocalDensity> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let cap = depth_cap(p, shifts);
        let (value, trace) = self.eval(p, shifts, 0, cap, true)?;
        Ok(LocalDensity {
            prime: p,
            shifts: shifts.clone(),
            value,
            trace,
        })
    }

    fn eval(
        &self,
        p: u64,
        shifts: &ShiftSet,
        depth: usize,
        cap: usize,
        tracing: bool,
    ) -> Result<(Rational, Option<TraceNode>)> {
        if depth > cap {
            return Err(Error::DepthCap(cap));
        }
        let leaf = |rule, value: Rational| {
            let node = tracing.then(|| TraceNode {
                shifts: shifts.clone(),
                rule,
                value: value.clone(),
                children: Vec::new(),
            });
            Ok((value, node))
        };
        match shifts.len() {
            0 => return leaf(Rule::Empty, Rational::zero()),
            1 => return leaf(Rule::Singleton, singleton(p)),
            _ => {}
        }

        let key = (p, shifts.normalized());
        if !tracing {
            if let Some(v) = self.memo.read().unwrap().get(&key) {
                return Ok((v.clone(), None));
            }
        }

        let mut classes: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for h in shifts.iter() {
            classes.entry(h % p).or_default().push(h);
        }

        let (value, rule, children) = if classes.len() > 1 {
            let mut total = Rational::zero();
            let mut children = Vec::new();
            for class in classes.into_values() {
                let sub = ShiftSet::from_sorted_unchecked(class);
                let (v, node) = self.eval(p, &sub, depth + 1, cap, tracing)?;
                total += v;
                children.extend(node);
            }
            (total, Rule::Split, children)
        } else {
            let residue = shifts.min().unwrap() % p;
            let reduced =
                ShiftSet::from_sorted_unchecked(shifts.iter().map(|h| (h - residue) / p).collect());
            let odd = shifts.len() % 2 == 1;
            let (v, node) = self.eval(p, &reduced, depth + 1, cap, tracing)?;
            let pr = Rational::from_integer(BigInt::from(p));
            let value = if odd { (Rational::one() - v) / pr } else { v / pr };
            (value, Rule::Scale { residue, odd }, node.into_iter().collect())
        };

        self.memo.write().unwrap().insert(key, value.clone());
        let node = tracing.then(|| TraceNode {
            shifts: shifts.clone(),
            rule,
            value: value.clone(),
            children,
        });
        Ok((value, node))
    }

    /// Exact η_P^H for a finite prime set.
    pub fn eta_set(&self, set: &PrimeSet, shifts: &ShiftSet) -> Result<Rational> {
        let mut eta = Rational::zero();
        for p in set.iter() {
            let local = self.eta_local(p, shifts)?;
            eta = combine(&eta, &local);
        }
        Ok(eta)
    }
}

/// η_{P ∪ {p}} from η_P and η_p when p ∉ P.
pub fn combine(eta_set: &Rational, eta_prime: &Rational) -> Rational {
    let one = Rational::one();
    eta_set * (&one - eta_prime) + eta_prime * (&one - eta_set)
}

/// Exact η_p^H.
pub fn eta_local(p: u64, shifts: &ShiftSet) -> Result<Rational> {
    DensityCache::new().eta_local(p, shifts)
}

/// η_p^H with its derivation.
pub fn eta_local_traced(p: u64, shifts: &ShiftSet) -> Result<LocalDensity> {
    DensityCache::new().eta_local_traced(p, shifts)
}

/// d/(p+1) when p divides no element of Ĥ; `None` when p is exceptional.
pub fn eta_local_fast(p: u64, shifts: &ShiftSet) -> Option<Rational> {
    if shifts.differences().divisible_by(p) {
        None
    } else {
        Some(Rational::new(BigInt::from(shifts.len()), BigInt::from(p) + 1))
    }
}

/// Exact η_P^H for a finite prime set.
pub fn eta_set(set: &PrimeSet, shifts: &ShiftSet) -> Result<Rational> {
    DensityCache::new().eta_set(set, shifts)
}
