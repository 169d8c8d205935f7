//! Polynomials over the two-element field and the closure of shift-set
//! families under symmetric difference and translation.
//!
//! A shift set H is encoded as Σ_{h∈H} t^h. Symmetric difference becomes
//! addition and translation by a becomes multiplication by t^a, so a closed
//! family is an ideal generated by a single polynomial f with f(0) = 1.
//! Every such f divides (t^(2^r − 1) + 1)^m for r the lcm of its
//! irreducible factor degrees and m its largest factor multiplicity, which
//! puts the two-element set {0, (2^r − 1)·2^n} (2^n ≥ m) in the family.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::arith::ShiftSet;
use crate::error::{Error, Result};

/// Largest degree accepted when encoding a shift set.
pub const DEGREE_CAP: u64 = 1 << 20;

/// Dense polynomial over GF(2); bit i of the limbs is the coefficient of t^i.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Poly {
    limbs: Vec<u64>,
}

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        F2Poly { limbs: vec![1] }
    }

    /// t^n.
    pub fn monomial(n: usize) -> Self {
        let mut limbs = vec![0; n / 64 + 1];
        limbs[n / 64] = 1 << (n % 64);
        F2Poly { limbs }
    }

    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = F2Poly { limbs };
        p.trim();
        p
    }

    /// Polynomial with the given exponents set (repeats cancel).
    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let mut p = F2Poly::zero();
        for e in exps {
            p.flip(e);
        }
        p.trim();
        p
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    fn flip(&mut self, i: usize) {
        if self.limbs.len() <= i / 64 {
            self.limbs.resize(i / 64 + 1, 0);
        }
        self.limbs[i / 64] ^= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.limbs
            .last()
            .map(|top| 64 * (self.limbs.len() - 1) + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    64 * k + b
                })
            })
        })
    }

    /// Multiplicity of 0 as a root, i.e. the largest v with t^v | self.
    /// `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.limbs
            .iter()
            .position(|&w| w != 0)
            .map(|k| 64 * k + self.limbs[k].trailing_zeros() as usize)
    }

    /// self · t^n.
    pub fn shl(&self, n: usize) -> F2Poly {
        if self.is_zero() {
            return F2Poly::zero();
        }
        let (w, s) = (n / 64, n % 64);
        let mut limbs = vec![0; self.limbs.len() + w + 1];
        for (i, &x) in self.limbs.iter().enumerate() {
            limbs[i + w] ^= x << s;
            if s > 0 {
                limbs[i + w + 1] ^= x >> (64 - s);
            }
        }
        F2Poly::from_limbs(limbs)
    }

    /// self / t^n, dropping the low n coefficients.
    pub fn shr(&self, n: usize) -> F2Poly {
        let (w, s) = (n / 64, n % 64);
        if w >= self.limbs.len() {
            return F2Poly::zero();
        }
        let src = &self.limbs[w..];
        let limbs = (0..src.len())
            .map(|i| {
                let hi = if s > 0 { src.get(i + 1).map_or(0, |&x| x << (64 - s)) } else { 0 };
                (src[i] >> s) | hi
            })
            .collect();
        F2Poly::from_limbs(limbs)
    }

    fn xor_shifted(&mut self, other: &F2Poly, n: usize) {
        let (w, s) = (n / 64, n % 64);
        let need = other.limbs.len() + w + 1;
        if self.limbs.len() < need {
            self.limbs.resize(need, 0);
        }
        for (i, &x) in other.limbs.iter().enumerate() {
            self.limbs[i + w] ^= x << s;
            if s > 0 {
                self.limbs[i + w + 1] ^= x >> (64 - s);
            }
        }
        self.trim();
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        let n = self.limbs.len().max(other.limbs.len());
        let limbs = (0..n)
            .map(|i| self.limbs.get(i).unwrap_or(&0) ^ other.limbs.get(i).unwrap_or(&0))
            .collect();
        F2Poly::from_limbs(limbs)
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        let mut out = F2Poly::zero();
        for e in self.exponents() {
            out.xor_shifted(other, e);
        }
        out
    }

    /// self², by spreading bit i to bit 2i.
    pub fn square(&self) -> F2Poly {
        let mut limbs = vec![0u64; 2 * self.limbs.len()];
        for (i, &w) in self.limbs.iter().enumerate() {
            limbs[2 * i] = spread(w as u32);
            limbs[2 * i + 1] = spread((w >> 32) as u32);
        }
        F2Poly::from_limbs(limbs)
    }

    /// Square root of a polynomial with only even exponents.
    pub fn sqrt(&self) -> Option<F2Poly> {
        if self.exponents().any(|e| e % 2 == 1) {
            return None;
        }
        Some(F2Poly::from_exponents(self.exponents().map(|e| e / 2)))
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &F2Poly) -> (F2Poly, F2Poly) {
        let db = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = F2Poly::zero();
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            quot.flip(dr - db);
            rem.xor_shifted(divisor, dr - db);
        }
        quot.trim();
        (quot, rem)
    }

    pub fn rem(&self, divisor: &F2Poly) -> F2Poly {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &F2Poly) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    pub fn gcd(&self, other: &F2Poly) -> F2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Formal derivative: only odd exponents survive, each dropping by one.
    pub fn derivative(&self) -> F2Poly {
        F2Poly::from_exponents(self.exponents().filter(|e| e % 2 == 1).map(|e| e - 1))
    }

    /// t^e mod `modulus`, by square-and-multiply over the bits of `e`.
    pub fn t_pow_mod(e: &BigUint, modulus: &F2Poly) -> F2Poly {
        let mut acc = F2Poly::one().rem(modulus);
        for i in (0..e.bits()).rev() {
            acc = acc.square().rem(modulus);
            if e.bit(i) {
                acc = acc.shl(1).rem(modulus);
            }
        }
        acc
    }
}

fn spread(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    (x | (x << 1)) & 0x5555_5555_5555_5555
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Poly({self})")
    }
}

/// Σ_{h∈H} t^h.
pub fn encode(shifts: &ShiftSet) -> Result<F2Poly> {
    if let Some(m) = shifts.max().filter(|&m| m > DEGREE_CAP) {
        return Err(Error::DegreeCap { degree: m, cap: DEGREE_CAP });
    }
    Ok(F2Poly::from_exponents(shifts.iter().map(|h| h as usize)))
}

/// Squarefree decomposition: pairs (g, i) with f = ∏ g^i, each g squarefree
/// and the g pairwise coprime. Constant input gives an empty list.
pub fn squarefree_decomposition(f: &F2Poly) -> Vec<(F2Poly, usize)> {
    assert!(!f.is_zero(), "squarefree decomposition of zero");
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        c = c.div_rem(&y).0;
        w = y;
    }
    if !c.is_one() {
        let root = c.sqrt().expect("remaining cofactor is a square in characteristic 2");
        out.extend(
            squarefree_decomposition(&root)
                .into_iter()
                .map(|(g, j)| (g, 2 * j)),
        );
    }
    out
}

/// Product of the distinct irreducible factors of `f`.
pub fn squarefree_part(f: &F2Poly) -> F2Poly {
    squarefree_decomposition(f)
        .iter()
        .fold(F2Poly::one(), |acc, (g, _)| acc.mul(g))
}

/// Distinct-degree factorization of a squarefree `g`: pairs (degree, number
/// of irreducible factors of that degree).
pub fn distinct_degree_counts(g: &F2Poly) -> Vec<(usize, usize)> {
    let mut g = g.clone();
    let mut out = Vec::new();
    if g.valuation() > Some(0) {
        out.push((1, 1));
        g = g.shr(1);
    }
    let t = F2Poly::monomial(1);
    let mut h = t.rem(&g);
    let mut i = 1;
    while g.degree().is_some_and(|d| d >= 2 * i) {
        h = h.square().rem(&g);
        let d = g.gcd(&h.add(&t));
        if !d.is_one() {
            out.push((i, d.degree().unwrap() / i));
            g = g.div_rem(&d).0;
            h = h.rem(&g);
        }
        i += 1;
    }
    if let Some(dg) = g.degree().filter(|&d| d > 0) {
        out.push((dg, 1));
    }
    out
}

/// The ideal generated by a list of shift sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureFamily {
    pub generator: F2Poly,
    /// Power of t stripped from each input; `None` for empty inputs.
    pub t_valuations: Vec<Option<usize>>,
}

/// f = gcd of the encodings with their t-powers stripped.
pub fn family_from_generators(sets: &[ShiftSet]) -> Result<ClosureFamily> {
    let mut generator = F2Poly::zero();
    let mut t_valuations = Vec::with_capacity(sets.len());
    for h in sets {
        let e = encode(h)?;
        let v = e.valuation();
        if let Some(v) = v {
            generator = generator.gcd(&e.shr(v));
        }
        t_valuations.push(v);
    }
    if generator.is_zero() {
        return Err(Error::EmptyGenerators);
    }
    Ok(ClosureFamily {
        generator,
        t_valuations,
    })
}

impl ClosureFamily {
    /// Whether {0, d} lies in the family, i.e. f | t^d + 1.
    pub fn contains_pair(&self, d: &BigUint) -> bool {
        let r = F2Poly::t_pow_mod(d, &self.generator).add(&F2Poly::one().rem(&self.generator));
        r.is_zero()
    }
}

/// Whether H belongs to the family: encode(H) = t^a·g with f | g.
pub fn closure_membership(fam: &ClosureFamily, shifts: &ShiftSet) -> bool {
    let f = &fam.generator;
    if shifts.max().is_some_and(|m| m <= DEGREE_CAP) {
        let e = encode(shifts).expect("within cap");
        return match e.valuation() {
            None => true,
            Some(v) => f.divides(&e.shr(v)),
        };
    }
    // f(0) = 1 makes t invertible mod f, so the t-power can stay.
    let acc = shifts.iter().fold(F2Poly::zero(), |acc, h| {
        acc.add(&F2Poly::t_pow_mod(&BigUint::from(h), f))
    });
    acc.is_zero()
}

/// A two-element member {0, D} of a closure family with the parameters
/// used to build it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoElementMember {
    /// D = (2^r − 1)·2^n.
    pub distance: BigUint,
    pub r: u64,
    pub multiplicity: usize,
    pub n: u32,
    /// The generator is 1: the family is every finite set.
    pub degenerate: bool,
}

impl TwoElementMember {
    /// {0, D} when D fits in 64 bits.
    pub fn to_shift_set(&self) -> Option<ShiftSet> {
        let d: u64 = self.distance.clone().try_into().ok()?;
        ShiftSet::new(vec![0, d]).ok()
    }
}

impl fmt::Display for TwoElementMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{0,{}}}", self.distance)
    }
}

/// Builds {0, D} and checks f | t^D + 1 by reduction before returning it.
pub fn two_element_member(fam: &ClosureFamily) -> Result<TwoElementMember> {
    let f = &fam.generator;
    if f.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    let parts = squarefree_decomposition(f);
    let multiplicity = parts.iter().map(|&(_, i)| i).max().unwrap_or(0);
    let r = parts
        .iter()
        .flat_map(|(g, _)| distinct_degree_counts(g))
        .fold(1u64, |acc, (deg, _)| acc.lcm(&(deg as u64)));
    let mut n = 0u32;
    while (1usize << n) < multiplicity {
        n += 1;
    }
    let distance = ((BigUint::one() << r) - 1u32) << n;
    if !fam.contains_pair(&distance) {
        return Err(Error::CertificateFailed(distance.to_string()));
    }
    Ok(TwoElementMember {
        distance,
        r,
        multiplicity,
        n,
        degenerate: f.is_one(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hs(v: &[u64]) -> ShiftSet {
        ShiftSet::new(v.to_vec()).unwrap()
    }

    fn poly(exps: &[usize]) -> F2Poly {
        F2Poly::from_exponents(exps.iter().copied())
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&hs(&[0, 1])).unwrap(), poly(&[0, 1]));
        assert!(encode(&ShiftSet::empty()).unwrap().is_zero());
        assert_eq!(encode(&hs(&[0, 1, 2])).unwrap().to_string(), "1 + t + t^2");
        assert!(matches!(encode(&hs(&[DEGREE_CAP + 1])), Err(Error::DegreeCap { .. })));
    }

    #[test]
    fn arithmetic_basics() {
        let a = poly(&[0, 1]);
        assert_eq!(a.mul(&a), poly(&[0, 2]));
        assert_eq!(a.square(), poly(&[0, 2]));
        assert_eq!(poly(&[0, 3]).div_rem(&a), (poly(&[0, 1, 2]), F2Poly::zero()));
        assert_eq!(poly(&[0, 3]).gcd(&poly(&[0, 1, 2])), poly(&[0, 1, 2]));
        assert_eq!(poly(&[0, 1, 2, 3]).derivative(), poly(&[0, 2]));
        assert_eq!(poly(&[0, 4, 130]).sqrt(), Some(poly(&[0, 2, 65])));
        assert_eq!(poly(&[1]).sqrt(), None);
        assert_eq!(poly(&[70, 200]).shr(70), poly(&[0, 130]));
        assert_eq!(poly(&[3]).shl(125), poly(&[128]));
        assert_eq!(poly(&[5, 64, 200]).valuation(), Some(5));
        assert_eq!(F2Poly::zero().degree(), None);
        assert_eq!(poly(&[0, 127]).degree(), Some(127));
    }

    #[test]
    fn t_pow_mod_matches_direct_reduction() {
        let f = poly(&[0, 1, 3, 7, 11]);
        for e in [0usize, 1, 10, 11, 64, 129, 1000] {
            assert_eq!(F2Poly::t_pow_mod(&BigUint::from(e), &f), F2Poly::monomial(e).rem(&f));
        }
    }

    #[test]
    fn family_examples() {
        let fam = family_from_generators(&[hs(&[0, 1, 2])]).unwrap();
        assert_eq!(fam.generator, poly(&[0, 1, 2]));
        let fam = family_from_generators(&[hs(&[0, 2])]).unwrap();
        assert_eq!(fam.generator, poly(&[0, 2]));
        let fam = family_from_generators(&[hs(&[0, 1, 2]), hs(&[0, 3])]).unwrap();
        assert_eq!(fam.generator, poly(&[0, 1, 2]));
        let fam = family_from_generators(&[hs(&[5, 6, 7]), ShiftSet::empty()]).unwrap();
        assert_eq!(fam.generator, poly(&[0, 1, 2]));
        assert_eq!(fam.t_valuations, vec![Some(5), None]);
        assert_eq!(
            family_from_generators(&[ShiftSet::empty()]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(family_from_generators(&[]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn two_element_examples() {
        let m = two_element_member(&family_from_generators(&[hs(&[0, 1, 2])]).unwrap()).unwrap();
        assert_eq!((m.r, m.multiplicity, m.n), (2, 1, 0));
        assert_eq!(m.to_shift_set(), Some(hs(&[0, 3])));
        // 1 + t^3 = (1 + t)(1 + t + t^2)
        assert_eq!(poly(&[0, 1]).mul(&poly(&[0, 1, 2])), poly(&[0, 3]));

        let m = two_element_member(&family_from_generators(&[hs(&[0, 2])]).unwrap()).unwrap();
        assert_eq!((m.r, m.multiplicity, m.n), (1, 2, 1));
        assert_eq!(m.to_shift_set(), Some(hs(&[0, 2])));

        let m = two_element_member(&family_from_generators(&[hs(&[0, 1])]).unwrap()).unwrap();
        assert_eq!((m.r, m.multiplicity, m.n), (1, 1, 0));
        assert_eq!(m.to_shift_set(), Some(hs(&[0, 1])));
        assert!(!m.degenerate);
    }

    #[test]
    fn degenerate_family() {
        // gcd(1 + t, 1 + t + t^2) = 1
        let fam = family_from_generators(&[hs(&[0, 1]), hs(&[0, 1, 2])]).unwrap();
        assert!(fam.generator.is_one());
        let m = two_element_member(&fam).unwrap();
        assert!(m.degenerate);
        assert_eq!(m.to_shift_set(), Some(hs(&[0, 1])));
        let fam = family_from_generators(&[hs(&[4])]).unwrap();
        assert!(fam.generator.is_one());
        assert!(closure_membership(&fam, &hs(&[3, 9, 11])));
    }

    #[test]
    fn zero_generator_rejected() {
        let fam = ClosureFamily { generator: F2Poly::zero(), t_valuations: vec![] };
        assert_eq!(two_element_member(&fam), Err(Error::ZeroGenerator));
    }

    #[test]
    fn membership_examples() {
        let fam = family_from_generators(&[hs(&[0, 1, 2])]).unwrap();
        assert!(closure_membership(&fam, &hs(&[0, 3])));
        assert!(closure_membership(&fam, &hs(&[10, 13])));
        assert!(!closure_membership(&fam, &hs(&[0, 1])));
        assert!(closure_membership(&fam, &ShiftSet::empty()));
        // beyond the dense cap the sparse route is used: 3 | 3·2^21
        let far = 3 * (1u64 << 21);
        assert!(closure_membership(&fam, &hs(&[7, 7 + far])));
        assert!(!closure_membership(&fam, &hs(&[7, 8 + far])));
    }

    #[test]
    fn decomposition_of_known_product() {
        // (1+t)^3 (1+t+t^2)^2 (1+t+t^3)
        let a = poly(&[0, 1]);
        let b = poly(&[0, 1, 2]);
        let c = poly(&[0, 1, 3]);
        let f = a.mul(&a).mul(&a).mul(&b).mul(&b).mul(&c);
        let mut parts = squarefree_decomposition(&f);
        parts.sort_by_key(|&(_, i)| i);
        assert_eq!(parts, vec![(c.clone(), 1), (b.clone(), 2), (a.clone(), 3)]);
        assert_eq!(squarefree_part(&f), a.mul(&b).mul(&c));
        assert_eq!(distinct_degree_counts(&a.mul(&b).mul(&c)), vec![(1, 1), (2, 1), (3, 1)]);
        let m = two_element_member(&family_from_generators(&[ShiftSet::new(
            f.exponents().map(|e| e as u64).collect(),
        )
        .unwrap()])
        .unwrap())
        .unwrap();
        assert_eq!((m.r, m.multiplicity, m.n), (6, 3, 2));
        assert_eq!(m.distance, BigUint::from(63u32 * 4));
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = F2Poly> {
        proptest::collection::vec(any::<bool>(), 1..=max_deg + 1)
            .prop_map(|bits| F2Poly::from_exponents(bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)))
    }

    fn arb_shift_set() -> impl Strategy<Value = ShiftSet> {
        proptest::collection::btree_set(0u64..80, 0..10)
            .prop_map(|s| ShiftSet::new(s.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn encode_is_additive(a in arb_shift_set(), b in arb_shift_set(), k in 0u64..100) {
            prop_assert_eq!(encode(&a.symmetric_difference(&b))?, encode(&a)?.add(&encode(&b)?));
            prop_assert_eq!(encode(&a.translate(k))?, encode(&a)?.shl(k as usize));
        }

        #[test]
        fn division_identity(a in arb_poly(150), b in arb_poly(70)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn squarefree_part_properties(f in arb_poly(64)) {
            prop_assume!(!f.is_zero());
            let s = squarefree_part(&f);
            prop_assert!(s.divides(&f));
            prop_assert!(s.gcd(&s.derivative()).is_one());
            let m = squarefree_decomposition(&f).iter().map(|&(_, i)| i).max().unwrap_or(0);
            let mut pow = F2Poly::one();
            for _ in 0..m {
                pow = pow.mul(&s);
            }
            prop_assert!(f.divides(&pow));
        }

        #[test]
        fn family_is_order_independent(a in arb_shift_set(), b in arb_shift_set(), c in arb_shift_set()) {
            prop_assume!(!(a.is_empty() && b.is_empty() && c.is_empty()));
            let g1 = family_from_generators(&[a.clone(), b.clone(), c.clone()])?.generator;
            let g2 = family_from_generators(&[c.clone(), a.clone(), b.clone()])?.generator;
            prop_assert_eq!(&g1, &g2);
            prop_assert!(g1.coeff(0));
        }

        #[test]
        fn two_element_member_is_certified(a in arb_shift_set()) {
            prop_assume!(!a.is_empty());
            let fam = family_from_generators(&[a])?;
            let m = two_element_member(&fam)?;
            prop_assert!(fam.contains_pair(&m.distance));
            if let Some(pair) = m.to_shift_set() {
                prop_assert!(closure_membership(&fam, &pair));
            }
        }
    }
}
