//! Sparse graded polynomials with exact rational coefficients.
//!
//! A [`PolyElement`] is a finite sum of monomials in the generators of its
//! [`Ring`], stored sparsely with no zero coefficients. All arithmetic is
//! exact. Canonical printing orders terms by total weight, then by the
//! monomial's exponent sequence, so output is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rat::{format_rat, is_negative, rat_one, Rat};
use super::ring::{GenClass, Ring, RingKind};
use crate::error::{AlgError, AlgResult};

/// Weight ceiling used when modelling completed tensor products; the
/// `Unbounded` variant is the infinity sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightBound {
    Unbounded,
    AtMost(u32),
}

impl WeightBound {
    pub fn admits(&self, weight: u32) -> bool {
        match self {
            WeightBound::Unbounded => true,
            WeightBound::AtMost(w) => weight <= *w,
        }
    }
}

/// Exponent map of a single monomial, sorted by generator index.
/// `Monomial::unit()` is the empty product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn gen(idx: usize) -> Monomial {
        Monomial(vec![(idx as u32, 1)])
    }

    /// Builds a monomial from arbitrary (index, exponent) pairs; zero
    /// exponents are dropped and repeated indices are merged.
    pub fn from_exponents(pairs: &[(usize, u32)]) -> Monomial {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        for &(idx, exp) in pairs {
            if exp > 0 {
                *map.entry(idx as u32).or_insert(0) += exp;
            }
        }
        Monomial(map.into_iter().collect())
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::unit();
        }
        Monomial(self.0.iter().map(|&(i, x)| (i, x * e)).collect())
    }

    pub fn weight(&self, ring: &Ring) -> u32 {
        self.0
            .iter()
            .map(|&(i, e)| e * ring.generator(i as usize).weight())
            .sum()
    }

    /// Weight carried by non-scalar generators only; scalars from the base
    /// ring do not count toward the hopf grading.
    pub fn hopf_weight(&self, ring: &Ring) -> u32 {
        self.0
            .iter()
            .filter(|&&(i, _)| (i as usize) >= ring.scalar_count())
            .map(|&(i, e)| e * ring.generator(i as usize).weight())
            .sum()
    }

    /// Applies an index map to every generator; the result is renormalized.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> Monomial {
        let pairs: Vec<(usize, u32)> = self
            .0
            .iter()
            .map(|&(i, e)| (f(i as usize), e))
            .collect();
        Monomial::from_exponents(&pairs)
    }

    /// Splits a tensor-ring monomial into its scalar part and one carrier
    /// monomial per tensor slot (hopf indices rewritten to carrier layout).
    pub(crate) fn split_slots(&self, ring: &Ring) -> (Monomial, Vec<Monomial>) {
        let copies = match ring.kind() {
            RingKind::TensorPower(c) => c as usize,
            _ => 0,
        };
        let mut scalar = Vec::new();
        let mut slots: Vec<Vec<(u32, u32)>> = vec![Vec::new(); copies];
        for &(i, e) in &self.0 {
            match ring.classify(i as usize) {
                GenClass::Scalar(_) => scalar.push((i, e)),
                GenClass::Slot { slot, gen } => {
                    slots[slot as usize].push(((ring.scalar_count() + gen) as u32, e));
                }
                GenClass::Hopf(_) => unreachable!("split_slots on non-tensor ring"),
            }
        }
        (
            Monomial(scalar),
            slots.into_iter().map(Monomial).collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyElement {
    ring: Ring,
    terms: BTreeMap<Monomial, Rat>,
}

impl PolyElement {
    pub fn zero(ring: &Ring) -> PolyElement {
        PolyElement {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> PolyElement {
        PolyElement::constant(ring, rat_one())
    }

    pub fn constant(ring: &Ring, c: Rat) -> PolyElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        PolyElement {
            ring: ring.clone(),
            terms,
        }
    }

    /// The idx-th generator as an element. Panics on a bad index.
    pub fn gen(ring: &Ring, idx: usize) -> PolyElement {
        assert!(idx < ring.gen_count(), "generator index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::gen(idx), rat_one());
        PolyElement {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn generator(ring: &Ring, name: &str) -> AlgResult<PolyElement> {
        let idx = ring
            .find_gen(name)
            .ok_or_else(|| AlgError::UnknownGenerator(name.to_string(), ring.to_string()))?;
        Ok(PolyElement::gen(ring, idx))
    }

    pub fn term(ring: &Ring, mono: Monomial, coeff: Rat) -> PolyElement {
        let mut out = PolyElement::zero(ring);
        out.add_term(mono, coeff);
        out
    }

    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Monomial, Rat)>,
    ) -> PolyElement {
        let mut out = PolyElement::zero(ring);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn constant_part(&self) -> Rat {
        self.terms
            .get(&Monomial::unit())
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, mono: &Monomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.weight(&self.ring)).max()
    }

    /// True when every monomial has total weight `w` (the zero element is
    /// homogeneous of every weight).
    pub fn is_homogeneous(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight(&self.ring) == w)
    }

    pub fn add(&self, other: &PolyElement) -> AlgResult<PolyElement> {
        self.ring.expect_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyElement) -> AlgResult<PolyElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyElement {
        PolyElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> PolyElement {
        if c.is_zero() {
            return PolyElement::zero(&self.ring);
        }
        PolyElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &PolyElement) -> AlgResult<PolyElement> {
        self.mul_bounded(other, WeightBound::Unbounded)
    }

    /// Product with monomials above the weight bound dropped; the bound
    /// models computation in the completed tensor product.
    pub fn mul_bounded(&self, other: &PolyElement, bound: WeightBound) -> AlgResult<PolyElement> {
        self.ring.expect_same(&other.ring)?;
        let mut out = PolyElement::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if bound.admits(m.weight(&self.ring)) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> PolyElement {
        let mut out = PolyElement::one(&self.ring);
        for _ in 0..e {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// Drops every monomial of weight above the bound.
    pub fn truncate_above(&self, bound: WeightBound) -> PolyElement {
        match bound {
            WeightBound::Unbounded => self.clone(),
            WeightBound::AtMost(w) => PolyElement {
                ring: self.ring.clone(),
                terms: self
                    .terms
                    .iter()
                    .filter(|(m, _)| m.weight(&self.ring) <= w)
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect(),
            },
        }
    }

    fn tensor_embed(&self, slot: u32) -> AlgResult<PolyElement> {
        let tensor = self.ring.tensor_square()?.clone();
        let n_scalar = self.ring.scalar_count();
        let out_terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let m = m.remap(|i| {
                    if i < n_scalar {
                        i
                    } else {
                        tensor.slot_index(slot, i - n_scalar)
                    }
                });
                (m, c.clone())
            })
            .collect();
        Ok(PolyElement {
            ring: tensor,
            terms: out_terms,
        })
    }

    /// h -> h (x) 1 into the registered tensor square.
    pub fn tensor_embed_left(&self) -> AlgResult<PolyElement> {
        self.tensor_embed(0)
    }

    /// h -> 1 (x) h into the registered tensor square.
    pub fn tensor_embed_right(&self) -> AlgResult<PolyElement> {
        self.tensor_embed(1)
    }

    /// Terms sorted for printing: total weight first, then exponent order.
    pub(crate) fn sorted_terms(&self) -> Vec<(&Monomial, &Rat)> {
        let mut terms: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.weight(&self.ring), (*m).clone()));
        terms
    }

    pub(crate) fn format_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = m
            .exponents()
            .iter()
            .map(|&(i, e)| {
                let name = self.ring.generator(i as usize).name();
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        factors.join("*")
    }
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (pos, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = is_negative(c);
            if pos == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let abs = if neg { -c } else { c.clone() };
            if m.is_unit() {
                f.write_str(&format_rat(&abs))?;
            } else if abs.is_one() {
                f.write_str(&self.format_monomial(m))?;
            } else {
                write!(f, "{}*{}", format_rat(&abs), self.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::{rat, rat_int};

    fn beta_ring() -> Ring {
        let base = Ring::rationals();
        Ring::hopf_carrier(&base, &[("b1", 1), ("b2", 2), ("b3", 3)]).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let h = beta_ring();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        assert!(b1.add(&b1.neg()).unwrap().is_zero());
    }

    #[test]
    fn like_terms_collect() {
        let h = beta_ring();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        let sum = b1.scale(&rat_int(2)).add(&b1.scale(&rat_int(3))).unwrap();
        assert_eq!(sum, b1.scale(&rat_int(5)));
        assert_eq!(sum.to_string(), "5*b1");
    }

    #[test]
    fn sparse_merge() {
        let h = beta_ring();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        let b2 = PolyElement::generator(&h, "b2").unwrap();
        let b1b2 = b1.mul(&b2).unwrap();
        let lhs = b1b2.add(&PolyElement::one(&h)).unwrap();
        let sum = lhs.add(&b1b2).unwrap();
        assert_eq!(sum.to_string(), "1 + 2*b1*b2");
    }

    #[test]
    fn products() {
        let h = beta_ring();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        let b2 = PolyElement::generator(&h, "b2").unwrap();
        assert_eq!(b1.mul(&b1).unwrap().to_string(), "b1^2");

        let e = b2.add(&PolyElement::constant(&h, rat(1, 2))).unwrap();
        assert_eq!(PolyElement::one(&h).mul(&e).unwrap(), e);

        let sum = b1.add(&b2).unwrap();
        let diff = b1.sub(&b2).unwrap();
        let expect = b1.mul(&b1).unwrap().sub(&b2.mul(&b2).unwrap()).unwrap();
        assert_eq!(sum.mul(&diff).unwrap(), expect);
    }

    #[test]
    fn ring_mismatch_rejected() {
        let h = beta_ring();
        let q = Ring::rationals();
        let a = PolyElement::generator(&h, "b1").unwrap();
        let b = PolyElement::one(&q);
        assert!(matches!(a.add(&b), Err(AlgError::RingMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(AlgError::RingMismatch { .. })));
    }

    #[test]
    fn truncate_above_weight() {
        let h = beta_ring();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        let b3 = PolyElement::generator(&h, "b3").unwrap();
        let e = b1.add(&b3).unwrap();
        assert_eq!(e.truncate_above(WeightBound::AtMost(2)), b1);
        assert_eq!(e.truncate_above(WeightBound::Unbounded), e);
        let b1sq = b1.mul(&b1).unwrap();
        assert!(b1sq.truncate_above(WeightBound::AtMost(1)).is_zero());
    }

    #[test]
    fn tensor_embeds() {
        let h = beta_ring();
        let t = h.tensor_square().unwrap().clone();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        assert_eq!(
            b1.tensor_embed_left().unwrap(),
            PolyElement::generator(&t, "b1.l").unwrap()
        );
        assert_eq!(
            b1.tensor_embed_right().unwrap(),
            PolyElement::generator(&t, "b1.r").unwrap()
        );
        assert_eq!(
            PolyElement::one(&h).tensor_embed_left().unwrap(),
            PolyElement::one(&t)
        );
        assert!(PolyElement::one(&t).tensor_embed_left().is_err());
    }

    #[test]
    fn weight_queries() {
        let h = beta_ring();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        let b2 = PolyElement::generator(&h, "b2").unwrap();
        let p = b1.pow(2).mul(&b2).unwrap();
        assert_eq!(p.max_weight(), Some(4));
        assert!(p.is_homogeneous(4));
        assert!(!p.add(&b1).unwrap().is_homogeneous(4));
        assert!(PolyElement::zero(&h).is_homogeneous(17));
    }

    #[test]
    fn display_ordering_is_graded() {
        let h = beta_ring();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        let b2 = PolyElement::generator(&h, "b2").unwrap();
        let e = b2
            .add(&b1.pow(2).scale(&rat_int(-1)))
            .unwrap()
            .add(&PolyElement::constant(&h, rat(1, 3)))
            .unwrap();
        assert_eq!(e.to_string(), "1/3 - b1^2 + b2");
    }
}
