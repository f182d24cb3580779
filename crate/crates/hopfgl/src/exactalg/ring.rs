//! Graded coefficient rings.
//!
//! A [`Ring`] describes a polynomial coefficient universe: the base ring R
//! (rational scalars adjoined weighted central generators), a hopf carrier
//! H (the base generators plus the comodule generators the diagonal acts
//! on), or a tensor power of a carrier over R. In a tensor power the base
//! generators stay as single scalars while every hopf generator appears
//! once per tensor slot.
//!
//! Rings are immutable and cheaply cloneable; equality is structural.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgError, AlgResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    name: String,
    weight: u32,
}

impl Generator {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    /// The base ring R.
    Base,
    /// A hopf algebra carrier H over R.
    HopfCarrier,
    /// H tensored with itself `copies` times over R.
    TensorPower(u32),
}

/// How a generator index sits inside its ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenClass {
    /// Base-ring generator (shared scalar).
    Scalar(usize),
    /// Hopf generator of a carrier ring.
    Hopf(usize),
    /// Hopf generator sitting in tensor slot `slot`.
    Slot { slot: u32, gen: usize },
}

#[derive(Debug)]
struct RingInner {
    kind: RingKind,
    gens: Vec<Generator>,
    n_scalar: usize,
    n_hopf: usize,
    tensor_square: Option<Ring>,
    base: Option<Ring>,
    label: String,
}

#[derive(Debug, Clone)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.kind == other.0.kind
                && self.0.n_scalar == other.0.n_scalar
                && self.0.n_hopf == other.0.n_hopf
                && self.0.gens == other.0.gens)
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.label)
    }
}

fn check_gens(gens: &[(String, u32)]) -> AlgResult<()> {
    for (i, (name, weight)) in gens.iter().enumerate() {
        if *weight == 0 {
            return Err(AlgError::ZeroWeight(name.clone()));
        }
        if gens[..i].iter().any(|(n, _)| n == name) {
            return Err(AlgError::DuplicateGenerator(name.clone()));
        }
    }
    Ok(())
}

fn gen_list(gens: &[(String, u32)]) -> Vec<Generator> {
    gens.iter()
        .map(|(name, weight)| Generator {
            name: name.clone(),
            weight: *weight,
        })
        .collect()
}

fn bracket(gens: &[Generator]) -> String {
    let names: Vec<&str> = gens.iter().map(|g| g.name.as_str()).collect();
    format!("[{}]", names.join(","))
}

impl Ring {
    /// The plain rationals: a base ring with no generators.
    pub fn rationals() -> Ring {
        Ring::base(&[]).expect("empty generator list is valid")
    }

    /// Base ring Q adjoined the named weighted generators.
    pub fn base(gens: &[(&str, u32)]) -> AlgResult<Ring> {
        let owned: Vec<(String, u32)> = gens.iter().map(|(n, w)| (n.to_string(), *w)).collect();
        check_gens(&owned)?;
        let gens = gen_list(&owned);
        let label = if gens.is_empty() {
            "Q".to_string()
        } else {
            format!("Q{}", bracket(&gens))
        };
        let n_scalar = gens.len();
        Ok(Ring(Arc::new(RingInner {
            kind: RingKind::Base,
            gens,
            n_scalar,
            n_hopf: 0,
            tensor_square: None,
            base: None,
            label,
        })))
    }

    /// Carrier ring for a hopf algebra over `base`, with the given hopf
    /// generators. The tensor square is registered eagerly.
    pub fn hopf_carrier(base: &Ring, hopf: &[(&str, u32)]) -> AlgResult<Ring> {
        if base.kind() != RingKind::Base {
            return Err(AlgError::InvalidHopf(format!(
                "carrier must be built over a base ring, got {base}"
            )));
        }
        let mut all: Vec<(String, u32)> = base
            .0
            .gens
            .iter()
            .map(|g| (g.name.clone(), g.weight))
            .collect();
        all.extend(hopf.iter().map(|(n, w)| (n.to_string(), *w)));
        check_gens(&all)?;

        let n_scalar = base.gen_count();
        let n_hopf = hopf.len();
        let gens = gen_list(&all);
        let hopf_gens: Vec<Generator> = gens[n_scalar..].to_vec();
        let label = format!("{}{}", base.0.label, bracket(&hopf_gens));
        let tensor = Ring::tensor_power_raw(base, &hopf_gens, 2, &label);
        Ok(Ring(Arc::new(RingInner {
            kind: RingKind::HopfCarrier,
            gens,
            n_scalar,
            n_hopf,
            tensor_square: Some(tensor),
            base: Some(base.clone()),
            label,
        })))
    }

    fn slot_tag(copies: u32, slot: u32) -> String {
        if copies == 2 {
            if slot == 0 { "l".into() } else { "r".into() }
        } else {
            (slot + 1).to_string()
        }
    }

    fn tensor_power_raw(base: &Ring, hopf_gens: &[Generator], copies: u32, carrier_label: &str) -> Ring {
        let mut gens: Vec<Generator> = base.0.gens.clone();
        for slot in 0..copies {
            let tag = Ring::slot_tag(copies, slot);
            for g in hopf_gens {
                gens.push(Generator {
                    name: format!("{}.{}", g.name, tag),
                    weight: g.weight,
                });
            }
        }
        Ring(Arc::new(RingInner {
            kind: RingKind::TensorPower(copies),
            gens,
            n_scalar: base.gen_count(),
            n_hopf: hopf_gens.len(),
            tensor_square: None,
            base: Some(base.clone()),
            label: format!("{carrier_label}^(x{copies})"),
        }))
    }

    /// Fresh tensor power of a carrier ring. Power 2 is the registered
    /// square; higher powers are scratch rings for coassociativity checks.
    pub(crate) fn tensor_power(&self, copies: u32) -> AlgResult<Ring> {
        match self.kind() {
            RingKind::HopfCarrier => {
                if copies == 2 {
                    return Ok(self.tensor_square()?.clone());
                }
                let base = self.base_ring().expect("carrier has a base");
                let hopf: Vec<Generator> = self.0.gens[self.0.n_scalar..].to_vec();
                Ok(Ring::tensor_power_raw(&base, &hopf, copies, &self.0.label))
            }
            _ => Err(AlgError::NoTensorSquare(self.to_string())),
        }
    }

    pub fn kind(&self) -> RingKind {
        self.0.kind
    }

    pub fn gens(&self) -> &[Generator] {
        &self.0.gens
    }

    pub fn gen_count(&self) -> usize {
        self.0.gens.len()
    }

    pub fn generator(&self, idx: usize) -> &Generator {
        &self.0.gens[idx]
    }

    pub fn find_gen(&self, name: &str) -> Option<usize> {
        self.0.gens.iter().position(|g| g.name == name)
    }

    /// Scalar (base) generators come first in every ring.
    pub fn scalar_count(&self) -> usize {
        self.0.n_scalar
    }

    /// Hopf generators per tensor slot (0 for base rings).
    pub fn hopf_count(&self) -> usize {
        self.0.n_hopf
    }

    pub fn tensor_square(&self) -> AlgResult<&Ring> {
        self.0
            .tensor_square
            .as_ref()
            .ok_or_else(|| AlgError::NoTensorSquare(self.to_string()))
    }

    pub fn base_ring(&self) -> Option<Ring> {
        match self.kind() {
            RingKind::Base => Some(self.clone()),
            _ => self.0.base.clone(),
        }
    }

    /// Index of the j-th hopf generator in a carrier ring.
    pub fn hopf_index(&self, j: usize) -> usize {
        debug_assert!(self.kind() == RingKind::HopfCarrier && j < self.0.n_hopf);
        self.0.n_scalar + j
    }

    /// Index of the j-th hopf generator in tensor slot `slot`.
    pub fn slot_index(&self, slot: u32, j: usize) -> usize {
        debug_assert!(matches!(self.kind(), RingKind::TensorPower(c) if slot < c));
        debug_assert!(j < self.0.n_hopf);
        self.0.n_scalar + slot as usize * self.0.n_hopf + j
    }

    pub fn classify(&self, idx: usize) -> GenClass {
        if idx < self.0.n_scalar {
            return GenClass::Scalar(idx);
        }
        let off = idx - self.0.n_scalar;
        match self.kind() {
            RingKind::Base => unreachable!("base ring has only scalar generators"),
            RingKind::HopfCarrier => GenClass::Hopf(off),
            RingKind::TensorPower(_) => GenClass::Slot {
                slot: (off / self.0.n_hopf) as u32,
                gen: off % self.0.n_hopf,
            },
        }
    }

    pub(crate) fn mismatch(&self, other: &Ring) -> AlgError {
        AlgError::RingMismatch {
            expected: self.to_string(),
            found: other.to_string(),
        }
    }

    pub(crate) fn expect_same(&self, other: &Ring) -> AlgResult<()> {
        if self == other {
            Ok(())
        } else {
            Err(self.mismatch(other))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_ring_construction() {
        let r = Ring::base(&[("m1", 1), ("m2", 2)]).unwrap();
        assert_eq!(r.kind(), RingKind::Base);
        assert_eq!(r.gen_count(), 2);
        assert_eq!(r.to_string(), "Q[m1,m2]");
        assert_eq!(r.find_gen("m2"), Some(1));
        assert!(Ring::base(&[("a", 0)]).is_err());
        assert!(Ring::base(&[("a", 1), ("a", 2)]).is_err());
    }

    #[test]
    fn carrier_and_tensor_layout() {
        let base = Ring::base(&[("m1", 1)]).unwrap();
        let h = Ring::hopf_carrier(&base, &[("b1", 1), ("b2", 2)]).unwrap();
        assert_eq!(h.scalar_count(), 1);
        assert_eq!(h.hopf_count(), 2);
        assert_eq!(h.hopf_index(1), 2);

        let t = h.tensor_square().unwrap();
        assert_eq!(t.kind(), RingKind::TensorPower(2));
        assert_eq!(t.gen_count(), 1 + 2 + 2);
        assert_eq!(t.generator(t.slot_index(0, 0)).name(), "b1.l");
        assert_eq!(t.generator(t.slot_index(1, 1)).name(), "b2.r");
        assert_eq!(
            t.classify(t.slot_index(1, 0)),
            GenClass::Slot { slot: 1, gen: 0 }
        );
        assert_eq!(t.classify(0), GenClass::Scalar(0));
        assert_eq!(t.base_ring().unwrap(), base);
    }

    #[test]
    fn structural_equality() {
        let a = Ring::base(&[("m1", 1)]).unwrap();
        let b = Ring::base(&[("m1", 1)]).unwrap();
        let c = Ring::base(&[("m1", 2)]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);

        let ha = Ring::hopf_carrier(&a, &[("b1", 1)]).unwrap();
        let hb = Ring::hopf_carrier(&b, &[("b1", 1)]).unwrap();
        assert_eq!(ha, hb);
        assert_eq!(ha.tensor_square().unwrap(), hb.tensor_square().unwrap());
        assert_ne!(a, ha);
    }

    #[test]
    fn tensor_cube_is_scratch() {
        let base = Ring::rationals();
        let h = Ring::hopf_carrier(&base, &[("b1", 1)]).unwrap();
        let cube = h.tensor_power(3).unwrap();
        assert_eq!(cube.kind(), RingKind::TensorPower(3));
        assert_eq!(cube.gen_count(), 3);
        assert_eq!(cube.generator(cube.slot_index(2, 0)).name(), "b1.3");
        assert!(base.tensor_power(2).is_err());
    }
}
