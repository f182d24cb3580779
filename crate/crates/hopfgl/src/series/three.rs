//! Three-variable scratch series, used only for the associativity check of
//! formal group laws. Not part of the public surface.

use std::collections::BTreeMap;

use super::two::Series2;
use crate::exactalg::{PolyElement, Ring};
use crate::error::AlgResult;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Series3 {
    ring: Ring,
    order: u32,
    coeffs: BTreeMap<(u32, u32, u32), PolyElement>,
}

impl Series3 {
    pub(crate) fn zero(ring: &Ring, order: u32) -> Series3 {
        Series3 {
            ring: ring.clone(),
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// The bare variable on the given axis (0, 1 or 2).
    pub(crate) fn var(ring: &Ring, order: u32, axis: usize) -> Series3 {
        let mut s = Series3::zero(ring, order);
        let key = match axis {
            0 => (1, 0, 0),
            1 => (0, 1, 0),
            _ => (0, 0, 1),
        };
        s.coeffs.insert(key, PolyElement::one(ring));
        s
    }

    /// Places a two-variable series onto the given pair of axes.
    pub(crate) fn from2(f: &Series2, axes: (usize, usize)) -> Series3 {
        let mut s = Series3::zero(f.ring(), f.order());
        for ((i, j), c) in f.iter() {
            let mut key = [0u32; 3];
            key[axes.0] = i;
            key[axes.1] = j;
            s.coeffs.insert((key[0], key[1], key[2]), c.clone());
        }
        s
    }

    fn set(&mut self, key: (u32, u32, u32), c: PolyElement) {
        if c.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, c);
        }
    }

    fn add_assign(&mut self, other: &Series3) -> AlgResult<()> {
        for (key, c) in &other.coeffs {
            let sum = match self.coeffs.get(key) {
                Some(cur) => cur.add(c)?,
                None => c.clone(),
            };
            self.set(*key, sum);
        }
        Ok(())
    }

    fn mul(&self, other: &Series3) -> AlgResult<Series3> {
        let order = self.order.min(other.order);
        let mut out = Series3::zero(&self.ring, order);
        for (&(a1, a2, a3), ca) in &self.coeffs {
            if a1 + a2 + a3 >= order {
                continue;
            }
            for (&(b1, b2, b3), cb) in &other.coeffs {
                let key = (a1 + b1, a2 + b2, a3 + b3);
                if key.0 + key.1 + key.2 > order {
                    continue;
                }
                let prod = ca.mul(cb)?;
                let sum = match out.coeffs.get(&key) {
                    Some(cur) => cur.add(&prod)?,
                    None => prod,
                };
                out.set(key, sum);
            }
        }
        Ok(out)
    }

    pub(crate) fn first_difference(&self, other: &Series3) -> Option<String> {
        let mut keys: Vec<(u32, u32, u32)> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .collect();
        keys.sort_by_key(|&(i, j, k)| (i + j + k, i, j));
        keys.dedup();
        for key in keys {
            let zero = PolyElement::zero(&self.ring);
            let a = self.coeffs.get(&key).unwrap_or(&zero);
            let b = other.coeffs.get(&key).unwrap_or(&zero);
            if a != b {
                return Some(format!(
                    "u^{}*v^{}*w^{}: lhs={a}, rhs={b}",
                    key.0, key.1, key.2
                ));
            }
        }
        None
    }
}

/// `F(a, b)` for a two-variable series and three-variable arguments.
pub(crate) fn subst2_as3(f: &Series2, a: &Series3, b: &Series3) -> AlgResult<Series3> {
    let order = f.order().min(a.order).min(b.order);
    let ring = f.ring().clone();
    let mut a_pows: Vec<Series3> = Vec::new();
    let mut b_pows: Vec<Series3> = Vec::new();
    let mut out = Series3::zero(&ring, order);
    for ((i, j), c) in f.iter() {
        if i + j > order {
            continue;
        }
        while (a_pows.len() as u32) < i {
            let next = match a_pows.last() {
                Some(p) => p.mul(a)?,
                None => a.clone(),
            };
            a_pows.push(next);
        }
        while (b_pows.len() as u32) < j {
            let next = match b_pows.last() {
                Some(p) => p.mul(b)?,
                None => b.clone(),
            };
            b_pows.push(next);
        }
        let term = match (i, j) {
            (0, _) => b_pows[j as usize - 1].clone(),
            (_, 0) => a_pows[i as usize - 1].clone(),
            _ => a_pows[i as usize - 1].mul(&b_pows[j as usize - 1])?,
        };
        let mut scaled = Series3::zero(&ring, order);
        for (key, tc) in &term.coeffs {
            scaled.set(*key, tc.mul(c)?);
        }
        out.add_assign(&scaled)?;
    }
    Ok(out)
}
