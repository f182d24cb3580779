//! Truncated power series in two variables with total-degree cutoff.

use std::collections::BTreeMap;
use std::fmt;

use super::fmt::{biv_power_str, write_term};
use super::one::Series1;
use crate::exactalg::{AlgebraMorphism, PolyElement, Ring, WeightBound};
use crate::error::{AlgError, AlgResult};

/// A series `sum c_{ij} u^i v^j` over `1 <= i+j <= order`. Total-degree
/// truncation is closed under the substitutions used by the formal group
/// operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series2 {
    ring: Ring,
    order: u32,
    coeffs: BTreeMap<(u32, u32), PolyElement>,
}

impl Series2 {
    pub fn zero(ring: &Ring, order: u32) -> Series2 {
        assert!(order >= 1, "series order must be positive");
        Series2 {
            ring: ring.clone(),
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs(
        ring: &Ring,
        order: u32,
        coeffs: impl IntoIterator<Item = ((u32, u32), PolyElement)>,
    ) -> AlgResult<Series2> {
        let mut s = Series2::zero(ring, order);
        for ((i, j), c) in coeffs {
            s.set_coeff(i, j, c)?;
        }
        Ok(s)
    }

    pub fn set_coeff(&mut self, i: u32, j: u32, c: PolyElement) -> AlgResult<()> {
        if i + j == 0 {
            return Err(AlgError::ConstantTerm);
        }
        self.ring.expect_same(c.ring())?;
        if i + j > self.order {
            return Ok(());
        }
        if c.is_zero() {
            self.coeffs.remove(&(i, j));
        } else {
            self.coeffs.insert((i, j), c);
        }
        Ok(())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> PolyElement {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| PolyElement::zero(&self.ring))
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &PolyElement)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn truncate_order(&self, order: u32) -> Series2 {
        assert!(order >= 1);
        Series2 {
            ring: self.ring.clone(),
            order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|((i, j), _)| i + j <= order)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Series2) -> AlgResult<Series2> {
        self.ring.expect_same(&other.ring)?;
        let order = self.order.min(other.order);
        let mut out = self.truncate_order(order);
        for ((i, j), c) in other.iter() {
            if i + j <= order {
                let sum = out.coeff(i, j).add(c)?;
                out.set_coeff(i, j, sum)?;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series2) -> AlgResult<Series2> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series2 {
        Series2 {
            ring: self.ring.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn mul_poly(&self, p: &PolyElement) -> AlgResult<Series2> {
        let mut out = Series2::zero(&self.ring, self.order);
        for ((i, j), c) in self.iter() {
            out.set_coeff(i, j, c.mul(p)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Series2) -> AlgResult<Series2> {
        self.ring.expect_same(&other.ring)?;
        let order = self.order.min(other.order);
        let mut out = Series2::zero(&self.ring, order);
        for ((ia, ja), ca) in self.iter() {
            if ia + ja >= order {
                continue;
            }
            for ((ib, jb), cb) in other.iter() {
                let (i, j) = (ia + ib, ja + jb);
                if i + j > order {
                    continue;
                }
                let sum = out.coeff(i, j).add(&ca.mul(cb)?)?;
                out.set_coeff(i, j, sum)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> AlgResult<Series2> {
        assert!(e >= 1);
        let mut out = self.clone();
        for _ in 1..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `g(x)` placed in the `u` slot.
    pub fn lift_u(g: &Series1) -> Series2 {
        let mut out = Series2::zero(g.ring(), g.order());
        for (k, c) in g.iter() {
            out.coeffs.insert((k, 0), c.clone());
        }
        out
    }

    /// `g(x)` placed in the `v` slot.
    pub fn lift_v(g: &Series1) -> Series2 {
        let mut out = Series2::zero(g.ring(), g.order());
        for (k, c) in g.iter() {
            out.coeffs.insert((0, k), c.clone());
        }
        out
    }

    /// `F(u, 0)` as a series in one variable.
    pub fn set_v_zero(&self) -> Series1 {
        let mut out = Series1::zero(&self.ring, self.order);
        for ((i, j), c) in self.iter() {
            if j == 0 {
                out.set_coeff(i, c.clone()).expect("same ring");
            }
        }
        out
    }

    /// `F(0, v)` as a series in one variable.
    pub fn set_u_zero(&self) -> Series1 {
        let mut out = Series1::zero(&self.ring, self.order);
        for ((i, j), c) in self.iter() {
            if i == 0 {
                out.set_coeff(j, c.clone()).expect("same ring");
            }
        }
        out
    }

    /// `F(v, u)`.
    pub fn swap(&self) -> Series2 {
        Series2 {
            ring: self.ring.clone(),
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, f: &AlgebraMorphism) -> AlgResult<Series2> {
        let mut out = Series2::zero(f.target(), self.order);
        for ((i, j), c) in self.iter() {
            out.set_coeff(i, j, f.apply(c)?)?;
        }
        Ok(out)
    }

    pub fn truncate_coeff_weights(&self, bound: WeightBound) -> Series2 {
        let mut out = Series2::zero(&self.ring, self.order);
        for ((i, j), c) in self.iter() {
            let t = c.truncate_above(bound);
            if !t.is_zero() {
                out.coeffs.insert((i, j), t);
            }
        }
        out
    }

    pub fn first_difference(&self, other: &Series2) -> Option<String> {
        let order = self.order.min(other.order);
        for d in 1..=order {
            for i in (0..=d).rev() {
                let j = d - i;
                let a = self.coeff(i, j);
                let b = other.coeff(i, j);
                if a != b {
                    return Some(format!("{}: lhs={a}, rhs={b}", biv_power_str(i, j)));
                }
            }
        }
        None
    }
}

impl fmt::Display for Series2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // total degree first, then u-exponent descending
        let mut keys: Vec<(u32, u32)> = self.coeffs.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (i + j, std::cmp::Reverse(i)));
        let mut first = true;
        for (i, j) in keys {
            let c = &self.coeffs[&(i, j)];
            write_term(f, first, c, &biv_power_str(i, j))?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat_int;

    fn q() -> Ring {
        Ring::rationals()
    }

    fn mult_law(order: u32) -> Series2 {
        let ring = q();
        let one = PolyElement::one(&ring);
        Series2::from_coeffs(
            &ring,
            order,
            [((1, 0), one.clone()), ((0, 1), one.clone()), ((1, 1), one)],
        )
        .unwrap()
    }

    #[test]
    fn display_and_projection() {
        let f = mult_law(4);
        assert_eq!(f.to_string(), "u + v + u*v");
        assert_eq!(f.set_v_zero().to_string(), "x");
        assert_eq!(f.swap(), f);
    }

    #[test]
    fn total_degree_cutoff() {
        let f = mult_law(2);
        let sq = f.mul(&f).unwrap();
        // (u+v+uv)^2 truncated at total degree 2 = u^2 + 2uv + v^2
        assert_eq!(sq.coeff(2, 0), PolyElement::one(&q()));
        assert_eq!(sq.coeff(1, 1), PolyElement::one(&q()).scale(&rat_int(2)));
        assert_eq!(sq.coeff(2, 1), PolyElement::zero(&q()));
    }

    #[test]
    fn first_difference_reports_smallest_degree() {
        let a = mult_law(3);
        let mut b = mult_law(3);
        b.set_coeff(1, 1, PolyElement::zero(&q())).unwrap();
        b.set_coeff(2, 1, PolyElement::one(&q())).unwrap();
        let diff = a.first_difference(&b).unwrap();
        assert_eq!(diff, "u*v: lhs=1, rhs=0");
    }
}
