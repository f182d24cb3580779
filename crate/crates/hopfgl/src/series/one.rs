//! Truncated power series in one variable.

use std::collections::BTreeMap;
use std::fmt;

use super::fmt::{power_str, write_term};
use crate::exactalg::rat::Rat;
use crate::exactalg::{AlgebraMorphism, PolyElement, Ring, WeightBound};
use crate::error::{AlgError, AlgResult};

/// A series `sum_{k=1..=order} c_k x^k` with [`PolyElement`] coefficients.
/// The constant term is identically zero, which keeps every composition in
/// this crate well-defined under truncation. The zero series (empty
/// coefficient map) is a legal value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series1 {
    ring: Ring,
    order: u32,
    coeffs: BTreeMap<u32, PolyElement>,
}

impl Series1 {
    pub fn zero(ring: &Ring, order: u32) -> Series1 {
        assert!(order >= 1, "series order must be positive");
        Series1 {
            ring: ring.clone(),
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// The series `x`.
    pub fn identity(ring: &Ring, order: u32) -> Series1 {
        let mut s = Series1::zero(ring, order);
        s.coeffs.insert(1, PolyElement::one(ring));
        s
    }

    pub fn from_coeffs(
        ring: &Ring,
        order: u32,
        coeffs: impl IntoIterator<Item = (u32, PolyElement)>,
    ) -> AlgResult<Series1> {
        let mut s = Series1::zero(ring, order);
        for (k, c) in coeffs {
            s.set_coeff(k, c)?;
        }
        Ok(s)
    }

    /// Sets the coefficient of `x^k`; terms beyond the order are dropped.
    pub fn set_coeff(&mut self, k: u32, c: PolyElement) -> AlgResult<()> {
        if k == 0 {
            return Err(AlgError::ConstantTerm);
        }
        self.ring.expect_same(c.ring())?;
        if k > self.order {
            return Ok(());
        }
        if c.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
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

    pub fn coeff_ref(&self, k: u32) -> Option<&PolyElement> {
        self.coeffs.get(&k)
    }

    pub fn coeff(&self, k: u32) -> PolyElement {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| PolyElement::zero(&self.ring))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &PolyElement)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn truncate_order(&self, order: u32) -> Series1 {
        assert!(order >= 1);
        Series1 {
            ring: self.ring.clone(),
            order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| **k <= order)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Series1) -> AlgResult<Series1> {
        self.ring.expect_same(&other.ring)?;
        let order = self.order.min(other.order);
        let mut out = self.truncate_order(order);
        for (k, c) in other.iter() {
            if k <= order {
                let sum = out.coeff(k).add(c)?;
                out.set_coeff(k, sum)?;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series1) -> AlgResult<Series1> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series1 {
        Series1 {
            ring: self.ring.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Series1 {
        let mut out = Series1::zero(&self.ring, self.order);
        for (k, v) in self.iter() {
            let scaled = v.scale(c);
            if !scaled.is_zero() {
                out.coeffs.insert(k, scaled);
            }
        }
        out
    }

    /// Multiplies every coefficient by a fixed ring element.
    pub fn mul_poly(&self, p: &PolyElement) -> AlgResult<Series1> {
        let mut out = Series1::zero(&self.ring, self.order);
        for (k, v) in self.iter() {
            out.set_coeff(k, v.mul(p)?)?;
        }
        Ok(out)
    }

    /// Series product truncated to the smaller order.
    pub fn mul(&self, other: &Series1) -> AlgResult<Series1> {
        self.ring.expect_same(&other.ring)?;
        let order = self.order.min(other.order);
        let mut out = Series1::zero(&self.ring, order);
        for (ka, ca) in self.iter() {
            if ka >= order {
                break;
            }
            for (kb, cb) in other.iter() {
                let k = ka + kb;
                if k > order {
                    break;
                }
                let sum = out.coeff(k).add(&ca.mul(cb)?)?;
                out.set_coeff(k, sum)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> AlgResult<Series1> {
        assert!(e >= 1, "series have no constant term; x^0 is not a series");
        let mut out = self.clone();
        for _ in 1..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Applies a morphism to every coefficient; the result lives over the
    /// morphism's target ring.
    pub fn map_coeffs(&self, f: &AlgebraMorphism) -> AlgResult<Series1> {
        let mut out = Series1::zero(f.target(), self.order);
        for (k, c) in self.iter() {
            out.set_coeff(k, f.apply(c)?)?;
        }
        Ok(out)
    }

    /// Drops coefficient monomials above the weight bound.
    pub fn truncate_coeff_weights(&self, bound: WeightBound) -> Series1 {
        let mut out = Series1::zero(&self.ring, self.order);
        for (k, c) in self.iter() {
            let t = c.truncate_above(bound);
            if !t.is_zero() {
                out.coeffs.insert(k, t);
            }
        }
        out
    }

    /// First exponent where the two series differ, with both coefficients,
    /// or `None` when they agree to the common order.
    pub fn first_difference(&self, other: &Series1) -> Option<String> {
        let order = self.order.min(other.order);
        for k in 1..=order {
            let a = self.coeff(k);
            let b = other.coeff(k);
            if a != b {
                return Some(format!("x^{k}: lhs={a}, rhs={b}"));
            }
        }
        None
    }
}

impl fmt::Display for Series1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.iter() {
            write_term(f, first, c, &power_str("x", k))?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat_int;

    #[test]
    fn constant_term_rejected() {
        let q = Ring::rationals();
        let mut s = Series1::zero(&q, 3);
        assert!(matches!(
            s.set_coeff(0, PolyElement::one(&q)),
            Err(AlgError::ConstantTerm)
        ));
    }

    #[test]
    fn terms_beyond_order_dropped() {
        let q = Ring::rationals();
        let s = Series1::from_coeffs(&q, 2, [(1, PolyElement::one(&q)), (5, PolyElement::one(&q))])
            .unwrap();
        assert_eq!(s.coeff(5), PolyElement::zero(&q));
        assert_eq!(s.to_string(), "x");
    }

    #[test]
    fn product_truncates() {
        let q = Ring::rationals();
        let x = Series1::identity(&q, 3);
        let sq = x.mul(&x).unwrap();
        assert_eq!(sq.to_string(), "x^2");
        let quad = sq.mul(&sq).unwrap();
        assert!(quad.is_zero());
    }

    #[test]
    fn display_shapes() {
        let h = Ring::hopf_carrier(&Ring::rationals(), &[("b1", 1), ("b2", 2)]).unwrap();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        let b2 = PolyElement::generator(&h, "b2").unwrap();
        let s = Series1::from_coeffs(
            &h,
            4,
            [
                (1, PolyElement::one(&h)),
                (2, b1.neg()),
                (3, b1.pow(2).scale(&rat_int(2))),
                (4, b2.add(&b1.pow(2)).unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(s.to_string(), "x - b1*x^2 + 2*b1^2*x^3 + (b1^2 + b2)*x^4");
    }
}
