//! Multiplicative maps between coefficient rings.
//!
//! An [`AlgebraMorphism`] is determined by one image per source generator
//! and extends linearly and multiplicatively to the whole ring. All
//! morphisms in this crate are graded: each image is homogeneous of the
//! generator's weight (or zero), which the constructor enforces.

use std::fmt;

use super::poly::PolyElement;
use super::ring::Ring;
use crate::error::{AlgError, AlgResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: Ring,
    target: Ring,
    images: Vec<PolyElement>,
}

impl AlgebraMorphism {
    pub fn new(source: Ring, target: Ring, images: Vec<PolyElement>) -> AlgResult<AlgebraMorphism> {
        if images.len() != source.gen_count() {
            return Err(AlgError::ImageCount {
                expected: source.gen_count(),
                found: images.len(),
            });
        }
        for (i, img) in images.iter().enumerate() {
            target.expect_same(img.ring())?;
            let gen = source.generator(i);
            if !img.is_homogeneous(gen.weight()) {
                return Err(AlgError::NonGradedImage {
                    gen: gen.name().to_string(),
                    weight: gen.weight(),
                });
            }
        }
        Ok(AlgebraMorphism {
            source,
            target,
            images,
        })
    }

    pub fn identity(ring: &Ring) -> AlgebraMorphism {
        let images = (0..ring.gen_count())
            .map(|i| PolyElement::gen(ring, i))
            .collect();
        AlgebraMorphism {
            source: ring.clone(),
            target: ring.clone(),
            images,
        }
    }

    /// h -> h (x) 1 as a morphism into the tensor square.
    pub fn embed_left(carrier: &Ring) -> AlgResult<AlgebraMorphism> {
        let tensor = carrier.tensor_square()?.clone();
        let images = (0..carrier.gen_count())
            .map(|i| PolyElement::gen(carrier, i).tensor_embed_left())
            .collect::<AlgResult<Vec<_>>>()?;
        AlgebraMorphism::new(carrier.clone(), tensor, images)
    }

    /// h -> 1 (x) h as a morphism into the tensor square.
    pub fn embed_right(carrier: &Ring) -> AlgResult<AlgebraMorphism> {
        let tensor = carrier.tensor_square()?.clone();
        let images = (0..carrier.gen_count())
            .map(|i| PolyElement::gen(carrier, i).tensor_embed_right())
            .collect::<AlgResult<Vec<_>>>()?;
        AlgebraMorphism::new(carrier.clone(), tensor, images)
    }

    /// Embeds a base ring into any ring that shares its scalar block.
    pub fn scalar_embed(base: &Ring, target: &Ring) -> AlgResult<AlgebraMorphism> {
        if target.scalar_count() != base.gen_count()
            || (0..base.gen_count()).any(|i| target.generator(i) != base.generator(i))
        {
            return Err(base.mismatch(target));
        }
        let images = (0..base.gen_count())
            .map(|i| PolyElement::gen(target, i))
            .collect();
        AlgebraMorphism::new(base.clone(), target.clone(), images)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn image(&self, idx: usize) -> &PolyElement {
        &self.images[idx]
    }

    /// Extends the generator images multiplicatively and linearly.
    pub fn apply(&self, a: &PolyElement) -> AlgResult<PolyElement> {
        self.source.expect_same(a.ring())?;
        let mut out = PolyElement::zero(&self.target);
        'term: for (mono, coeff) in a.terms() {
            let mut acc = PolyElement::constant(&self.target, coeff.clone());
            for &(idx, exp) in mono.exponents() {
                let img = &self.images[idx as usize];
                if img.is_zero() {
                    continue 'term;
                }
                acc = acc.mul(&img.pow(exp))?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// `self . inner`: apply `inner` first, then `self`.
    pub fn compose(&self, inner: &AlgebraMorphism) -> AlgResult<AlgebraMorphism> {
        self.source.expect_same(inner.target())?;
        let images = inner
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<AlgResult<Vec<_>>>()?;
        AlgebraMorphism::new(inner.source.clone(), self.target.clone(), images)
    }
}

impl fmt::Display for AlgebraMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} -> {}", self.source.generator(i).name(), img)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly::Monomial;
    use crate::exactalg::rat::rat_int;

    fn carrier() -> Ring {
        Ring::hopf_carrier(&Ring::rationals(), &[("b1", 1), ("b2", 2)]).unwrap()
    }

    #[test]
    fn identity_fixes_everything() {
        let h = carrier();
        let id = AlgebraMorphism::identity(&h);
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        let p = b1.pow(2);
        assert_eq!(id.apply(&p).unwrap(), p);
    }

    #[test]
    fn counit_style_map_kills_positive_weight() {
        let h = carrier();
        let q = Ring::rationals();
        let eps = AlgebraMorphism::new(
            h.clone(),
            q.clone(),
            vec![PolyElement::zero(&q), PolyElement::zero(&q)],
        )
        .unwrap();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        assert!(eps.apply(&b1).unwrap().is_zero());
        let with_const = b1.add(&PolyElement::constant(&h, rat_int(7))).unwrap();
        assert_eq!(
            eps.apply(&with_const).unwrap(),
            PolyElement::constant(&q, rat_int(7))
        );
    }

    #[test]
    fn multiplicative_on_products() {
        let h = carrier();
        // b1 -> -b1, b2 -> b1^2 - b2 (antipode-shaped map)
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        let b2 = PolyElement::generator(&h, "b2").unwrap();
        let f = AlgebraMorphism::new(
            h.clone(),
            h.clone(),
            vec![b1.neg(), b1.pow(2).sub(&b2).unwrap()],
        )
        .unwrap();
        let prod = b1.mul(&b2).unwrap();
        let expect = f.apply(&b1).unwrap().mul(&f.apply(&b2).unwrap()).unwrap();
        assert_eq!(f.apply(&prod).unwrap(), expect);
    }

    #[test]
    fn graded_images_enforced() {
        let h = carrier();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        // b2 has weight 2; image b1 has weight 1.
        let bad = AlgebraMorphism::new(
            h.clone(),
            h.clone(),
            vec![b1.clone(), b1.clone()],
        );
        assert!(matches!(bad, Err(AlgError::NonGradedImage { .. })));
    }

    #[test]
    fn missing_image_is_rejected() {
        let h = carrier();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        assert!(matches!(
            AlgebraMorphism::new(h.clone(), h.clone(), vec![b1]),
            Err(AlgError::ImageCount { .. })
        ));
    }

    #[test]
    fn compose_matches_sequential_application() {
        let h = carrier();
        let b1 = PolyElement::generator(&h, "b1").unwrap();
        let b2 = PolyElement::generator(&h, "b2").unwrap();
        let s = AlgebraMorphism::new(
            h.clone(),
            h.clone(),
            vec![b1.neg(), b1.pow(2).sub(&b2).unwrap()],
        )
        .unwrap();
        let ss = s.compose(&s).unwrap();
        let p = PolyElement::term(&h, Monomial::from_exponents(&[(1, 1), (2, 1)]), rat_int(1));
        assert_eq!(ss.apply(&p).unwrap(), s.apply(&s.apply(&p).unwrap()).unwrap());
        // the antipode of a commutative hopf algebra is an involution
        assert_eq!(ss, AlgebraMorphism::identity(&h));
    }
}
