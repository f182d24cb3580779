//! Exact rational scalars, graded rings, sparse polynomials, and the
//! multiplicative maps between them.

pub mod morphism;
pub mod poly;
pub mod rat;
pub mod ring;

pub use morphism::AlgebraMorphism;
pub use poly::{Monomial, PolyElement, WeightBound};
pub use rat::{format_rat, parse_rat, rat, rat_binomial, rat_int, Rat};
pub use ring::{GenClass, Generator, Ring, RingKind};
