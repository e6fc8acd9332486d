//! Exact computations with the Heisenberg–Virasoro algebra, its map algebras
//! `HV ⊗ B` and their representations.
//!
//! The engine is generic over an exact [`Field`]; [`Scalar`] (Gaussian
//! rationals) is the default ground field.

pub mod algebra;
pub mod analysis;
pub mod field;
pub mod flaw;
pub mod lincomb;
pub mod modules;
pub mod poly;

pub use field::{Field, GaussianRational, Rational};
pub use flaw::Flaw;
pub use lincomb::LinComb;

/// The default ground field.
pub type Scalar = GaussianRational;
pub type AlgebraElement = algebra::AlgebraElement<Scalar>;
pub type PolyT = poly::PolyT<Scalar>;
pub type PolyB = poly::PolyB<Scalar>;
pub type PointB = poly::PointB<Scalar>;
pub type JetQuotient = poly::JetQuotient<Scalar>;
pub type QuotientAlgebra = algebra::QuotientAlgebra<Scalar>;
