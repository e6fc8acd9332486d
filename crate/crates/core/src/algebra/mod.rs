//! The Heisenberg–Virasoro algebra `HV` and its map algebras `HV ⊗ B`.
//!
//! Elements are sparse combinations of [`BasisTerm`]s `g ⊗ e`, where `g` is a
//! generator of `HV` and `e` a basis element of the coefficient algebra. For
//! `B = C[b_1..b_k]` the basis is the monomials; for a finite quotient of `B`
//! it is [`JetBasis`]. Plain `HV` is the case `k = 0`.

mod bracket;
mod quotient;
mod text;

pub use bracket::{bracket, grade_split, jacobi_check, CoefficientAlgebra, GradeSplit, PolyAlgebra, Structure};
pub use quotient::{JetBasis, QuotientAlgebra};
pub use text::ParseElementError;

use std::fmt;

use thiserror::Error;

use crate::field::Field;
use crate::lincomb::LinComb;
use crate::poly::{Monomial, PolyError};

/// A basis element of `HV`: `d_n`, `I_n`, or one of the central `C`, `C_D`, `C_I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    D(i64),
    I(i64),
    C,
    CD,
    CI,
}

/// Position in the triangular decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GradePart {
    Negative,
    Zero,
    Positive,
}

impl Generator {
    /// Degree in the `Z`-grading; central generators have degree zero.
    pub fn degree(self) -> i64 {
        match self {
            Generator::D(n) | Generator::I(n) => n,
            _ => 0,
        }
    }

    pub fn is_central(self) -> bool {
        matches!(self, Generator::C | Generator::CD | Generator::CI)
    }

    pub fn grade(self) -> GradePart {
        match self.degree() {
            d if d > 0 => GradePart::Positive,
            d if d < 0 => GradePart::Negative,
            _ => GradePart::Zero,
        }
    }

    /// `d_0, I_0, C, C_D, C_I`, the basis of `HV^0`.
    pub const ZERO_PART: [Generator; 5] =
        [Generator::D(0), Generator::I(0), Generator::C, Generator::CD, Generator::CI];

    /// `d_n` and `I_n` for `|n| <= bound`, then the three central generators.
    pub fn up_to(bound: i64) -> Vec<Generator> {
        let mut out: Vec<_> = (-bound..=bound).map(Generator::D).collect();
        out.extend((-bound..=bound).map(Generator::I));
        out.extend([Generator::C, Generator::CD, Generator::CI]);
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::D(n) => write!(f, "d({n})"),
            Generator::I(n) => write!(f, "I({n})"),
            Generator::C => write!(f, "C"),
            Generator::CD => write!(f, "C_D"),
            Generator::CI => write!(f, "C_I"),
        }
    }
}

/// `gen ⊗ coeff`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisTerm<C = Monomial> {
    pub gen: Generator,
    pub coeff: C,
}

impl<C> BasisTerm<C> {
    pub fn new(gen: Generator, coeff: C) -> Self {
        Self { gen, coeff }
    }

    pub fn degree(&self) -> i64 {
        self.gen.degree()
    }
}

impl BasisTerm<Monomial> {
    /// `gen ⊗ 1` in `HV` itself.
    pub fn hv(gen: Generator) -> Self {
        Self::new(gen, Monomial::one(0))
    }
}

/// A finite combination of basis terms over coefficient basis `C`.
pub type Element<F, C = Monomial> = LinComb<BasisTerm<C>, F>;

/// An element of `L_B = HV ⊗ C[b_1..b_k]`.
pub type AlgebraElement<F> = Element<F, Monomial>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("quotient points must be distinct (component {0} repeats an earlier point)")]
    RepeatedPoint(usize),
    #[error("quotient needs at least one component")]
    EmptyQuotient,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Convenience constructors for elements of `L_B`.
pub trait ElementExt<F: Field>: Sized {
    fn gen(gen: Generator) -> Self;
    fn tensor(gen: Generator, mono: Monomial) -> Self;

    fn d(n: i64) -> Self {
        Self::gen(Generator::D(n))
    }

    fn i(n: i64) -> Self {
        Self::gen(Generator::I(n))
    }

    /// Number of polynomial variables, `None` for the zero element or a
    /// mixture of arities.
    fn arity(&self) -> Option<usize>;
}

impl<F: Field> ElementExt<F> for AlgebraElement<F> {
    fn gen(gen: Generator) -> Self {
        LinComb::basis(BasisTerm::hv(gen))
    }

    fn tensor(gen: Generator, mono: Monomial) -> Self {
        LinComb::basis(BasisTerm::new(gen, mono))
    }

    fn arity(&self) -> Option<usize> {
        let mut arities = self.keys().map(|t| t.coeff.arity());
        let first = arities.next()?;
        arities.all(|a| a == first).then_some(first)
    }
}

/// `gen ⊗ p` for a polynomial `p`.
pub fn tensor_poly<F: Field>(gen: Generator, p: &crate::poly::PolyB<F>) -> AlgebraElement<F> {
    p.terms()
        .iter()
        .map(|(m, c)| (BasisTerm::new(gen, m.clone()), c.clone()))
        .collect()
}
