use std::fmt::Debug;

use smallvec::SmallVec;

use super::{AlgebraElement, AlgebraError, BasisTerm, Element, GradePart, Generator};
use crate::field::Field;
use crate::flaw::Flaw;
use crate::lincomb::LinComb;
use crate::poly::Monomial;

/// A commutative associative algebra presented by a basis whose pairwise
/// products are a single basis element or zero.
pub trait CoefficientAlgebra {
    type Basis: Clone + Ord + Debug;

    fn mul_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Option<Self::Basis>;
}

/// `C[b_1..b_k]` on its monomial basis. Arity agreement is checked by callers.
#[derive(Clone, Copy, Debug, Default)]
pub struct PolyAlgebra;

impl CoefficientAlgebra for PolyAlgebra {
    type Basis = Monomial;

    fn mul_basis(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        a.mul(b)
    }
}

/// Structure constants of `HV`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Structure {
    flaw: Option<Flaw>,
}

type TermBuf<F, C> = SmallVec<[(BasisTerm<C>, F); 2]>;

impl Structure {
    pub const STANDARD: Structure = Structure { flaw: None };

    /// Structure constants carrying a seeded fault. Only the bracket flaws
    /// ([`Flaw::CentralCocycle`], [`Flaw::DroppedCdTerm`]) change anything here.
    pub fn with_flaw(flaw: Flaw) -> Self {
        Self { flaw: Some(flaw) }
    }

    pub fn flaw(&self) -> Option<Flaw> {
        self.flaw
    }

    fn cocycle<F: Field>(&self, n: i64) -> F {
        match self.flaw {
            Some(Flaw::CentralCocycle) => F::from_ratio(n * n * n - n * n, 12),
            _ => F::from_ratio(n * n * n - n, 12),
        }
    }

    /// `[a, b]` for generators of `HV`.
    pub fn generators<F: Field>(&self, a: Generator, b: Generator) -> SmallVec<[(Generator, F); 2]> {
        use Generator::*;
        let mut out = SmallVec::new();
        match (a, b) {
            (D(n), D(m)) => {
                if m != n {
                    out.push((D(n + m), F::from_int(m - n)));
                }
                if n + m == 0 {
                    let c = self.cocycle::<F>(n);
                    if !c.is_zero() {
                        out.push((C, c));
                    }
                }
            }
            (D(n), I(m)) => {
                if m != 0 {
                    out.push((I(n + m), F::from_int(m)));
                }
                if n + m == 0 && n * n + n != 0 && self.flaw != Some(Flaw::DroppedCdTerm) {
                    out.push((CD, F::from_int(n * n + n)));
                }
            }
            (I(m), D(n)) => {
                if m != 0 {
                    out.push((I(n + m), F::from_int(-m)));
                }
                if n + m == 0 && n * n + n != 0 {
                    out.push((CD, F::from_int(-(n * n + n))));
                }
            }
            (I(n), I(m)) => {
                if n + m == 0 && n != 0 {
                    out.push((CI, F::from_int(n)));
                }
            }
            _ => {}
        }
        out
    }

    /// `[g ⊗ e, h ⊗ e'] = [g, h] ⊗ e e'`.
    pub fn bracket_terms<F: Field, A: CoefficientAlgebra>(
        &self,
        alg: &A,
        a: &BasisTerm<A::Basis>,
        b: &BasisTerm<A::Basis>,
    ) -> TermBuf<F, A::Basis> {
        let gens = self.generators::<F>(a.gen, b.gen);
        if gens.is_empty() {
            return SmallVec::new();
        }
        let Some(coeff) = alg.mul_basis(&a.coeff, &b.coeff) else {
            return SmallVec::new();
        };
        gens.into_iter()
            .map(|(g, c)| (BasisTerm::new(g, coeff.clone()), c))
            .collect()
    }

    /// Bilinear extension of [`Self::bracket_terms`].
    pub fn bracket_in<F: Field, A: CoefficientAlgebra>(
        &self,
        alg: &A,
        x: &Element<F, A::Basis>,
        y: &Element<F, A::Basis>,
    ) -> Element<F, A::Basis> {
        let mut out = LinComb::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                for (t, c) in self.bracket_terms::<F, A>(alg, a, b) {
                    out.add_term(t, c * ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    /// Bracket in `L_B`; both sides must use the same number of variables.
    pub fn bracket<F: Field>(
        &self,
        x: &AlgebraElement<F>,
        y: &AlgebraElement<F>,
    ) -> Result<AlgebraElement<F>, AlgebraError> {
        common_arity([x, y])?;
        Ok(self.bracket_in(&PolyAlgebra, x, y))
    }

    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
    pub fn jacobi_in<F: Field, A: CoefficientAlgebra>(
        &self,
        alg: &A,
        x: &Element<F, A::Basis>,
        y: &Element<F, A::Basis>,
        z: &Element<F, A::Basis>,
    ) -> Element<F, A::Basis> {
        self.bracket_in(alg, x, &self.bracket_in(alg, y, z))
            + self.bracket_in(alg, y, &self.bracket_in(alg, z, x))
            + self.bracket_in(alg, z, &self.bracket_in(alg, x, y))
    }

    pub fn jacobi<F: Field>(
        &self,
        x: &AlgebraElement<F>,
        y: &AlgebraElement<F>,
        z: &AlgebraElement<F>,
    ) -> Result<AlgebraElement<F>, AlgebraError> {
        common_arity([x, y, z])?;
        Ok(self.jacobi_in(&PolyAlgebra, x, y, z))
    }
}

fn common_arity<'a, F: Field>(
    elems: impl IntoIterator<Item = &'a AlgebraElement<F>>,
) -> Result<Option<usize>, AlgebraError> {
    let mut seen: Option<usize> = None;
    for e in elems {
        for t in e.keys() {
            let a = t.coeff.arity();
            match seen {
                None => seen = Some(a),
                Some(s) if s != a => return Err(AlgebraError::Dimension { expected: s, found: a }),
                Some(_) => {}
            }
        }
    }
    Ok(seen)
}

/// Bracket in `L_B` with the standard structure constants.
pub fn bracket<F: Field>(
    x: &AlgebraElement<F>,
    y: &AlgebraElement<F>,
) -> Result<AlgebraElement<F>, AlgebraError> {
    Structure::STANDARD.bracket(x, y)
}

/// Jacobi discrepancy with the standard structure constants; zero certifies
/// the identity on this triple.
pub fn jacobi_check<F: Field>(
    x: &AlgebraElement<F>,
    y: &AlgebraElement<F>,
    z: &AlgebraElement<F>,
) -> Result<AlgebraElement<F>, AlgebraError> {
    Structure::STANDARD.jacobi(x, y, z)
}

/// `L = L^- ⊕ L^0 ⊕ L^+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeSplit<F: Field, C: Ord + Clone = Monomial> {
    pub negative: Element<F, C>,
    pub zero: Element<F, C>,
    pub positive: Element<F, C>,
}

pub fn grade_split<F: Field, C: Ord + Clone>(x: &Element<F, C>) -> GradeSplit<F, C> {
    let part = |p: GradePart| x.filtered(|t| t.gen.grade() == p);
    GradeSplit {
        negative: part(GradePart::Negative),
        zero: part(GradePart::Zero),
        positive: part(GradePart::Positive),
    }
}
