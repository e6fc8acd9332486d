//! `HV ⊗ B/J` for `J = Π 𝔪_i^{s_i}` at distinct points.
//!
//! By the Chinese remainder theorem `B/J ≅ ⊕ B/𝔪_i^{s_i}`; elements carry a
//! component index and a jet monomial in the local coordinates of that point.

use std::fmt;

use super::bracket::CoefficientAlgebra;
use super::{AlgebraElement, AlgebraError, BasisTerm, Element};
use crate::field::Field;
use crate::lincomb::LinComb;
use crate::poly::{JetQuotient, Monomial, PolyB};

/// `(b - μ_c)^exp` in component `c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetBasis {
    pub component: usize,
    pub exp: Monomial,
}

impl JetBasis {
    pub fn new(component: usize, exp: Monomial) -> Self {
        Self { component, exp }
    }
}

impl fmt::Display for JetBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}{}", self.component, self.exp)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAlgebra<F> {
    arity: usize,
    components: Vec<JetQuotient<F>>,
}

impl<F: Field> QuotientAlgebra<F> {
    pub fn new(components: Vec<JetQuotient<F>>) -> Result<Self, AlgebraError> {
        let arity = components.first().ok_or(AlgebraError::EmptyQuotient)?.arity();
        for (i, c) in components.iter().enumerate() {
            if c.arity() != arity {
                return Err(AlgebraError::Dimension { expected: arity, found: c.arity() });
            }
            if components[..i].iter().any(|p| p.point() == c.point()) {
                return Err(AlgebraError::RepeatedPoint(i));
            }
        }
        Ok(Self { arity, components })
    }

    pub fn single(q: JetQuotient<F>) -> Self {
        Self::new(vec![q]).expect("one component is always valid")
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn components(&self) -> &[JetQuotient<F>] {
        &self.components
    }

    /// Basis of `B/J`, component by component.
    pub fn basis(&self) -> Vec<JetBasis> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(c, q)| q.basis().iter().map(move |m| JetBasis::new(c, m.clone())))
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.components.iter().map(JetQuotient::dimension).sum()
    }

    pub fn unit(&self) -> LinComb<JetBasis, F> {
        (0..self.components.len())
            .map(|c| (JetBasis::new(c, Monomial::one(self.arity)), F::one()))
            .collect()
    }

    /// Image of `p` under `B → B/J`.
    pub fn project_poly(&self, p: &PolyB<F>) -> Result<LinComb<JetBasis, F>, AlgebraError> {
        let mut out = LinComb::zero();
        for (c, q) in self.components.iter().enumerate() {
            for (m, v) in q.jet_expand(p)? {
                out.add_term(JetBasis::new(c, m), v);
            }
        }
        Ok(out)
    }

    /// Image of a single monomial.
    pub fn project_monomial(&self, m: &Monomial) -> Result<LinComb<JetBasis, F>, AlgebraError> {
        if m.arity() != self.arity {
            return Err(AlgebraError::Dimension { expected: self.arity, found: m.arity() });
        }
        let mut out = LinComb::zero();
        for (c, q) in self.components.iter().enumerate() {
            for (e, v) in q.expand_monomial(m) {
                out.add_term(JetBasis::new(c, e), v);
            }
        }
        Ok(out)
    }

    /// `HV ⊗ B → HV ⊗ B/J`, a Lie algebra map.
    pub fn project(&self, x: &AlgebraElement<F>) -> Result<Element<F, JetBasis>, AlgebraError> {
        let mut out = Element::zero();
        for (t, c) in x {
            for (e, v) in self.project_monomial(&t.coeff)? {
                out.add_term(BasisTerm::new(t.gen, e), v * c.clone());
            }
        }
        Ok(out)
    }
}

impl<F: Field> CoefficientAlgebra for QuotientAlgebra<F> {
    type Basis = JetBasis;

    fn mul_basis(&self, a: &JetBasis, b: &JetBasis) -> Option<JetBasis> {
        if a.component != b.component {
            return None;
        }
        let m = self.components[a.component].mul_basis(&a.exp, &b.exp)?;
        Some(JetBasis::new(a.component, m))
    }
}
