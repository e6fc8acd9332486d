//! Jet quotients `B/m^s` at a point, realized by truncated Taylor expansion.

use super::polyb::{Monomial, PointB, PolyB};
use super::PolyError;
use crate::field::Field;
use crate::lincomb::LinComb;

/// An element of `B/m^s`, written in the local coordinates `y = b - μ`.
pub type Jet<F> = LinComb<Monomial, F>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetQuotient<F> {
    point: PointB<F>,
    order: u32,
    basis: Vec<Monomial>,
}

impl<F: Field> JetQuotient<F> {
    pub fn new(point: PointB<F>, order: u32) -> Result<Self, PolyError> {
        if order == 0 {
            return Err(PolyError::ZeroOrder);
        }
        let basis = Monomial::up_to_degree(point.arity(), order - 1);
        Ok(Self { point, order, basis })
    }

    /// `B/m`: plain evaluation at the point.
    pub fn evaluation(point: PointB<F>) -> Self {
        Self::new(point, 1).expect("order one is valid")
    }

    pub fn point(&self) -> &PointB<F> {
        &self.point
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.point.arity()
    }

    /// Basis `(b - μ)^r`, `|r| < s`, graded.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.basis.iter().position(|b| b == m)
    }

    /// Product of basis monomials, `None` when it lies in `m^s`.
    pub fn mul_basis(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        a.mul(b).filter(|m| m.degree() < self.order)
    }

    pub fn mul(&self, a: &Jet<F>, b: &Jet<F>) -> Jet<F> {
        let mut out = Jet::zero();
        for (ma, ca) in a {
            for (mb, cb) in b {
                if let Some(m) = self.mul_basis(ma, mb) {
                    out.add_term(m, ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    /// Taylor expansion of `p` at the point, truncated below order `s`.
    pub fn jet_expand(&self, p: &PolyB<F>) -> Result<Jet<F>, PolyError> {
        if p.arity() != self.arity() {
            return Err(PolyError::Dimension { expected: self.arity(), found: p.arity() });
        }
        let mut out = Jet::zero();
        for (m, c) in p.terms() {
            out.add_scaled(&self.expand_monomial(m), c);
        }
        Ok(out)
    }

    /// `b^e = Π (μ_i + y_i)^{e_i}`, truncated.
    pub fn expand_monomial(&self, e: &Monomial) -> Jet<F> {
        let k = self.arity();
        let mut partial: Vec<(Vec<u32>, F)> = vec![(Vec::with_capacity(k), F::one())];
        for (i, &ei) in e.exps().iter().enumerate() {
            let mu = &self.point.coords()[i];
            let mut next = Vec::new();
            let mut binom = F::one();
            for j in 0..=ei {
                if j > 0 {
                    binom = binom * F::from_int((ei - j + 1) as i64) / F::from_int(j as i64);
                }
                let factor = binom.clone() * mu.pow_int((ei - j) as i64).unwrap();
                if factor.is_zero() {
                    continue;
                }
                for (exps, c) in &partial {
                    let used: u32 = exps.iter().sum();
                    if used + j >= self.order {
                        continue;
                    }
                    let mut exps = exps.clone();
                    exps.push(j);
                    next.push((exps, c.clone() * factor.clone()));
                }
            }
            partial = next;
        }
        partial
            .into_iter()
            .map(|(exps, c)| (Monomial::new(exps), c))
            .collect()
    }

    /// Dense coordinates in [`Self::basis`] order.
    pub fn coordinates(&self, jet: &Jet<F>) -> Vec<F> {
        self.basis.iter().map(|m| jet.coefficient(m)).collect()
    }
}
