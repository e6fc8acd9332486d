//! Tensor products with the Leibniz action.

use std::marker::PhantomData;

use super::{Module, ModuleError, ModuleVector};
use crate::algebra::{Generator, JetBasis, QuotientAlgebra};
use crate::field::Field;
use crate::lincomb::LinComb;
use crate::poly::Monomial;

/// `x (u ⊗ w) = (x u) ⊗ w + u ⊗ (x w)`.
///
/// When both factors factor through finite quotients at disjoint points the
/// product factors through their direct sum, exposed by [`Module::quotient`]
/// with the left components first.
#[derive(Clone, Debug)]
pub struct TensorModule<F, L, R> {
    left: L,
    right: R,
    combined: Option<QuotientAlgebra<F>>,
    split: usize,
    _field: PhantomData<F>,
}

impl<F: Field, L: Module<F>, R: Module<F>> TensorModule<F, L, R> {
    pub fn new(left: L, right: R) -> Result<Self, ModuleError> {
        if left.arity() != right.arity() {
            return Err(ModuleError::Dimension { expected: left.arity(), found: right.arity() });
        }
        let (combined, split) = match (left.quotient(), right.quotient()) {
            (Some(a), Some(b)) => {
                let comps: Vec<_> = a.components().iter().chain(b.components()).cloned().collect();
                (QuotientAlgebra::new(comps).ok(), a.components().len())
            }
            _ => (None, 0),
        };
        Ok(Self { left, right, combined, split, _field: PhantomData })
    }

    pub fn left(&self) -> &L {
        &self.left
    }

    pub fn right(&self) -> &R {
        &self.right
    }

    fn graded(&self) -> bool {
        self.left.max_level().is_some() && self.right.max_level().is_some()
    }
}

type Pair<L, R> = (L, R);

fn leibniz<F: Field, A: Ord + Clone, B: Ord + Clone>(
    xu: ModuleVector<A, F>,
    u: &A,
    w: &B,
    xw: ModuleVector<B, F>,
) -> ModuleVector<Pair<A, B>, F> {
    let mut out = LinComb::zero();
    for (a, c) in xu {
        out.add_term((a, w.clone()), c);
    }
    for (b, c) in xw {
        out.add_term((u.clone(), b), c);
    }
    out
}

impl<F: Field, L: Module<F>, R: Module<F>> Module<F> for TensorModule<F, L, R> {
    type Basis = (L::Basis, R::Basis);

    fn arity(&self) -> usize {
        self.left.arity()
    }

    fn act_basis(
        &self,
        gen: Generator,
        mono: &Monomial,
        (u, w): &Self::Basis,
    ) -> Result<ModuleVector<Self::Basis, F>, ModuleError> {
        let xu = self.left.act_basis(gen, mono, u)?;
        let xw = self.right.act_basis(gen, mono, w)?;
        Ok(leibniz(xu, u, w, xw))
    }

    fn window(&self, size: usize) -> Vec<Self::Basis> {
        let lw = self.left.window(size);
        let rw = self.right.window(size);
        let mut out = Vec::new();
        for u in &lw {
            for w in &rw {
                let within = match (self.left.level_of(u), self.right.level_of(w)) {
                    (Some(a), Some(b)) => a + b <= size,
                    _ => true,
                };
                if within {
                    out.push((u.clone(), w.clone()));
                }
            }
        }
        out
    }

    fn describe(&self, (u, w): &Self::Basis) -> String {
        format!("({})⊗({})", self.left.describe(u), self.right.describe(w))
    }

    fn is_weight_module(&self) -> bool {
        self.left.is_weight_module() && self.right.is_weight_module()
    }

    fn quotient(&self) -> Option<&QuotientAlgebra<F>> {
        self.combined.as_ref()
    }

    fn act_jet(&self, gen: Generator, e: &JetBasis, (u, w): &Self::Basis) -> Result<ModuleVector<Self::Basis, F>, ModuleError> {
        if self.combined.is_none() {
            return Err(ModuleError::Unsupported(
                "tensor factors do not factor through quotients at distinct points".into(),
            ));
        }
        if e.component < self.split {
            Ok(leibniz(self.left.act_jet(gen, e, u)?, u, w, LinComb::zero()))
        } else {
            let shifted = JetBasis::new(e.component - self.split, e.exp.clone());
            Ok(leibniz(LinComb::zero(), u, w, self.right.act_jet(gen, &shifted, w)?))
        }
    }

    fn level_of(&self, (u, w): &Self::Basis) -> Option<usize> {
        Some(self.left.level_of(u)? + self.right.level_of(w)?)
    }

    fn level_basis(&self, level: usize) -> Result<Vec<Self::Basis>, ModuleError> {
        if !self.graded() {
            return Err(ModuleError::Unsupported("tensor factors are not graded by level".into()));
        }
        let mut out = Vec::new();
        for a in 0..=level {
            let lb = self.left.level_basis(a)?;
            let rb = self.right.level_basis(level - a)?;
            for u in &lb {
                for w in &rb {
                    out.push((u.clone(), w.clone()));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    fn max_level(&self) -> Option<usize> {
        Some(self.left.max_level()?.min(self.right.max_level()?))
    }
}
