//! Evaluation and generalized evaluation modules.
//!
//! The action of `L_B` factors through `HV ⊗ B/𝔪^s` at a single point.

use super::{IntermediateSeries, Module, ModuleError, ModuleVector, Pbw, TruncatedVerma};
use crate::algebra::{CoefficientAlgebra, Generator, JetBasis, QuotientAlgebra};
use crate::field::Field;
use crate::lincomb::LinComb;
use crate::poly::{JetQuotient, Monomial};

/// The module of `HV ⊗ B/𝔪^s` carried by an evaluation spec.
#[derive(Clone, Debug)]
pub enum EvalInner<F: Field> {
    /// `V(α, β, F) ⊗ B/𝔪^s` with `(x ⊗ a)(v ⊗ c) = (x v) ⊗ ac`; for `s = 1`
    /// this is the plain evaluation module.
    Series(IntermediateSeries<F>),
    /// A truncated Verma module over `HV ⊗ B/𝔪^s`.
    HighestWeight(Box<TruncatedVerma<F>>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EvalBasis {
    /// `v_{α+k} ⊗ (b - μ)^e`.
    Series(i64, Monomial),
    Pbw(Pbw),
}

#[derive(Clone, Debug)]
pub struct EvaluationSpec<F: Field> {
    quotient: QuotientAlgebra<F>,
    inner: EvalInner<F>,
}

impl<F: Field> EvaluationSpec<F> {
    pub fn series(jet: JetQuotient<F>, inner: IntermediateSeries<F>) -> Self {
        Self { quotient: QuotientAlgebra::single(jet), inner: EvalInner::Series(inner) }
    }

    pub fn highest_weight(
        jet: JetQuotient<F>,
        phi: super::HighestWeightFunctional<F>,
        max_level: usize,
    ) -> Result<Self, ModuleError> {
        let quotient = QuotientAlgebra::single(jet);
        let verma = TruncatedVerma::new(quotient.clone(), phi, max_level)?;
        Ok(Self { quotient, inner: EvalInner::HighestWeight(Box::new(verma)) })
    }

    pub fn jet(&self) -> &JetQuotient<F> {
        &self.quotient.components()[0]
    }

    pub fn order(&self) -> u32 {
        self.jet().order()
    }

    pub fn inner(&self) -> &EvalInner<F> {
        &self.inner
    }

    fn series_act(
        &self,
        inner: &IntermediateSeries<F>,
        gen: Generator,
        jet: &LinComb<JetBasis, F>,
        k: i64,
        e: &Monomial,
    ) -> ModuleVector<EvalBasis, F> {
        let mut out = LinComb::zero();
        let Some((target, c)) = inner.act_offset(gen, k) else {
            return out;
        };
        let here = JetBasis::new(0, e.clone());
        for (a, ca) in jet {
            if let Some(prod) = self.quotient.mul_basis(a, &here) {
                out.add_term(EvalBasis::Series(target, prod.exp), c.clone() * ca.clone());
            }
        }
        out
    }
}

fn wrap<F: Field>(v: ModuleVector<Pbw, F>) -> ModuleVector<EvalBasis, F> {
    v.map_keys(|w| EvalBasis::Pbw(w.clone()))
}

fn mismatch() -> ModuleError {
    ModuleError::InvalidParameters("basis vector does not belong to this module".into())
}

impl<F: Field> Module<F> for EvaluationSpec<F> {
    type Basis = EvalBasis;

    fn arity(&self) -> usize {
        self.quotient.arity()
    }

    fn act_basis(&self, gen: Generator, mono: &Monomial, v: &EvalBasis) -> Result<ModuleVector<EvalBasis, F>, ModuleError> {
        match (&self.inner, v) {
            (EvalInner::Series(inner), EvalBasis::Series(k, e)) => {
                let jet = self.quotient.project_monomial(mono)?;
                Ok(self.series_act(inner, gen, &jet, *k, e))
            }
            (EvalInner::HighestWeight(m), EvalBasis::Pbw(w)) => Ok(wrap(m.act_basis(gen, mono, w)?)),
            _ => Err(mismatch()),
        }
    }

    fn window(&self, size: usize) -> Vec<EvalBasis> {
        match &self.inner {
            EvalInner::Series(inner) => inner
                .window(size)
                .into_iter()
                .flat_map(|k| self.jet().basis().iter().map(move |e| EvalBasis::Series(k, e.clone())))
                .collect(),
            EvalInner::HighestWeight(m) => m.window(size).into_iter().map(EvalBasis::Pbw).collect(),
        }
    }

    fn describe(&self, v: &EvalBasis) -> String {
        match (&self.inner, v) {
            (_, EvalBasis::Series(k, e)) => format!("v[{k}]⊗y{e}"),
            (EvalInner::HighestWeight(m), EvalBasis::Pbw(w)) => m.describe(w),
            (_, EvalBasis::Pbw(w)) => w.to_string(),
        }
    }

    fn quotient(&self) -> Option<&QuotientAlgebra<F>> {
        Some(&self.quotient)
    }

    fn act_jet(&self, gen: Generator, e: &JetBasis, v: &EvalBasis) -> Result<ModuleVector<EvalBasis, F>, ModuleError> {
        match (&self.inner, v) {
            (EvalInner::Series(inner), EvalBasis::Series(k, here)) => {
                Ok(self.series_act(inner, gen, &LinComb::basis(e.clone()), *k, here))
            }
            (EvalInner::HighestWeight(m), EvalBasis::Pbw(w)) => Ok(wrap(m.act_jet(gen, e, w)?)),
            _ => Err(mismatch()),
        }
    }

    fn level_of(&self, v: &EvalBasis) -> Option<usize> {
        match (&self.inner, v) {
            (EvalInner::HighestWeight(m), EvalBasis::Pbw(w)) => Some(m.level(w)),
            _ => None,
        }
    }

    fn level_basis(&self, level: usize) -> Result<Vec<EvalBasis>, ModuleError> {
        match &self.inner {
            EvalInner::HighestWeight(m) => Ok(m.pbw_level(level)?.into_iter().map(EvalBasis::Pbw).collect()),
            EvalInner::Series(_) => Err(ModuleError::Unsupported("intermediate series is not graded by level".into())),
        }
    }

    fn max_level(&self) -> Option<usize> {
        match &self.inner {
            EvalInner::HighestWeight(m) => Some(m.truncation()),
            EvalInner::Series(_) => None,
        }
    }
}
