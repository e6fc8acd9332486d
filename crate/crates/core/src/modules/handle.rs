//! A closed sum of the shipped module families.

use std::fmt;

use super::{EvalBasis, EvaluationSpec, IntermediateSeries, Module, ModuleError, ModuleVector, OmegaModule, Pbw, TensorModule, TruncatedVerma};
use crate::algebra::{Generator, JetBasis, QuotientAlgebra};
use crate::field::Field;
use crate::poly::Monomial;

#[derive(Clone, Debug)]
pub enum ModuleHandle<F: Field> {
    Intermediate(IntermediateSeries<F>),
    Omega(OmegaModule<F>),
    Evaluation(EvaluationSpec<F>),
    Verma(TruncatedVerma<F>),
    Tensor(Box<TensorModule<F, ModuleHandle<F>, ModuleHandle<F>>>),
}

/// Basis vectors of a [`ModuleHandle`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKey {
    /// `v_{α+k}`.
    Offset(i64),
    /// `t^j`.
    Power(usize),
    /// `v_{α+k} ⊗ (b - μ)^e`.
    Jet(i64, Monomial),
    Pbw(Pbw),
    Pair(Box<BasisKey>, Box<BasisKey>),
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKey::Offset(k) => write!(f, "v[{k}]"),
            BasisKey::Power(j) => write!(f, "t^{j}"),
            BasisKey::Jet(k, e) => write!(f, "v[{k}]⊗y{e}"),
            BasisKey::Pbw(w) => write!(f, "{w}"),
            BasisKey::Pair(a, b) => write!(f, "({a})⊗({b})"),
        }
    }
}

fn mismatch() -> ModuleError {
    ModuleError::InvalidParameters("basis vector does not belong to this module".into())
}

fn from_eval(b: EvalBasis) -> BasisKey {
    match b {
        EvalBasis::Series(k, e) => BasisKey::Jet(k, e),
        EvalBasis::Pbw(w) => BasisKey::Pbw(w),
    }
}

fn to_eval(b: &BasisKey) -> Result<EvalBasis, ModuleError> {
    match b {
        BasisKey::Jet(k, e) => Ok(EvalBasis::Series(*k, e.clone())),
        BasisKey::Pbw(w) => Ok(EvalBasis::Pbw(w.clone())),
        _ => Err(mismatch()),
    }
}

fn keyed<B: Ord + Clone, F: Field>(v: ModuleVector<B, F>, f: impl Fn(B) -> BasisKey) -> ModuleVector<BasisKey, F> {
    v.into_iter().map(|(b, c)| (f(b), c)).collect()
}

fn pair((a, b): (BasisKey, BasisKey)) -> BasisKey {
    BasisKey::Pair(Box::new(a), Box::new(b))
}

impl<F: Field> ModuleHandle<F> {
    pub fn tensor(left: ModuleHandle<F>, right: ModuleHandle<F>) -> Result<Self, ModuleError> {
        Ok(ModuleHandle::Tensor(Box::new(TensorModule::new(left, right)?)))
    }

    pub fn family(&self) -> &'static str {
        match self {
            ModuleHandle::Intermediate(_) => "intermediate",
            ModuleHandle::Omega(_) => "omega",
            ModuleHandle::Evaluation(_) => "evaluation",
            ModuleHandle::Verma(_) => "verma",
            ModuleHandle::Tensor(_) => "tensor",
        }
    }

    fn dispatch(
        &self,
        v: &BasisKey,
        series: impl FnOnce(&IntermediateSeries<F>, i64) -> Result<ModuleVector<i64, F>, ModuleError>,
        omega: impl FnOnce(&OmegaModule<F>, usize) -> Result<ModuleVector<usize, F>, ModuleError>,
        eval: impl FnOnce(&EvaluationSpec<F>, &EvalBasis) -> Result<ModuleVector<EvalBasis, F>, ModuleError>,
        verma: impl FnOnce(&TruncatedVerma<F>, &Pbw) -> Result<ModuleVector<Pbw, F>, ModuleError>,
        tensor: impl FnOnce(
            &TensorModule<F, ModuleHandle<F>, ModuleHandle<F>>,
            &(BasisKey, BasisKey),
        ) -> Result<ModuleVector<(BasisKey, BasisKey), F>, ModuleError>,
    ) -> Result<ModuleVector<BasisKey, F>, ModuleError> {
        match (self, v) {
            (ModuleHandle::Intermediate(m), BasisKey::Offset(k)) => Ok(keyed(series(m, *k)?, BasisKey::Offset)),
            (ModuleHandle::Omega(m), BasisKey::Power(j)) => Ok(keyed(omega(m, *j)?, BasisKey::Power)),
            (ModuleHandle::Evaluation(m), b) => Ok(keyed(eval(m, &to_eval(b)?)?, from_eval)),
            (ModuleHandle::Verma(m), BasisKey::Pbw(w)) => Ok(keyed(verma(m, w)?, BasisKey::Pbw)),
            (ModuleHandle::Tensor(m), BasisKey::Pair(a, b)) => {
                Ok(keyed(tensor(m, &((**a).clone(), (**b).clone()))?, pair))
            }
            _ => Err(mismatch()),
        }
    }
}

impl<F: Field> Module<F> for ModuleHandle<F> {
    type Basis = BasisKey;

    fn arity(&self) -> usize {
        match self {
            ModuleHandle::Intermediate(m) => m.arity(),
            ModuleHandle::Omega(m) => m.arity(),
            ModuleHandle::Evaluation(m) => m.arity(),
            ModuleHandle::Verma(m) => m.arity(),
            ModuleHandle::Tensor(m) => m.arity(),
        }
    }

    fn act_basis(&self, gen: Generator, mono: &Monomial, v: &BasisKey) -> Result<ModuleVector<BasisKey, F>, ModuleError> {
        self.dispatch(
            v,
            |m, k| m.act_basis(gen, mono, &k),
            |m, j| m.act_basis(gen, mono, &j),
            |m, b| m.act_basis(gen, mono, b),
            |m, w| m.act_basis(gen, mono, w),
            |m, p| m.act_basis(gen, mono, p),
        )
    }

    fn window(&self, size: usize) -> Vec<BasisKey> {
        match self {
            ModuleHandle::Intermediate(m) => m.window(size).into_iter().map(BasisKey::Offset).collect(),
            ModuleHandle::Omega(m) => m.window(size).into_iter().map(BasisKey::Power).collect(),
            ModuleHandle::Evaluation(m) => m.window(size).into_iter().map(from_eval).collect(),
            ModuleHandle::Verma(m) => m.window(size).into_iter().map(BasisKey::Pbw).collect(),
            ModuleHandle::Tensor(m) => m.window(size).into_iter().map(pair).collect(),
        }
    }

    fn describe(&self, v: &BasisKey) -> String {
        match (self, v) {
            (ModuleHandle::Intermediate(m), BasisKey::Offset(k)) => m.describe(k),
            (ModuleHandle::Omega(m), BasisKey::Power(j)) => m.describe(j),
            (ModuleHandle::Evaluation(m), b) => match to_eval(b) {
                Ok(e) => m.describe(&e),
                Err(_) => b.to_string(),
            },
            (ModuleHandle::Verma(m), BasisKey::Pbw(w)) => m.describe(w),
            (ModuleHandle::Tensor(m), BasisKey::Pair(a, b)) => m.describe(&((**a).clone(), (**b).clone())),
            _ => v.to_string(),
        }
    }

    fn is_weight_module(&self) -> bool {
        match self {
            ModuleHandle::Omega(_) => false,
            ModuleHandle::Tensor(m) => m.is_weight_module(),
            _ => true,
        }
    }

    fn quotient(&self) -> Option<&QuotientAlgebra<F>> {
        match self {
            ModuleHandle::Evaluation(m) => m.quotient(),
            ModuleHandle::Verma(m) => m.quotient(),
            ModuleHandle::Tensor(m) => m.quotient(),
            _ => None,
        }
    }

    fn act_jet(&self, gen: Generator, e: &JetBasis, v: &BasisKey) -> Result<ModuleVector<BasisKey, F>, ModuleError> {
        self.dispatch(
            v,
            |m, k| m.act_jet(gen, e, &k),
            |m, j| m.act_jet(gen, e, &j),
            |m, b| m.act_jet(gen, e, b),
            |m, w| m.act_jet(gen, e, w),
            |m, p| m.act_jet(gen, e, p),
        )
    }

    fn level_of(&self, v: &BasisKey) -> Option<usize> {
        match (self, v) {
            (ModuleHandle::Evaluation(m), b) => m.level_of(&to_eval(b).ok()?),
            (ModuleHandle::Verma(m), BasisKey::Pbw(w)) => m.level_of(w),
            (ModuleHandle::Tensor(m), BasisKey::Pair(a, b)) => m.level_of(&((**a).clone(), (**b).clone())),
            _ => None,
        }
    }

    fn level_basis(&self, level: usize) -> Result<Vec<BasisKey>, ModuleError> {
        match self {
            ModuleHandle::Evaluation(m) => Ok(m.level_basis(level)?.into_iter().map(from_eval).collect()),
            ModuleHandle::Verma(m) => Ok(m.level_basis(level)?.into_iter().map(BasisKey::Pbw).collect()),
            ModuleHandle::Tensor(m) => Ok(m.level_basis(level)?.into_iter().map(pair).collect()),
            _ => Err(ModuleError::Unsupported(format!("{} modules are not graded by level", self.family()))),
        }
    }

    fn max_level(&self) -> Option<usize> {
        match self {
            ModuleHandle::Evaluation(m) => m.max_level(),
            ModuleHandle::Verma(m) => m.max_level(),
            ModuleHandle::Tensor(m) => m.max_level(),
            _ => None,
        }
    }
}
