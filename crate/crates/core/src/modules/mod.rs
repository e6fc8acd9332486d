//! Representations of `L_B = HV ⊗ B` behind one action interface.

mod evaluation;
mod handle;
mod intermediate;
mod omega;
mod tensor;
mod verma;

pub use evaluation::{EvalBasis, EvalInner, EvaluationSpec};
pub use handle::{BasisKey, ModuleHandle};
pub use intermediate::IntermediateSeries;
pub use omega::OmegaModule;
pub use tensor::TensorModule;
pub use verma::{HighestWeightFunctional, Pbw, PbwOrder, TruncatedVerma};

use std::fmt::Debug;

use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, Generator, JetBasis, QuotientAlgebra};
use crate::field::Field;
use crate::lincomb::LinComb;
use crate::poly::{Monomial, PolyError};

/// A finite combination of module basis vectors.
pub type ModuleVector<B, F> = LinComb<B, F>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("invalid module parameters: {0}")]
    InvalidParameters(String),
    #[error("dimension mismatch: module uses {expected} variables, element uses {found}")]
    Dimension { expected: usize, found: usize },
    #[error("intermediate series modules are defined over HV only (no B-monomials)")]
    NotOverHv,
    #[error("level {level} exceeds the truncation level {max}")]
    LevelOverflow { level: usize, max: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<PolyError> for ModuleError {
    fn from(e: PolyError) -> Self {
        ModuleError::Algebra(e.into())
    }
}

/// A representation of `HV ⊗ C[b_1..b_k]` on a space with a chosen basis.
pub trait Module<F: Field> {
    type Basis: Clone + Ord + Debug;

    /// Number of polynomial variables `k` of the acting algebra.
    fn arity(&self) -> usize;

    /// `(gen ⊗ b^mono) . v` for a basis vector `v`.
    fn act_basis(
        &self,
        gen: Generator,
        mono: &Monomial,
        v: &Self::Basis,
    ) -> Result<ModuleVector<Self::Basis, F>, ModuleError>;

    /// A finite set of basis vectors used by sweeps; larger `size` means a
    /// larger window.
    fn window(&self, size: usize) -> Vec<Self::Basis>;

    fn describe(&self, v: &Self::Basis) -> String {
        format!("{v:?}")
    }

    /// Whether `d_0, I_0, C, C_D, C_I` act diagonally on the basis.
    fn is_weight_module(&self) -> bool {
        true
    }

    /// `HV ⊗ B/J` when the action factors through a finite quotient that the
    /// module exposes.
    fn quotient(&self) -> Option<&QuotientAlgebra<F>> {
        None
    }

    /// `(gen ⊗ e) . v` for `e` a basis element of [`Self::quotient`].
    fn act_jet(
        &self,
        _gen: Generator,
        _e: &JetBasis,
        _v: &Self::Basis,
    ) -> Result<ModuleVector<Self::Basis, F>, ModuleError> {
        Err(ModuleError::Unsupported("module has no finite quotient action".into()))
    }

    /// Degree below the top for graded highest-weight modules.
    fn level_of(&self, _v: &Self::Basis) -> Option<usize> {
        None
    }

    fn level_basis(&self, _level: usize) -> Result<Vec<Self::Basis>, ModuleError> {
        Err(ModuleError::Unsupported("module is not graded by level".into()))
    }

    fn max_level(&self) -> Option<usize> {
        None
    }

    fn check_arity(&self, mono: &Monomial) -> Result<(), ModuleError> {
        if mono.arity() == self.arity() {
            Ok(())
        } else {
            Err(ModuleError::Dimension { expected: self.arity(), found: mono.arity() })
        }
    }

    fn act_term(
        &self,
        gen: Generator,
        mono: &Monomial,
        v: &ModuleVector<Self::Basis, F>,
    ) -> Result<ModuleVector<Self::Basis, F>, ModuleError> {
        let mut out = LinComb::zero();
        for (b, c) in v {
            out.add_scaled(&self.act_basis(gen, mono, b)?, c);
        }
        Ok(out)
    }

    fn act(
        &self,
        x: &AlgebraElement<F>,
        v: &ModuleVector<Self::Basis, F>,
    ) -> Result<ModuleVector<Self::Basis, F>, ModuleError> {
        let mut out = LinComb::zero();
        for (t, c) in x {
            out.add_scaled(&self.act_term(t.gen, &t.coeff, v)?, c);
        }
        Ok(out)
    }

    fn act_jet_vector(
        &self,
        gen: Generator,
        e: &JetBasis,
        v: &ModuleVector<Self::Basis, F>,
    ) -> Result<ModuleVector<Self::Basis, F>, ModuleError> {
        let mut out = LinComb::zero();
        for (b, c) in v {
            out.add_scaled(&self.act_jet(gen, e, b)?, c);
        }
        Ok(out)
    }
}
