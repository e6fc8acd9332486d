//! Modules of the intermediate series `V(α, β, F)` over `HV`.

use super::{Module, ModuleError, ModuleVector};
use crate::algebra::Generator;
use crate::field::Field;
use crate::poly::Monomial;

/// `V(α, β, F)` on the basis `v_{α+k}`, `k ∈ Z`, keyed by the offset `k`:
///
/// `d_i v_{α+k} = (α+k+βi) v_{α+k+i}`, `I_i v_{α+k} = F v_{α+k+i}`, centre acts as `0`.
///
/// The `prime` variant is the nontrivial subquotient of a reducible module,
/// realized by dropping the line `v_0` (offset `-α`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateSeries<F> {
    alpha: F,
    beta: F,
    f: F,
    dropped: Option<i64>,
}

impl<F: Field> IntermediateSeries<F> {
    pub fn new(alpha: F, beta: F, f: F) -> Self {
        Self { alpha, beta, f, dropped: None }
    }

    /// `V'(α, β, F)`, defined when `F = 0`, `α ∈ Z`, `β ∈ {0, 1}`.
    pub fn prime(alpha: F, beta: F, f: F) -> Result<Self, ModuleError> {
        let shift = alpha.as_integer().and_then(|a| i64::try_from(a).ok());
        let beta_ok = beta.is_zero() || beta.is_one();
        match shift {
            Some(a) if f.is_zero() && beta_ok => Ok(Self { alpha, beta, f, dropped: Some(-a) }),
            _ => Err(ModuleError::InvalidParameters(
                "the primed module needs F = 0, integral alpha and beta in {0, 1}".into(),
            )),
        }
    }

    pub fn alpha(&self) -> &F {
        &self.alpha
    }

    pub fn beta(&self) -> &F {
        &self.beta
    }

    pub fn f(&self) -> &F {
        &self.f
    }

    pub fn is_prime(&self) -> bool {
        self.dropped.is_some()
    }

    /// Action of a generator of `HV` on `v_{α+k}`; result as `(offset, coefficient)`.
    pub fn act_offset(&self, gen: Generator, k: i64) -> Option<(i64, F)> {
        if self.dropped == Some(k) {
            return None;
        }
        let (target, c) = match gen {
            Generator::D(i) => (k + i, self.alpha.clone() + F::from_int(k) + self.beta.clone() * F::from_int(i)),
            Generator::I(i) => (k + i, self.f.clone()),
            _ => return None,
        };
        (!c.is_zero() && self.dropped != Some(target)).then_some((target, c))
    }
}

impl<F: Field> Module<F> for IntermediateSeries<F> {
    type Basis = i64;

    fn arity(&self) -> usize {
        0
    }

    fn act_basis(&self, gen: Generator, mono: &Monomial, k: &i64) -> Result<ModuleVector<i64, F>, ModuleError> {
        if mono.arity() != 0 {
            return Err(ModuleError::NotOverHv);
        }
        Ok(self.act_offset(gen, *k).into_iter().collect())
    }

    fn window(&self, size: usize) -> Vec<i64> {
        let n = size as i64;
        (-n..=n).filter(|k| self.dropped != Some(*k)).collect()
    }

    fn describe(&self, k: &i64) -> String {
        format!("v[{k}]")
    }
}
