//! Parameters of an `Ω` module read back from its action on `1`.

use super::AnalysisError;
use crate::algebra::Generator;
use crate::field::Field;
use crate::modules::{Module, OmegaModule};
use crate::poly::{Monomial, PointB, PolyT};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaInvariants<F> {
    pub lambda: F,
    pub alpha: F,
    pub mu: Vec<F>,
    pub beta: F,
}

/// `d_1 . 1 = λ(t - α)`, `d_1 ⊗ b_i . 1 = μ_i (t - α)`, `I_0 . 1 = β`.
pub fn omega_invariants<F: Field>(m: &OmegaModule<F>) -> Result<OmegaInvariants<F>, AnalysisError> {
    let k = m.arity();
    let one = PolyT::one();
    let d1 = m.act_poly(Generator::D(1), &Monomial::one(k), &one)?;
    if d1.degree() != Some(1) {
        return Err(AnalysisError::NotOmegaAction(format!("d(1)·1 = {d1} is not of degree 1")));
    }
    let lambda = d1.coeff(1);
    let alpha = -(d1.coeff(0) / lambda.clone());
    let line = PolyT::linear(alpha.clone());
    let mut mu = Vec::with_capacity(k);
    for i in 0..k {
        let img = m.act_poly(Generator::D(1), &Monomial::var(k, i), &one)?;
        let c = img.coeff(1);
        if img != line.scale(&c) {
            return Err(AnalysisError::NotOmegaAction(format!("d(1)⊗b{} · 1 = {img} is not a multiple of {line}", i + 1)));
        }
        mu.push(c);
    }
    let i0 = m.act_poly(Generator::I(0), &Monomial::one(k), &one)?;
    if i0.degree().unwrap_or(0) > 0 {
        return Err(AnalysisError::NotOmegaAction(format!("I(0)·1 = {i0} is not constant")));
    }
    Ok(OmegaInvariants { lambda, alpha, mu, beta: i0.coeff(0) })
}

impl<F: Field> OmegaInvariants<F> {
    /// The module with these parameters.
    pub fn construct(&self) -> Result<OmegaModule<F>, AnalysisError> {
        Ok(OmegaModule::new(
            self.lambda.clone(),
            self.alpha.clone(),
            PointB::new(self.mu.clone()),
            self.beta.clone(),
        )?)
    }
}
