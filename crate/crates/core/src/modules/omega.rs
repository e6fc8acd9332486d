//! `U(d_0)`-free modules `Ω(λ, α, μ, β)` of rank one.

use super::{Module, ModuleError, ModuleVector};
use crate::algebra::{AlgebraElement, Generator};
use crate::field::Field;
use crate::flaw::Flaw;
use crate::poly::{Monomial, PointB, PolyT};

/// `C[t]` with
///
/// `d_n ⊗ b^r . f = μ^r λ^{n-|r|} f(t-n) (t-nα)`,
/// `I_n ⊗ b^r . f = μ^r λ^{n-|r|} β f(t-n)`, centre acting as `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaModule<F> {
    lambda: F,
    alpha: F,
    mu: PointB<F>,
    beta: F,
    flaw: Option<Flaw>,
}

impl<F: Field> OmegaModule<F> {
    pub fn new(lambda: F, alpha: F, mu: PointB<F>, beta: F) -> Result<Self, ModuleError> {
        if lambda.is_zero() {
            return Err(ModuleError::InvalidParameters("lambda must be nonzero".into()));
        }
        Ok(Self { lambda, alpha, mu, beta, flaw: None })
    }

    /// Seeds [`Flaw::OmegaLambdaExponent`]; other flaws leave the action unchanged.
    pub fn with_flaw(mut self, flaw: Flaw) -> Self {
        self.flaw = Some(flaw);
        self
    }

    pub fn lambda(&self) -> &F {
        &self.lambda
    }

    pub fn alpha(&self) -> &F {
        &self.alpha
    }

    pub fn mu(&self) -> &PointB<F> {
        &self.mu
    }

    pub fn beta(&self) -> &F {
        &self.beta
    }

    fn scale(&self, n: i64, mono: &Monomial) -> Result<F, ModuleError> {
        self.check_arity(mono)?;
        let mut exp = n - i64::from(mono.degree());
        if self.flaw == Some(Flaw::OmegaLambdaExponent) {
            exp += 1;
        }
        let lam = self.lambda.pow_int(exp).expect("lambda is nonzero");
        Ok(self.mu.power(mono)? * lam)
    }

    /// `(gen ⊗ b^mono) . f`.
    pub fn act_poly(&self, gen: Generator, mono: &Monomial, f: &PolyT<F>) -> Result<PolyT<F>, ModuleError> {
        match gen {
            Generator::D(n) => {
                let c = self.scale(n, mono)?;
                let nalpha = F::from_int(n) * self.alpha.clone();
                Ok((&f.shift(n) * &PolyT::linear(nalpha)).scale(&c))
            }
            Generator::I(n) => {
                let c = self.scale(n, mono)? * self.beta.clone();
                Ok(f.shift(n).scale(&c))
            }
            _ => {
                self.check_arity(mono)?;
                Ok(PolyT::zero())
            }
        }
    }

    /// `x . f`, extended linearly.
    pub fn omega_act(&self, x: &AlgebraElement<F>, f: &PolyT<F>) -> Result<PolyT<F>, ModuleError> {
        let mut out = PolyT::zero();
        for (t, c) in x {
            out = &out + &self.act_poly(t.gen, &t.coeff, f)?.scale(c);
        }
        Ok(out)
    }
}

pub(crate) fn poly_to_vector<F: Field>(p: &PolyT<F>) -> ModuleVector<usize, F> {
    p.coeffs().iter().cloned().enumerate().collect()
}

pub(crate) fn vector_to_poly<F: Field>(v: &ModuleVector<usize, F>) -> PolyT<F> {
    let mut out = PolyT::zero();
    for (j, c) in v {
        out = &out + &PolyT::monomial(*j, c.clone());
    }
    out
}

impl<F: Field> Module<F> for OmegaModule<F> {
    type Basis = usize;

    fn arity(&self) -> usize {
        self.mu.arity()
    }

    fn act_basis(&self, gen: Generator, mono: &Monomial, j: &usize) -> Result<ModuleVector<usize, F>, ModuleError> {
        let f = PolyT::monomial(*j, F::one());
        Ok(poly_to_vector(&self.act_poly(gen, mono, &f)?))
    }

    fn window(&self, size: usize) -> Vec<usize> {
        (0..=size).collect()
    }

    fn describe(&self, j: &usize) -> String {
        format!("t^{j}")
    }

    fn is_weight_module(&self) -> bool {
        false
    }
}

impl<F: Field> OmegaModule<F> {
    /// `omega_act` on a coefficient vector.
    pub fn act_vector(&self, x: &AlgebraElement<F>, v: &ModuleVector<usize, F>) -> Result<ModuleVector<usize, F>, ModuleError> {
        Ok(poly_to_vector(&self.omega_act(x, &vector_to_poly(v))?))
    }
}
