//! Joint eigenvalues of `d_0, I_0, C, C_I, C_D`.

use super::AnalysisError;
use crate::algebra::Generator;
use crate::field::Field;
use crate::lincomb::LinComb;
use crate::modules::Module;
use crate::poly::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightTuple<F> {
    pub d0: F,
    pub i0: F,
    pub c: F,
    pub ci: F,
    pub cd: F,
}

impl<F: Field> WeightTuple<F> {
    pub fn entries(&self) -> [&F; 5] {
        [&self.d0, &self.i0, &self.c, &self.ci, &self.cd]
    }
}

/// The weight of a basis vector, or an error if it is not an eigenvector of
/// all five operators.
pub fn weight_of<F: Field, M: Module<F>>(m: &M, v: &M::Basis) -> Result<WeightTuple<F>, AnalysisError> {
    let one = Monomial::one(m.arity());
    let mut vals = Vec::with_capacity(5);
    for g in [Generator::D(0), Generator::I(0), Generator::C, Generator::CI, Generator::CD] {
        let out = m.act_basis(g, &one, v)?;
        let c = out.coefficient(v);
        if out != LinComb::single(v.clone(), c.clone()) {
            return Err(AnalysisError::NotWeightVector(m.describe(v)));
        }
        vals.push(c);
    }
    let mut it = vals.into_iter();
    let mut next = || it.next().expect("five values");
    Ok(WeightTuple { d0: next(), i0: next(), c: next(), ci: next(), cd: next() })
}

/// Dimensions of weight spaces met in the window, in order of first appearance.
pub fn weight_table<F: Field, M: Module<F>>(
    m: &M,
    window: usize,
) -> Result<Vec<(WeightTuple<F>, usize)>, AnalysisError> {
    if !m.is_weight_module() {
        return Err(AnalysisError::Unsupported("weight tables need a weight module".into()));
    }
    let mut table: Vec<(WeightTuple<F>, usize)> = Vec::new();
    for v in m.window(window) {
        let w = weight_of(m, &v)?;
        match table.iter_mut().find(|(t, _)| *t == w) {
            Some((_, n)) => *n += 1,
            None => table.push((w, 1)),
        }
    }
    Ok(table)
}
