//! Finite-window membership tests for `Ann_V = {p ∈ B : HV ⊗ p . V = 0}`.

use super::AnalysisError;
use crate::algebra::{tensor_poly, Generator};
use crate::field::Field;
use crate::modules::{Module, ModuleError};
use crate::lincomb::LinComb;
use crate::poly::{Monomial, PointB, PolyB};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorEntry<F: Field> {
    pub poly: PolyB<F>,
    pub annihilates: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorReport<F: Field> {
    pub index_bound: i64,
    pub window: usize,
    pub entries: Vec<AnnihilatorEntry<F>>,
}

/// For each `p`, whether `g ⊗ p` kills every window vector for every generator
/// `g` with `|n| <= index_bound`. Pairs leaving a truncation are skipped.
pub fn annihilator_probe<F: Field, M: Module<F>>(
    m: &M,
    generators: &[PolyB<F>],
    index_bound: i64,
    window: usize,
) -> Result<AnnihilatorReport<F>, AnalysisError> {
    if index_bound < 1 {
        return Err(AnalysisError::Bounds("index bound must be at least 1".into()));
    }
    let vectors = m.window(window);
    let gens = Generator::up_to(index_bound);
    let mut entries = Vec::with_capacity(generators.len());
    for p in generators {
        if p.arity() != m.arity() {
            return Err(ModuleError::Dimension { expected: m.arity(), found: p.arity() }.into());
        }
        let mut annihilates = true;
        'outer: for g in &gens {
            let x = tensor_poly(*g, p);
            for v in &vectors {
                match m.act(&x, &LinComb::basis(v.clone())) {
                    Ok(out) if out.is_zero() => {}
                    Ok(_) => {
                        annihilates = false;
                        break 'outer;
                    }
                    Err(ModuleError::LevelOverflow { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
        }
        entries.push(AnnihilatorEntry { poly: p.clone(), annihilates });
    }
    Ok(AnnihilatorReport { index_bound, window, entries })
}

/// The products `(b - μ)^r` with `|r| = s`, which generate `𝔪^s`.
pub fn power_generators<F: Field>(point: &PointB<F>, s: u32) -> Result<Vec<PolyB<F>>, AnalysisError> {
    let k = point.arity();
    let shifted: Vec<PolyB<F>> = (0..k)
        .map(|i| PolyB::var(k, i).sub(&PolyB::constant(k, point.coords()[i].clone())))
        .collect::<Result<_, _>>()
        .map_err(ModuleError::from)?;
    let mut out = Vec::new();
    for r in Monomial::of_degree(k, s) {
        let mut p = PolyB::one(k);
        for (i, &e) in r.exps().iter().enumerate() {
            for _ in 0..e {
                p = p.mul(&shifted[i]).map_err(ModuleError::from)?;
            }
        }
        out.push(p);
    }
    Ok(out)
}
