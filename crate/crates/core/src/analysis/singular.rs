//! The maximal proper submodule `N(φ)` of a graded highest-weight module,
//! level by level.
//!
//! `v` at level `ℓ` lies in `N(φ)` exactly when every raising word sends it to
//! zero at level `0`. With `P_0 = [1]` and `P_ℓ` the row space of the stacked
//! products `P_{ℓ-m} A_x` over raising generators `x` of degree `m`, this is
//! `N(φ) ∩ M_ℓ = ker P_ℓ`.

use std::collections::BTreeMap;

use super::linalg::{self, Matrix};
use super::AnalysisError;
use crate::algebra::{Generator, JetBasis};
use crate::field::Field;
use crate::lincomb::LinComb;
use crate::modules::{Module, ModuleVector};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RaisingSet {
    /// `d_1 ⊗ e`, `d_2 ⊗ e`, `I_1 ⊗ e`, which generate the positive part.
    #[default]
    Generators,
    /// Every `d_m ⊗ e`, `I_m ⊗ e` with `1 <= m <= level`.
    AllWords,
}

/// Raising operators `(gen, e)` over the module's quotient basis.
pub fn raising_generators<F: Field, M: Module<F>>(
    m: &M,
    set: RaisingSet,
    level: usize,
) -> Result<Vec<(Generator, JetBasis)>, AnalysisError> {
    let q = m
        .quotient()
        .ok_or_else(|| AnalysisError::Unsupported("module exposes no finite quotient".into()))?;
    let gens: Vec<Generator> = match set {
        RaisingSet::Generators => vec![Generator::D(1), Generator::D(2), Generator::I(1)],
        RaisingSet::AllWords => {
            let top = level.max(1) as i64;
            (1..=top).map(Generator::D).chain((1..=top).map(Generator::I)).collect()
        }
    };
    let basis = q.basis();
    Ok(gens.into_iter().flat_map(|g| basis.iter().map(move |e| (g, e.clone()))).collect())
}

/// The matrices `P_0, ..., P_L` together with the level bases.
#[derive(Clone, Debug)]
pub struct RaisingQuotients<B: Ord, F> {
    set: RaisingSet,
    bases: Vec<Vec<B>>,
    index: Vec<BTreeMap<B, usize>>,
    p: Vec<Matrix<F>>,
}

impl<B: Ord + Clone + std::fmt::Debug, F: Field> RaisingQuotients<B, F> {
    pub fn build<M: Module<F, Basis = B>>(m: &M, up_to: usize, set: RaisingSet) -> Result<Self, AnalysisError> {
        let top = m.level_basis(0)?;
        if top.len() != 1 {
            return Err(AnalysisError::Unsupported("level 0 must be one-dimensional".into()));
        }
        let mut out = Self { set, bases: Vec::new(), index: Vec::new(), p: Vec::new() };
        out.push_level(top, vec![vec![F::one()]]);
        let gens = raising_generators(m, set, up_to)?;
        for level in 1..=up_to {
            let basis = m.level_basis(level)?;
            let mut stack = Matrix::new();
            for (g, e) in &gens {
                let d = g.degree() as usize;
                if d > level {
                    continue;
                }
                let images = basis
                    .iter()
                    .map(|b| m.act_jet(*g, e, b))
                    .collect::<Result<Vec<_>, _>>()?;
                stack.extend(out.project_images(level - d, &images));
            }
            let p = linalg::row_space(stack, basis.len());
            out.push_level(basis, p);
        }
        Ok(out)
    }

    fn push_level(&mut self, basis: Vec<B>, p: Matrix<F>) {
        self.index.push(basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect());
        self.bases.push(basis);
        self.p.push(p);
    }

    /// Rows of `P_level` applied to each image vector, one column per image.
    fn project_images(&self, level: usize, images: &[ModuleVector<B, F>]) -> Matrix<F> {
        let index = &self.index[level];
        self.p[level]
            .iter()
            .map(|row| {
                images
                    .iter()
                    .map(|img| {
                        img.iter().fold(F::zero(), |acc, (b, c)| {
                            let r = &row[index[b]];
                            if r.is_zero() {
                                acc
                            } else {
                                acc + r.clone() * c.clone()
                            }
                        })
                    })
                    .collect()
            })
            .collect()
    }

    pub fn set(&self) -> RaisingSet {
        self.set
    }

    pub fn levels(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, level: usize) -> &[B] {
        &self.bases[level]
    }

    /// `P_level` in reduced echelon form; equal matrices mean equal kernels.
    pub fn matrix(&self, level: usize) -> &Matrix<F> {
        &self.p[level]
    }

    /// `dim M_ℓ - dim N_ℓ`, the dimension of the simple quotient at this level.
    pub fn quotient_dimension(&self, level: usize) -> usize {
        self.p[level].len()
    }

    pub fn kernel_dimension(&self, level: usize) -> usize {
        self.bases[level].len() - self.p[level].len()
    }

    pub fn coordinates(&self, level: usize, v: &ModuleVector<B, F>) -> Option<Vec<F>> {
        let mut out = vec![F::zero(); self.bases[level].len()];
        for (b, c) in v {
            out[*self.index[level].get(b)?] = c.clone();
        }
        Some(out)
    }

    /// A basis of `N(φ) ∩ M_level`.
    pub fn kernel(&self, level: usize) -> Vec<ModuleVector<B, F>> {
        linalg::nullspace(&self.p[level], self.bases[level].len())
            .into_iter()
            .map(|col| self.bases[level].iter().cloned().zip(col).collect::<LinComb<B, F>>())
            .collect()
    }

    /// Whether `v` (homogeneous of the given level) lies in `ker P_level`.
    pub fn contains(&self, level: usize, v: &ModuleVector<B, F>) -> bool {
        match self.coordinates(level, v) {
            Some(c) => linalg::mat_vec(&self.p[level], &c).iter().all(F::is_zero),
            None => false,
        }
    }
}

/// Membership in `N(φ)` at `level` via one raising step: `v ∈ N_ℓ` iff
/// `x v ∈ N_{ℓ-m}` for every raising generator. Needs `rq` built to `level - 1`.
pub fn contains_by_raising<F: Field, M: Module<F>>(
    m: &M,
    rq: &RaisingQuotients<M::Basis, F>,
    level: usize,
    v: &ModuleVector<M::Basis, F>,
) -> Result<bool, AnalysisError> {
    if level == 0 {
        return Ok(v.is_zero());
    }
    for (g, e) in raising_generators(m, rq.set(), level)? {
        let d = g.degree() as usize;
        if d > level {
            continue;
        }
        let image = m.act_jet_vector(g, &e, v)?;
        if !rq.contains(level - d, &image) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A basis of `N(φ) ∩ M_level`.
pub fn singular_vectors<F: Field, M: Module<F>>(
    m: &M,
    level: usize,
    set: RaisingSet,
) -> Result<Vec<ModuleVector<M::Basis, F>>, AnalysisError> {
    Ok(RaisingQuotients::build(m, level, set)?.kernel(level))
}
