//! Exhaustive identity sweeps: the Jacobi identity in `L_B` and the
//! representation property `[x, y] v = x (y v) - y (x v)`.

use std::collections::BTreeMap;

use super::AnalysisError;
use crate::algebra::{AlgebraElement, BasisTerm, Generator, PolyAlgebra, Structure};
use crate::field::Field;
use crate::lincomb::LinComb;
use crate::modules::{Module, ModuleError, ModuleVector};
use crate::poly::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    /// Largest `|n|` for `d_n`, `I_n`.
    pub index: i64,
    /// Largest total degree of the `B`-monomial.
    pub monomial: u32,
    /// Window size passed to [`Module::window`].
    pub window: usize,
}

impl SweepBounds {
    pub fn validate(&self) -> Result<(), AnalysisError> {
        if self.index < 1 {
            return Err(AnalysisError::Bounds("index bound must be at least 1".into()));
        }
        Ok(())
    }
}

/// `g ⊗ b^r` for all generators with `|n| <= index` and monomials in `k`
/// variables of degree at most `monomial`.
pub fn acting_terms(k: usize, index: i64, monomial: u32) -> Vec<BasisTerm> {
    let monos = Monomial::up_to_degree(k, monomial);
    Generator::up_to(index)
        .into_iter()
        .flat_map(|g| monos.iter().map(move |m| BasisTerm::new(g, m.clone())))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<B: Ord, F> {
    pub x: BasisTerm,
    pub y: BasisTerm,
    pub v: B,
    /// `[x, y] v - x (y v) + y (x v)`.
    pub discrepancy: ModuleVector<B, F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport<B: Ord, F> {
    pub checked: usize,
    /// Triples whose evaluation left the truncation.
    pub inconclusive: usize,
    pub violations: Vec<Violation<B, F>>,
}

impl<B: Ord, F> AxiomReport<B, F> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn overflow<T>(r: &Result<T, ModuleError>) -> bool {
    matches!(r, Err(ModuleError::LevelOverflow { .. }))
}

/// [`axiom_sweep_over`] on [`acting_terms`] and the module's window.
pub fn axiom_sweep<F: Field, M: Module<F>>(
    m: &M,
    bounds: SweepBounds,
    structure: &Structure,
) -> Result<AxiomReport<M::Basis, F>, AnalysisError> {
    bounds.validate()?;
    let terms = acting_terms(m.arity(), bounds.index, bounds.monomial);
    axiom_sweep_over(m, &terms, &m.window(bounds.window), structure)
}

/// Memoized `(gen ⊗ b^r) . w` on basis vectors.
struct ActionCache<'a, F: Field, M: Module<F>> {
    m: &'a M,
    hits: BTreeMap<(BasisTerm, M::Basis), Result<ModuleVector<M::Basis, F>, ModuleError>>,
}

impl<'a, F: Field, M: Module<F>> ActionCache<'a, F, M> {
    fn basis(&mut self, t: &BasisTerm, w: &M::Basis) -> Result<ModuleVector<M::Basis, F>, ModuleError> {
        let key = (t.clone(), w.clone());
        if let Some(hit) = self.hits.get(&key) {
            return hit.clone();
        }
        let out = self.m.act_basis(t.gen, &t.coeff, w);
        self.hits.insert(key, out.clone());
        out
    }

    fn vector(&mut self, t: &BasisTerm, v: &ModuleVector<M::Basis, F>) -> Result<ModuleVector<M::Basis, F>, ModuleError> {
        let mut out = LinComb::zero();
        for (w, c) in v {
            out.add_scaled(&self.basis(t, w)?, c);
        }
        Ok(out)
    }

    fn element(&mut self, x: &AlgebraElement<F>, w: &M::Basis) -> Result<ModuleVector<M::Basis, F>, ModuleError> {
        let mut out = LinComb::zero();
        for (t, c) in x {
            out.add_scaled(&self.basis(t, w)?, c);
        }
        Ok(out)
    }
}

/// Checks every unordered pair of `terms` on every vector of `vectors`.
/// Violations are oriented with `x <= y` and sorted, so the report does not
/// depend on input order.
pub fn axiom_sweep_over<F: Field, M: Module<F>>(
    m: &M,
    terms: &[BasisTerm],
    vectors: &[M::Basis],
    structure: &Structure,
) -> Result<AxiomReport<M::Basis, F>, AnalysisError> {
    let mut report = AxiomReport { checked: 0, inconclusive: 0, violations: Vec::new() };
    let mut cache = ActionCache { m, hits: BTreeMap::new() };
    let mut brackets: Vec<Vec<AlgebraElement<F>>> = Vec::with_capacity(terms.len());
    for (i, x) in terms.iter().enumerate() {
        brackets.push(
            terms[i + 1..]
                .iter()
                .map(|y| structure.bracket_terms::<F, _>(&PolyAlgebra, x, y).into_iter().collect())
                .collect(),
        );
    }
    for v in vectors {
        let acted: Vec<_> = terms.iter().map(|t| cache.basis(t, v)).collect();
        if let Some(Err(e)) = acted.iter().find(|r| matches!(r, Err(e) if !matches!(e, ModuleError::LevelOverflow { .. }))) {
            return Err(e.clone().into());
        }
        for i in 0..terms.len() {
            for j in i + 1..terms.len() {
                let (x, y) = (&terms[i], &terms[j]);
                let (Ok(yv), Ok(xv)) = (&acted[j], &acted[i]) else {
                    report.inconclusive += 1;
                    continue;
                };
                let lhs = cache.element(&brackets[i][j - i - 1], v);
                let xyv = cache.vector(x, yv);
                let yxv = cache.vector(y, xv);
                if overflow(&lhs) || overflow(&xyv) || overflow(&yxv) {
                    report.inconclusive += 1;
                    continue;
                }
                report.checked += 1;
                let discrepancy = lhs? - xyv? + yxv?;
                if !discrepancy.is_zero() {
                    // Swapping x and y negates the discrepancy; store x <= y.
                    let (x, y, discrepancy) = if x <= y { (x, y, discrepancy) } else { (y, x, -discrepancy) };
                    report.violations.push(Violation { x: x.clone(), y: y.clone(), v: v.clone(), discrepancy });
                }
            }
        }
    }
    report
        .violations
        .sort_by(|a, b| (&a.v, &a.x, &a.y).cmp(&(&b.v, &b.x, &b.y)));
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFailure<F> {
    pub terms: [BasisTerm; 3],
    pub discrepancy: AlgebraElement<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport<F> {
    pub terms: usize,
    pub triples: usize,
    pub pairs: usize,
    pub jacobi_failures: usize,
    pub antisymmetry_failures: usize,
    /// The first few failing triples, sorted.
    pub examples: Vec<JacobiFailure<F>>,
}

impl<F> JacobiReport<F> {
    pub fn passed(&self) -> bool {
        self.jacobi_failures == 0 && self.antisymmetry_failures == 0
    }
}

const KEPT_EXAMPLES: usize = 16;

fn bracket_with<F: Field>(structure: &Structure, t: &BasisTerm, e: &AlgebraElement<F>) -> AlgebraElement<F> {
    let mut out = LinComb::zero();
    for (u, c) in e {
        for (z, cz) in structure.bracket_terms::<F, _>(&PolyAlgebra, t, u) {
            out.add_term(z, cz * c.clone());
        }
    }
    out
}

/// Jacobi and antisymmetry over all generator triples in `k` variables with
/// `|n| <= index` and monomial degree `<= monomial`.
pub fn jacobi_sweep<F: Field>(k: usize, index: i64, monomial: u32, structure: &Structure) -> JacobiReport<F> {
    jacobi_sweep_over(&acting_terms(k, index, monomial), structure)
}

/// The Jacobi expression is alternating, so unordered triples with repetition
/// cover every ordered triple.
pub fn jacobi_sweep_over<F: Field>(terms: &[BasisTerm], structure: &Structure) -> JacobiReport<F> {
    let n = terms.len();
    let mut pair: Vec<Vec<AlgebraElement<F>>> = vec![Vec::with_capacity(n); n];
    let mut antisymmetry_failures = 0;
    for (i, x) in terms.iter().enumerate() {
        for y in terms {
            pair[i].push(structure.bracket_terms::<F, _>(&PolyAlgebra, x, y).into_iter().collect());
        }
    }
    for i in 0..n {
        for j in i..n {
            if !(pair[i][j].clone() + pair[j][i].clone()).is_zero() {
                antisymmetry_failures += 1;
            }
        }
    }
    let mut report = JacobiReport {
        terms: n,
        triples: 0,
        pairs: n * (n + 1) / 2,
        jacobi_failures: 0,
        antisymmetry_failures,
        examples: Vec::new(),
    };
    for i in 0..n {
        for j in i..n {
            for l in j..n {
                report.triples += 1;
                let mut sum = bracket_with(structure, &terms[i], &pair[j][l]);
                for (t, c) in bracket_with(structure, &terms[j], &pair[l][i]) {
                    sum.add_term(t, c);
                }
                for (t, c) in bracket_with(structure, &terms[l], &pair[i][j]) {
                    sum.add_term(t, c);
                }
                if !sum.is_zero() {
                    report.jacobi_failures += 1;
                    if report.examples.len() < KEPT_EXAMPLES {
                        report.examples.push(JacobiFailure {
                            terms: [terms[i].clone(), terms[j].clone(), terms[l].clone()],
                            discrepancy: sum,
                        });
                    }
                }
            }
        }
    }
    report
}
