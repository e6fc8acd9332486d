//! Bounded searches for proper submodules.
//!
//! A `Reducible` verdict carries a witness closed under every tested operator.
//! `WindowIrreducible` only says no witness was found within the bounds.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::singular::{RaisingQuotients, RaisingSet};
use super::sweep::acting_terms;
use super::AnalysisError;
use crate::algebra::BasisTerm;
use crate::field::Field;
use crate::modules::{BasisKey, Module, ModuleHandle, ModuleVector, OmegaModule};
use crate::poly::PolyT;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Reducible,
    WindowIrreducible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<B: Ord, F: Field> {
    /// A set of basis lines spanning an invariant coordinate subspace (within the window).
    Lines(Vec<B>),
    /// The submodule `g(t) C[t]` of an `Ω` module.
    Ideal(PolyT<F>),
    /// A basis of a nonzero homogeneous piece of a proper graded submodule.
    Vectors { level: usize, basis: Vec<ModuleVector<B, F>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowReport<B: Ord, F: Field> {
    pub window: usize,
    pub operator_bound: i64,
    pub verdict: Verdict,
    pub witness: Option<Witness<B, F>>,
}

impl<B: Ord, F: Field> WindowReport<B, F> {
    pub fn is_reducible(&self) -> bool {
        self.verdict == Verdict::Reducible
    }

    fn from_witness(window: usize, operator_bound: i64, witness: Option<Witness<B, F>>) -> Self {
        let verdict = if witness.is_some() { Verdict::Reducible } else { Verdict::WindowIrreducible };
        Self { window, operator_bound, verdict, witness }
    }
}

fn check_bounds(window: usize, operator_bound: i64) -> Result<(), AnalysisError> {
    if window < 1 || operator_bound < 1 {
        return Err(AnalysisError::Bounds("window and operator bound must be at least 1".into()));
    }
    Ok(())
}

fn operators(k: usize, bound: i64) -> Vec<BasisTerm> {
    acting_terms(k, bound, if k == 0 { 0 } else { 2 })
        .into_iter()
        .filter(|t| !t.gen.is_central())
        .collect()
}

/// Reachability between window lines: `u -> w` when some operator sends `u`
/// to a vector with a nonzero `w`-coordinate. The smallest proper set closed
/// under reachability is returned as the witness.
pub fn probe_weight_lines<F: Field, M: Module<F>>(
    m: &M,
    window: usize,
    operator_bound: i64,
) -> Result<WindowReport<M::Basis, F>, AnalysisError> {
    check_bounds(window, operator_bound)?;
    let lines = m.window(window);
    let index: BTreeMap<&M::Basis, usize> = lines.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let ops = operators(m.arity(), operator_bound);
    let mut edges = Vec::with_capacity(lines.len());
    for u in &lines {
        let mut out = BTreeSet::new();
        for t in &ops {
            for (w, _) in &m.act_basis(t.gen, &t.coeff, u)? {
                if let Some(&i) = index.get(w) {
                    out.insert(i);
                }
            }
        }
        edges.push(out);
    }
    let mut best: Option<BTreeSet<usize>> = None;
    for start in 0..lines.len() {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &edges[u] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        if seen.len() < lines.len() && best.as_ref().map_or(true, |b| seen.len() < b.len()) {
            best = Some(seen);
        }
    }
    let witness = best.map(|s| Witness::Lines(s.into_iter().map(|i| lines[i].clone()).collect()));
    Ok(WindowReport::from_witness(window, operator_bound, witness))
}

/// The generator of the smallest ideal containing `start` and closed under
/// the operators on `start · t^j`, `j <= window`.
fn ideal_closure<F: Field>(
    m: &OmegaModule<F>,
    ops: &[BasisTerm],
    start: PolyT<F>,
    window: usize,
) -> Result<PolyT<F>, AnalysisError> {
    let mut g = start.monic();
    loop {
        let mut changed = false;
        for j in 0..=window {
            let probe = &g * &PolyT::monomial(j, F::one());
            for t in ops {
                let img = m.act_poly(t.gen, &t.coeff, &probe)?;
                if img.is_zero() {
                    continue;
                }
                let next = g.gcd(&img);
                if next != g {
                    g = next;
                    changed = true;
                    if g.degree() == Some(0) {
                        return Ok(g);
                    }
                }
            }
        }
        if !changed {
            return Ok(g);
        }
    }
}

/// Every submodule of `Ω` is stable under `d_0 = t·`, hence an ideal
/// `g(t) C[t]`. Candidates `t`, `t^2` and `t - c` for integers `|c| <= window`
/// are closed up under the tested operators; a nonconstant result is a witness.
pub fn probe_omega<F: Field>(
    m: &OmegaModule<F>,
    window: usize,
    operator_bound: i64,
) -> Result<WindowReport<usize, F>, AnalysisError> {
    check_bounds(window, operator_bound)?;
    let ops = operators(m.arity(), operator_bound);
    let w = window as i64;
    let mut candidates = vec![PolyT::t(), PolyT::monomial(2, F::one())];
    candidates.extend((-w..=w).filter(|c| *c != 0).map(|c| PolyT::linear(F::from_int(c))));
    let mut best: Option<PolyT<F>> = None;
    for c in candidates {
        let g = ideal_closure(m, &ops, c, window)?;
        if g.degree().unwrap_or(0) > 0 && best.as_ref().map_or(true, |b| g.degree() < b.degree()) {
            best = Some(g);
        }
    }
    Ok(WindowReport::from_witness(window, operator_bound, best.map(Witness::Ideal)))
}

/// For graded highest-weight modules the maximal proper submodule is `N(φ)`;
/// the first level `1..=window` where it is nonzero gives the witness.
pub fn probe_highest_weight<F: Field, M: Module<F>>(
    m: &M,
    window: usize,
    operator_bound: i64,
) -> Result<WindowReport<M::Basis, F>, AnalysisError> {
    check_bounds(window, operator_bound)?;
    let top = m.max_level().map_or(window, |l| l.min(window));
    let rq = RaisingQuotients::build(m, top, RaisingSet::Generators)?;
    let witness = (1..=top).find(|&l| rq.kernel_dimension(l) > 0).map(|level| Witness::Vectors {
        level,
        basis: rq.kernel(level),
    });
    Ok(WindowReport::from_witness(window, operator_bound, witness))
}

fn rekey<F: Field>(r: WindowReport<usize, F>) -> WindowReport<BasisKey, F> {
    let witness = r.witness.map(|w| match w {
        Witness::Ideal(g) => Witness::Ideal(g),
        Witness::Lines(ls) => Witness::Lines(ls.into_iter().map(BasisKey::Power).collect()),
        Witness::Vectors { level, basis } => Witness::Vectors {
            level,
            basis: basis.into_iter().map(|v| v.map_keys(|j| BasisKey::Power(*j))).collect(),
        },
    });
    WindowReport { window: r.window, operator_bound: r.operator_bound, verdict: r.verdict, witness }
}

/// Chooses the method by family: ideals for `Ω`, `N(φ)` for graded
/// highest-weight modules, line reachability otherwise.
pub fn probe_irreducible<F: Field>(
    m: &ModuleHandle<F>,
    window: usize,
    operator_bound: i64,
) -> Result<WindowReport<BasisKey, F>, AnalysisError> {
    match m {
        ModuleHandle::Omega(o) => Ok(rekey(probe_omega(o, window, operator_bound)?)),
        _ if m.max_level().is_some() => probe_highest_weight(m, window, operator_bound),
        _ => probe_weight_lines(m, window, operator_bound),
    }
}
