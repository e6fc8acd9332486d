//! Truncated Verma modules `M(φ)` over `HV ⊗ B/J`.
//!
//! Basis vectors are ordered PBW monomials `y_1 y_2 ... y_r v_φ` in the negative
//! part, with `rank(y_1) <= rank(y_2) <= ...`. Actions are computed by
//! straightening: `x (y_1 w) = y_1 (x w) + [x, y_1] w`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use smallvec::SmallVec;

use super::{Module, ModuleError, ModuleVector};
use crate::algebra::{BasisTerm, GradePart, Generator, JetBasis, QuotientAlgebra, Structure};
use crate::field::Field;
use crate::flaw::Flaw;
use crate::lincomb::LinComb;
use crate::poly::Monomial;

/// A sorted list of ranks of negative basis terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pbw(SmallVec<[u16; 8]>);

impl Pbw {
    pub fn top() -> Self {
        Self::default()
    }

    pub fn ranks(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn from_sorted(ranks: impl IntoIterator<Item = u16>) -> Self {
        Self(ranks.into_iter().collect())
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// Total order on negative basis terms used for PBW monomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PbwOrder {
    /// `d` before `I`, indices descending (`d_{-1}` first), quotient basis in
    /// enumeration order.
    #[default]
    Standard,
    /// The standard order reversed.
    Reversed,
}

/// `φ : L^0 → C` on the basis `{g ⊗ e : g ∈ {d_0, I_0, C, C_D, C_I}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HighestWeightFunctional<F> {
    values: BTreeMap<BasisTerm<JetBasis>, F>,
}

impl<F: Field> HighestWeightFunctional<F> {
    pub fn zero() -> Self {
        Self { values: BTreeMap::new() }
    }

    pub fn new(entries: impl IntoIterator<Item = (BasisTerm<JetBasis>, F)>) -> Result<Self, ModuleError> {
        let mut values = BTreeMap::new();
        for (t, v) in entries {
            if t.gen.grade() != GradePart::Zero {
                return Err(ModuleError::InvalidParameters(format!(
                    "highest weight assigns a value to {}, which is not in the zero part",
                    t.gen
                )));
            }
            if !v.is_zero() {
                values.insert(t, v);
            }
        }
        Ok(Self { values })
    }

    /// `φ` on `B = C`: values of `d_0, I_0, C, C_D, C_I`.
    pub fn on_hv(d0: F, i0: F, c: F, cd: F, ci: F) -> Self {
        let unit = JetBasis::new(0, Monomial::one(0));
        Self::new(
            [Generator::D(0), Generator::I(0), Generator::C, Generator::CD, Generator::CI]
                .into_iter()
                .zip([d0, i0, c, cd, ci])
                .map(|(g, v)| (BasisTerm::new(g, unit.clone()), v)),
        )
        .expect("zero-part generators")
    }

    pub fn value(&self, t: &BasisTerm<JetBasis>) -> F {
        self.values.get(t).cloned().unwrap_or_else(F::zero)
    }

    /// `φ` extended linearly to a combination.
    pub fn eval(&self, x: &LinComb<BasisTerm<JetBasis>, F>) -> F {
        x.iter().fold(F::zero(), |acc, (t, c)| acc + self.value(t) * c.clone())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&BasisTerm<JetBasis>, &F)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }
}

type CacheKey = (BasisTerm<JetBasis>, Pbw);

/// `M(φ)` with basis materialized up to `max_level`.
pub struct TruncatedVerma<F> {
    quotient: QuotientAlgebra<F>,
    phi: HighestWeightFunctional<F>,
    max_level: usize,
    order: PbwOrder,
    structure: Structure,
    drop_central: bool,
    negatives: Vec<BasisTerm<JetBasis>>,
    rank: HashMap<BasisTerm<JetBasis>, u16>,
    cache: Mutex<HashMap<CacheKey, ModuleVector<Pbw, F>>>,
}

impl<F: Field> fmt::Debug for TruncatedVerma<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedVerma")
            .field("quotient", &self.quotient)
            .field("phi", &self.phi)
            .field("max_level", &self.max_level)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl<F: Field> Clone for TruncatedVerma<F> {
    fn clone(&self) -> Self {
        Self::build(
            self.quotient.clone(),
            self.phi.clone(),
            self.max_level,
            self.order,
            self.structure,
            self.drop_central,
        )
    }
}

impl<F: Field> TruncatedVerma<F> {
    pub fn new(
        quotient: QuotientAlgebra<F>,
        phi: HighestWeightFunctional<F>,
        max_level: usize,
    ) -> Result<Self, ModuleError> {
        if max_level == 0 {
            return Err(ModuleError::InvalidParameters("max level must be positive".into()));
        }
        let basis = quotient.basis();
        for (t, _) in phi.entries() {
            if !basis.contains(&t.coeff) {
                return Err(ModuleError::InvalidParameters(format!(
                    "highest weight refers to {}, which is not a basis element of the quotient",
                    t.coeff
                )));
            }
        }
        Ok(Self::build(quotient, phi, max_level, PbwOrder::Standard, Structure::STANDARD, false))
    }

    fn build(
        quotient: QuotientAlgebra<F>,
        phi: HighestWeightFunctional<F>,
        max_level: usize,
        order: PbwOrder,
        structure: Structure,
        drop_central: bool,
    ) -> Self {
        let basis = quotient.basis();
        let mut negatives = Vec::new();
        for make in [Generator::D as fn(i64) -> Generator, Generator::I] {
            for n in 1..=max_level as i64 {
                for e in &basis {
                    negatives.push(BasisTerm::new(make(-n), e.clone()));
                }
            }
        }
        if order == PbwOrder::Reversed {
            negatives.reverse();
        }
        let rank = negatives.iter().enumerate().map(|(i, t)| (t.clone(), i as u16)).collect();
        Self {
            quotient,
            phi,
            max_level,
            order,
            structure,
            drop_central,
            negatives,
            rank,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_order(self, order: PbwOrder) -> Self {
        Self::build(self.quotient, self.phi, self.max_level, order, self.structure, self.drop_central)
    }

    /// Seeds a fault: bracket flaws change the structure constants used for
    /// straightening, [`Flaw::DroppedStraighteningCentral`] discards central
    /// commutator terms.
    pub fn with_flaw(self, flaw: Flaw) -> Self {
        let (structure, drop) = match flaw {
            Flaw::DroppedStraighteningCentral => (self.structure, true),
            Flaw::CentralCocycle | Flaw::DroppedCdTerm => (Structure::with_flaw(flaw), self.drop_central),
            Flaw::OmegaLambdaExponent => (self.structure, self.drop_central),
        };
        Self::build(self.quotient, self.phi, self.max_level, self.order, structure, drop)
    }

    pub fn quotient_algebra(&self) -> &QuotientAlgebra<F> {
        &self.quotient
    }

    pub fn phi(&self) -> &HighestWeightFunctional<F> {
        &self.phi
    }

    pub fn order(&self) -> PbwOrder {
        self.order
    }

    pub fn truncation(&self) -> usize {
        self.max_level
    }

    /// The negative basis terms in rank order.
    pub fn negatives(&self) -> &[BasisTerm<JetBasis>] {
        &self.negatives
    }

    pub fn level(&self, w: &Pbw) -> usize {
        w.0.iter().map(|&r| self.negatives[r as usize].gen.degree().unsigned_abs() as usize).sum()
    }

    /// PBW monomial with the given factors, in any order.
    pub fn monomial(&self, factors: &[BasisTerm<JetBasis>]) -> Result<Pbw, ModuleError> {
        let mut ranks = Vec::with_capacity(factors.len());
        for t in factors {
            match self.rank.get(t) {
                Some(&r) => ranks.push(r),
                None => {
                    return Err(ModuleError::InvalidParameters(format!(
                        "{}⊗{} is not a negative basis element within the truncation",
                        t.gen, t.coeff
                    )))
                }
            }
        }
        ranks.sort_unstable();
        Ok(Pbw::from_sorted(ranks))
    }

    /// All PBW monomials at `level`, sorted.
    pub fn pbw_level(&self, level: usize) -> Result<Vec<Pbw>, ModuleError> {
        if level > self.max_level {
            return Err(ModuleError::LevelOverflow { level, max: self.max_level });
        }
        let degrees: Vec<usize> =
            self.negatives.iter().map(|t| t.gen.degree().unsigned_abs() as usize).collect();
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fn go(degrees: &[usize], start: usize, left: usize, prefix: &mut Vec<u16>, out: &mut Vec<Pbw>) {
            if left == 0 {
                out.push(Pbw::from_sorted(prefix.iter().copied()));
                return;
            }
            for r in start..degrees.len() {
                if degrees[r] <= left {
                    prefix.push(r as u16);
                    go(degrees, r, left - degrees[r], prefix, out);
                    prefix.pop();
                }
            }
        }
        go(&degrees, 0, level, &mut prefix, &mut out);
        out.sort();
        Ok(out)
    }

    fn describe_pbw(&self, w: &Pbw) -> String {
        if w.is_empty() {
            return "v".into();
        }
        let mut s = String::new();
        for &r in w.ranks() {
            let t = &self.negatives[r as usize];
            s.push_str(&format!("{}⊗{}·", t.gen, t.coeff));
        }
        s.push('v');
        s
    }

    /// `(gen ⊗ e) . w`.
    pub fn act_pbw(&self, t: &BasisTerm<JetBasis>, w: &Pbw) -> Result<ModuleVector<Pbw, F>, ModuleError> {
        let deg = t.gen.degree();
        if deg < 0 {
            let level = self.level(w) + deg.unsigned_abs() as usize;
            if level > self.max_level {
                return Err(ModuleError::LevelOverflow { level, max: self.max_level });
            }
        }
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&(t.clone(), w.clone())) {
            return Ok(hit.clone());
        }
        let out = self.straighten(t, w)?;
        self.cache.lock().expect("cache lock").insert((t.clone(), w.clone()), out.clone());
        Ok(out)
    }

    fn straighten(&self, t: &BasisTerm<JetBasis>, w: &Pbw) -> Result<ModuleVector<Pbw, F>, ModuleError> {
        if t.gen.is_central() {
            let c = self.phi.value(t);
            return Ok(if c.is_zero() { LinComb::zero() } else { LinComb::single(w.clone(), c) });
        }
        let own_rank = if t.gen.degree() < 0 { Some(self.rank[t]) } else { None };
        let Some((&first, rest)) = w.0.split_first() else {
            return Ok(match t.gen.grade() {
                GradePart::Positive => LinComb::zero(),
                GradePart::Zero => {
                    let c = self.phi.value(t);
                    if c.is_zero() { LinComb::zero() } else { LinComb::single(Pbw::top(), c) }
                }
                GradePart::Negative => LinComb::basis(Pbw::from_sorted([own_rank.expect("negative")])),
            });
        };
        if let Some(r) = own_rank {
            if r <= first {
                let mut ranks = SmallVec::with_capacity(w.len() + 1);
                ranks.push(r);
                ranks.extend_from_slice(&w.0);
                return Ok(LinComb::basis(Pbw(ranks)));
            }
        }
        let rest = Pbw(rest.iter().copied().collect());
        let y = &self.negatives[first as usize];
        let mut out = LinComb::zero();
        for (m, c) in &self.act_pbw(t, &rest)? {
            out.add_scaled(&self.act_pbw(y, m)?, c);
        }
        for (z, c) in self.structure.bracket_terms::<F, _>(&self.quotient, t, y) {
            if self.drop_central && z.gen.is_central() {
                continue;
            }
            out.add_scaled(&self.act_pbw(&z, &rest)?, &c);
        }
        Ok(out)
    }

    /// Action of a combination of quotient basis terms.
    pub fn act_quotient_element(
        &self,
        x: &LinComb<BasisTerm<JetBasis>, F>,
        v: &ModuleVector<Pbw, F>,
    ) -> Result<ModuleVector<Pbw, F>, ModuleError> {
        let mut out = LinComb::zero();
        for (t, c) in x {
            for (w, cw) in v {
                out.add_scaled(&self.act_pbw(t, w)?, &(c.clone() * cw.clone()));
            }
        }
        Ok(out)
    }
}

impl<F: Field> Module<F> for TruncatedVerma<F> {
    type Basis = Pbw;

    fn arity(&self) -> usize {
        self.quotient.arity()
    }

    fn act_basis(&self, gen: Generator, mono: &Monomial, w: &Pbw) -> Result<ModuleVector<Pbw, F>, ModuleError> {
        let mut out = LinComb::zero();
        for (e, c) in self.quotient.project_monomial(mono)? {
            out.add_scaled(&self.act_pbw(&BasisTerm::new(gen, e), w)?, &c);
        }
        Ok(out)
    }

    fn window(&self, size: usize) -> Vec<Pbw> {
        (0..=size.min(self.max_level)).flat_map(|l| self.pbw_level(l).expect("within truncation")).collect()
    }

    fn describe(&self, w: &Pbw) -> String {
        self.describe_pbw(w)
    }

    fn quotient(&self) -> Option<&QuotientAlgebra<F>> {
        Some(&self.quotient)
    }

    fn act_jet(&self, gen: Generator, e: &JetBasis, w: &Pbw) -> Result<ModuleVector<Pbw, F>, ModuleError> {
        self.act_pbw(&BasisTerm::new(gen, e.clone()), w)
    }

    fn level_of(&self, w: &Pbw) -> Option<usize> {
        Some(self.level(w))
    }

    fn level_basis(&self, level: usize) -> Result<Vec<Pbw>, ModuleError> {
        self.pbw_level(level)
    }

    fn max_level(&self) -> Option<usize> {
        Some(self.max_level)
    }
}
