//! Identities for `d_{-2} ⊗ f` and `I_{-2} ⊗ f` applied to `v_φ`, and the
//! singularity of `HV_{-n} ⊗ f . v_φ` once `φ` vanishes on `f`.

use super::singular::{contains_by_raising, RaisingQuotients, RaisingSet};
use super::AnalysisError;
use crate::algebra::{BasisTerm, CoefficientAlgebra, Generator, JetBasis};
use crate::field::{q, Field};
use crate::lincomb::LinComb;
use crate::modules::{ModuleVector, Pbw, TruncatedVerma};
use crate::poly::PolyB;

type QuotientElement<F> = LinComb<JetBasis, F>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck<F> {
    pub name: &'static str,
    pub lhs: ModuleVector<Pbw, F>,
    /// The expected coefficient of `v_φ`.
    pub expected: F,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCheck {
    /// E.g. `d(-3)⊗f`.
    pub vector: String,
    pub level: usize,
    pub expected: bool,
    pub member: bool,
}

impl MembershipCheck {
    pub fn pass(&self) -> bool {
        self.expected == self.member
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HcReport<F> {
    pub identities: Vec<IdentityCheck<F>>,
    /// Whether `φ` vanishes on `HV_0 ⊗ (f)`, the ideal generated by `f` in `B/J`.
    pub forward_applies: bool,
    pub memberships: Vec<MembershipCheck>,
    pub controls: Vec<MembershipCheck>,
}

impl<F> HcReport<F> {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|c| c.pass)
            && self.memberships.iter().all(MembershipCheck::pass)
            && self.controls.iter().all(MembershipCheck::pass)
    }
}

fn tensor<F: Field>(gen: Generator, x: &QuotientElement<F>) -> LinComb<BasisTerm<JetBasis>, F> {
    x.iter().map(|(e, c)| (BasisTerm::new(gen, e.clone()), c.clone())).collect()
}

fn times<F: Field>(m: &TruncatedVerma<F>, x: &QuotientElement<F>, e: &JetBasis) -> QuotientElement<F> {
    let alg = m.quotient_algebra();
    x.iter().filter_map(|(a, c)| alg.mul_basis(a, e).map(|p| (p, c.clone()))).collect()
}

const ZERO_PART: [Generator; 5] = [Generator::D(0), Generator::I(0), Generator::C, Generator::CD, Generator::CI];

/// Runs the five identities for `f`, the singularity of `d_{-n} ⊗ f . v_φ`
/// and `I_{-n} ⊗ f . v_φ` for `n <= forward_levels` when `φ` kills
/// `HV_0 ⊗ (f)`, and negative controls when `φ(d_0 ⊗ f)` or `φ(C_I ⊗ f)` is
/// nonzero.
pub fn hc_criterion_suite<F: Field>(
    m: &TruncatedVerma<F>,
    f: &PolyB<F>,
    forward_levels: usize,
) -> Result<HcReport<F>, AnalysisError> {
    if m.truncation() < 2 {
        return Err(AnalysisError::Bounds("the identity suite needs max level at least 2".into()));
    }
    let alg = m.quotient_algebra();
    let fbar = alg.project_poly(f).map_err(crate::modules::ModuleError::from)?;
    let unit = alg.unit();
    let phi = m.phi();
    let top: ModuleVector<Pbw, F> = LinComb::basis(Pbw::top());
    let val = |g: Generator| phi.eval(&tensor(g, &fbar));

    let act = |g: Generator, x: &QuotientElement<F>, v: &ModuleVector<Pbw, F>| {
        m.act_quotient_element(&tensor(g, x), v)
    };
    let d_f = act(Generator::D(-2), &fbar, &top)?;
    let i_f = act(Generator::I(-2), &fbar, &top)?;

    let half = q::<F>(1, 2);
    let int = |n: i64| F::from_int(n);
    let cases: [(&'static str, ModuleVector<Pbw, F>, F); 5] = [
        (
            "d(2)·d(-2)⊗f·v = (-4φ(d(0)⊗f) + 1/2φ(C⊗f))v",
            act(Generator::D(2), &unit, &d_f)?,
            int(-4) * val(Generator::D(0)) + half * val(Generator::C),
        ),
        (
            "d(1)²·d(-2)⊗f·v = 6φ(d(0)⊗f)v",
            act(Generator::D(1), &unit, &act(Generator::D(1), &unit, &d_f)?)?,
            int(6) * val(Generator::D(0)),
        ),
        (
            "I(2)·d(-2)⊗f·v = (-2φ(I(0)⊗f) - 2φ(C_D⊗f))v",
            act(Generator::I(2), &unit, &d_f)?,
            int(-2) * val(Generator::I(0)) - int(2) * val(Generator::CD),
        ),
        (
            "d(2)·I(-2)⊗f·v = (-2φ(I(0)⊗f) + 6φ(C_D⊗f))v",
            act(Generator::D(2), &unit, &i_f)?,
            int(-2) * val(Generator::I(0)) + int(6) * val(Generator::CD),
        ),
        (
            "I(2)·I(-2)⊗f·v = 2φ(C_I⊗f)v",
            act(Generator::I(2), &unit, &i_f)?,
            int(2) * val(Generator::CI),
        ),
    ];
    let identities = cases
        .into_iter()
        .map(|(name, lhs, expected)| {
            let pass = lhs == LinComb::single(Pbw::top(), expected.clone());
            IdentityCheck { name, lhs, expected, pass }
        })
        .collect();

    let forward_applies = alg.basis().iter().all(|e| {
        let fe = times(m, &fbar, e);
        ZERO_PART.iter().all(|g| phi.eval(&tensor(*g, &fe)).is_zero())
    });
    let depth = forward_levels.min(m.truncation());
    let rq = RaisingQuotients::build(m, depth.saturating_sub(1).max(1), RaisingSet::Generators)?;
    let check = |g: Generator, n: usize, expected: bool| -> Result<MembershipCheck, AnalysisError> {
        let v = act(g, &fbar, &top)?;
        Ok(MembershipCheck {
            vector: format!("{g}⊗f"),
            level: n,
            expected,
            member: contains_by_raising(m, &rq, n, &v)?,
        })
    };

    let mut memberships = Vec::new();
    if forward_applies {
        for n in 1..=depth {
            for make in [Generator::D as fn(i64) -> Generator, Generator::I] {
                memberships.push(check(make(-(n as i64)), n, true)?);
            }
        }
    }
    let mut controls = Vec::new();
    if !val(Generator::D(0)).is_zero() {
        controls.push(check(Generator::D(-2), 2, false)?);
    }
    if !val(Generator::CI).is_zero() {
        controls.push(check(Generator::I(-2), 2, false)?);
    }
    Ok(HcReport { identities, forward_applies, memberships, controls })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuotientAlgebra;
    use crate::field::Rational;
    use crate::modules::HighestWeightFunctional;
    use crate::poly::{JetQuotient, Monomial, PointB};

    type F = Rational;

    fn jet(e: u32) -> JetBasis {
        JetBasis::new(0, Monomial::new([e]))
    }

    fn verma(values: &[(Generator, u32, i64)], s: u32, max: usize) -> TruncatedVerma<F> {
        let qa = QuotientAlgebra::single(JetQuotient::new(PointB::origin(1), s).unwrap());
        let phi = HighestWeightFunctional::new(
            values.iter().map(|&(g, e, v)| (BasisTerm::new(g, jet(e)), q(v, 1))),
        )
        .unwrap();
        TruncatedVerma::new(qa, phi, max).unwrap()
    }

    fn b(e: u32) -> PolyB<F> {
        PolyB::term(Monomial::new([e]), q(1, 1))
    }

    #[test]
    fn identities_hold_with_generic_phi() {
        let m = verma(
            &[(Generator::D(0), 0, 3), (Generator::C, 1, 2), (Generator::CD, 1, -1), (Generator::CI, 0, 5), (Generator::I(0), 1, 7)],
            2,
            2,
        );
        for f in [b(0), b(1)] {
            let r = hc_criterion_suite(&m, &f, 2).unwrap();
            for c in &r.identities {
                assert!(c.pass, "{}: {:?} vs {:?}", c.name, c.lhs, c.expected);
            }
        }
    }

    #[test]
    fn hand_values() {
        let m = verma(&[(Generator::D(0), 0, 3), (Generator::CI, 0, 5), (Generator::I(0), 0, 2), (Generator::CD, 0, 1)], 1, 2);
        let r = hc_criterion_suite(&m, &b(0), 2).unwrap();
        let got: Vec<F> = r.identities.iter().map(|c| c.expected.clone()).collect();
        assert_eq!(got, vec![q(-12, 1), q(18, 1), q(-6, 1), q(2, 1), q(10, 1)]);
        assert!(r.passed());
        assert_eq!(r.controls.len(), 2);
        assert!(!r.forward_applies);
    }

    #[test]
    fn forward_mechanism_on_nilpotent_f() {
        let m = verma(&[(Generator::D(0), 0, 1), (Generator::CI, 0, 2)], 2, 3);
        let r = hc_criterion_suite(&m, &b(1), 3).unwrap();
        assert!(r.forward_applies);
        assert_eq!(r.memberships.len(), 6);
        assert!(r.passed());
    }

    #[test]
    fn forward_check_is_skipped_when_phi_sees_the_ideal() {
        let m = verma(&[(Generator::D(0), 1, 1)], 2, 2);
        let r = hc_criterion_suite(&m, &b(0), 2).unwrap();
        assert!(!r.forward_applies);
        assert!(r.memberships.is_empty());
    }
}
