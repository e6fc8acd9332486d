//! Worked examples with hand-computed values.

use hv_core::algebra::{bracket, grade_split, jacobi_check, AlgebraElement, BasisTerm, ElementExt, Generator, JetBasis, QuotientAlgebra, Structure};
use hv_core::analysis::{
    annihilator_probe, axiom_sweep, omega_invariants, pbw_order_spotcheck, power_generators, probe_irreducible,
    singular_vectors, weight_table, RaisingQuotients, RaisingSet, SweepBounds, Verdict, Witness,
};
use hv_core::field::{q, Rational};
use hv_core::modules::{
    BasisKey, EvalBasis, EvaluationSpec, HighestWeightFunctional, IntermediateSeries, Module, ModuleHandle, OmegaModule, Pbw,
    PbwOrder, TensorModule, TruncatedVerma,
};
use hv_core::poly::{poly_eval, JetQuotient, Monomial, PointB, PolyB, PolyT};
use hv_core::{Flaw, LinComb};

type R = Rational;
type E = AlgebraElement<R>;

fn r(n: i64) -> R {
    q(n, 1)
}

fn pt(xs: &[i64]) -> PointB<R> {
    PointB::new(xs.iter().map(|x| r(*x)).collect())
}

fn b(k: usize, i: usize) -> PolyB<R> {
    PolyB::var(k, i)
}

fn binomial(n: u64, j: u64) -> i64 {
    (0..j).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as i64
}

#[test]
fn evaluation_of_polynomials() {
    let p = b(2, 0).mul(&b(2, 1)).unwrap().mul(&b(2, 1)).unwrap();
    assert_eq!(poly_eval(&p, &pt(&[2, 3])).unwrap(), r(18));
    assert_eq!(poly_eval(&PolyB::one(2), &pt(&[-7, 5])).unwrap(), r(1));
    let shifted = b(1, 0).sub(&PolyB::constant(1, q(3, 4))).unwrap();
    assert_eq!(poly_eval(&shifted, &PointB::new(vec![q(3, 4)])).unwrap(), r(0));
}

#[test]
fn jets_at_a_point() {
    let at0 = JetQuotient::new(pt(&[0]), 2).unwrap();
    assert_eq!(at0.coordinates(&at0.jet_expand(&b(1, 0)).unwrap()), vec![r(0), r(1)]);
    let b2 = b(1, 0).mul(&b(1, 0)).unwrap();
    assert_eq!(at0.coordinates(&at0.jet_expand(&b2).unwrap()), vec![r(0), r(0)]);
    let at1 = JetQuotient::new(pt(&[1]), 2).unwrap();
    assert_eq!(at1.coordinates(&at1.jet_expand(&b2).unwrap()), vec![r(1), r(2)]);

    // b^n around μ: coefficient of (b - μ)^j is C(n, j) μ^(n-j).
    let mu = 3i64;
    let order = 4u32;
    let jq = JetQuotient::new(pt(&[mu]), order).unwrap();
    let mut p = PolyB::one(1);
    for n in 0..7u64 {
        let expected: Vec<R> = (0..order as u64)
            .map(|j| if j <= n { r(binomial(n, j) * mu.pow((n - j) as u32)) } else { r(0) })
            .collect();
        assert_eq!(jq.coordinates(&jq.jet_expand(&p).unwrap()), expected, "n = {n}");
        p = p.mul(&b(1, 0)).unwrap();
    }
}

#[test]
fn shifting_polynomials() {
    assert_eq!(PolyT::<R>::t().shift(1), PolyT::from_coeffs(vec![r(-1), r(1)]));
    let t2 = PolyT::<R>::monomial(2, r(1));
    assert_eq!(t2.shift(-2), PolyT::from_coeffs(vec![r(4), r(4), r(1)]));
    let f = PolyT::from_coeffs(vec![r(0), r(1), r(0), r(1)]);
    // (t - 5)^3 + (t - 5)
    let expected = PolyT::from_coeffs(vec![r(-130), r(76), r(-15), r(1)]);
    assert_eq!(f.shift(2).shift(3), expected);
    assert_eq!(f.shift(5), expected);
}

#[test]
fn brackets_of_generators() {
    let x = bracket(&E::d(2), &E::d(-2)).unwrap();
    assert_eq!(x, E::d(0).scaled(&r(-4)) + E::gen(Generator::C).scaled(&q(1, 2)));
    assert_eq!(x.to_string(), "-4*d(0) + 1/2*C");
    assert_eq!(x.to_string().parse::<E>().unwrap(), x);

    let y = bracket(&E::d(2), &E::i(-2)).unwrap();
    assert_eq!(y, E::i(0).scaled(&r(-2)) + E::gen(Generator::CD).scaled(&r(6)));
    assert_eq!(bracket(&E::i(2), &E::i(-2)).unwrap(), E::gen(Generator::CI).scaled(&r(2)));
    assert_eq!(
        bracket(&E::i(2), &E::d(-2)).unwrap(),
        E::i(0).scaled(&r(-2)) + E::gen(Generator::CD).scaled(&r(-2))
    );

    let lhs = E::tensor(Generator::D(1), Monomial::new([1, 0]));
    let rhs = E::tensor(Generator::I(1), Monomial::new([0, 1]));
    assert_eq!(bracket(&lhs, &rhs).unwrap(), E::tensor(Generator::I(2), Monomial::new([1, 1])));
    let mixed = lhs.clone() + rhs.scaled(&q(-2, 3)) + E::tensor(Generator::CD, Monomial::new([2, 0]));
    assert!(bracket(&mixed, &mixed).unwrap().is_zero());
}

#[test]
fn triangular_splitting() {
    let x = E::tensor(Generator::D(3), Monomial::new([1])) + E::tensor(Generator::I(0), Monomial::new([0]))
        + E::tensor(Generator::D(-1), Monomial::new([0]));
    let g = grade_split(&x);
    assert_eq!(g.negative, E::tensor(Generator::D(-1), Monomial::new([0])));
    assert_eq!(g.zero, E::tensor(Generator::I(0), Monomial::new([0])));
    assert_eq!(g.positive, E::tensor(Generator::D(3), Monomial::new([1])));
    let g = grade_split(&E::gen(Generator::CD));
    assert!(g.negative.is_zero() && g.positive.is_zero());
    assert_eq!(g.zero, E::gen(Generator::CD));
    let g = grade_split(&E::zero());
    assert!(g.negative.is_zero() && g.zero.is_zero() && g.positive.is_zero());
}

#[test]
fn jacobi_examples() {
    assert!(jacobi_check(&E::d(1), &E::d(2), &E::d(3)).unwrap().is_zero());
    assert!(jacobi_check(&E::d(2), &E::d(-2), &E::i(1)).unwrap().is_zero());
    let x = E::tensor(Generator::D(1), Monomial::new([1, 0]));
    let y = E::tensor(Generator::I(2), Monomial::new([0, 1]));
    let z = E::tensor(Generator::D(-3), Monomial::new([1, 0]));
    assert!(jacobi_check(&x, &y, &z).unwrap().is_zero());
}

#[test]
fn projection_to_two_points() {
    let qa = QuotientAlgebra::new(vec![JetQuotient::evaluation(pt(&[0])), JetQuotient::evaluation(pt(&[1]))]).unwrap();
    let img = qa.project(&E::tensor(Generator::D(0), Monomial::new([1]))).unwrap();
    let expected: LinComb<BasisTerm<JetBasis>, R> =
        LinComb::basis(BasisTerm::new(Generator::D(0), JetBasis::new(1, Monomial::one(1))));
    assert_eq!(img, expected);
    let at0 = QuotientAlgebra::single(JetQuotient::new(pt(&[0]), 2).unwrap());
    let x = at0.project(&E::tensor(Generator::D(1), Monomial::new([1]))).unwrap();
    assert!(Structure::STANDARD.bracket_in(&at0, &x, &x).is_zero());
}

#[test]
fn intermediate_series_action() {
    let m = IntermediateSeries::new(q::<R>(1, 2), r(0), r(1));
    let v0 = LinComb::basis(0i64);
    assert_eq!(m.act(&E::d(2), &v0).unwrap(), LinComb::single(2, q(1, 2)));
    for (alpha, beta, f) in [(q(1, 2), r(0), r(1)), (q(1, 3), q(2, 5), r(-4))] {
        let m = IntermediateSeries::new(alpha, beta, f.clone());
        for k in -3..=3 {
            assert_eq!(m.act(&E::i(3), &LinComb::basis(k)).unwrap(), LinComb::single(k + 3, f.clone()));
        }
    }
    let trivial = IntermediateSeries::<R>::new(r(0), r(0), r(0));
    for i in -4..=4 {
        assert!(trivial.act(&E::d(i), &v0).unwrap().is_zero());
    }
}

#[test]
fn omega_action() {
    let one = PolyT::<R>::one();
    let m = OmegaModule::new(r(2), r(3), pt(&[1]), r(0)).unwrap();
    let d1 = E::tensor(Generator::D(1), Monomial::new([0]));
    assert_eq!(m.omega_act(&d1, &one).unwrap(), PolyT::linear(r(3)).scale(&r(2)));
    let f = PolyT::from_coeffs(vec![r(1), r(-2), r(5)]);
    let d0 = E::tensor(Generator::D(0), Monomial::new([0]));
    assert_eq!(m.omega_act(&d0, &f).unwrap(), &PolyT::t() * &f);

    let m = OmegaModule::new(r(2), r(0), pt(&[3]), r(5)).unwrap();
    let i2b = E::tensor(Generator::I(2), Monomial::new([1]));
    assert_eq!(m.omega_act(&i2b, &one).unwrap(), PolyT::constant(r(30)));
    let m = OmegaModule::new(r(2), r(1), pt(&[3]), r(0)).unwrap();
    let d1b = E::tensor(Generator::D(1), Monomial::new([1]));
    assert_eq!(m.omega_act(&d1b, &one).unwrap(), PolyT::linear(r(1)).scale(&r(3)));
}

#[test]
fn evaluation_wrapper_action() {
    let inner = IntermediateSeries::new(q::<R>(1, 2), q(1, 3), r(1));
    let at2 = EvaluationSpec::series(JetQuotient::evaluation(pt(&[2])), inner.clone());
    let v = LinComb::basis(EvalBasis::Series(1, Monomial::one(1)));
    let d1 = at2.act(&E::tensor(Generator::D(1), Monomial::new([0])), &v).unwrap();
    assert_eq!(at2.act(&E::tensor(Generator::D(1), Monomial::new([1])), &v).unwrap(), d1.scaled(&r(2)));
    let shifted = E::tensor(Generator::D(1), Monomial::new([1])) - E::tensor(Generator::D(1), Monomial::new([0])).scaled(&r(2));
    assert!(at2.act(&shifted, &v).unwrap().is_zero());

    let at0 = EvaluationSpec::series(JetQuotient::new(pt(&[0]), 2).unwrap(), inner.clone());
    let v = LinComb::basis(EvalBasis::Series(0, Monomial::new([0])));
    assert!(at0.act(&E::tensor(Generator::D(1), Monomial::new([2])), &v).unwrap().is_zero());
    // d_1 v_α = (α + β) v_{α+1}, carried to the degree-one jet line.
    let out = at0.act(&E::tensor(Generator::D(1), Monomial::new([1])), &v).unwrap();
    assert_eq!(out, LinComb::single(EvalBasis::Series(1, Monomial::new([1])), q::<R>(1, 2) + q::<R>(1, 3)));
}

fn verma_over_c(phi: HighestWeightFunctional<R>, level: usize) -> TruncatedVerma<R> {
    TruncatedVerma::new(QuotientAlgebra::single(JetQuotient::evaluation(PointB::origin(0))), phi, level).unwrap()
}

fn phi_value(gen: Generator, e: u32, v: R) -> (BasisTerm<JetBasis>, R) {
    (BasisTerm::new(gen, JetBasis::new(0, Monomial::new([e]))), v)
}

#[test]
fn verma_action() {
    let top = LinComb::basis(Pbw::top());
    let m = verma_over_c(HighestWeightFunctional::on_hv(q(3, 7), r(2), r(1), r(0), r(0)), 3);
    let v = m.act(&E::d(-1), &top).unwrap();
    assert_eq!(m.act(&E::d(1), &v).unwrap(), top.scaled(&q(-6, 7)));

    // Over B/𝔪² at 0 with f = b.
    let qa = QuotientAlgebra::single(JetQuotient::new(pt(&[0]), 2).unwrap());
    let (d0f, cf, i0f, cdf): (R, R, R, R) = (q(2, 3), r(5), q(-1, 4), r(3));
    let phi = HighestWeightFunctional::new([
        phi_value(Generator::D(0), 0, r(1)),
        phi_value(Generator::D(0), 1, d0f.clone()),
        phi_value(Generator::C, 1, cf.clone()),
        phi_value(Generator::I(0), 1, i0f.clone()),
        phi_value(Generator::CD, 1, cdf.clone()),
        phi_value(Generator::CI, 0, r(7)),
    ])
    .unwrap();
    let m = TruncatedVerma::new(qa, phi, 3).unwrap();
    let at = |g: Generator, e: u32| E::tensor(g, Monomial::new([e]));
    let w = m.act(&at(Generator::D(-2), 1), &top).unwrap();
    let expect = |c: R| top.scaled(&c);
    assert_eq!(m.act(&at(Generator::D(2), 0), &w).unwrap(), expect(r(-4) * d0f.clone() + q::<R>(1, 2) * cf));
    assert_eq!(m.act(&at(Generator::I(2), 0), &w).unwrap(), expect(r(-2) * i0f - r(2) * cdf));
    let d1 = at(Generator::D(1), 0);
    let twice = m.act(&d1, &m.act(&d1, &w).unwrap()).unwrap();
    assert_eq!(twice, expect(r(6) * d0f));
}

#[test]
fn tensor_action_is_leibniz() {
    let left = verma_over_c(HighestWeightFunctional::on_hv(q(1, 2), r(0), r(1), r(0), r(0)), 2);
    let right = verma_over_c(HighestWeightFunctional::on_hv(r(3), r(1), r(2), r(0), r(0)), 2);
    let t = TensorModule::new(left, right).unwrap();
    let v = LinComb::basis((Pbw::top(), Pbw::top()));
    assert_eq!(t.act(&E::gen(Generator::C), &v).unwrap(), v.scaled(&r(3)));
    assert!(t.act(&E::zero(), &v).unwrap().is_zero());
    assert_eq!(t.act(&E::d(0), &v).unwrap(), v.scaled(&q(7, 2)));
}

#[test]
fn axiom_sweeps() {
    let omega = OmegaModule::new(r(2), r(3), pt(&[1]), r(0)).unwrap();
    let bounds = SweepBounds { index: 5, monomial: 2, window: 4 };
    assert!(axiom_sweep(&omega, bounds, &Structure::STANDARD).unwrap().passed());
    let series = IntermediateSeries::new(q::<R>(1, 2), r(0), r(1));
    let bounds0 = SweepBounds { index: 5, monomial: 0, window: 4 };
    assert!(axiom_sweep(&series, bounds0, &Structure::STANDARD).unwrap().passed());
    let bad = omega.with_flaw(Flaw::OmegaLambdaExponent);
    assert!(!axiom_sweep(&bad, bounds, &Structure::STANDARD).unwrap().passed());
}

#[test]
fn weight_tables() {
    let series = IntermediateSeries::new(q::<R>(1, 2), r(0), r(1));
    let table = weight_table(&series, 4).unwrap();
    assert_eq!(table.len(), 9);
    assert!(table.iter().all(|(_, n)| *n == 1));
    let verma = verma_over_c(HighestWeightFunctional::zero(), 2);
    let dims: Vec<usize> = weight_table(&verma, 2).unwrap().into_iter().map(|(_, n)| n).collect();
    assert_eq!(dims, vec![1, 2, 5]);
    let omega = OmegaModule::new(r(1), r(0), pt(&[0]), r(0)).unwrap();
    assert!(weight_table(&omega, 2).is_err());
}

#[test]
fn irreducibility_probes() {
    let v000 = ModuleHandle::Intermediate(IntermediateSeries::new(r(0), r(0), r(0)));
    let rep = probe_irreducible(&v000, 4, 4).unwrap();
    assert_eq!(rep.witness, Some(Witness::Lines(vec![BasisKey::Offset(0)])));
    let omega = ModuleHandle::Omega(OmegaModule::new(r(2), r(0), pt(&[1]), r(0)).unwrap());
    assert_eq!(probe_irreducible(&omega, 4, 3).unwrap().witness, Some(Witness::Ideal(PolyT::t())));
    let omega = ModuleHandle::Omega(OmegaModule::new(r(2), r(1), pt(&[1]), r(0)).unwrap());
    assert_eq!(probe_irreducible(&omega, 4, 3).unwrap().verdict, Verdict::WindowIrreducible);
    let generic = ModuleHandle::Intermediate(IntermediateSeries::new(q(1, 2), q(1, 3), r(0)));
    assert_eq!(probe_irreducible(&generic, 4, 4).unwrap().verdict, Verdict::WindowIrreducible);
}

#[test]
fn singular_vectors_at_level_one() {
    let top = LinComb::basis(Pbw::top());
    let zero = verma_over_c(HighestWeightFunctional::zero(), 2);
    assert_eq!(singular_vectors(&zero, 1, RaisingSet::Generators).unwrap().len(), 2);

    let m = verma_over_c(HighestWeightFunctional::on_hv(r(1), r(0), r(0), r(0), r(0)), 2);
    let rq = RaisingQuotients::build(&m, 1, RaisingSet::Generators).unwrap();
    assert_eq!(rq.kernel_dimension(1), 1);
    assert!(rq.contains(1, &m.act(&E::i(-1), &top).unwrap()));
    assert!(!rq.contains(1, &m.act(&E::d(-1), &top).unwrap()));

    let m = verma_over_c(HighestWeightFunctional::on_hv(r(0), r(0), r(0), r(0), q(1, 5)), 2);
    let rq = RaisingQuotients::build(&m, 1, RaisingSet::Generators).unwrap();
    assert!(!rq.contains(1, &m.act(&E::i(-1), &top).unwrap()));
}

#[test]
fn omega_invariants_round_trip() {
    for (l, a, mu, be) in [(2, 3, 5, 7), (1, 0, 0, 0)] {
        let m = OmegaModule::new(r(l), r(a), pt(&[mu]), r(be)).unwrap();
        let inv = omega_invariants(&m).unwrap();
        assert_eq!((inv.lambda.clone(), inv.alpha.clone(), inv.mu.clone(), inv.beta.clone()), (r(l), r(a), vec![r(mu)], r(be)));
    }
    let a = omega_invariants(&OmegaModule::new(r(2), r(3), pt(&[5]), r(7)).unwrap()).unwrap();
    let b = omega_invariants(&OmegaModule::new(r(2), r(3), pt(&[5]), r(6)).unwrap()).unwrap();
    assert_ne!(a, b);
}

#[test]
fn annihilators_of_evaluation_specs() {
    let inner = IntermediateSeries::new(q::<R>(1, 2), q(1, 3), r(1));
    let at2 = EvaluationSpec::series(JetQuotient::evaluation(pt(&[2])), inner.clone());
    let shifted = b(1, 0).sub(&PolyB::constant(1, r(2))).unwrap();
    let rep = annihilator_probe(&at2, &[shifted, PolyB::one(1)], 3, 2).unwrap();
    assert!(rep.entries[0].annihilates);
    assert!(!rep.entries[1].annihilates);

    let at0 = EvaluationSpec::series(JetQuotient::new(pt(&[0]), 2).unwrap(), inner);
    let gens = [power_generators(&pt(&[0]), 1).unwrap(), power_generators(&pt(&[0]), 2).unwrap()].concat();
    let rep = annihilator_probe(&at0, &gens, 3, 2).unwrap();
    assert_eq!(rep.entries.iter().map(|e| e.annihilates).collect::<Vec<_>>(), vec![false, true]);
}

#[test]
fn pbw_orders() {
    let m = verma_over_c(HighestWeightFunctional::zero(), 2);
    let rep = pbw_order_spotcheck(&m, &m.clone().with_order(PbwOrder::Reversed), 2).unwrap();
    assert!(rep.pass);
    assert_eq!(rep.level_dims, [vec![1, 2, 5], vec![1, 2, 5]]);
    assert!(pbw_order_spotcheck(&m, &m, 2).unwrap().pass);
    let m = verma_over_c(HighestWeightFunctional::on_hv(r(0), r(0), r(1), r(0), r(0)), 3);
    let bad = m.clone().with_order(PbwOrder::Reversed).with_flaw(Flaw::DroppedStraighteningCentral);
    assert!(!pbw_order_spotcheck(&m, &bad, 3).unwrap().pass);
}
