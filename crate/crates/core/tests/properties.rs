use hv_core::algebra::{bracket, grade_split, jacobi_check, tensor_poly, AlgebraElement, BasisTerm, ElementExt, Generator, Structure};
use hv_core::analysis::axiom_sweep_over;
use hv_core::field::{q, Field, GaussianRational, Rational};
use hv_core::modules::{EvalBasis, EvaluationSpec, HighestWeightFunctional, IntermediateSeries, Module, OmegaModule, TruncatedVerma};
use hv_core::algebra::QuotientAlgebra;
use hv_core::poly::{poly_eval, JetQuotient, Monomial, PointB, PolyB, PolyT};
use hv_core::LinComb;
use num_complex::Complex;
use num_traits::Zero;
use proptest::prelude::*;

type R = Rational;
type G = GaussianRational;

fn small() -> Vec<R> {
    let mut out = Vec::new();
    for n in -5..=5 {
        for d in 1..=5 {
            out.push(q::<R>(n, d));
        }
    }
    out.sort();
    out.dedup();
    out
}

#[test]
fn field_axioms_on_small_rationals() {
    let xs = small();
    let zero = q::<R>(0, 1);
    let one = q::<R>(1, 1);
    for a in &xs {
        assert_eq!(a.clone() + zero.clone(), *a);
        assert_eq!(a.clone() * one.clone(), *a);
        assert_eq!(a.clone() - a.clone(), zero);
        if *a != zero {
            assert_eq!(a.clone() * (one.clone() / a.clone()), one);
        }
        for b in &xs {
            assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        }
    }
    for a in xs.iter().step_by(5) {
        for b in xs.iter().step_by(3) {
            for c in xs.iter().step_by(7) {
                assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
                assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
                assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            }
        }
    }
}

#[test]
fn gaussian_inverses() {
    let xs = small();
    for a in xs.iter().step_by(4) {
        for b in xs.iter().step_by(6) {
            let z = Complex::new(a.clone(), b.clone());
            if !z.is_zero() {
                assert_eq!(z.clone() / z.clone(), q::<G>(1, 1));
                let back = G::parse_exact(&z.to_exact_string()).unwrap();
                assert_eq!(back, z);
            }
        }
    }
}

fn rational() -> impl Strategy<Value = R> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn gaussian() -> impl Strategy<Value = G> {
    (rational(), rational()).prop_map(|(a, b)| Complex::new(a, b))
}

fn poly_t() -> impl Strategy<Value = PolyT<G>> {
    prop::collection::vec(gaussian(), 0..=5).prop_map(PolyT::from_coeffs)
}

fn monomial(k: usize, max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, k).prop_map(Monomial::new)
}

fn poly_b(k: usize, max: u32) -> impl Strategy<Value = PolyB<R>> {
    prop::collection::vec((monomial(k, max), rational()), 0..=4)
        .prop_map(move |terms| PolyB::from_terms(k, terms).unwrap())
}

fn term(k: usize, index: i64) -> impl Strategy<Value = BasisTerm> {
    let gens = Generator::up_to(index);
    (0..gens.len(), monomial(k, 2)).prop_map(move |(i, m)| BasisTerm::new(gens[i], m))
}

fn element(k: usize) -> impl Strategy<Value = AlgebraElement<R>> {
    prop::collection::vec((term(k, 4), rational()), 0..=3).prop_map(|ts| ts.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polyt_ring_axioms(a in poly_t(), b in poly_t(), c in poly_t()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn polyb_ring_axioms(a in poly_b(2, 2), b in poly_b(2, 2), c in poly_b(2, 2)) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        prop_assert_eq!(&ab_c, &a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn evaluation_is_multiplicative(a in poly_b(2, 2), b in poly_b(2, 2), x in rational(), y in rational()) {
        let pt = PointB::new(vec![x, y]);
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(poly_eval(&ab, &pt).unwrap(), poly_eval(&a, &pt).unwrap() * poly_eval(&b, &pt).unwrap());
    }

    #[test]
    fn jet_expansion_is_a_ring_map(a in poly_b(2, 2), b in poly_b(2, 1), x in rational(), y in rational(), s in 1u32..=3) {
        let pt = PointB::new(vec![x, y]);
        let jq = JetQuotient::new(pt.clone(), s).unwrap();
        let ja = jq.jet_expand(&a).unwrap();
        let jb = jq.jet_expand(&b).unwrap();
        prop_assert_eq!(jq.jet_expand(&a.mul(&b).unwrap()).unwrap(), jq.mul(&ja, &jb));
        let constant = ja.coefficient(&Monomial::one(2));
        prop_assert_eq!(constant, poly_eval(&a, &pt).unwrap());
    }

    #[test]
    fn shift_is_an_automorphism(a in poly_t(), b in poly_t(), n in -5i64..=5, m in -5i64..=5) {
        prop_assert_eq!((&a * &b).shift(n), &a.shift(n) * &b.shift(n));
        prop_assert_eq!((&a + &b).shift(n), &a.shift(n) + &b.shift(n));
        prop_assert_eq!(a.shift(n).shift(m), a.shift(n + m));
        prop_assert_eq!(a.shift(n).degree(), a.degree());
    }

    #[test]
    fn bracket_is_alternating_and_bilinear(x in element(2), y in element(2), z in element(2), c in rational()) {
        prop_assert!(bracket(&x, &x).unwrap().is_zero());
        prop_assert_eq!(bracket(&x, &y).unwrap(), -bracket(&y, &x).unwrap());
        let lhs = bracket(&(x.clone() + z.scaled(&c)), &y).unwrap();
        prop_assert_eq!(lhs, bracket(&x, &y).unwrap() + bracket(&z, &y).unwrap().scaled(&c));
        prop_assert!(jacobi_check(&x, &y, &z).unwrap().is_zero());
    }

    #[test]
    fn grading_is_additive(a in term(1, 5), b in term(1, 5)) {
        let out = Structure::STANDARD.bracket_terms::<R, _>(&hv_core::algebra::PolyAlgebra, &a, &b);
        for (t, _) in out {
            if t.gen.is_central() {
                prop_assert_eq!(a.degree() + b.degree(), 0);
            } else {
                prop_assert_eq!(t.degree(), a.degree() + b.degree());
            }
        }
    }

    #[test]
    fn grade_split_recombines(x in element(1)) {
        let g = grade_split(&x);
        prop_assert_eq!(g.negative.clone() + g.zero.clone() + g.positive.clone(), x);
        prop_assert!(g.positive.keys().all(|t| t.degree() > 0));
        prop_assert!(g.negative.keys().all(|t| t.degree() < 0));
    }

    #[test]
    fn series_axiom(alpha in rational(), beta in rational(), f in rational(), x in term(0, 5), y in term(0, 5), k in -6i64..=6) {
        let m = IntermediateSeries::new(alpha, beta, f);
        let r = axiom_sweep_over(&m, &[x, y], &[k], &Structure::STANDARD).unwrap();
        prop_assert!(r.passed());
    }

    #[test]
    fn omega_axiom(lambda in rational().prop_filter("nonzero", |l| !l.is_zero()), alpha in rational(), mu in rational(), beta in rational(), x in term(1, 5), y in term(1, 5), j in 0usize..=6) {
        let m = OmegaModule::new(lambda, alpha, PointB::new(vec![mu]), beta).unwrap();
        let r = axiom_sweep_over(&m, &[x, y], &[j], &Structure::STANDARD).unwrap();
        prop_assert!(r.passed());
    }

    #[test]
    fn verma_axiom(vals in prop::collection::vec(rational(), 5), x in term(0, 3), y in term(0, 3), level in 0usize..=2, pick in 0usize..64) {
        let phi = HighestWeightFunctional::on_hv(vals[0].clone(), vals[1].clone(), vals[2].clone(), vals[3].clone(), vals[4].clone());
        let qa = QuotientAlgebra::single(JetQuotient::evaluation(PointB::origin(0)));
        let m = TruncatedVerma::new(qa, phi, 8).unwrap();
        let basis = m.pbw_level(level).unwrap();
        let v = basis[pick % basis.len()].clone();
        let r = axiom_sweep_over(&m, &[x, y], &[v], &Structure::STANDARD).unwrap();
        prop_assert!(r.passed());
        prop_assert_eq!(r.inconclusive, 0);
    }

    #[test]
    fn order_one_evaluation_factors(p in poly_b(1, 3), mu in rational(), n in -4i64..=4, k in -4i64..=4) {
        let jet = JetQuotient::evaluation(PointB::new(vec![mu.clone()]));
        let m = EvaluationSpec::series(jet, IntermediateSeries::new(q(1, 3), q(2, 1), q(1, 1)));
        let v = LinComb::basis(EvalBasis::Series(k, Monomial::one(1)));
        for g in [Generator::D(n), Generator::I(n)] {
            let lhs = m.act(&tensor_poly(g, &p), &v).unwrap();
            let unit = m.act(&AlgebraElement::tensor(g, Monomial::one(1)), &v).unwrap();
            prop_assert_eq!(lhs, unit.scaled(&poly_eval(&p, &PointB::new(vec![mu.clone()])).unwrap()));
        }
    }
}

#[test]
fn omega_is_free_on_d0() {
    let m = OmegaModule::new(q::<R>(3, 2), q(1, 1), PointB::new(vec![q(2, 1)]), q(1, 1)).unwrap();
    let mut f = PolyT::one();
    for n in 1..=6 {
        f = m.omega_act(&AlgebraElement::tensor(Generator::D(0), Monomial::one(1)), &f).unwrap();
        assert_eq!(f, PolyT::monomial(n, q(1, 1)));
    }
}
