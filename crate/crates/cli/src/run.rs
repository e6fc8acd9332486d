//! Command execution.

use hv_core::algebra::Structure;
use hv_core::analysis::{
    acting_terms, annihilator_probe, axiom_sweep_over, hc_criterion_suite, jacobi_sweep_over, omega_invariants,
    power_generators, probe_irreducible, weight_table, AnalysisError, RaisingQuotients, RaisingSet, Witness,
};
use hv_core::field::Field;
use hv_core::modules::{EvaluationSpec, Module, ModuleHandle, ModuleVector};
use hv_core::poly::PolyB;
use hv_core::{Flaw, Scalar};
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::Value;

use crate::config::{field_error, poly, scalar, Command, ConfigError, ModuleSpec, Raising, RunConfig};
use crate::report::Report;

/// Violations and failures listed in a report beyond the counts.
const LISTED: usize = 20;

fn analysis(e: AnalysisError) -> ConfigError {
    match e {
        AnalysisError::Bounds(reason) => field_error("bounds", reason),
        other => field_error("module", other),
    }
}

fn need_module(cfg: &RunConfig, flaw: Option<Flaw>) -> Result<ModuleHandle<Scalar>, ConfigError> {
    match &cfg.module {
        Some(m) => m.build(flaw),
        None => Err(field_error("module", format!("is required for {}", cfg.command.name()))),
    }
}

pub fn render_vector<M: Module<Scalar>>(m: &M, v: &ModuleVector<M::Basis, Scalar>) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (b, c)) in v.iter().enumerate() {
        let (re, im) = c.parts();
        let (negative, body) = if im.is_zero() {
            let abs = re.abs();
            (re.is_negative(), if abs.is_one() { String::new() } else { format!("{abs}*") })
        } else {
            (false, format!("({})*", c.to_exact_string()))
        };
        out.push_str(match (i, negative) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        out.push_str(&body);
        out.push_str(&m.describe(b));
    }
    out
}

fn shuffled<T>(mut xs: Vec<T>, seed: Option<u64>) -> Vec<T> {
    if let Some(s) = seed {
        xs.shuffle(&mut StdRng::seed_from_u64(s));
    }
    xs
}

fn exact(x: &Scalar) -> Value {
    Value::String(x.to_exact_string())
}

/// Runs one configuration. `seed` only permutes sweep order.
pub fn run(cfg: &RunConfig, seed: Option<u64>) -> Result<Report, ConfigError> {
    let flaw: Option<Flaw> = cfg.flaw.map(Into::into);
    let structure = match flaw {
        Some(f @ (Flaw::CentralCocycle | Flaw::DroppedCdTerm)) => Structure::with_flaw(f),
        _ => Structure::STANDARD,
    };
    let b = cfg.bounds;
    if b.index < 1 {
        return Err(field_error("bounds.index", "must be at least 1"));
    }
    let mut r = Report::new(cfg.command.name());
    match cfg.command {
        Command::CheckAxioms => {
            let m = need_module(cfg, flaw)?;
            let terms = shuffled(acting_terms(m.arity(), b.index, b.monomial), seed);
            let vectors = shuffled(m.window(b.window), seed.map(|s| s.wrapping_add(1)));
            let rep = axiom_sweep_over(&m, &terms, &vectors, &structure).map_err(analysis)?;
            r.field("family", m.family());
            r.field("checked", rep.checked);
            r.field("inconclusive", rep.inconclusive);
            r.columns(&["x", "y", "v", "discrepancy"]);
            for v in rep.violations.iter().take(LISTED) {
                r.row(vec![v.x.to_string(), v.y.to_string(), m.describe(&v.v), render_vector(&m, &v.discrepancy)]);
            }
            r.finish(rep.passed(), format!("{} violations", rep.violations.len()));
        }
        Command::JacobiSweep => {
            let k = match (&cfg.module, cfg.arity) {
                (_, Some(k)) => k,
                (Some(m), None) => m.build(flaw)?.arity(),
                (None, None) => 0,
            };
            let terms = shuffled(acting_terms(k, b.index, b.monomial), seed);
            let rep = jacobi_sweep_over::<Scalar>(&terms, &structure);
            r.field("arity", k);
            r.field("terms", rep.terms);
            r.field("triples", rep.triples);
            r.field("pairs", rep.pairs);
            r.field("jacobi_failures", rep.jacobi_failures);
            r.field("antisymmetry_failures", rep.antisymmetry_failures);
            r.columns(&["x", "y", "z", "discrepancy"]);
            for f in rep.examples.iter().take(LISTED) {
                let [x, y, z] = &f.terms;
                r.row(vec![x.to_string(), y.to_string(), z.to_string(), f.discrepancy.to_string()]);
            }
            r.finish(rep.passed(), format!("{} discrepancies", rep.jacobi_failures + rep.antisymmetry_failures));
        }
        Command::Weights => {
            let m = need_module(cfg, flaw)?;
            let table = weight_table(&m, b.window).map_err(analysis)?;
            r.columns(&["d(0)", "I(0)", "C", "C_I", "C_D", "dim"]);
            for (w, n) in &table {
                let mut row: Vec<String> = w.entries().iter().map(|x| x.to_exact_string()).collect();
                row.push(n.to_string());
                r.row(row);
            }
            r.finish(true, format!("{} weight spaces", table.len()));
        }
        Command::ProbeIrreducible => {
            let m = need_module(cfg, flaw)?;
            let rep = probe_irreducible(&m, b.window, b.index).map_err(analysis)?;
            let verdict = if rep.is_reducible() { "reducible" } else { "window-irreducible" };
            r.field("family", m.family());
            r.field("window", rep.window);
            r.field("operator_bound", rep.operator_bound);
            r.field("verdict", verdict);
            match &rep.witness {
                Some(Witness::Lines(ls)) => {
                    r.field("witness_kind", "lines");
                    r.list("witness", ls.iter().map(|l| m.describe(l)).collect());
                }
                Some(Witness::Ideal(g)) => {
                    r.field("witness_kind", "ideal");
                    r.field("witness", g.to_string());
                }
                Some(Witness::Vectors { level, basis }) => {
                    r.field("witness_kind", "vectors");
                    r.field("witness_level", *level);
                    r.list("witness", basis.iter().map(|v| render_vector(&m, v)).collect());
                }
                None => {}
            }
            r.finish(true, verdict.to_string());
        }
        Command::SingularVectors => {
            let m = need_module(cfg, flaw)?;
            let Some(max) = m.max_level() else {
                return Err(field_error("module", format!("{} modules are not graded by level", m.family())));
            };
            if b.level > max {
                return Err(field_error("bounds.level", format!("must be at most the truncation level {max}")));
            }
            let set = match cfg.raising.unwrap_or(Raising::Generators) {
                Raising::Generators => RaisingSet::Generators,
                Raising::AllWords => RaisingSet::AllWords,
            };
            let rq = RaisingQuotients::build(&m, b.level, set).map_err(analysis)?;
            r.columns(&["level", "dim", "quotient", "kernel"]);
            for l in 0..=b.level {
                r.row(vec![
                    l.to_string(),
                    rq.basis(l).len().to_string(),
                    rq.quotient_dimension(l).to_string(),
                    rq.kernel_dimension(l).to_string(),
                ]);
            }
            let kernel = rq.kernel(b.level);
            r.list("kernel", kernel.iter().map(|v| render_vector(&m, v)).collect());
            r.finish(true, format!("kernel dimension {} at level {}", kernel.len(), b.level));
        }
        Command::HcSuite => {
            let m = need_module(cfg, flaw)?;
            let ModuleHandle::Verma(v) = &m else {
                return Err(field_error("module", "must be a verma module for hc-suite"));
            };
            let Some(f) = &cfg.f else {
                return Err(field_error("f", "is required for hc-suite"));
            };
            let f = poly("f", v.arity(), f)?;
            let rep = hc_criterion_suite(v, &f, b.level).map_err(analysis)?;
            r.field("f", f.to_string());
            r.field("forward_applies", rep.forward_applies);
            r.columns(&["check", "name", "level", "expected", "observed", "pass"]);
            for c in &rep.identities {
                r.row(vec![
                    "identity".into(),
                    c.name.into(),
                    "-".into(),
                    c.expected.to_exact_string(),
                    render_vector(v, &c.lhs),
                    c.pass.to_string(),
                ]);
            }
            for (kind, list) in [("membership", &rep.memberships), ("control", &rep.controls)] {
                for c in list {
                    r.row(vec![
                        kind.into(),
                        c.vector.clone(),
                        c.level.to_string(),
                        c.expected.to_string(),
                        c.member.to_string(),
                        c.pass().to_string(),
                    ]);
                }
            }
            let failures = rep.identities.iter().filter(|c| !c.pass).count()
                + rep.memberships.iter().chain(&rep.controls).filter(|c| !c.pass()).count();
            r.finish(rep.passed(), format!("{failures} failures"));
        }
        Command::Invariants => {
            let m = need_module(cfg, flaw)?;
            let ModuleHandle::Omega(o) = &m else {
                return Err(field_error("module", "must be an omega module for invariants"));
            };
            let inv = omega_invariants(o).map_err(analysis)?;
            r.field("lambda", exact(&inv.lambda));
            r.field("alpha", exact(&inv.alpha));
            r.field("mu", Value::Array(inv.mu.iter().map(exact).collect()));
            r.field("beta", exact(&inv.beta));
            let pass = match &cfg.module {
                Some(ModuleSpec::Omega { lambda, alpha, mu, beta }) => {
                    let given = [("lambda", lambda), ("alpha", alpha), ("beta", beta)];
                    let read = [&inv.lambda, &inv.alpha, &inv.beta];
                    let mut ok = mu.len() == inv.mu.len();
                    for ((name, s), x) in given.into_iter().zip(read) {
                        ok &= scalar(name, s)? == *x;
                    }
                    for (i, (s, x)) in mu.iter().zip(&inv.mu).enumerate() {
                        ok &= scalar(&format!("mu[{i}]"), s)? == *x;
                    }
                    ok
                }
                _ => false,
            };
            r.finish(pass, if pass { "parameters recovered" } else { "parameters differ" }.to_string());
        }
        Command::Annihilator => {
            let m = need_module(cfg, flaw)?;
            let gens = match &cfg.generators {
                Some(gs) => gs
                    .iter()
                    .enumerate()
                    .map(|(i, g)| poly(&format!("generators[{i}]"), m.arity(), g))
                    .collect::<Result<Vec<_>, _>>()?,
                None => default_generators(&m)?,
            };
            let rep = annihilator_probe(&m, &gens, b.index, b.window).map_err(analysis)?;
            r.columns(&["generator", "annihilates"]);
            for e in &rep.entries {
                r.row(vec![e.poly.to_string(), e.annihilates.to_string()]);
            }
            let n = rep.entries.iter().filter(|e| e.annihilates).count();
            r.finish(true, format!("{n} of {} annihilate", rep.entries.len()));
        }
    }
    Ok(r)
}

/// Generators of `𝔪^s` and `𝔪^{s-1}` for a single-point quotient of order `s`.
fn default_generators(m: &ModuleHandle<Scalar>) -> Result<Vec<PolyB<Scalar>>, ConfigError> {
    let missing = || field_error("generators", "must be given unless the module is an evaluation or one-point verma module");
    let q = match m {
        ModuleHandle::Evaluation(e) => EvaluationSpec::jet(e).clone(),
        ModuleHandle::Verma(v) if v.quotient_algebra().components().len() == 1 => v.quotient_algebra().components()[0].clone(),
        _ => return Err(missing()),
    };
    let s = q.order();
    let mut out = power_generators(q.point(), s).map_err(analysis)?;
    out.extend(power_generators(q.point(), s - 1).map_err(analysis)?);
    Ok(out)
}
