//! Run configuration: one JSON document per run, scalars as exact strings.

use std::fmt;

use hv_core::algebra::{BasisTerm, Generator, JetBasis, QuotientAlgebra};
use hv_core::field::Field;
use hv_core::modules::{EvaluationSpec, HighestWeightFunctional, IntermediateSeries, ModuleHandle, OmegaModule, TruncatedVerma};
use hv_core::poly::{JetQuotient, Monomial, PointB, PolyB};
use hv_core::{Flaw, Scalar};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("config: {0}")]
    Syntax(String),
    /// Renders as `<field> <reason>`, e.g. `lambda must be nonzero`.
    #[error("{field} {reason}")]
    Field { field: String, reason: String },
}

pub(crate) fn field_error(field: impl Into<String>, reason: impl fmt::Display) -> ConfigError {
    ConfigError::Field { field: field.into(), reason: reason.to_string() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
    pub command: Command,
    #[serde(default)]
    pub bounds: Bounds,
    /// The polynomial `f` for `hc-suite`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<TermSpec>>,
    /// Polynomials tested by `annihilator`; defaults to powers of the maximal ideal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<TermSpec>>>,
    /// Number of variables for `jacobi-sweep` when no module is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raising: Option<Raising>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flaw: Option<FlawSpec>,
    #[serde(default)]
    pub output: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CheckAxioms,
    Weights,
    ProbeIrreducible,
    SingularVectors,
    HcSuite,
    Invariants,
    Annihilator,
    JacobiSweep,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckAxioms => "check-axioms",
            Command::Weights => "weights",
            Command::ProbeIrreducible => "probe-irreducible",
            Command::SingularVectors => "singular-vectors",
            Command::HcSuite => "hc-suite",
            Command::Invariants => "invariants",
            Command::Annihilator => "annihilator",
            Command::JacobiSweep => "jacobi-sweep",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Bounds {
    pub index: i64,
    pub monomial: u32,
    pub window: usize,
    pub level: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { index: 5, monomial: 2, window: 6, level: 4 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Raising {
    Generators,
    AllWords,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlawSpec {
    CentralCocycle,
    DroppedCdTerm,
    OmegaLambdaExponent,
    DroppedStraighteningCentral,
}

impl From<FlawSpec> for Flaw {
    fn from(f: FlawSpec) -> Self {
        match f {
            FlawSpec::CentralCocycle => Flaw::CentralCocycle,
            FlawSpec::DroppedCdTerm => Flaw::DroppedCdTerm,
            FlawSpec::OmegaLambdaExponent => Flaw::OmegaLambdaExponent,
            FlawSpec::DroppedStraighteningCentral => Flaw::DroppedStraighteningCentral,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum ModuleSpec {
    Intermediate {
        alpha: String,
        beta: String,
        #[serde(rename = "F")]
        f: String,
        /// The `V'` variant, defined for `α ∈ Z`, `β = 0`, `F = 0`.
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        prime: bool,
    },
    Omega {
        lambda: String,
        alpha: String,
        mu: Vec<String>,
        beta: String,
    },
    Evaluation {
        point: Vec<String>,
        order: u32,
        inner: InnerSpec,
    },
    Verma {
        quotient: Vec<JetSpec>,
        #[serde(default)]
        phi: Vec<PhiEntry>,
        max_level: usize,
    },
    Tensor {
        left: Box<ModuleSpec>,
        right: Box<ModuleSpec>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InnerSpec {
    Series {
        alpha: String,
        beta: String,
        #[serde(rename = "F")]
        f: String,
    },
    HighestWeight {
        #[serde(default)]
        phi: Vec<PhiEntry>,
        max_level: usize,
    },
}

/// One factor `B/𝔪_μ^order` of a quotient algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JetSpec {
    pub point: Vec<String>,
    pub order: u32,
}

/// `φ(gen ⊗ (b - μ)^exp)` on quotient component `component`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiEntry {
    pub gen: String,
    #[serde(default)]
    pub component: usize,
    /// Empty means the unit.
    #[serde(default)]
    pub exp: Vec<u32>,
    pub value: String,
}

/// `coeff * b^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exp: Vec<u32>,
    pub coeff: String,
}

pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    serde_json::from_str(text).map_err(|e| ConfigError::Syntax(e.to_string()))
}

pub fn scalar(field: &str, s: &str) -> Result<Scalar, ConfigError> {
    Scalar::parse_exact(s).map_err(|_| field_error(field, format!("must be an exact scalar, got `{s}`")))
}

fn canonical(field: &str, s: &str) -> Result<String, ConfigError> {
    Ok(scalar(field, s)?.to_exact_string())
}

fn join(prefix: &str, field: &str) -> String {
    if prefix.is_empty() {
        field.to_string()
    } else {
        format!("{prefix}.{field}")
    }
}

fn canonical_all(field: &str, xs: &[String]) -> Result<Vec<String>, ConfigError> {
    xs.iter().enumerate().map(|(i, x)| canonical(&format!("{field}[{i}]"), x)).collect()
}

fn normalize_phi(prefix: &str, phi: &[PhiEntry]) -> Result<Vec<PhiEntry>, ConfigError> {
    phi.iter()
        .enumerate()
        .map(|(i, e)| {
            let at = format!("{}[{i}]", join(prefix, "phi"));
            Ok(PhiEntry {
                gen: generator(&format!("{at}.gen"), &e.gen)?.to_string(),
                component: e.component,
                exp: e.exp.clone(),
                value: canonical(&format!("{at}.value"), &e.value)?,
            })
        })
        .collect()
}

fn normalize_terms(field: &str, terms: &[TermSpec]) -> Result<Vec<TermSpec>, ConfigError> {
    terms
        .iter()
        .enumerate()
        .map(|(i, t)| Ok(TermSpec { exp: t.exp.clone(), coeff: canonical(&format!("{field}[{i}].coeff"), &t.coeff)? }))
        .collect()
}

impl ModuleSpec {
    fn normalized(&self, prefix: &str) -> Result<Self, ConfigError> {
        let c = |f: &str, s: &str| canonical(&join(prefix, f), s);
        Ok(match self {
            ModuleSpec::Intermediate { alpha, beta, f, prime } => ModuleSpec::Intermediate {
                alpha: c("alpha", alpha)?,
                beta: c("beta", beta)?,
                f: c("F", f)?,
                prime: *prime,
            },
            ModuleSpec::Omega { lambda, alpha, mu, beta } => ModuleSpec::Omega {
                lambda: c("lambda", lambda)?,
                alpha: c("alpha", alpha)?,
                mu: canonical_all(&join(prefix, "mu"), mu)?,
                beta: c("beta", beta)?,
            },
            ModuleSpec::Evaluation { point, order, inner } => ModuleSpec::Evaluation {
                point: canonical_all(&join(prefix, "point"), point)?,
                order: *order,
                inner: match inner {
                    InnerSpec::Series { alpha, beta, f } => InnerSpec::Series {
                        alpha: c("inner.alpha", alpha)?,
                        beta: c("inner.beta", beta)?,
                        f: c("inner.F", f)?,
                    },
                    InnerSpec::HighestWeight { phi, max_level } => InnerSpec::HighestWeight {
                        phi: normalize_phi(&join(prefix, "inner"), phi)?,
                        max_level: *max_level,
                    },
                },
            },
            ModuleSpec::Verma { quotient, phi, max_level } => ModuleSpec::Verma {
                quotient: quotient
                    .iter()
                    .enumerate()
                    .map(|(i, j)| {
                        Ok(JetSpec {
                            point: canonical_all(&format!("{}[{i}].point", join(prefix, "quotient")), &j.point)?,
                            order: j.order,
                        })
                    })
                    .collect::<Result<_, ConfigError>>()?,
                phi: normalize_phi(prefix, phi)?,
                max_level: *max_level,
            },
            ModuleSpec::Tensor { left, right } => ModuleSpec::Tensor {
                left: Box::new(left.normalized(&join(prefix, "left"))?),
                right: Box::new(right.normalized(&join(prefix, "right"))?),
            },
        })
    }
}

impl RunConfig {
    /// The same configuration with canonical scalar and generator spellings.
    pub fn normalized(&self) -> Result<Self, ConfigError> {
        Ok(Self {
            module: self.module.as_ref().map(|m| m.normalized("")).transpose()?,
            f: self.f.as_ref().map(|f| normalize_terms("f", f)).transpose()?,
            generators: self
                .generators
                .as_ref()
                .map(|gs| {
                    gs.iter()
                        .enumerate()
                        .map(|(i, g)| normalize_terms(&format!("generators[{i}]"), g))
                        .collect::<Result<Vec<_>, _>>()
                })
                .transpose()?,
            ..self.clone()
        })
    }
}

pub fn generator(field: &str, s: &str) -> Result<Generator, ConfigError> {
    s.parse().map_err(|_| field_error(field, format!("must name a generator such as d(0), I(0), C, C_D or C_I, got `{s}`")))
}

fn point(field: &str, xs: &[String]) -> Result<PointB<Scalar>, ConfigError> {
    let coords = xs.iter().enumerate().map(|(i, x)| scalar(&format!("{field}[{i}]"), x)).collect::<Result<_, _>>()?;
    Ok(PointB::new(coords))
}

fn jet(prefix: &str, pt: &[String], order: u32) -> Result<JetQuotient<Scalar>, ConfigError> {
    if order == 0 {
        return Err(field_error(join(prefix, "order"), "must be at least 1"));
    }
    JetQuotient::new(point(&join(prefix, "point"), pt)?, order).map_err(|e| field_error(join(prefix, "order"), e))
}

fn functional(
    prefix: &str,
    quotient: &QuotientAlgebra<Scalar>,
    phi: &[PhiEntry],
) -> Result<HighestWeightFunctional<Scalar>, ConfigError> {
    let mut entries = Vec::with_capacity(phi.len());
    for (i, e) in phi.iter().enumerate() {
        let at = format!("{}[{i}]", join(prefix, "phi"));
        let Some(q) = quotient.components().get(e.component) else {
            return Err(field_error(format!("{at}.component"), format!("must be below {}", quotient.components().len())));
        };
        let gen = generator(&format!("{at}.gen"), &e.gen)?;
        let exp = if e.exp.is_empty() { Monomial::one(q.arity()) } else { Monomial::new(e.exp.iter().copied()) };
        if exp.arity() != q.arity() || q.index_of(&exp).is_none() {
            return Err(field_error(format!("{at}.exp"), "must be a basis exponent of its quotient component"));
        }
        entries.push((BasisTerm::new(gen, JetBasis::new(e.component, exp)), scalar(&format!("{at}.value"), &e.value)?));
    }
    HighestWeightFunctional::new(entries).map_err(|e| field_error(join(prefix, "phi"), e))
}

fn verma(
    prefix: &str,
    quotient: QuotientAlgebra<Scalar>,
    phi: &[PhiEntry],
    max_level: usize,
    flaw: Option<Flaw>,
) -> Result<TruncatedVerma<Scalar>, ConfigError> {
    if max_level == 0 {
        return Err(field_error(join(prefix, "max_level"), "must be at least 1"));
    }
    let phi = functional(prefix, &quotient, phi)?;
    let m = TruncatedVerma::new(quotient, phi, max_level).map_err(|e| field_error(join(prefix, "phi"), e))?;
    Ok(match flaw {
        Some(f @ Flaw::DroppedStraighteningCentral) => m.with_flaw(f),
        _ => m,
    })
}

impl ModuleSpec {
    /// Builds the module; `flaw` is applied to the families it affects.
    pub fn build(&self, flaw: Option<Flaw>) -> Result<ModuleHandle<Scalar>, ConfigError> {
        self.build_at("", flaw)
    }

    fn build_at(&self, prefix: &str, flaw: Option<Flaw>) -> Result<ModuleHandle<Scalar>, ConfigError> {
        let s = |f: &str, v: &str| scalar(&join(prefix, f), v);
        Ok(match self {
            ModuleSpec::Intermediate { alpha, beta, f, prime } => {
                let (a, b, f) = (s("alpha", alpha)?, s("beta", beta)?, s("F", f)?);
                if *prime {
                    let m = IntermediateSeries::prime(a, b, f).map_err(|e| field_error(join(prefix, "prime"), e))?;
                    ModuleHandle::Intermediate(m)
                } else {
                    ModuleHandle::Intermediate(IntermediateSeries::new(a, b, f))
                }
            }
            ModuleSpec::Omega { lambda, alpha, mu, beta } => {
                let l = s("lambda", lambda)?;
                if l.is_zero() {
                    return Err(field_error(join(prefix, "lambda"), "must be nonzero"));
                }
                let m = OmegaModule::new(l, s("alpha", alpha)?, point(&join(prefix, "mu"), mu)?, s("beta", beta)?)
                    .map_err(|e| field_error(join(prefix, "lambda"), e))?;
                ModuleHandle::Omega(match flaw {
                    Some(f @ Flaw::OmegaLambdaExponent) => m.with_flaw(f),
                    _ => m,
                })
            }
            ModuleSpec::Evaluation { point: pt, order, inner } => {
                let jq = jet(prefix, pt, *order)?;
                let inner_at = join(prefix, "inner");
                ModuleHandle::Evaluation(match inner {
                    InnerSpec::Series { alpha, beta, f } => {
                        let t = |n: &str, v: &str| scalar(&join(&inner_at, n), v);
                        EvaluationSpec::series(jq, IntermediateSeries::new(t("alpha", alpha)?, t("beta", beta)?, t("F", f)?))
                    }
                    InnerSpec::HighestWeight { phi, max_level } => {
                        if *max_level == 0 {
                            return Err(field_error(join(&inner_at, "max_level"), "must be at least 1"));
                        }
                        let qa = QuotientAlgebra::single(jq.clone());
                        let phi = functional(&inner_at, &qa, phi)?;
                        EvaluationSpec::highest_weight(jq, phi, *max_level).map_err(|e| field_error(inner_at, e))?
                    }
                })
            }
            ModuleSpec::Verma { quotient, phi, max_level } => {
                if quotient.is_empty() {
                    return Err(field_error(join(prefix, "quotient"), "must have at least one component"));
                }
                let comps = quotient
                    .iter()
                    .enumerate()
                    .map(|(i, j)| jet(&format!("{}[{i}]", join(prefix, "quotient")), &j.point, j.order))
                    .collect::<Result<Vec<_>, _>>()?;
                let qa = QuotientAlgebra::new(comps).map_err(|e| field_error(join(prefix, "quotient"), e))?;
                ModuleHandle::Verma(verma(prefix, qa, phi, *max_level, flaw)?)
            }
            ModuleSpec::Tensor { left, right } => {
                let l = left.build_at(&join(prefix, "left"), flaw)?;
                let r = right.build_at(&join(prefix, "right"), flaw)?;
                ModuleHandle::tensor(l, r).map_err(|e| field_error(join(prefix, "right"), e))?
            }
        })
    }
}

pub fn poly(field: &str, k: usize, terms: &[TermSpec]) -> Result<PolyB<Scalar>, ConfigError> {
    let mut out = Vec::with_capacity(terms.len());
    for (i, t) in terms.iter().enumerate() {
        if t.exp.len() != k {
            return Err(field_error(format!("{field}[{i}].exp"), format!("must have {k} entries")));
        }
        out.push((Monomial::new(t.exp.iter().copied()), scalar(&format!("{field}[{i}].coeff"), &t.coeff)?));
    }
    PolyB::from_terms(k, out).map_err(|e| field_error(field, e))
}
