//! Verification procedures over the module families.

mod annihilator;
mod hc;
mod invariants;
pub mod linalg;
mod pbw;
mod probe;
mod singular;
mod sweep;
mod weights;

pub use annihilator::{annihilator_probe, power_generators, AnnihilatorEntry, AnnihilatorReport};
pub use hc::{hc_criterion_suite, HcReport, IdentityCheck, MembershipCheck};
pub use invariants::{omega_invariants, OmegaInvariants};
pub use pbw::{pbw_order_spotcheck, PbwSpotcheck};
pub use probe::{probe_highest_weight, probe_irreducible, probe_omega, probe_weight_lines, Verdict, Witness, WindowReport};
pub use singular::{contains_by_raising, raising_generators, singular_vectors, RaisingQuotients, RaisingSet};
pub use sweep::{
    acting_terms, axiom_sweep, axiom_sweep_over, jacobi_sweep, jacobi_sweep_over, AxiomReport, JacobiFailure,
    JacobiReport, SweepBounds, Violation,
};
pub use weights::{weight_of, weight_table, WeightTuple};

use thiserror::Error;

use crate::modules::ModuleError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("unsupported module: {0}")]
    Unsupported(String),
    #[error("{0} is not a weight vector")]
    NotWeightVector(String),
    #[error("not an Ω-family action: {0}")]
    NotOmegaAction(String),
    #[error("invalid bounds: {0}")]
    Bounds(String),
}
