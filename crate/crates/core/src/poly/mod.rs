//! Coefficient rings: `C[t]`, `B = C[b_1, ..., b_k]` and its jet quotients.

mod jet;
mod polyb;
mod polyt;

pub use jet::{Jet, JetQuotient};
pub use polyb::{poly_eval, Monomial, PointB, PolyB};
pub use polyt::PolyT;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("jet quotient order must be positive")]
    ZeroOrder,
}
