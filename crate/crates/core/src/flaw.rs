//! Seeded implementation faults.
//!
//! Each variant reproduces one plausible coding slip. Verification procedures
//! are run against flawed builds to show they actually detect such slips.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flaw {
    /// Virasoro cocycle written as `(n^3 - n^2)/12` instead of `(n^3 - n)/12`.
    CentralCocycle,
    /// The `C_D` term is dropped from the `[d_n, I_m]` rule (the mirrored
    /// `[I_m, d_n]` rule is left intact).
    DroppedCdTerm,
    /// `Ω` modules scale by `λ^{n-|r|+1}` instead of `λ^{n-|r|}`.
    OmegaLambdaExponent,
    /// Verma straightening discards central terms produced by commutators.
    DroppedStraighteningCentral,
}
