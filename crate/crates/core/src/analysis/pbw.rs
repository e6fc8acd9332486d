//! Level and kernel dimensions under two PBW orders.

use super::singular::{RaisingQuotients, RaisingSet};
use super::weights::weight_table;
use super::AnalysisError;
use crate::field::Field;
use crate::modules::TruncatedVerma;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwSpotcheck {
    pub levels: usize,
    /// Weight-space dimensions for levels `0..=levels`, one list per module.
    pub level_dims: [Vec<usize>; 2],
    pub kernel_dims: [Vec<usize>; 2],
    pub pass: bool,
}

const MAX_SPOTCHECK_LEVEL: usize = 3;

fn dims<F: Field>(m: &TruncatedVerma<F>, levels: usize) -> Result<(Vec<usize>, Vec<usize>), AnalysisError> {
    let weights = weight_table(m, levels)?.into_iter().map(|(_, n)| n).collect();
    let rq = RaisingQuotients::build(m, levels, RaisingSet::Generators)?;
    Ok((weights, (0..=levels).map(|l| rq.kernel_dimension(l)).collect()))
}

/// Compares `a` and `b`, normally one module in two PBW orders. Both must
/// share the quotient and the functional.
pub fn pbw_order_spotcheck<F: Field>(
    a: &TruncatedVerma<F>,
    b: &TruncatedVerma<F>,
    levels: usize,
) -> Result<PbwSpotcheck, AnalysisError> {
    if levels > MAX_SPOTCHECK_LEVEL || levels > a.truncation() || levels > b.truncation() {
        return Err(AnalysisError::Bounds(format!(
            "spotcheck levels must be at most {MAX_SPOTCHECK_LEVEL} and within both truncations"
        )));
    }
    if a.quotient_algebra() != b.quotient_algebra() || a.phi() != b.phi() {
        return Err(AnalysisError::Unsupported("spotcheck needs the same quotient and functional".into()));
    }
    let (wa, ka) = dims(a, levels)?;
    let (wb, kb) = dims(b, levels)?;
    let pass = wa == wb && ka == kb;
    Ok(PbwSpotcheck { levels, level_dims: [wa, wb], kernel_dims: [ka, kb], pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuotientAlgebra;
    use crate::field::{q, Rational};
    use crate::flaw::Flaw;
    use crate::modules::{HighestWeightFunctional, PbwOrder};
    use crate::poly::{JetQuotient, PointB};

    type F = Rational;

    fn over_c(phi: HighestWeightFunctional<F>) -> TruncatedVerma<F> {
        let qa = QuotientAlgebra::single(JetQuotient::evaluation(PointB::origin(0)));
        TruncatedVerma::new(qa, phi, 3).unwrap()
    }

    #[test]
    fn reversed_order_agrees() {
        let m = over_c(HighestWeightFunctional::zero());
        let r = pbw_order_spotcheck(&m, &m.clone().with_order(PbwOrder::Reversed), 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.level_dims[0], vec![1, 2, 5]);
        assert!(pbw_order_spotcheck(&m, &m, 2).unwrap().pass);
    }

    #[test]
    fn dropped_central_term_is_detected() {
        let m = over_c(HighestWeightFunctional::on_hv(q(0, 1), q(0, 1), q(1, 1), q(0, 1), q(0, 1)));
        let bad = m.clone().with_order(PbwOrder::Reversed).with_flaw(Flaw::DroppedStraighteningCentral);
        assert!(!pbw_order_spotcheck(&m, &bad, 3).unwrap().pass);
    }
}
