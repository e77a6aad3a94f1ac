use super::banded::BandedOp;
use crate::numcore::Poly;
use crate::scalar::Scalar;

/// Outcome of comparing two operators column by column.
#[derive(Debug, Clone, PartialEq)]
pub struct OpIdentityReport<T> {
    pub holds: bool,
    /// Image of `x^n` under `lhs - rhs` for `n = 0..=safe_degree`.
    pub residual: Vec<Poly<T>>,
    pub safe_degree: usize,
    /// Lowest monomial with a nonzero residual.
    pub first_failure: Option<usize>,
}

pub fn op_equal<T: Scalar>(lhs: &BandedOp<T>, rhs: &BandedOp<T>) -> OpIdentityReport<T> {
    let diff = lhs.sub(rhs);
    let residual = diff.columns().to_vec();
    let first_failure = residual.iter().position(|c| !c.is_zero());
    OpIdentityReport {
        holds: first_failure.is_none(),
        residual,
        safe_degree: diff.safe_degree(),
        first_failure,
    }
}
