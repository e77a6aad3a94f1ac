use std::collections::BTreeMap;

use serde::Serialize;

use crate::numcore::Poly;
use crate::scalar::Rational;

/// Result of an exact polynomial identity check.
///
/// Serializes as `{check, params, n, holds, first_mismatch_degree, lhs, rhs}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub n: usize,
    pub holds: bool,
    pub first_mismatch_degree: Option<usize>,
    pub lhs: Poly<Rational>,
    pub rhs: Poly<Rational>,
}

impl CheckReport {
    pub fn compare(
        check: impl Into<String>,
        params: &[(&str, &Rational)],
        n: usize,
        lhs: Poly<Rational>,
        rhs: Poly<Rational>,
    ) -> Self {
        let first_mismatch_degree = lhs.first_mismatch(&rhs);
        Self {
            check: check.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            n,
            holds: first_mismatch_degree.is_none(),
            first_mismatch_degree,
            lhs,
            rhs,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
