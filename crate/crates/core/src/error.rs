use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the domain where the family or operator is defined.
    #[error("parameter domain: {0}")]
    Domain(String),

    /// An operator was applied to a polynomial above its exact range.
    #[error("degree {degree} exceeds the exact range of the operator (safe degree {safe_degree})")]
    Truncation { degree: usize, safe_degree: usize },

    /// A moment index above the stored moment sequence was requested.
    #[error("moment c_{index} requested but only c_0..c_{available} are stored")]
    MomentOverflow { index: usize, available: usize },

    /// Evaluation point outside the region where the formula converges.
    #[error("argument {0} outside the admissible region")]
    OutOfRange(f64),

    /// A Christoffel kernel point is a zero of the polynomial being transformed.
    #[error("kernel point is a zero of S_{0}")]
    KernelPoint(usize),

    #[error("near-singular denominator {0:e}")]
    NearSingular(f64),

    /// An anticommutator residual is not a scalar multiple of the identity.
    #[error("algebra relation {relation} is violated: residual is not a scalar operator")]
    AlgebraViolation { relation: &'static str },

    /// An internal identity that must hold by construction did not.
    #[error("internal consistency: {0}")]
    Consistency(String),

    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
