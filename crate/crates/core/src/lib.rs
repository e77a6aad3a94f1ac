//! Little −1 Jacobi polynomials and their Dunkl-type operator calculus.

pub mod awalgebra;
pub mod eigensolver;
pub mod error;
pub mod numcore;
pub mod littlejacobi;
pub mod opcalc;
pub mod quadrature;
pub mod report;
pub mod scalar;
pub mod susyqm;
pub mod transforms;

pub use error::{Error, Result};
pub use report::CheckReport;
pub use scalar::{parse_rational, rat, Rational, Scalar};

/// Exact polynomial over the rationals.
pub type RatPoly = numcore::Poly<Rational>;
/// Exact banded operator over the rationals.
pub type RatOp = opcalc::BandedOp<Rational>;
