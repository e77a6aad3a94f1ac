//! Exact scalar and polynomial substrate.

mod hypergeometric;
mod poly;

pub use hypergeometric::{pochhammer, terminating_2f1};
pub use poly::{Degree, ParityPair, Poly};
