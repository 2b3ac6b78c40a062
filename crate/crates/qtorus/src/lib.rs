//! The quantum torus: skew polynomials `Σ c_e X^e` over `Z[v, v⁻¹]` with the
//! product `X^e · X^f = v^{eᵀΛf} X^{e+f}` for a skew-symmetric integer `Λ`.
//!
//! Here `v` stands for the square root of the field size, kept formal so that
//! half-power bookkeeping stays exact. [`SqrtP`] evaluates at `v = √p` when a
//! numeric comparison is wanted.

mod laurent;
mod skew;
mod sqrtp;

pub use laurent::VLaurent;
pub use skew::{solve_two_term, Coefficient, SkewPoly, TwoTermSolution};
pub use sqrtp::SqrtP;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QtError {
    #[error("skew polynomials carry different Λ matrices")]
    LambdaMismatch,
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    #[error("Λ is not a skew-symmetric square matrix")]
    BadLambda,
}
