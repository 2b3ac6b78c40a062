//! Exact arithmetic over GF(p) with dense matrices, canonical subspaces and
//! exhaustive subspace enumeration.

mod field;
mod matrix;
mod subspace;

pub use field::{is_prime, PrimeField};
pub use matrix::{FMatrix, Solution};
pub use subspace::{
    enumerate_subspaces, gaussian_binomial, subspaces_between, Subspace, DEFAULT_CAP,
};

use thiserror::Error;

/// Errors raised by the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("enumeration of {requested} items exceeds cap {cap}")]
    CapExceeded { requested: u128, cap: u64 },
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
}
