//! Geometry of submodules over GF(p): quiver Grassmannians, refined fibers
//! of extension middle terms, and chains of submodules with simple or zero
//! subquotients of a prescribed type.
//!
//! Every enumeration is exhaustive and returns its results in a canonical
//! order, so counts and listings are reproducible.

mod chain;
mod flag;
mod series;
mod submodules;

pub use chain::{
    chain_image, chains_of_type, compatible_dim, grouped_images, k_rank, phi_fiber,
    phi_fiber_nonempty, subspace_key, Chain,
};
pub use flag::FlagType;
pub use series::{refined_socle_top, Mode, Series};
pub use submodules::{
    all_submodules, grassmannian_count, psi_image, refined_fiber, submodules_between,
    submodules_of_dim,
};

use exactlin::{LinError, Subspace};
use repcat::RepError;
use thiserror::Error;

/// A vertexwise family of subspaces, index `v - 1` for vertex `v`.
pub type Family = Vec<Subspace>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("fiber count {count} is not a power of {p}")]
    NotPrimePower { count: u64, p: u32 },
    #[error("chain types do not combine: {0}")]
    TypeMismatch(String),
    #[error("invalid flag type: {0}")]
    InvalidFlag(String),
}

/// `log_p(count)` when `count` is a power of `p`.
pub fn log_p(count: u64, p: u32) -> Option<u32> {
    if count == 0 {
        return None;
    }
    let (mut c, mut e) = (count, 0);
    while c % p as u64 == 0 {
        c /= p as u64;
        e += 1;
    }
    (c == 1).then_some(e)
}

/// [`log_p`], failing loudly when `count` is not a power of `p`.
pub fn checked_log_p(count: u64, p: u32) -> Result<u32, GeomError> {
    log_p(count, p).ok_or(GeomError::NotPrimePower { count, p })
}

/// Dimension vector of a family.
pub fn family_dims(f: &[Subspace]) -> Vec<usize> {
    f.iter().map(Subspace::dim).collect()
}
