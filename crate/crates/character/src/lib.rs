//! Characters of representations and of cluster-category objects over a
//! hereditary quiver: flag counts `δ_L`, the skew-polynomial characters
//! `X_L` and `X̃_L`, index, coindex and the exponent map `p(L, g)`.

mod delta;
mod object;
mod skewchar;

pub use delta::{delta_eval, weighted_delta_eval};
pub use object::ClusterObject;
pub use skewchar::{cone_data, ConeData, Characters, ExponentSides};

use qtorus::QtError;
use quiver_core::{LambdaError, QuiverError};
use repcat::RepError;
use submod_geometry::GeomError;
use thiserror::Error;
use weightlib::WeightError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Torus(#[from] QtError),
    #[error(transparent)]
    Lambda(#[from] LambdaError),
    #[error("the middle term of the class is not isomorphic to the given module")]
    NotMiddleTerm,
    #[error("dimension vector {0:?} exceeds the module")]
    BadDimension(Vec<usize>),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
