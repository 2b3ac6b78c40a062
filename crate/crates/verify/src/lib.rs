//! Checkers that compute both sides of each multiplication formula through
//! separate code paths and compare them exactly.
//!
//! Every checker returns a [`VerificationReport`]; reports serialise to
//! canonical JSON and a run's digest hashes those documents without their
//! timing field.

mod abelian;
mod fiber;
mod hereditary;
mod report;

pub use abelian::{
    check_maintheorem1, check_onedim_delta, check_pointwise_balance, check_scaling_invariance, AbelianPair,
};
pub use fiber::{check_fiber_law, hand_fiber_instances, random_fiber_instances, FiberInstance};
pub use hereditary::{check_exchange_hereditary, check_exponent_identity, ExchangeTriple};
pub use report::{digest, Verdict, VerificationReport};

use character::CharError;
use repcat::RepError;
use submod_geometry::GeomError;
use thiserror::Error;
use weightlib::WeightError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Rep(#[from] RepError),
}
