//! Weight functions: named half-integer valued functions on pairs of chains
//! or pairs of submodules, their pointwise composition, and evaluation.
//!
//! Values are stored as integer counts of half-units, so `Half(1)` is `1/2`
//! and `Half(2)` is `1`. A weight `w` enters a character as `q^w = v^{2w}`,
//! so its half-unit count is directly a `v`-exponent.

mod chains;
mod expr;
mod submods;

pub use chains::{ChainCtx, Orthogonality};
pub use expr::{WeightExpr, WeightName};
pub use submods::{ExponentData, SubCtx};

use repcat::RepError;
use serde::{Deserialize, Serialize};
use std::fmt;
use submod_geometry::GeomError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("weight `{0}` needs exponent data")]
    MissingExponents(String),
    #[error("weight `{weight}` is not defined on {domain} arguments")]
    WrongDomain { weight: String, domain: &'static str },
    #[error("user table has no entry for key `{0}`")]
    MissingKey(String),
    #[error("unknown weight name `{0}`")]
    UnknownName(String),
    #[error("invalid user table: {0}")]
    BadTable(String),
}

/// An integer count of half-units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Half(pub i64);

impl Half {
    pub fn from_int(k: i64) -> Self {
        Half(2 * k)
    }

    /// Exponent of `v` in `q^w` when `q = v²`, which is the half-unit count.
    pub fn v_exponent(self) -> i64 {
        self.0
    }
}

impl std::ops::Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl std::ops::Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
