//! Finite-dimensional representations of quivers with quadratic relations
//! over GF(p): morphism spaces, first extension groups as cocycles modulo
//! coboundaries, middle terms, push/pull of classes and, for path algebras,
//! the Auslander–Reiten translate.

mod ar;
mod ext;
mod rep;

pub use ar::Presentation;
pub use ext::{ExtClass, ExtSpace, Extension};
pub use rep::{Morphism, Representation, SubQuotient};

use exactlin::{FMatrix, LinError, PrimeField, Subspace};
use quiver_core::{Quiver, QuiverError, QuiverInfo};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("dimension vector has length {got}, expected {expected}")]
    DimLength { expected: usize, got: usize },
    #[error("matrix for arrow `{arrow}` has shape {got:?}, expected {expected:?}")]
    Shape { arrow: String, expected: (usize, usize), got: (usize, usize) },
    #[error("unknown arrow `{0}` in representation")]
    UnknownArrow(String),
    #[error("relation {0} does not vanish")]
    RelationViolated(usize),
    #[error("subspace family is not invariant under arrow `{0}`")]
    NotInvariant(String),
    #[error("endpoint mismatch: {0}")]
    Endpoint(String),
    #[error("operation requires a hereditary (acyclic, relation-free) quiver")]
    NotHereditary,
    #[error("invalid representation data: {0}")]
    Invalid(String),
}

/// A quiver with relations together with the ground field GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    quiver: Quiver,
    field: PrimeField,
    info: QuiverInfo,
    cap: u64,
}

impl Algebra {
    pub fn new(quiver: Quiver, p: u32) -> Result<Self, RepError> {
        let info = quiver.validate()?;
        let field = PrimeField::new(p)?;
        Ok(Self { quiver, field, info, cap: exactlin::DEFAULT_CAP })
    }

    /// Replaces the enumeration cap used by exhaustive searches.
    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn is_hereditary(&self) -> bool {
        self.info.acyclic && !self.quiver.has_relations()
    }

    pub(crate) fn require_hereditary(&self) -> Result<(), RepError> {
        if self.is_hereditary() {
            Ok(())
        } else {
            Err(RepError::NotHereditary)
        }
    }

    /// `p^e`, checked against the enumeration cap.
    pub(crate) fn count_pow(&self, e: usize) -> Result<u64, RepError> {
        let mut n: u128 = 1;
        for _ in 0..e {
            n *= self.p() as u128;
            if n > self.cap as u128 {
                return Err(LinError::CapExceeded { requested: n, cap: self.cap }.into());
            }
        }
        Ok(n as u64)
    }
}

/// Matrix of the linear map `f` from GF(p)^nvars to GF(p)^nout, built by
/// evaluating `f` on the standard basis.
pub(crate) fn matrix_of(
    field: PrimeField,
    nvars: usize,
    nout: usize,
    f: impl Fn(&[u32]) -> Vec<u32>,
) -> FMatrix {
    let cols: Vec<Vec<u32>> = (0..nvars)
        .map(|k| {
            let mut e = vec![0u32; nvars];
            e[k] = 1;
            let out = f(&e);
            debug_assert_eq!(out.len(), nout);
            out
        })
        .collect();
    if nvars == 0 {
        return FMatrix::zeros(field, nout, 0);
    }
    FMatrix::from_columns(field, nout, &cols)
}

/// Column span of a matrix.
pub(crate) fn column_space(m: &FMatrix) -> Subspace {
    Subspace::row_space(&m.transpose())
}

/// Flattened row-major entries of several matrices.
pub(crate) fn flatten(ms: &[FMatrix]) -> Vec<u32> {
    ms.iter().flat_map(|m| m.data().iter().copied()).collect()
}

/// Splits a flat vector into matrices of the given shapes.
pub(crate) fn unflatten(field: PrimeField, v: &[u32], shapes: &[(usize, usize)]) -> Vec<FMatrix> {
    let mut out = Vec::with_capacity(shapes.len());
    let mut off = 0;
    for &(r, c) in shapes {
        let data: Vec<i64> = v[off..off + r * c].iter().map(|&x| x as i64).collect();
        out.push(FMatrix::from_data(field, r, c, &data));
        off += r * c;
    }
    assert_eq!(off, v.len());
    out
}

/// Odometer over all vectors in GF(p)^len, lexicographic, starting at zero.
pub(crate) fn next_vector(v: &mut [u32], p: u32) -> bool {
    for x in v.iter_mut().rev() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}
