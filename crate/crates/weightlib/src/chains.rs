use crate::{Half, WeightError};
use repcat::{Algebra, ExtSpace};
use std::cell::OnceCell;
use submod_geometry::{compatible_dim, k_rank, Chain};

/// Arguments of a chain-pair weight: objects `X`, `Y` with chains `c_X`,
/// `c_Y`, where extensions in `Ext¹(X, Y)` have quotient `X` and sub `Y`.
///
/// For the multiplication formulas: in the sums over
/// `ε ∈ Ext¹(M, N)` take `X = M, Y = N`; in the sums over `η ∈ Ext¹(N, M)`
/// take `X = N, Y = M`.
pub struct ChainCtx<'a> {
    alg: &'a Algebra,
    ext_xy: &'a ExtSpace,
    ext_yx: &'a ExtSpace,
    c_x: &'a Chain,
    c_y: &'a Chain,
    ids: (String, String),
    k_xy: OnceCell<u32>,
    k_yx: OnceCell<u32>,
    compat_xy: OnceCell<u32>,
    compat_yx: OnceCell<u32>,
}

/// Dimensions of the two compatible loci of a chain pair and of the
/// extension group they complement each other in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Orthogonality {
    /// `log_p #{ε ∈ Ext¹(X, Y) : fiber over (c_X, c_Y) nonempty}`.
    pub forward: u32,
    /// `log_p #{η ∈ Ext¹(Y, X) : fiber over (c_Y, c_X) nonempty}`.
    pub backward: u32,
    pub ext_dim: u32,
}

impl Orthogonality {
    pub fn holds(&self) -> bool {
        self.forward + self.backward == self.ext_dim
    }
}

impl<'a> ChainCtx<'a> {
    /// `ext_xy` must be `Ext¹(X, Y)` and `ext_yx` must be `Ext¹(Y, X)`.
    pub fn new(
        alg: &'a Algebra,
        ext_xy: &'a ExtSpace,
        ext_yx: &'a ExtSpace,
        c_x: &'a Chain,
        c_y: &'a Chain,
    ) -> Self {
        debug_assert_eq!(ext_xy.quotient(), ext_yx.sub());
        debug_assert_eq!(ext_xy.sub(), ext_yx.quotient());
        Self {
            alg,
            ext_xy,
            ext_yx,
            c_x,
            c_y,
            ids: ("X".into(), "Y".into()),
            k_xy: OnceCell::new(),
            k_yx: OnceCell::new(),
            compat_xy: OnceCell::new(),
            compat_yx: OnceCell::new(),
        }
    }

    /// Names used in [`ChainCtx::key`].
    pub fn with_ids(mut self, x: &str, y: &str) -> Self {
        self.ids = (x.to_string(), y.to_string());
        self
    }

    /// Canonical argument key: object ids, then both chains.
    pub fn key(&self) -> String {
        format!("{}|{}|{}|{}", self.ids.0, self.ids.1, self.c_x.canonical_key(), self.c_y.canonical_key())
    }

    fn cached(cell: &OnceCell<u32>, f: impl FnOnce() -> Result<u32, WeightError>) -> Result<u32, WeightError> {
        if let Some(&v) = cell.get() {
            return Ok(v);
        }
        let v = f()?;
        Ok(*cell.get_or_init(|| v))
    }

    /// Split-fiber rank `k(c_X, c_Y)` in `Ext¹(X, Y)`.
    pub fn k_forward(&self) -> Result<u32, WeightError> {
        Self::cached(&self.k_xy, || Ok(k_rank(self.alg, self.ext_xy, self.c_x, self.c_y)?))
    }

    /// Split-fiber rank `k(c_Y, c_X)` in `Ext¹(Y, X)`.
    pub fn k_backward(&self) -> Result<u32, WeightError> {
        Self::cached(&self.k_yx, || Ok(k_rank(self.alg, self.ext_yx, self.c_y, self.c_x)?))
    }

    /// Dimension of the compatible classes in `Ext¹(X, Y)`.
    pub fn compat_forward(&self) -> Result<u32, WeightError> {
        Self::cached(&self.compat_xy, || Ok(compatible_dim(self.alg, self.ext_xy, self.c_x, self.c_y)?))
    }

    /// Dimension of the compatible classes in `Ext¹(Y, X)`.
    pub fn compat_backward(&self) -> Result<u32, WeightError> {
        Self::cached(&self.compat_yx, || Ok(compatible_dim(self.alg, self.ext_yx, self.c_y, self.c_x)?))
    }

    /// `k(c_Y, c_X) − k(c_X, c_Y)`. Symmetric arguments give 0 without
    /// enumeration, which also covers chain pairs whose types overlap.
    pub fn f_hom(&self) -> Result<Half, WeightError> {
        if self.c_x == self.c_y && self.ext_xy.quotient() == self.ext_xy.sub() {
            return Ok(Half(0));
        }
        Ok(Half::from_int(self.k_backward()? as i64 - self.k_forward()? as i64))
    }

    /// `dim Ext¹(X, Y)` minus the compatible dimension in `Ext¹(X, Y)`.
    pub fn f_plus_ext(&self) -> Result<Half, WeightError> {
        Ok(Half::from_int(self.ext_xy.dim() as i64 - self.compat_forward()? as i64))
    }

    /// The compatible dimension in `Ext¹(Y, X)` for `(c_Y, c_X)`.
    pub fn f_minus_ext(&self) -> Result<Half, WeightError> {
        Ok(Half::from_int(self.compat_backward()? as i64))
    }

    /// Both compatible dimensions, each by its own enumeration.
    pub fn orthogonality(&self) -> Result<Orthogonality, WeightError> {
        Ok(Orthogonality {
            forward: self.compat_forward()?,
            backward: self.compat_backward()?,
            ext_dim: self.ext_xy.dim() as u32,
        })
    }
}
