use crate::{Half, WeightError};
use exactlin::Subspace;
use quiver_core::{euler_form, lambda_form, IntMatrix};
use repcat::{Algebra, ExtSpace, Representation};
use submod_geometry::{checked_log_p, refined_fiber, subspace_key};

/// Exponent vectors `p(M, e)`, `p(N, f)` and the forms needed to weigh them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentData {
    pub lambda: IntMatrix,
    pub euler: IntMatrix,
    pub p_m: Vec<i64>,
    pub p_n: Vec<i64>,
}

/// Arguments of a submodule-pair weight: modules `M`, `N` with submodules
/// `M0 ⊆ M`, `N0 ⊆ N`, plus optional exponent data.
pub struct SubCtx<'a> {
    alg: &'a Algebra,
    m: &'a Representation,
    n: &'a Representation,
    m0: &'a [Subspace],
    n0: &'a [Subspace],
    exps: Option<ExponentData>,
    euler: Option<IntMatrix>,
    ids: (String, String),
}

impl<'a> SubCtx<'a> {
    pub fn new(
        alg: &'a Algebra,
        m: &'a Representation,
        n: &'a Representation,
        m0: &'a [Subspace],
        n0: &'a [Subspace],
    ) -> Self {
        Self { alg, m, n, m0, n0, exps: None, euler: None, ids: ("M".into(), "N".into()) }
    }

    pub fn with_exponents(mut self, e: ExponentData) -> Self {
        self.euler = Some(e.euler.clone());
        self.exps = Some(e);
        self
    }

    /// Euler matrix alone, enough for `g_sigma`.
    pub fn with_euler(mut self, euler: IntMatrix) -> Self {
        self.euler = Some(euler);
        self
    }

    pub fn with_ids(mut self, m: &str, n: &str) -> Self {
        self.ids = (m.to_string(), n.to_string());
        self
    }

    pub fn key(&self) -> String {
        let fam = |f: &[Subspace]| f.iter().map(subspace_key).collect::<Vec<_>>().join("/");
        format!("{}|{}|{}|{}", self.ids.0, self.ids.1, fam(self.m0), fam(self.n0))
    }

    fn exps(&self, name: &str) -> Result<&ExponentData, WeightError> {
        self.exps.as_ref().ok_or_else(|| WeightError::MissingExponents(name.to_string()))
    }

    /// `dim Hom(M0, N/N0)`.
    pub fn l_dim(&self) -> Result<usize, WeightError> {
        let m0 = self.alg.sub_quotient(self.m, self.m0)?.sub;
        let nq = self.alg.sub_quotient(self.n, self.n0)?.quotient;
        Ok(self.alg.hom_dim(&m0, &nq))
    }

    /// `λ(p(M, e), p(N, f))`.
    pub fn g_skew(&self) -> Result<Half, WeightError> {
        let e = self.exps("g_skew")?;
        Ok(Half::from_int(lambda_form(&e.lambda, &e.p_m, &e.p_n)))
    }

    /// `½λ(p(M, e), p(N, f)) − dim Hom(M0, N/N0)`.
    pub fn g_mn(&self) -> Result<Half, WeightError> {
        let e = self.exps("g_MN")?;
        Ok(Half(lambda_form(&e.lambda, &e.p_m, &e.p_n) - 2 * self.l_dim()? as i64))
    }

    /// `−½⟨g, l − g⟩` for the total submodule `g = dim M0 + dim N0` of the
    /// total `l = dim M + dim N`.
    pub fn g_sigma(&self) -> Result<Half, WeightError> {
        let euler = self.euler.as_ref().ok_or_else(|| WeightError::MissingExponents("g_sigma".into()))?;
        let g: Vec<i64> = self.m0.iter().zip(self.n0).map(|(a, b)| (a.dim() + b.dim()) as i64).collect();
        let l: Vec<i64> = self.m.dims().iter().zip(self.n.dims()).map(|(a, b)| (a + b) as i64).collect();
        let rest: Vec<i64> = l.iter().zip(&g).map(|(a, b)| a - b).collect();
        Ok(Half(-euler_form(euler, &g, &rest)))
    }

    /// Dimension of the classes `ε ∈ Ext¹(M, N)` whose refined fiber over
    /// `(M0, N0)` is nonempty. Only module extensions are enumerated.
    pub fn g_minus_ext(&self) -> Result<Half, WeightError> {
        let space = self.alg.ext_space(self.m, self.n);
        Ok(Half::from_int(self.compatible_classes(&space, self.m0, self.n0)? as i64))
    }

    /// Dimension of the classes `η ∈ Ext¹(N, M)` whose refined fiber over
    /// `(N0, M0)` is nonempty. Only module extensions are enumerated.
    pub fn g_plus_ext(&self) -> Result<Half, WeightError> {
        let space = self.alg.ext_space(self.n, self.m);
        Ok(Half::from_int(self.compatible_classes(&space, self.n0, self.m0)? as i64))
    }

    fn compatible_classes(&self, space: &ExtSpace, q0: &[Subspace], s0: &[Subspace]) -> Result<u32, WeightError> {
        let mut count = 0u64;
        for class in space.all_classes() {
            let ext = space.middle_term(&class);
            if !refined_fiber(self.alg, &ext, q0, s0)?.is_empty() {
                count += 1;
            }
        }
        Ok(checked_log_p(count, self.alg.p())?)
    }
}
