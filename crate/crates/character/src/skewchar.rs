use crate::{CharError, ClusterObject};
use exactlin::Subspace;
use qtorus::{SkewPoly, VLaurent};
use quiver_core::{euler_form, euler_matrix, lambda_form, skew_euler_form, IntMatrix};
use repcat::{Algebra, Representation};
use std::collections::BTreeMap;
use submod_geometry::{all_submodules, family_dims, psi_image};
use weightlib::{ExponentData, Half, SubCtx, WeightExpr};

/// Character machinery for one hereditary algebra and one skew form `Λ`.
#[derive(Debug, Clone)]
pub struct Characters<'a> {
    alg: &'a Algebra,
    euler: IntMatrix,
    lambda: IntMatrix,
}

/// Both sides of the exponent identity for one pair of submodule
/// dimension vectors, in half-units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSides {
    pub e: Vec<usize>,
    pub f: Vec<usize>,
    /// `½λ(p(M, e), p(N, f))`.
    pub lhs: Half,
    /// `½λ(ind M, ind N) + ½⟨f, m⟩ − ½⟨e, n⟩ + ½⟨e, f⟩ − ½⟨f, e⟩`.
    pub rhs: Half,
}

/// Data of the mixed triangle attached to a one-dimensional `Ext¹(M, N)`:
/// the middle term of the nonsplit class, and kernel and cokernel of the
/// nonzero map `N → τM` dual to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeData {
    pub middle: Representation,
    pub tau_m: Representation,
    pub kernel: Representation,
    pub cokernel: Representation,
}

fn to_i64(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

impl<'a> Characters<'a> {
    /// `Λ` must be skew-symmetric of the quiver's size; compatibility with
    /// `B̃` is the caller's choice to enforce.
    pub fn new(alg: &'a Algebra, lambda: IntMatrix) -> Result<Self, CharError> {
        let euler = euler_matrix(alg.quiver())?;
        SkewPoly::zero(lambda.clone())?;
        if lambda.len() != alg.n() {
            return Err(CharError::Unsupported(format!("Λ has size {}, quiver has {}", lambda.len(), alg.n())));
        }
        Ok(Self { alg, euler, lambda })
    }

    pub fn algebra(&self) -> &Algebra {
        self.alg
    }

    pub fn lambda(&self) -> &IntMatrix {
        &self.lambda
    }

    pub fn euler(&self) -> &IntMatrix {
        &self.euler
    }

    /// Socle multiplicities minus `dim Ext¹(S_i, M)`, i.e. the two terms of
    /// the minimal injective copresentation; `ΣP_i` contributes `−e_i`.
    pub fn coindex(&self, x: &ClusterObject) -> Result<Vec<i64>, CharError> {
        let m = &x.module_part;
        let soc = self.alg.socle_dims(m);
        Ok((1..=self.alg.n())
            .map(|i| {
                let ext = self.alg.ext_dim(&self.alg.simple(i), m) as i64;
                soc[i - 1] as i64 - ext - x.shifted[i - 1] as i64
            })
            .collect())
    }

    /// `P⁰` minus `P¹` multiplicities of the minimal projective
    /// presentation; `ΣP_i` contributes `e_i`.
    pub fn index(&self, x: &ClusterObject) -> Result<Vec<i64>, CharError> {
        let n = self.alg.n();
        let pres = self.alg.projective_presentation(&x.module_part)?;
        let (top, syz) = (pres.top_multiplicities(n), pres.syzygy_multiplicities(n));
        Ok((0..n).map(|i| top[i] as i64 - syz[i] as i64 + x.shifted[i] as i64).collect())
    }

    /// `p(X, g)_i = −(coind X)_i + ⟨S_i, g⟩_a`.
    pub fn exponent_p(&self, x: &ClusterObject, g: &[usize]) -> Result<Vec<i64>, CharError> {
        if g.len() != self.alg.n() || g.iter().zip(x.module_part.dims()).any(|(a, b)| a > b) {
            return Err(CharError::BadDimension(g.to_vec()));
        }
        let coind = self.coindex(x)?;
        Ok(self.exponent_with(&coind, g))
    }

    fn exponent_with(&self, coind: &[i64], g: &[usize]) -> Vec<i64> {
        let n = self.alg.n();
        let g = to_i64(g);
        (0..n).map(|i| -coind[i] + skew_euler_form(&self.euler, &unit(n, i), &g)).collect()
    }

    /// Grassmannian counts of the module part, keyed by dimension vector.
    fn grassmannians(&self, m: &Representation) -> Result<BTreeMap<Vec<usize>, u64>, CharError> {
        let mut counts = BTreeMap::new();
        for f in all_submodules(self.alg, m)? {
            *counts.entry(family_dims(&f)).or_insert(0) += 1;
        }
        Ok(counts)
    }

    fn character(&self, x: &ClusterObject, twisted: bool) -> Result<SkewPoly, CharError> {
        let coind = self.coindex(x)?;
        let l = to_i64(x.module_part.dims());
        let mut out = SkewPoly::zero(self.lambda.clone())?;
        for (g, count) in self.grassmannians(&x.module_part)? {
            let gi = to_i64(&g);
            let rest: Vec<i64> = l.iter().zip(&gi).map(|(a, b)| a - b).collect();
            let vpow = if twisted { -euler_form(&self.euler, &gi, &rest) } else { 0 };
            out.add_term(self.exponent_with(&coind, &g), VLaurent::monomial(count as i64, vpow))?;
        }
        Ok(out)
    }

    /// `X_L = Σ_g |Gr_g(FL)| X^{p(L, g)}`.
    pub fn x_character(&self, x: &ClusterObject) -> Result<SkewPoly, CharError> {
        self.character(x, false)
    }

    /// `X̃_L = Σ_g |Gr_g(FL)| v^{−⟨g, l − g⟩} X^{p(L, g)}` with `l = dim FL`.
    pub fn tilde_character(&self, x: &ClusterObject) -> Result<SkewPoly, CharError> {
        self.character(x, true)
    }

    /// `dim Hom_𝒞(X, ΣY)` from the two-sided decomposition over modules:
    /// `Ext¹(FX, FY) ⊕ DExt¹(FY, FX)`, plus `Hom(P_i, FY)` for each `ΣP_i`
    /// in `X` and `DHom(P_j, FX)` for each `ΣP_j` in `Y`.
    pub fn hom_c_dim(&self, x: &ClusterObject, y: &ClusterObject) -> usize {
        let (m, n) = (&x.module_part, &y.module_part);
        let modules = self.alg.ext_dim(m, n) + self.alg.ext_dim(n, m);
        let shifted_x: usize = x.shifted.iter().zip(n.dims()).map(|(s, d)| s * d).sum();
        let shifted_y: usize = y.shifted.iter().zip(m.dims()).map(|(s, d)| s * d).sum();
        modules + shifted_x + shifted_y
    }

    /// Both sides of the exponent identity for every pair of dimension
    /// vectors `(e, f)` realised by submodules of `M` and `N`.
    pub fn exponent_sides(&self, m: &Representation, n: &Representation) -> Result<Vec<ExponentSides>, CharError> {
        let (xm, xn) = (ClusterObject::module(m.clone()), ClusterObject::module(n.clone()));
        let (cm, cn) = (self.coindex(&xm)?, self.coindex(&xn)?);
        let base = lambda_form(&self.lambda, &self.index(&xm)?, &self.index(&xn)?);
        let (md, nd) = (m.dims_i64(), n.dims_i64());
        let es: Vec<Vec<usize>> = self.grassmannians(m)?.into_keys().collect();
        let fs: Vec<Vec<usize>> = self.grassmannians(n)?.into_keys().collect();
        let mut out = Vec::new();
        for e in &es {
            for f in &fs {
                let (ei, fi) = (to_i64(e), to_i64(f));
                let lhs = lambda_form(&self.lambda, &self.exponent_with(&cm, e), &self.exponent_with(&cn, f));
                let ef = |a: &[i64], b: &[i64]| euler_form(&self.euler, a, b);
                let rhs = base + ef(&fi, &md) - ef(&ei, &nd) + ef(&ei, &fi) - ef(&fi, &ei);
                out.push(ExponentSides { e: e.clone(), f: f.clone(), lhs: Half(lhs), rhs: Half(rhs) });
            }
        }
        Ok(out)
    }

    /// `Σ_{L0 ⊆ M ⊕ N} q^{w(M, N, M0, N0)} X^{p(M ⊕ N, dim L0)}`, where
    /// `(M0, N0)` are the parts of `L0` along the split sequence.
    pub fn weighted_split_character(
        &self,
        m: &Representation,
        n: &Representation,
        w: &WeightExpr,
    ) -> Result<SkewPoly, CharError> {
        let space = self.alg.ext_space(m, n);
        let ext = space.middle_term(&space.zero_class());
        let (xm, xn) = (ClusterObject::module(m.clone()), ClusterObject::module(n.clone()));
        let (cm, cn) = (self.coindex(&xm)?, self.coindex(&xn)?);
        let cl: Vec<i64> = cm.iter().zip(&cn).map(|(a, b)| a + b).collect();
        let mut out = SkewPoly::zero(self.lambda.clone())?;
        for l0 in all_submodules(self.alg, &ext.middle)? {
            let (m0, n0): (Vec<Subspace>, Vec<Subspace>) = psi_image(&ext, &l0);
            let data = ExponentData {
                lambda: self.lambda.clone(),
                euler: self.euler.clone(),
                p_m: self.exponent_with(&cm, &family_dims(&m0)),
                p_n: self.exponent_with(&cn, &family_dims(&n0)),
            };
            let ctx = SubCtx::new(self.alg, m, n, &m0, &n0).with_exponents(data);
            let h = w.eval_submodules(&ctx)?;
            out.add_term(self.exponent_with(&cl, &family_dims(&l0)), VLaurent::vpow(h.v_exponent()))?;
        }
        Ok(out)
    }
}

/// Kernel and cokernel of the nonzero map `N → τM` for a one-dimensional
/// `Ext¹(M, N)`. The mixed-triangle partner is `ker ⊕ τ⁻¹ coker`, with the
/// injective summands of the cokernel turning into shifted projectives;
/// that last step is left to the caller.
pub fn cone_data(alg: &Algebra, m: &Representation, n: &Representation) -> Result<ConeData, CharError> {
    let space = alg.ext_space(m, n);
    if space.dim() != 1 {
        return Err(CharError::Unsupported(format!("Ext¹(M, N) has dimension {}", space.dim())));
    }
    let middle = space.middle_term(&space.basis()[0]).middle;
    let tau_m = alg.ar_translate(m)?;
    let homs = alg.hom_basis(n, &tau_m);
    if homs.len() != 1 {
        return Err(CharError::Unsupported(format!("Hom(N, τM) has dimension {}", homs.len())));
    }
    let f = &homs[0];
    let kernel_family: Vec<Subspace> = f.comps.iter().map(|c| c.kernel_basis()).collect();
    let kernel = alg.sub_quotient(n, &kernel_family)?.sub;
    let cokernel = alg.sub_quotient(&tau_m, &alg.image_family(f))?.quotient;
    Ok(ConeData { middle, tau_m, kernel, cokernel })
}
