use crate::rep::from_cols;
use crate::{column_space, Algebra, Morphism, RepError, Representation};
use exactlin::{FMatrix, Subspace};
use std::collections::BTreeMap;

/// Minimal projective presentation `0 → P¹ → P⁰ → M → 0` over a path algebra,
/// recorded by the multiplicities of the indecomposable projectives and the
/// path-combination matrix of `P¹ → P⁰`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    /// Vertex of each summand of `P⁰`, in summand order.
    pub p0: Vec<usize>,
    /// Vertex of each summand of `P¹`, in summand order.
    pub p1: Vec<usize>,
    /// `map[d][c]`: the component `P¹_d → P⁰_c` as coefficients on the paths
    /// from `p0[c]` to `p1[d]`.
    pub map: Vec<Vec<BTreeMap<Vec<String>, u32>>>,
}

impl Presentation {
    /// Multiplicity vector of `P⁰`.
    pub fn top_multiplicities(&self, n: usize) -> Vec<usize> {
        multiplicities(&self.p0, n)
    }

    /// Multiplicity vector of `P¹`.
    pub fn syzygy_multiplicities(&self, n: usize) -> Vec<usize> {
        multiplicities(&self.p1, n)
    }
}

fn multiplicities(vs: &[usize], n: usize) -> Vec<usize> {
    let mut m = vec![0; n];
    for &v in vs {
        m[v - 1] += 1;
    }
    m
}

impl Algebra {
    /// Indecomposable projective `P_i`: basis at `j` is the set of paths `i ⇝ j`.
    pub fn projective(&self, i: usize) -> Result<Representation, RepError> {
        self.require_hereditary()?;
        let q = self.quiver();
        let field = self.field();
        let bases: Vec<Vec<Vec<String>>> = (1..=self.n()).map(|j| q.paths(i, j)).collect();
        let mats = q
            .arrows
            .iter()
            .map(|a| {
                let src = &bases[a.source - 1];
                let tgt = &bases[a.target - 1];
                let mut m = FMatrix::zeros(field, tgt.len(), src.len());
                for (c, path) in src.iter().enumerate() {
                    let mut ext = path.clone();
                    ext.push(a.id.clone());
                    let r = tgt.iter().position(|t| *t == ext).expect("extended path exists");
                    m.set(r, c, 1);
                }
                (a.id.clone(), m)
            })
            .collect();
        let dims = bases.iter().map(Vec::len).collect();
        self.rep_from_matrices(dims, mats)
    }

    /// Indecomposable injective `I_i`: basis at `j` is the set of paths `j ⇝ i`;
    /// an arrow `a` strips a leading `a` from a path and kills the others.
    pub fn injective(&self, i: usize) -> Result<Representation, RepError> {
        self.require_hereditary()?;
        let q = self.quiver();
        let field = self.field();
        let bases: Vec<Vec<Vec<String>>> = (1..=self.n()).map(|j| q.paths(j, i)).collect();
        let mats = q
            .arrows
            .iter()
            .map(|a| {
                let src = &bases[a.source - 1];
                let tgt = &bases[a.target - 1];
                let mut m = FMatrix::zeros(field, tgt.len(), src.len());
                for (c, path) in src.iter().enumerate() {
                    if path.first() == Some(&a.id) {
                        let rest = path[1..].to_vec();
                        let r = tgt.iter().position(|t| *t == rest).expect("suffix path exists");
                        m.set(r, c, 1);
                    }
                }
                (a.id.clone(), m)
            })
            .collect();
        let dims = bases.iter().map(Vec::len).collect();
        self.rep_from_matrices(dims, mats)
    }

    /// Chooses top generators: at each vertex, the standard complement of the
    /// radical.
    fn top_generators(&self, m: &Representation, family: &[Subspace]) -> Vec<(usize, Vec<u32>)> {
        let rad = self.radical_within(m, family);
        let mut gens = Vec::new();
        for v in 1..=self.n() {
            let r = &rad[v - 1];
            let reduced: Vec<Vec<u32>> =
                family[v - 1].basis_vectors().iter().map(|x| r.reduce(x)).collect();
            let comp = Subspace::span(self.field(), m.dim_at(v), &reduced);
            for g in comp.basis_vectors() {
                gens.push((v, g));
            }
        }
        gens
    }

    /// Radical of the submodule given by `family`.
    fn radical_within(&self, m: &Representation, family: &[Subspace]) -> Vec<Subspace> {
        (1..=self.n())
            .map(|i| {
                let mut acc = Subspace::zero(self.field(), m.dim_at(i));
                for a in self.quiver().arrows_into(i) {
                    acc = acc.sum(&family[a.source - 1].image(m.mat(&a.id)));
                }
                acc
            })
            .collect()
    }

    /// Minimal projective presentation of a module over a path algebra.
    pub fn projective_presentation(&self, m: &Representation) -> Result<Presentation, RepError> {
        self.require_hereditary()?;
        let field = self.field();
        let q = self.quiver();
        let full: Vec<Subspace> =
            m.dims().iter().map(|&d| Subspace::full(field, d)).collect();
        let gens = self.top_generators(m, &full);
        let p0: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
        let (p0_rep, offsets) = self.sum_of_projectives(&p0)?;
        // pi: P⁰ → M sends path r from the generator vertex to M(r)·g.
        let pi = Morphism {
            comps: (1..=self.n())
                .map(|k| {
                    let mut cols = Vec::new();
                    for (v, g) in &gens {
                        for path in q.paths(*v, k) {
                            cols.push(self.path_matrix(m, *v, &path).mul_vec(g));
                        }
                    }
                    from_cols(field, m.dim_at(k), &cols)
                })
                .collect(),
        };
        debug_assert!(self.is_morphism(&p0_rep, m, &pi));
        let kernel: Vec<Subspace> = pi.comps.iter().map(FMatrix::kernel_basis).collect();
        let kgens = self.top_generators(&p0_rep, &kernel);
        let p1: Vec<usize> = kgens.iter().map(|(v, _)| *v).collect();
        let map = kgens
            .iter()
            .map(|(v, w)| {
                (0..p0.len())
                    .map(|c| {
                        let paths = q.paths(p0[c], *v);
                        let off = offsets[c][v - 1];
                        paths
                            .into_iter()
                            .enumerate()
                            .filter_map(|(k, path)| {
                                let x = w[off + k];
                                (x != 0).then_some((path, x))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(Presentation { p0, p1, map })
    }

    /// `⊕ P_{v}` over the listed vertices, with per-summand, per-vertex offsets.
    fn sum_of_projectives(
        &self,
        vs: &[usize],
    ) -> Result<(Representation, Vec<Vec<usize>>), RepError> {
        let mut acc = self.zero_rep();
        let mut offsets = Vec::new();
        for &v in vs {
            offsets.push(acc.dims().to_vec());
            acc = self.direct_sum(&acc, &self.projective(v)?);
        }
        Ok((acc, offsets))
    }

    /// `⊕ I_{v}` over the listed vertices, with per-summand, per-vertex offsets.
    fn sum_of_injectives(
        &self,
        vs: &[usize],
    ) -> Result<(Representation, Vec<Vec<usize>>), RepError> {
        let mut acc = self.zero_rep();
        let mut offsets = Vec::new();
        for &v in vs {
            offsets.push(acc.dims().to_vec());
            acc = self.direct_sum(&acc, &self.injective(v)?);
        }
        Ok((acc, offsets))
    }

    /// Auslander–Reiten translate `τM = ker ν(P¹ → P⁰)` over a path algebra,
    /// where the Nakayama functor sends `P_i` to `I_i`. Projective summands of
    /// `M` contribute nothing; a warning is logged when `M ≠ 0` but `τM = 0`.
    pub fn ar_translate(&self, m: &Representation) -> Result<Representation, RepError> {
        let pres = self.projective_presentation(m)?;
        let q = self.quiver();
        let field = self.field();
        let (i1, off1) = self.sum_of_injectives(&pres.p1)?;
        let (i0, off0) = self.sum_of_injectives(&pres.p0)?;
        // ν(x): I_{p1[d]} → I_{p0[c]} maps a path s: k ⇝ p1[d] to Σ c_y·t over
        // the paths y of x with s = t·y.
        let nu = Morphism {
            comps: (1..=self.n())
                .map(|k| {
                    let mut mat = FMatrix::zeros(field, i0.dim_at(k), i1.dim_at(k));
                    for (d, &j) in pres.p1.iter().enumerate() {
                        let src_paths = q.paths(k, j);
                        for (c, &i) in pres.p0.iter().enumerate() {
                            let tgt_paths = q.paths(k, i);
                            for (y, &coef) in &pres.map[d][c] {
                                for (si, s) in src_paths.iter().enumerate() {
                                    if s.len() < y.len() || &s[s.len() - y.len()..] != y.as_slice() {
                                        continue;
                                    }
                                    let t = s[..s.len() - y.len()].to_vec();
                                    let ti = tgt_paths.iter().position(|p| *p == t).expect("prefix path exists");
                                    let (r, col) = (off0[c][k - 1] + ti, off1[d][k - 1] + si);
                                    mat.set(r, col, field.add(mat.get(r, col), coef));
                                }
                            }
                        }
                    }
                    mat
                })
                .collect(),
        };
        debug_assert!(self.is_morphism(&i1, &i0, &nu));
        let kernel: Vec<Subspace> = nu.comps.iter().map(FMatrix::kernel_basis).collect();
        let tau = self.sub_quotient(&i1, &kernel)?.sub;
        if tau.is_zero() && !m.is_zero() {
            log::warn!("τ of a nonzero module vanished: the input is projective");
        }
        Ok(tau)
    }

    /// Image of a morphism as a representation (submodule of the target).
    pub fn image(&self, target: &Representation, f: &Morphism) -> Result<Representation, RepError> {
        let fam: Vec<Subspace> = f.comps.iter().map(column_space).collect();
        Ok(self.sub_quotient(target, &fam)?.sub)
    }
}
