use crate::{column_space, flatten, matrix_of, next_vector, unflatten, Algebra, RepError};
use exactlin::{FMatrix, PrimeField, Subspace};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A representation: one vector space GF(p)^{dims[i]} per vertex and one
/// matrix of shape `dim(target) × dim(source)` per arrow, acting on columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation {
    dims: Vec<usize>,
    mats: BTreeMap<String, FMatrix>,
}

/// A morphism given by one matrix per vertex (0-based vertex index).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    pub comps: Vec<FMatrix>,
}

/// Output of [`Algebra::sub_quotient`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubQuotient {
    pub sub: Representation,
    pub quotient: Representation,
    pub incl: Morphism,
    pub proj: Morphism,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    dims: Vec<usize>,
    #[serde(default)]
    matrices: BTreeMap<String, Vec<Vec<i64>>>,
}

impl Representation {
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimension at the 1-based vertex `v`.
    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v - 1]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dims_i64(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn mat(&self, arrow: &str) -> &FMatrix {
        &self.mats[arrow]
    }

    pub fn mats(&self) -> &BTreeMap<String, FMatrix> {
        &self.mats
    }

    /// Serializes to `{"dims": [...], "matrices": {"id": [[...]]}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let matrices = self
            .mats
            .iter()
            .map(|(k, m)| {
                let rows: Vec<Vec<i64>> =
                    m.to_rows().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect();
                (k.clone(), rows)
            })
            .collect();
        serde_json::to_value(RepJson { dims: self.dims.clone(), matrices })
            .expect("representation serialization cannot fail")
    }

    /// Stable textual key for caching and deterministic ordering.
    pub fn canonical_json(&self) -> String {
        self.to_json().to_string()
    }
}

impl Morphism {
    pub fn identity(field: PrimeField, dims: &[usize]) -> Self {
        Self { comps: dims.iter().map(|&d| FMatrix::identity(field, d)).collect() }
    }

    pub fn zero(field: PrimeField, source: &[usize], target: &[usize]) -> Self {
        Self {
            comps: source.iter().zip(target).map(|(&s, &t)| FMatrix::zeros(field, t, s)).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        Self { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Self { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: u32) -> Morphism {
        Self { comps: self.comps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(FMatrix::is_zero)
    }

    /// Invertible at every vertex.
    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(FMatrix::is_invertible)
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.rows())
    }
}

impl Algebra {
    /// Builds and validates a representation from matrices given as integer rows.
    /// Arrows absent from `mats` get zero matrices.
    pub fn rep(
        &self,
        dims: &[usize],
        mats: &[(&str, Vec<Vec<i64>>)],
    ) -> Result<Representation, RepError> {
        let mut map = BTreeMap::new();
        for (id, rows) in mats {
            let a = self.quiver().arrow(id).ok_or_else(|| RepError::UnknownArrow(id.to_string()))?;
            let cols = dims.get(a.source - 1).copied().unwrap_or(0);
            if rows.iter().any(|r| r.len() != cols) {
                return Err(RepError::Shape {
                    arrow: id.to_string(),
                    expected: (dims.get(a.target - 1).copied().unwrap_or(0), cols),
                    got: (rows.len(), rows.first().map_or(0, Vec::len)),
                });
            }
            map.insert(id.to_string(), FMatrix::from_rows(self.field(), cols, rows));
        }
        self.rep_from_matrices(dims.to_vec(), map)
    }

    /// Validates and fills in zero matrices for missing arrows.
    pub fn rep_from_matrices(
        &self,
        dims: Vec<usize>,
        mut mats: BTreeMap<String, FMatrix>,
    ) -> Result<Representation, RepError> {
        if dims.len() != self.n() {
            return Err(RepError::DimLength { expected: self.n(), got: dims.len() });
        }
        for id in mats.keys() {
            if self.quiver().arrow(id).is_none() {
                return Err(RepError::UnknownArrow(id.clone()));
            }
        }
        for a in &self.quiver().arrows {
            let expected = (dims[a.target - 1], dims[a.source - 1]);
            let m = mats
                .entry(a.id.clone())
                .or_insert_with(|| FMatrix::zeros(self.field(), expected.0, expected.1));
            if m.shape() != expected {
                return Err(RepError::Shape { arrow: a.id.clone(), expected, got: m.shape() });
            }
        }
        let rep = Representation { dims, mats };
        self.check_relations(&rep)?;
        Ok(rep)
    }

    pub fn rep_from_json(&self, value: &serde_json::Value) -> Result<Representation, RepError> {
        let parsed: RepJson =
            serde_json::from_value(value.clone()).map_err(|e| RepError::Invalid(e.to_string()))?;
        let mats: Vec<(&str, Vec<Vec<i64>>)> =
            parsed.matrices.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
        if parsed.matrices.values().flatten().flatten().any(|&x| x < 0 || x >= self.p() as i64) {
            return Err(RepError::Invalid(format!("entries must lie in [0, {})", self.p())));
        }
        self.rep(&parsed.dims, &mats)
    }

    fn check_relations(&self, rep: &Representation) -> Result<(), RepError> {
        for (idx, rel) in self.quiver().relations.iter().enumerate() {
            if !self.relation_value(rel, &rep.mats).is_zero() {
                return Err(RepError::RelationViolated(idx));
            }
        }
        Ok(())
    }

    /// `Σ c · (m[a2] · m[a1])` for one relation.
    pub(crate) fn relation_value(
        &self,
        rel: &[quiver_core::RelationTerm],
        mats: &BTreeMap<String, FMatrix>,
    ) -> FMatrix {
        let f = self.field();
        let mut acc: Option<FMatrix> = None;
        for term in rel {
            let v = mats[&term.path[1]].mul(&mats[&term.path[0]]).scale(f.reduce(term.coeff));
            acc = Some(match acc {
                None => v,
                Some(a) => a.add(&v),
            });
        }
        acc.expect("relations are nonempty")
    }

    pub fn zero_rep(&self) -> Representation {
        self.rep(&vec![0; self.n()], &[]).expect("zero representation is valid")
    }

    /// Simple module at the 1-based vertex `i`.
    pub fn simple(&self, i: usize) -> Representation {
        let mut dims = vec![0; self.n()];
        dims[i - 1] = 1;
        self.rep(&dims, &[]).expect("simple representation is valid")
    }

    /// Matrix of a path (arrow ids, first arrow first); identity of size
    /// `dim(start)` for the empty path.
    pub fn path_matrix(&self, rep: &Representation, start: usize, path: &[String]) -> FMatrix {
        let mut m = FMatrix::identity(self.field(), rep.dim_at(start));
        for id in path {
            m = rep.mat(id).mul(&m);
        }
        m
    }

    /// Checks that `f` is a morphism `m → n`.
    pub fn is_morphism(&self, m: &Representation, n: &Representation, f: &Morphism) -> bool {
        if f.comps.len() != self.n() {
            return false;
        }
        for i in 0..self.n() {
            if f.comps[i].shape() != (n.dims[i], m.dims[i]) {
                return false;
            }
        }
        self.quiver().arrows.iter().all(|a| {
            n.mat(&a.id).mul(&f.comps[a.source - 1]) == f.comps[a.target - 1].mul(m.mat(&a.id))
        })
    }

    fn hom_shapes(m: &Representation, n: &Representation) -> Vec<(usize, usize)> {
        m.dims.iter().zip(&n.dims).map(|(&a, &b)| (b, a)).collect()
    }

    /// Basis of `Hom(m, n)`: kernel of `f ↦ (N(a) f_s − f_t M(a))_a`.
    pub fn hom_basis(&self, m: &Representation, n: &Representation) -> Vec<Morphism> {
        let field = self.field();
        let shapes = Self::hom_shapes(m, n);
        let nvars: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let nout: usize =
            self.quiver().arrows.iter().map(|a| n.dims[a.target - 1] * m.dims[a.source - 1]).sum();
        let sys = matrix_of(field, nvars, nout, |v| {
            let f = unflatten(field, v, &shapes);
            let outs: Vec<FMatrix> = self
                .quiver()
                .arrows
                .iter()
                .map(|a| {
                    n.mat(&a.id)
                        .mul(&f[a.source - 1])
                        .sub(&f[a.target - 1].mul(m.mat(&a.id)))
                })
                .collect();
            flatten(&outs)
        });
        sys.kernel_basis()
            .basis_vectors()
            .iter()
            .map(|v| Morphism { comps: unflatten(field, v, &shapes) })
            .collect()
    }

    pub fn hom_dim(&self, m: &Representation, n: &Representation) -> usize {
        self.hom_basis(m, n).len()
    }

    /// Blockwise direct sum with `m` in the first coordinates.
    pub fn direct_sum(&self, m: &Representation, n: &Representation) -> Representation {
        let f = self.field();
        let dims: Vec<usize> = m.dims.iter().zip(&n.dims).map(|(a, b)| a + b).collect();
        let mats = self
            .quiver()
            .arrows
            .iter()
            .map(|a| {
                let (s, t) = (a.source - 1, a.target - 1);
                let block = FMatrix::block2(
                    m.mat(&a.id),
                    &FMatrix::zeros(f, m.dims[t], n.dims[s]),
                    &FMatrix::zeros(f, n.dims[t], m.dims[s]),
                    n.mat(&a.id),
                );
                (a.id.clone(), block)
            })
            .collect();
        Representation { dims, mats }
    }

    /// Searches `Hom(m, n)` exhaustively for an isomorphism.
    pub fn find_isomorphism(
        &self,
        m: &Representation,
        n: &Representation,
    ) -> Result<Option<Morphism>, RepError> {
        if m.dims != n.dims {
            return Ok(None);
        }
        let basis = self.hom_basis(m, n);
        self.count_pow(basis.len())?;
        let p = self.p();
        let mut coeffs = vec![0u32; basis.len()];
        loop {
            let mut f = Morphism::zero(self.field(), &m.dims, &n.dims);
            for (c, b) in coeffs.iter().zip(&basis) {
                if *c != 0 {
                    f = f.add(&b.scale(*c));
                }
            }
            if f.is_iso() {
                return Ok(Some(f));
            }
            if !next_vector(&mut coeffs, p) {
                return Ok(None);
            }
        }
    }

    pub fn is_isomorphic(&self, m: &Representation, n: &Representation) -> Result<bool, RepError> {
        Ok(self.find_isomorphism(m, n)?.is_some())
    }

    /// Whether a vertexwise family of subspaces is closed under every arrow.
    pub fn is_invariant(&self, m: &Representation, family: &[Subspace]) -> bool {
        self.quiver().arrows.iter().all(|a| {
            family[a.source - 1].image(m.mat(&a.id)).is_subspace_of(&family[a.target - 1])
        })
    }

    /// Sub- and quotient representation for an arrow-invariant subspace family.
    /// The submodule basis is the echelon basis; the quotient basis is the
    /// standard complement on non-pivot coordinates.
    pub fn sub_quotient(
        &self,
        m: &Representation,
        family: &[Subspace],
    ) -> Result<SubQuotient, RepError> {
        let field = self.field();
        if family.len() != self.n() {
            return Err(RepError::DimLength { expected: self.n(), got: family.len() });
        }
        for a in &self.quiver().arrows {
            let u = &family[a.source - 1];
            if !u.image(m.mat(&a.id)).is_subspace_of(&family[a.target - 1]) {
                return Err(RepError::NotInvariant(a.id.clone()));
            }
        }
        let sub_dims: Vec<usize> = family.iter().map(Subspace::dim).collect();
        let quo_dims: Vec<usize> = family.iter().map(|u| u.ambient() - u.dim()).collect();
        let mut sub_mats = BTreeMap::new();
        let mut quo_mats = BTreeMap::new();
        for a in &self.quiver().arrows {
            let (s, t) = (a.source - 1, a.target - 1);
            let ma = m.mat(&a.id);
            let cols: Vec<Vec<u32>> = family[s]
                .basis_vectors()
                .iter()
                .map(|u| family[t].coords(&ma.mul_vec(u)).expect("invariance checked"))
                .collect();
            sub_mats.insert(a.id.clone(), from_cols(field, sub_dims[t], &cols));
            let cols: Vec<Vec<u32>> = family[s]
                .non_pivots()
                .iter()
                .map(|&c| {
                    let mut e = vec![0u32; m.dims[s]];
                    e[c] = 1;
                    family[t].quotient_coords(&ma.mul_vec(&e))
                })
                .collect();
            quo_mats.insert(a.id.clone(), from_cols(field, quo_dims[t], &cols));
        }
        let incl = Morphism {
            comps: family
                .iter()
                .map(|u| from_cols(field, u.ambient(), &u.basis_vectors()))
                .collect(),
        };
        let proj = Morphism {
            comps: family
                .iter()
                .map(|u| {
                    let cols: Vec<Vec<u32>> = (0..u.ambient())
                        .map(|c| {
                            let mut e = vec![0u32; u.ambient()];
                            e[c] = 1;
                            u.quotient_coords(&e)
                        })
                        .collect();
                    from_cols(field, u.ambient() - u.dim(), &cols)
                })
                .collect(),
        };
        Ok(SubQuotient {
            sub: Representation { dims: sub_dims, mats: sub_mats },
            quotient: Representation { dims: quo_dims, mats: quo_mats },
            incl,
            proj,
        })
    }

    /// Vertexwise image of a morphism, as a subspace family of the target.
    pub fn image_family(&self, f: &Morphism) -> Vec<Subspace> {
        f.comps.iter().map(column_space).collect()
    }

    /// Dimension vector of the top `M / rad M`.
    pub fn top_dims(&self, m: &Representation) -> Vec<usize> {
        self.radical(m).iter().zip(&m.dims).map(|(r, &d)| d - r.dim()).collect()
    }

    /// Radical family: at each vertex the sum of images of incoming arrows.
    pub fn radical(&self, m: &Representation) -> Vec<Subspace> {
        (1..=self.n())
            .map(|i| {
                let mut acc = Subspace::zero(self.field(), m.dim_at(i));
                for a in self.quiver().arrows_into(i) {
                    acc = acc.sum(&column_space(m.mat(&a.id)));
                }
                acc
            })
            .collect()
    }

    /// Socle family: at each vertex the joint kernel of outgoing arrows.
    pub fn socle(&self, m: &Representation) -> Vec<Subspace> {
        (1..=self.n())
            .map(|i| {
                let mut acc = Subspace::full(self.field(), m.dim_at(i));
                for a in self.quiver().arrows_from(i) {
                    acc = acc.intersect(&m.mat(&a.id).kernel_basis());
                }
                acc
            })
            .collect()
    }

    pub fn socle_dims(&self, m: &Representation) -> Vec<usize> {
        self.socle(m).iter().map(Subspace::dim).collect()
    }

    /// All representations with the given dimension vector, in lexicographic
    /// order of their flattened arrow matrices.
    pub fn enumerate_representations(&self, dims: &[usize]) -> Result<Vec<Representation>, RepError> {
        let shapes: Vec<(usize, usize)> = self
            .quiver()
            .arrows
            .iter()
            .map(|a| (dims[a.target - 1], dims[a.source - 1]))
            .collect();
        let nvars: usize = shapes.iter().map(|(r, c)| r * c).sum();
        self.count_pow(nvars)?;
        let mut v = vec![0u32; nvars];
        let mut out = Vec::new();
        loop {
            let ms = unflatten(self.field(), &v, &shapes);
            let mats: BTreeMap<String, FMatrix> =
                self.quiver().arrows.iter().map(|a| a.id.clone()).zip(ms).collect();
            if let Ok(r) = self.rep_from_matrices(dims.to_vec(), mats) {
                out.push(r);
            }
            if !next_vector(&mut v, self.p()) {
                return Ok(out);
            }
        }
    }

    /// Representation with entries drawn from `next`; `None` if the draw
    /// violates a relation.
    pub fn rep_from_source(
        &self,
        dims: &[usize],
        mut next: impl FnMut() -> u32,
    ) -> Option<Representation> {
        let mats = self
            .quiver()
            .arrows
            .iter()
            .map(|a| {
                let (r, c) = (dims[a.target - 1], dims[a.source - 1]);
                let data: Vec<i64> = (0..r * c).map(|_| next() as i64).collect();
                (a.id.clone(), FMatrix::from_data(self.field(), r, c, &data))
            })
            .collect();
        self.rep_from_matrices(dims.to_vec(), mats).ok()
    }
}

pub(crate) fn from_cols(field: PrimeField, rows: usize, cols: &[Vec<u32>]) -> FMatrix {
    if cols.is_empty() {
        FMatrix::zeros(field, rows, 0)
    } else {
        FMatrix::from_columns(field, rows, cols)
    }
}

impl Representation {
    pub(crate) fn from_parts(dims: Vec<usize>, mats: BTreeMap<String, FMatrix>) -> Self {
        Self { dims, mats }
    }
}
