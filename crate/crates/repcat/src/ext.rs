use crate::{flatten, matrix_of, next_vector, unflatten, Algebra, Morphism, RepError, Representation};
use exactlin::{FMatrix, Subspace};
use std::collections::BTreeMap;

/// `Ext¹(M, N)` realised as arrow cocycles `η_a: M_{s(a)} → N_{t(a)}` modulo
/// coboundaries `N(a)φ_s − φ_t M(a)`.
///
/// Classes are normalised by reducing against the echelon basis of the
/// coboundary space, so two cocycles represent the same class iff their
/// normal forms agree.
#[derive(Debug, Clone)]
pub struct ExtSpace {
    m: Representation,
    n: Representation,
    shapes: Vec<(usize, usize)>,
    arrow_ids: Vec<String>,
    cocycles: Subspace,
    coboundaries: Subspace,
    classes: Subspace,
}

/// A normalised class in some `Ext¹(M, N)`, with coordinates in the
/// canonical basis of its [`ExtSpace`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtClass {
    pub coords: Vec<u32>,
    pub eta: BTreeMap<String, FMatrix>,
}

/// Middle term `L` of `0 → N → L → M → 0` with its canonical maps.
/// `L` carries coordinates `N ⊕ M` with the `N` block first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub middle: Representation,
    pub incl: Morphism,
    pub proj: Morphism,
}

impl ExtClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl ExtSpace {
    /// Quotient term `M`.
    pub fn quotient(&self) -> &Representation {
        &self.m
    }

    /// Sub term `N`.
    pub fn sub(&self) -> &Representation {
        &self.n
    }

    pub fn dim(&self) -> usize {
        self.classes.dim()
    }

    pub fn cocycle_dim(&self) -> usize {
        self.cocycles.dim()
    }

    pub fn coboundary_dim(&self) -> usize {
        self.coboundaries.dim()
    }

    fn to_vector(&self, eta: &BTreeMap<String, FMatrix>) -> Vec<u32> {
        let ms: Vec<FMatrix> = self.arrow_ids.iter().map(|id| eta[id].clone()).collect();
        flatten(&ms)
    }

    fn to_eta(&self, v: &[u32]) -> BTreeMap<String, FMatrix> {
        let field = self.classes.field();
        self.arrow_ids.iter().cloned().zip(unflatten(field, v, &self.shapes)).collect()
    }

    pub fn is_cocycle(&self, eta: &BTreeMap<String, FMatrix>) -> bool {
        self.cocycles.contains(&self.to_vector(eta))
    }

    pub fn is_coboundary(&self, eta: &BTreeMap<String, FMatrix>) -> bool {
        self.coboundaries.contains(&self.to_vector(eta))
    }

    /// Normal form of a cocycle. Errors if `eta` violates the cocycle condition.
    pub fn class_of(&self, eta: &BTreeMap<String, FMatrix>) -> Result<ExtClass, RepError> {
        let v = self.to_vector(eta);
        if !self.cocycles.contains(&v) {
            return Err(RepError::Invalid("not a cocycle".into()));
        }
        let r = self.coboundaries.reduce(&v);
        let coords = self.classes.coords(&r).expect("normal forms lie in the class complement");
        Ok(ExtClass { coords, eta: self.to_eta(&r) })
    }

    pub fn from_coords(&self, coords: &[u32]) -> ExtClass {
        assert_eq!(coords.len(), self.dim());
        let v = self.classes.combine(coords);
        ExtClass { coords: coords.to_vec(), eta: self.to_eta(&v) }
    }

    pub fn zero_class(&self) -> ExtClass {
        self.from_coords(&vec![0; self.dim()])
    }

    /// Canonical basis classes.
    pub fn basis(&self) -> Vec<ExtClass> {
        (0..self.dim())
            .map(|i| {
                let mut c = vec![0; self.dim()];
                c[i] = 1;
                self.from_coords(&c)
            })
            .collect()
    }

    pub fn add(&self, a: &ExtClass, b: &ExtClass) -> ExtClass {
        let f = self.classes.field();
        let c: Vec<u32> = a.coords.iter().zip(&b.coords).map(|(&x, &y)| f.add(x, y)).collect();
        self.from_coords(&c)
    }

    pub fn scale(&self, a: &ExtClass, s: u32) -> ExtClass {
        let f = self.classes.field();
        let c: Vec<u32> = a.coords.iter().map(|&x| f.mul(x, s)).collect();
        self.from_coords(&c)
    }

    /// Every class, coordinates in lexicographic order (zero first).
    pub fn all_classes(&self) -> Vec<ExtClass> {
        let p = self.classes.field().p();
        let mut c = vec![0u32; self.dim()];
        let mut out = Vec::new();
        loop {
            out.push(self.from_coords(&c));
            if !next_vector(&mut c, p) {
                return out;
            }
        }
    }

    /// One representative per line: the lexicographically least nonzero
    /// coordinate vector, i.e. the one whose leading coordinate is 1.
    pub fn projective_classes(&self) -> Vec<ExtClass> {
        self.all_classes()
            .into_iter()
            .filter(|c| c.coords.iter().find(|&&x| x != 0) == Some(&1))
            .collect()
    }

    /// Middle term with block matrices `[[N(a), η_a], [0, M(a)]]`.
    pub fn middle_term(&self, class: &ExtClass) -> Extension {
        let (m, n) = (&self.m, &self.n);
        let field = self.classes.field();
        let nv = m.dims().len();
        let dims: Vec<usize> = (0..nv).map(|i| n.dims()[i] + m.dims()[i]).collect();
        let mats = self
            .arrow_ids
            .iter()
            .zip(&self.shapes)
            .map(|(id, _)| {
                let (na, ma) = (n.mat(id), m.mat(id));
                let block = FMatrix::block2(
                    na,
                    &class.eta[id],
                    &FMatrix::zeros(field, ma.rows(), na.cols()),
                    ma,
                );
                (id.clone(), block)
            })
            .collect();
        let incl = Morphism {
            comps: (0..nv)
                .map(|i| {
                    FMatrix::identity(field, n.dims()[i])
                        .vstack(&FMatrix::zeros(field, m.dims()[i], n.dims()[i]))
                })
                .collect(),
        };
        let proj = Morphism {
            comps: (0..nv)
                .map(|i| {
                    FMatrix::zeros(field, m.dims()[i], n.dims()[i])
                        .hstack(&FMatrix::identity(field, m.dims()[i]))
                })
                .collect(),
        };
        Extension { middle: Representation::from_parts(dims, mats), incl, proj }
    }
}

impl Algebra {
    /// Builds `Ext¹(m, n)`. Cocycles satisfy the linearised quadratic relations
    /// `Σ c (N(a2) η_{a1} + η_{a2} M(a1)) = 0`.
    pub fn ext_space(&self, m: &Representation, n: &Representation) -> ExtSpace {
        let field = self.field();
        let arrows = &self.quiver().arrows;
        let arrow_ids: Vec<String> = arrows.iter().map(|a| a.id.clone()).collect();
        let shapes: Vec<(usize, usize)> =
            arrows.iter().map(|a| (n.dim_at(a.target), m.dim_at(a.source))).collect();
        let nvars: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let index: BTreeMap<&str, usize> =
            arrow_ids.iter().enumerate().map(|(i, id)| (id.as_str(), i)).collect();

        let rel_shapes: Vec<(usize, usize)> = self
            .quiver()
            .relations
            .iter()
            .map(|rel| {
                let first = self.quiver().arrow(&rel[0].path[0]).expect("validated");
                let second = self.quiver().arrow(&rel[0].path[1]).expect("validated");
                (n.dim_at(second.target), m.dim_at(first.source))
            })
            .collect();
        let nrel: usize = rel_shapes.iter().map(|(r, c)| r * c).sum();
        let constraints = matrix_of(field, nvars, nrel, |v| {
            let eta = unflatten(field, v, &shapes);
            let outs: Vec<FMatrix> = self
                .quiver()
                .relations
                .iter()
                .map(|rel| {
                    let mut acc: Option<FMatrix> = None;
                    for t in rel {
                        let (a1, a2) = (t.path[0].as_str(), t.path[1].as_str());
                        let term = n
                            .mat(a2)
                            .mul(&eta[index[a1]])
                            .add(&eta[index[a2]].mul(m.mat(a1)))
                            .scale(field.reduce(t.coeff));
                        acc = Some(match acc {
                            None => term,
                            Some(x) => x.add(&term),
                        });
                    }
                    acc.expect("relations are nonempty")
                })
                .collect();
            flatten(&outs)
        });
        let cocycles = constraints.kernel_basis();

        let phi_shapes: Vec<(usize, usize)> =
            m.dims().iter().zip(n.dims()).map(|(&a, &b)| (b, a)).collect();
        let nphi: usize = phi_shapes.iter().map(|(r, c)| r * c).sum();
        let delta = matrix_of(field, nphi, nvars, |v| {
            let phi = unflatten(field, v, &phi_shapes);
            let outs: Vec<FMatrix> = arrows
                .iter()
                .map(|a| {
                    n.mat(&a.id)
                        .mul(&phi[a.source - 1])
                        .sub(&phi[a.target - 1].mul(m.mat(&a.id)))
                })
                .collect();
            flatten(&outs)
        });
        let coboundaries = crate::column_space(&delta);
        debug_assert!(coboundaries.is_subspace_of(&cocycles));
        let reduced: Vec<Vec<u32>> =
            cocycles.basis_vectors().iter().map(|z| coboundaries.reduce(z)).collect();
        let classes = Subspace::span(field, nvars, &reduced);
        debug_assert_eq!(classes.dim() + coboundaries.dim(), cocycles.dim());
        ExtSpace {
            m: m.clone(),
            n: n.clone(),
            shapes,
            arrow_ids,
            cocycles,
            coboundaries,
            classes,
        }
    }

    pub fn ext_dim(&self, m: &Representation, n: &Representation) -> usize {
        self.ext_space(m, n).dim()
    }

    /// Pushout of `class ∈ Ext¹(M, N)` along `lambda: N → N'`; `target` must be
    /// `Ext¹(M, N')`.
    pub fn pushout_class(
        &self,
        lambda: &Morphism,
        class: &ExtClass,
        source: &ExtSpace,
        target: &ExtSpace,
    ) -> Result<ExtClass, RepError> {
        if source.m != target.m {
            return Err(RepError::Endpoint("pushout keeps the quotient term".into()));
        }
        if !self.is_morphism(&source.n, &target.n, lambda) {
            return Err(RepError::Endpoint("lambda is not a morphism N → N'".into()));
        }
        let eta = self
            .quiver()
            .arrows
            .iter()
            .map(|a| (a.id.clone(), lambda.comps[a.target - 1].mul(&class.eta[&a.id])))
            .collect();
        target.class_of(&eta)
    }

    /// Pullback of `class ∈ Ext¹(M, N)` along `rho: M'' → M`; `target` must be
    /// `Ext¹(M'', N)`.
    pub fn pullback_class(
        &self,
        class: &ExtClass,
        rho: &Morphism,
        source: &ExtSpace,
        target: &ExtSpace,
    ) -> Result<ExtClass, RepError> {
        if source.n != target.n {
            return Err(RepError::Endpoint("pullback keeps the sub term".into()));
        }
        if !self.is_morphism(&target.m, &source.m, rho) {
            return Err(RepError::Endpoint("rho is not a morphism M'' → M".into()));
        }
        let eta = self
            .quiver()
            .arrows
            .iter()
            .map(|a| (a.id.clone(), class.eta[&a.id].mul(&rho.comps[a.source - 1])))
            .collect();
        target.class_of(&eta)
    }

    /// Checks exactness of `0 → N → L → M → 0` vertexwise.
    pub fn is_short_exact(&self, ext: &Extension, n: &Representation, m: &Representation) -> bool {
        self.is_morphism(n, &ext.middle, &ext.incl)
            && self.is_morphism(&ext.middle, m, &ext.proj)
            && ext.incl.is_injective()
            && ext.proj.is_surjective()
            && ext.proj.compose(&ext.incl).is_zero()
            && (0..self.n()).all(|i| {
                ext.incl.comps[i].rank() + ext.proj.comps[i].rank() == ext.middle.dims()[i]
            })
    }
}
