//! Quivers with optional quadratic relations, their Euler forms, the skew
//! matrix `B̃` and compatible skew forms `Λ`.
//!
//! Vertices are labelled `1..=n` in every public structure.

mod forms;

pub use forms::{
    btilde, compatible_lambda, euler_form, euler_matrix, lambda_form, skew_euler_form,
    validate_lambda, EulerData, IntMatrix, LambdaError,
};

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Structural problems with a quiver description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("duplicate arrow id `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{id}` references vertex {vertex} outside 1..={n}")]
    BadVertex { id: String, vertex: usize, n: usize },
    #[error("relation references unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation path has length {0}, expected 2")]
    BadRelationLength(usize),
    #[error("relation path `{0}` then `{1}` is not composable")]
    NotComposable(String, String),
    #[error("relation terms have different endpoints")]
    InconsistentEndpoints,
    #[error("relation is empty")]
    EmptyRelation,
    #[error("operation requires a relation-free quiver")]
    HasRelations,
    #[error("operation requires an acyclic quiver")]
    Cyclic,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// One summand `coeff · (path[1] ∘ path[0])` of a relation; `path[0]` is applied first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coeff: i64,
    pub path: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    #[serde(default)]
    pub relations: Vec<Vec<RelationTerm>>,
}

/// Facts established by [`Quiver::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuiverInfo {
    /// Whether the underlying arrow graph has no oriented cycle.
    pub acyclic: bool,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: &[(&str, usize, usize)]) -> Self {
        let arrows = arrows
            .iter()
            .map(|&(id, source, target)| Arrow { id: id.to_string(), source, target })
            .collect();
        Self { vertices, arrows, relations: Vec::new() }
    }

    pub fn with_relation(mut self, terms: &[(i64, &str, &str)]) -> Self {
        self.relations.push(
            terms
                .iter()
                .map(|&(coeff, a, b)| RelationTerm {
                    coeff,
                    path: vec![a.to_string(), b.to_string()],
                })
                .collect(),
        );
        self
    }

    /// Linearly oriented `A_n`: arrows `a{i}: i → i+1`.
    pub fn linear_a(n: usize) -> Self {
        let ids: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
        let arrows: Vec<(&str, usize, usize)> =
            ids.iter().enumerate().map(|(i, id)| (id.as_str(), i + 1, i + 2)).collect();
        Self::new(n, &arrows)
    }

    /// Kronecker quiver: two arrows `a, b: 1 → 2`.
    pub fn kronecker() -> Self {
        Self::new(2, &[("a", 1, 2), ("b", 1, 2)])
    }

    /// Preprojective algebra of `A_2`: `a: 1 → 2`, `abar: 2 → 1`, with
    /// `abar ∘ a = 0` at vertex 1 and `a ∘ abar = 0` at vertex 2.
    pub fn preprojective_a2() -> Self {
        Self::new(2, &[("a", 1, 2), ("abar", 2, 1)])
            .with_relation(&[(1, "a", "abar")])
            .with_relation(&[(1, "abar", "a")])
    }

    pub fn n(&self) -> usize {
        self.vertices
    }

    pub fn arrow(&self, id: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.id == id)
    }

    /// Arrows `i → j` (1-based labels).
    pub fn count_arrows(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == i && a.target == j).count()
    }

    pub fn arrows_from(&self, i: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.source == i)
    }

    pub fn arrows_into(&self, i: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.target == i)
    }

    pub fn has_relations(&self) -> bool {
        !self.relations.is_empty()
    }

    pub fn validate(&self) -> Result<QuiverInfo, QuiverError> {
        let mut seen = BTreeSet::new();
        for a in &self.arrows {
            if !seen.insert(a.id.as_str()) {
                return Err(QuiverError::DuplicateArrow(a.id.clone()));
            }
            for v in [a.source, a.target] {
                if v == 0 || v > self.vertices {
                    return Err(QuiverError::BadVertex {
                        id: a.id.clone(),
                        vertex: v,
                        n: self.vertices,
                    });
                }
            }
        }
        for rel in &self.relations {
            let mut ends = None;
            if rel.is_empty() {
                return Err(QuiverError::EmptyRelation);
            }
            for term in rel {
                if term.path.len() != 2 {
                    return Err(QuiverError::BadRelationLength(term.path.len()));
                }
                let first = self
                    .arrow(&term.path[0])
                    .ok_or_else(|| QuiverError::UnknownArrow(term.path[0].clone()))?;
                let second = self
                    .arrow(&term.path[1])
                    .ok_or_else(|| QuiverError::UnknownArrow(term.path[1].clone()))?;
                if first.target != second.source {
                    return Err(QuiverError::NotComposable(first.id.clone(), second.id.clone()));
                }
                let e = (first.source, second.target);
                if *ends.get_or_insert(e) != e {
                    return Err(QuiverError::InconsistentEndpoints);
                }
            }
        }
        Ok(QuiverInfo { acyclic: self.is_acyclic() })
    }

    /// Kahn's algorithm on the arrow graph; loops count as cycles.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Vertices in an order where every arrow goes forward, if one exists.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices;
        let mut indeg = vec![0usize; n + 1];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: BTreeSet<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for a in self.arrows_from(v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    ready.insert(a.target);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Path algebra of an acyclic relation-free quiver.
    pub fn is_hereditary(&self) -> bool {
        !self.has_relations() && self.is_acyclic()
    }

    /// All paths from `i` to `j` as arrow-id sequences (first arrow first),
    /// including the trivial path when `i == j`. Requires an acyclic quiver.
    pub fn paths(&self, i: usize, j: usize) -> Vec<Vec<String>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.paths_rec(i, j, &mut cur, &mut out);
        out.sort();
        out
    }

    fn paths_rec(&self, v: usize, j: usize, cur: &mut Vec<String>, out: &mut Vec<Vec<String>>) {
        if v == j {
            out.push(cur.clone());
        }
        for a in self.arrows_from(v) {
            cur.push(a.id.clone());
            self.paths_rec(a.target, j, cur, out);
            cur.pop();
        }
    }

    /// Canonical JSON text, stable across runs; used for hashing.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("quiver serialization cannot fail")
    }

    /// Arrow multiplicities keyed by `(source, target)`.
    pub fn arrow_counts(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for a in &self.arrows {
            *m.entry((a.source, a.target)).or_insert(0) += 1;
        }
        m
    }
}
