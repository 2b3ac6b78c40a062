use crate::Family;
use exactlin::Subspace;
use repcat::{Algebra, Representation};
use serde::{Deserialize, Serialize};

/// Which end a refined series is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `L_{j-1}/L_j` is the `S_{i_j}`-socle of `L/L_j`.
    Soc,
    /// `L_{j-1}/L_j` is the `S_{i_j}`-top of `L_{j-1}`.
    Top,
}

/// A descending series `L_0 ⊇ … ⊇ L_m` whose subquotients are isotypic
/// semisimple at the listed vertices, possibly zero or of dimension > 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series {
    pub vertices: Vec<usize>,
    pub levels: Vec<Family>,
}

impl Series {
    /// Multiplicity of `S_{i_j}` in each subquotient.
    pub fn steps(&self) -> Vec<usize> {
        self.levels
            .windows(2)
            .zip(&self.vertices)
            .map(|(w, &v)| w[0][v - 1].dim() - w[1][v - 1].dim())
            .collect()
    }

    /// Dimension vector of `L_0`.
    pub fn top_dims(&self) -> Vec<usize> {
        crate::family_dims(&self.levels[0])
    }
}

/// Refined socle or top series of `l` along the vertex sequence `i`.
///
/// The socle series is built upward from `L_m = 0`: `L_{j-1}(i_j)` collects
/// the vectors that every outgoing arrow sends into `L_j`. The top series is
/// built downward from `L_0 = L`: `L_j(i_j)` is the sum of arrow images into
/// `i_j` from `L_{j-1}`. Other vertices never change within a step.
pub fn refined_socle_top(alg: &Algebra, l: &Representation, i: &[usize], mode: Mode) -> Series {
    let field = alg.field();
    let q = alg.quiver();
    let m = i.len();
    let mut levels: Vec<Family> = Vec::with_capacity(m + 1);
    match mode {
        Mode::Soc => {
            let mut cur: Family = l.dims().iter().map(|&d| Subspace::zero(field, d)).collect();
            levels.push(cur.clone());
            for &v in i.iter().rev() {
                let mut s = Subspace::full(field, l.dim_at(v));
                for a in q.arrows_from(v) {
                    s = s.intersect(&Subspace::preimage(l.mat(&a.id), &cur[a.target - 1]));
                }
                cur[v - 1] = s;
                levels.push(cur.clone());
            }
            levels.reverse();
        }
        Mode::Top => {
            let mut cur: Family = l.dims().iter().map(|&d| Subspace::full(field, d)).collect();
            levels.push(cur.clone());
            for &v in i {
                let mut r = Subspace::zero(field, l.dim_at(v));
                for a in q.arrows_into(v) {
                    r = r.sum(&cur[a.source - 1].image(l.mat(&a.id)));
                }
                cur[v - 1] = r;
                levels.push(cur.clone());
            }
        }
    }
    Series { vertices: i.to_vec(), levels }
}
