use crate::{checked_log_p, Family, FlagType, GeomError};
use exactlin::{subspaces_between, LinError, Subspace};
use repcat::{Algebra, ExtClass, ExtSpace, Extension, Representation};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A chain of submodules `L = L_0 ⊇ L_1 ⊇ … ⊇ L_m = 0` of a fixed module,
/// where `L_{j-1}/L_j` is the simple at `i_j` when `a_j = 1` and zero
/// otherwise. `levels[j]` is `L_j`.
///
/// Chains order lexicographically by type, then by their subspace tuples.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chain {
    pub flag: FlagType,
    pub levels: Vec<Family>,
}

impl Chain {
    /// The length-0 chain of the zero module with `n` vertices.
    pub fn empty(alg: &Algebra) -> Self {
        Chain {
            flag: FlagType { i: vec![], a: vec![] },
            levels: vec![(0..alg.n()).map(|_| Subspace::zero(alg.field(), 0)).collect()],
        }
    }

    pub fn len(&self) -> usize {
        self.flag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flag.is_empty()
    }

    /// Dimension vectors of `L_0, …, L_m`.
    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.levels.iter().map(|f| crate::family_dims(f)).collect()
    }
}

/// Depth-first enumeration of typed chains of `l`.
///
/// At a set flag, `L_j(v)` is a hyperplane of `L_{j-1}(v)` containing every
/// arrow image into `v` from `L_{j-1}` together with `extra(j, v)`, and
/// passing `accept(j, v, H)`. `limit` stops the search early.
struct ChainSearch<'a, E, A> {
    alg: &'a Algebra,
    l: &'a Representation,
    flag: &'a FlagType,
    extra: E,
    accept: A,
    limit: usize,
    visited: u64,
}

impl<E, A> ChainSearch<'_, E, A>
where
    E: Fn(usize, usize) -> Option<Subspace>,
    A: Fn(usize, usize, &Subspace) -> bool,
{
    fn run(&mut self) -> Result<Vec<Chain>, GeomError> {
        if self.flag.i.iter().any(|&v| v > self.alg.n())
            || self.flag.dim_vector(self.alg.n()) != self.l.dims()
        {
            return Ok(Vec::new());
        }
        let top: Family =
            self.l.dims().iter().map(|&d| Subspace::full(self.alg.field(), d)).collect();
        let mut levels = vec![top];
        let mut out = Vec::new();
        self.step(&mut levels, &mut out)?;
        Ok(out)
    }

    fn step(&mut self, levels: &mut Vec<Family>, out: &mut Vec<Chain>) -> Result<(), GeomError> {
        if out.len() >= self.limit {
            return Ok(());
        }
        self.visited += 1;
        if self.visited > self.alg.cap() {
            return Err(LinError::CapExceeded { requested: self.visited as u128, cap: self.alg.cap() }.into());
        }
        let j = levels.len();
        if j > self.flag.len() {
            out.push(Chain { flag: self.flag.clone(), levels: levels.clone() });
            return Ok(());
        }
        let prev = &levels[j - 1];
        if self.flag.a[j - 1] == 0 {
            let same = prev.clone();
            levels.push(same);
            self.step(levels, out)?;
            levels.pop();
            return Ok(());
        }
        let v = self.flag.i[j - 1];
        let mut lo = Subspace::zero(self.alg.field(), self.l.dim_at(v));
        for a in self.alg.quiver().arrows_into(v) {
            lo = lo.sum(&prev[a.source - 1].image(self.l.mat(&a.id)));
        }
        if let Some(x) = (self.extra)(j, v) {
            lo = lo.sum(&x);
        }
        let hi = &prev[v - 1];
        if hi.dim() == 0 {
            return Ok(());
        }
        let cands = subspaces_between(&lo, hi, hi.dim() - 1, self.alg.cap())?;
        for h in cands {
            if !(self.accept)(j, v, &h) {
                continue;
            }
            let mut next = levels[j - 1].clone();
            next[v - 1] = h;
            levels.push(next);
            self.step(levels, out)?;
            levels.pop();
            if out.len() >= self.limit {
                break;
            }
        }
        Ok(())
    }
}

/// Every chain of `l` of type `t`, in canonical order. Empty when the number
/// of set flags at some vertex differs from the dimension there.
pub fn chains_of_type(alg: &Algebra, l: &Representation, t: &FlagType) -> Result<Vec<Chain>, GeomError> {
    ChainSearch {
        alg,
        l,
        flag: t,
        extra: |_, _| None,
        accept: |_, _, _: &Subspace| true,
        limit: usize::MAX,
        visited: 0,
    }
    .run()
}

/// Induced chains `(c_M, c_N)` on the quotient and sub term: `M_j` is the
/// image of `L_j` under the projection, `N_j` its preimage under the
/// inclusion. A set flag goes to `N` when the dimension of `N_j` drops and to
/// `M` otherwise.
pub fn chain_image(ext: &Extension, c: &Chain) -> (Chain, Chain) {
    let m_levels: Vec<Family> = c
        .levels
        .iter()
        .map(|f| f.iter().zip(&ext.proj.comps).map(|(u, p)| u.image(p)).collect())
        .collect();
    let n_levels: Vec<Family> = c
        .levels
        .iter()
        .map(|f| f.iter().zip(&ext.incl.comps).map(|(u, i)| Subspace::preimage(i, u)).collect())
        .collect();
    let mut a_m = Vec::with_capacity(c.len());
    let mut a_n = Vec::with_capacity(c.len());
    for (j, (&v, &a)) in c.flag.i.iter().zip(&c.flag.a).enumerate() {
        let drop = (n_levels[j][v - 1].dim() - n_levels[j + 1][v - 1].dim()) as u8;
        a_n.push(drop);
        a_m.push(a - drop);
    }
    (
        Chain { flag: FlagType { i: c.flag.i.clone(), a: a_m }, levels: m_levels },
        Chain { flag: FlagType { i: c.flag.i.clone(), a: a_n }, levels: n_levels },
    )
}

fn fiber_search(
    alg: &Algebra,
    space: &ExtSpace,
    class: &ExtClass,
    c_m: &Chain,
    c_n: &Chain,
    limit: usize,
) -> Result<Vec<Chain>, GeomError> {
    let t = c_m.flag.combine(&c_n.flag)?;
    let ext = space.middle_term(class);
    let incl = &ext.incl.comps;
    let proj = &ext.proj.comps;
    ChainSearch {
        alg,
        l: &ext.middle,
        flag: &t,
        extra: |j: usize, v: usize| Some(c_n.levels[j][v - 1].image(&incl[v - 1])),
        accept: |j: usize, v: usize, h: &Subspace| {
            Subspace::preimage(&incl[v - 1], h) == c_n.levels[j][v - 1]
                && h.image(&proj[v - 1]) == c_m.levels[j][v - 1]
        },
        limit,
        visited: 0,
    }
    .run()
}

/// All chains of the middle term of `class` whose image is `(c_m, c_n)`.
/// The types must share a vertex sequence and have disjoint set flags.
pub fn phi_fiber(
    alg: &Algebra,
    space: &ExtSpace,
    class: &ExtClass,
    c_m: &Chain,
    c_n: &Chain,
) -> Result<Vec<Chain>, GeomError> {
    fiber_search(alg, space, class, c_m, c_n, usize::MAX)
}

/// Whether [`phi_fiber`] is nonempty, stopping at the first chain found.
pub fn phi_fiber_nonempty(
    alg: &Algebra,
    space: &ExtSpace,
    class: &ExtClass,
    c_m: &Chain,
    c_n: &Chain,
) -> Result<bool, GeomError> {
    Ok(!fiber_search(alg, space, class, c_m, c_n, 1)?.is_empty())
}

/// `log_p` of the size of the split fiber over `(c_m, c_n)`.
pub fn k_rank(alg: &Algebra, space: &ExtSpace, c_m: &Chain, c_n: &Chain) -> Result<u32, GeomError> {
    let n = phi_fiber(alg, space, &space.zero_class(), c_m, c_n)?.len() as u64;
    checked_log_p(n, alg.p())
}

/// `log_p` of the number of classes whose fiber over `(c_m, c_n)` is
/// nonempty. Errors if that set does not have prime-power size.
pub fn compatible_dim(alg: &Algebra, space: &ExtSpace, c_m: &Chain, c_n: &Chain) -> Result<u32, GeomError> {
    let mut count = 0u64;
    for class in space.all_classes() {
        if phi_fiber_nonempty(alg, space, &class, c_m, c_n)? {
            count += 1;
        }
    }
    checked_log_p(count, alg.p())
}

/// Chains of type `t` of the middle term, grouped by their image pair, with
/// the number of chains in each group.
pub fn grouped_images(
    alg: &Algebra,
    space: &ExtSpace,
    class: &ExtClass,
    t: &FlagType,
) -> Result<BTreeMap<(Chain, Chain), usize>, GeomError> {
    let ext = space.middle_term(class);
    let mut out = BTreeMap::new();
    for c in chains_of_type(alg, &ext.middle, t)? {
        *out.entry(chain_image(&ext, &c)).or_insert(0) += 1;
    }
    Ok(out)
}

impl Chain {
    /// Stable text key: the type, then every level as per-vertex echelon rows.
    pub fn canonical_key(&self) -> String {
        let levels: Vec<String> = self
            .levels
            .iter()
            .map(|f| {
                let vs: Vec<String> = f.iter().map(subspace_key).collect();
                vs.join("/")
            })
            .collect();
        format!("{}|{}", self.flag, levels.join(">"))
    }
}

/// Echelon rows of a subspace, e.g. `[10,01]`; `[]` for zero.
pub fn subspace_key(u: &Subspace) -> String {
    let rows: Vec<String> = u
        .basis_vectors()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("."))
        .collect();
    format!("{}:[{}]", u.ambient(), rows.join(","))
}
