use crate::{Family, GeomError};
use exactlin::{subspaces_between, LinError, Subspace};
use repcat::{Algebra, Extension, Representation};

/// Every arrow-invariant family `U` with `lower ⊆ U ⊆ upper` and
/// `dim U(v) = g[v]`, in canonical order.
///
/// Vertices are chosen in label order. Arrows between a new vertex and
/// earlier ones tighten the candidate interval: images of chosen subspaces
/// raise the lower bound, preimages of chosen subspaces cut the upper bound.
/// Loops are checked after each choice.
pub fn submodules_between(
    alg: &Algebra,
    m: &Representation,
    lower: &[Subspace],
    upper: &[Subspace],
    g: &[usize],
) -> Result<Vec<Family>, GeomError> {
    let n = alg.n();
    if g.len() != n || g.iter().zip(m.dims()).any(|(a, b)| a > b) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut chosen: Family = Vec::with_capacity(n);
    descend(alg, m, lower, upper, g, &mut chosen, &mut out)?;
    Ok(out)
}

fn descend(
    alg: &Algebra,
    m: &Representation,
    lower: &[Subspace],
    upper: &[Subspace],
    g: &[usize],
    chosen: &mut Family,
    out: &mut Vec<Family>,
) -> Result<(), GeomError> {
    let v = chosen.len() + 1;
    if v > alg.n() {
        if out.len() as u64 >= alg.cap() {
            return Err(LinError::CapExceeded { requested: out.len() as u128 + 1, cap: alg.cap() }.into());
        }
        out.push(chosen.clone());
        return Ok(());
    }
    let q = alg.quiver();
    let mut lo = lower[v - 1].clone();
    for a in q.arrows_into(v).filter(|a| a.source < v) {
        lo = lo.sum(&chosen[a.source - 1].image(m.mat(&a.id)));
    }
    let mut hi = upper[v - 1].clone();
    for a in q.arrows_from(v).filter(|a| a.target < v) {
        hi = hi.intersect(&Subspace::preimage(m.mat(&a.id), &chosen[a.target - 1]));
    }
    for u in subspaces_between(&lo, &hi, g[v - 1], alg.cap())? {
        let loops_ok = q
            .arrows_from(v)
            .filter(|a| a.target == v)
            .all(|a| u.image(m.mat(&a.id)).is_subspace_of(&u));
        if loops_ok {
            chosen.push(u);
            descend(alg, m, lower, upper, g, chosen, out)?;
            chosen.pop();
        }
    }
    Ok(())
}

fn zero_family(m: &Representation, alg: &Algebra) -> Family {
    m.dims().iter().map(|&d| Subspace::zero(alg.field(), d)).collect()
}

fn full_family(m: &Representation, alg: &Algebra) -> Family {
    m.dims().iter().map(|&d| Subspace::full(alg.field(), d)).collect()
}

/// The quiver Grassmannian `Gr_g(M)` as a list of subspace families.
pub fn submodules_of_dim(
    alg: &Algebra,
    m: &Representation,
    g: &[usize],
) -> Result<Vec<Family>, GeomError> {
    submodules_between(alg, m, &zero_family(m, alg), &full_family(m, alg), g)
}

/// `|Gr_g(M)|`.
pub fn grassmannian_count(alg: &Algebra, m: &Representation, g: &[usize]) -> Result<u64, GeomError> {
    Ok(submodules_of_dim(alg, m, g)?.len() as u64)
}

/// Every submodule of `M`, grouped by dimension vector in lexicographic order.
pub fn all_submodules(alg: &Algebra, m: &Representation) -> Result<Vec<Family>, GeomError> {
    let mut out = Vec::new();
    for g in dim_vectors_below(m.dims()) {
        out.extend(submodules_of_dim(alg, m, &g)?);
    }
    Ok(out)
}

/// All vectors `g` with `0 ≤ g ≤ d` entrywise, lexicographic.
pub(crate) fn dim_vectors_below(d: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &x in d {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=x).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out
}

/// Preimage along the inclusion and image along the projection of a
/// submodule of the middle term: the pair `(M0, N0)`.
pub fn psi_image(ext: &Extension, l0: &[Subspace]) -> (Family, Family) {
    let m0 = l0.iter().zip(&ext.proj.comps).map(|(u, p)| u.image(p)).collect();
    let n0 = l0.iter().zip(&ext.incl.comps).map(|(u, i)| Subspace::preimage(i, u)).collect();
    (m0, n0)
}

/// All submodules `L0` of the middle term with `psi_image(L0) = (M0, N0)`.
///
/// Such an `L0` contains the image of `N0` and lies inside the preimage of
/// `M0`, which bounds the search.
pub fn refined_fiber(
    alg: &Algebra,
    ext: &Extension,
    m0: &[Subspace],
    n0: &[Subspace],
) -> Result<Vec<Family>, GeomError> {
    let lower: Family = n0.iter().zip(&ext.incl.comps).map(|(u, i)| u.image(i)).collect();
    let upper: Family =
        m0.iter().zip(&ext.proj.comps).map(|(u, p)| Subspace::preimage(p, u)).collect();
    let g: Vec<usize> = m0.iter().zip(n0).map(|(a, b)| a.dim() + b.dim()).collect();
    let cands = submodules_between(alg, &ext.middle, &lower, &upper, &g)?;
    Ok(cands
        .into_iter()
        .filter(|l0| {
            let (pm, pn) = psi_image(ext, l0);
            pm == m0 && pn == n0
        })
        .collect())
}
