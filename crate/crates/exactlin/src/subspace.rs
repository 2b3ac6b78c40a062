use crate::{FMatrix, LinError, PrimeField};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// Default cap on the number of subspaces a single enumeration may return.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// A linear subspace of GF(p)^n held in reduced row echelon form, so equal
/// subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    pivots: Vec<usize>,
    basis: FMatrix,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self { ambient, pivots: Vec::new(), basis: FMatrix::zeros(field, 0, ambient) }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self {
            ambient,
            pivots: (0..ambient).collect(),
            basis: FMatrix::identity(field, ambient),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        let rows: Vec<Vec<i64>> =
            vectors.iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect();
        Self::row_space(&FMatrix::from_rows(field, ambient, &rows))
    }

    /// Row space of a matrix.
    pub fn row_space(m: &FMatrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = r.block(0, 0, pivots.len(), m.cols());
        Self { ambient: m.cols(), pivots, basis }
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Echelon basis, one row per basis vector.
    pub fn basis(&self) -> &FMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.to_rows()
    }

    /// Reduces `v` against the echelon basis; the result is zero at every pivot
    /// and is zero overall iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let mut out = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            for (j, &b) in self.basis.row(i).iter().enumerate() {
                out[j] = f.sub(out[j], f.mul(c, b));
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Linear combination of the echelon basis with the given coefficients.
    pub fn combine(&self, coeffs: &[u32]) -> Vec<u32> {
        assert_eq!(coeffs.len(), self.dim());
        let f = self.field();
        let mut out = vec![0u32; self.ambient];
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, &b) in self.basis.row(i).iter().enumerate() {
                out[j] = f.add(out[j], f.mul(c, b));
            }
        }
        out
    }

    /// Non-pivot coordinates, a basis of the quotient `GF(p)^n / self`.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Coordinates of the class of `v` in the quotient by this subspace,
    /// relative to the standard complement on the non-pivot columns.
    pub fn quotient_coords(&self, v: &[u32]) -> Vec<u32> {
        let r = self.reduce(v);
        self.non_pivots().iter().map(|&c| r[c]).collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Self::row_space(&self.basis.vstack(&other.basis))
    }

    /// Vectors `z` with `z·w = 0` for every `w` in the subspace.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel_basis()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let f = self.field();
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(f, self.ambient);
        }
        // x = Σ c_i u_i lies in `other` iff every annihilator row kills it.
        let ann = other.annihilator();
        let cond = ann.basis.mul(&self.basis.transpose());
        let coeffs = cond.kernel_basis();
        let vecs: Vec<Vec<u32>> =
            coeffs.basis_vectors().iter().map(|c| self.combine(c)).collect();
        Subspace::span(f, self.ambient, &vecs)
    }

    /// Image `m(self)` for a matrix `m` with `cols = ambient`.
    pub fn image(&self, m: &FMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vecs: Vec<Vec<u32>> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field(), m.rows(), &vecs)
    }

    /// Preimage `{x : m·x ∈ target}` for a matrix `m` with `rows = target.ambient`.
    pub fn preimage(m: &FMatrix, target: &Subspace) -> Subspace {
        assert_eq!(m.rows(), target.ambient);
        let ann = target.annihilator();
        if ann.dim() == 0 {
            return Subspace::full(m.field(), m.cols());
        }
        ann.basis.mul(m).kernel_basis()
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.dim(), &self.pivots, self.basis.data()).cmp(&(
            other.ambient,
            other.dim(),
            &other.pivots,
            other.basis.data(),
        ))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, {:?})", self.ambient, self.basis_vectors())
    }
}

/// Gaussian binomial coefficient `[n choose k]_p`, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: usize, k: usize, p: u32) -> u128 {
    if k > n {
        return 0;
    }
    let p = p as u128;
    let pw = |e: usize| -> Option<u128> {
        let mut r: u128 = 1;
        for _ in 0..e {
            r = r.checked_mul(p)?;
        }
        Some(r)
    };
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        let (Some(a), Some(b), Some(c)) = (pw(n), pw(i), pw(k)) else {
            return u128::MAX;
        };
        let Some(nn) = num.checked_mul(a - b) else {
            return u128::MAX;
        };
        num = nn;
        den *= c - b;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All `k`-dimensional subspaces of GF(p)^n in canonical order: by pivot set
/// (lexicographic), then by the free echelon entries (row-major, lexicographic).
pub fn enumerate_subspaces(
    n: usize,
    k: usize,
    field: PrimeField,
    cap: u64,
) -> Result<Vec<Subspace>, LinError> {
    if k > n {
        return Err(LinError::InvalidDimension(format!("k = {k} exceeds ambient {n}")));
    }
    let count = gaussian_binomial(n, k, field.p());
    if count > cap as u128 {
        return Err(LinError::CapExceeded { requested: count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    for pivots in combinations(n, k) {
        // Free positions: row r, columns after its pivot that are not pivots.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let mut vals = vec![0u32; free.len()];
        loop {
            let mut m = FMatrix::zeros(field, k, n);
            for (r, &pc) in pivots.iter().enumerate() {
                m.set(r, pc, 1);
            }
            for (&(r, c), &v) in free.iter().zip(&vals) {
                m.set(r, c, v);
            }
            out.push(Subspace { ambient: n, pivots: pivots.clone(), basis: m });
            if !increment(&mut vals, field.p()) {
                break;
            }
        }
    }
    Ok(out)
}

/// All `k`-dimensional subspaces `V` with `lower ⊆ V ⊆ upper`, sorted canonically.
pub fn subspaces_between(
    lower: &Subspace,
    upper: &Subspace,
    k: usize,
    cap: u64,
) -> Result<Vec<Subspace>, LinError> {
    let field = upper.field();
    let n = upper.ambient();
    if !lower.is_subspace_of(upper) || k < lower.dim() || k > upper.dim() {
        return Ok(Vec::new());
    }
    let complement: Vec<Vec<u32>> = {
        let reduced: Vec<Vec<u32>> =
            upper.basis_vectors().iter().map(|v| lower.reduce(v)).collect();
        Subspace::span(field, n, &reduced).basis_vectors()
    };
    let inner = enumerate_subspaces(complement.len(), k - lower.dim(), field, cap)?;
    let lower_vecs = lower.basis_vectors();
    let mut out: Vec<Subspace> = inner
        .iter()
        .map(|s| {
            let mut vecs = lower_vecs.clone();
            for coeffs in s.basis_vectors() {
                let mut v = vec![0u32; n];
                for (c, w) in coeffs.iter().zip(&complement) {
                    for (x, &y) in v.iter_mut().zip(w) {
                        *x = field.add(*x, field.mul(*c, y));
                    }
                }
                vecs.push(v);
            }
            Subspace::span(field, n, &vecs)
        })
        .collect();
    out.sort();
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Odometer increment in base `p`, most significant digit first.
fn increment(vals: &mut [u32], p: u32) -> bool {
    for v in vals.iter_mut().rev() {
        *v += 1;
        if *v < p {
            return true;
        }
        *v = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_subspaces(2, 1, gf(2), DEFAULT_CAP).unwrap().len(), 3);
        assert_eq!(enumerate_subspaces(4, 2, gf(2), DEFAULT_CAP).unwrap().len(), 35);
        assert_eq!(enumerate_subspaces(3, 0, gf(3), DEFAULT_CAP).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let all = enumerate_subspaces(4, 2, gf(3), DEFAULT_CAP).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_subspaces(4, 2, gf(2), 10).unwrap_err();
        assert_eq!(err, LinError::CapExceeded { requested: 35, cap: 10 });
    }

    #[test]
    fn between_counts() {
        let f = gf(2);
        let lower = Subspace::span(f, 3, &[vec![1, 0, 0]]);
        let upper = Subspace::full(f, 3);
        // Planes through a fixed line in GF(2)^3.
        assert_eq!(subspaces_between(&lower, &upper, 2, DEFAULT_CAP).unwrap().len(), 3);
    }

    #[test]
    fn intersection_and_preimage() {
        let f = gf(3);
        let u = Subspace::span(f, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let w = Subspace::span(f, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(u.intersect(&w), Subspace::span(f, 3, &[vec![0, 1, 0]]));
        let m = FMatrix::from_rows(f, 2, &[vec![1, 0], vec![0, 0], vec![0, 1]]);
        let pre = Subspace::preimage(&m, &w);
        assert_eq!(pre, Subspace::span(f, 2, &[vec![0, 1]]));
    }
}
