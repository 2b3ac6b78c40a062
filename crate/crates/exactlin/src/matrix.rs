use crate::{PrimeField, Subspace};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Dense row-major matrix over GF(p).
///
/// Shape mismatches in arithmetic are programming errors and panic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FMatrix {
    rows: usize,
    cols: usize,
    field: PrimeField,
    data: Vec<u32>,
}

/// Result of [`FMatrix::solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Option<Vec<u32>>,
    pub kernel: Subspace,
}

impl FMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { rows, cols, field, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major data, reducing every entry mod p.
    pub fn from_data(field: PrimeField, rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        let data = data.iter().map(|&x| field.reduce(x)).collect();
        Self { rows, cols, field, data }
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {r}");
            for (c, &x) in row.iter().enumerate() {
                m.data[r * cols + c] = field.reduce(x);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors of length `len`.
    pub fn from_columns(field: PrimeField, len: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, len, cols.len());
        for (c, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), len);
            for (r, &x) in v.iter().enumerate() {
                m.data[r * cols.len() + c] = x % field.p();
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let p = self.field.p() as u64;
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] =
                        ((out.data[idx] as u64 + a * other.data[k * other.cols + c] as u64) % p)
                            as u32;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64 % p).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in add");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Self { data, ..self.clone() }
    }

    pub fn sub(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sub");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Self { data, ..self.clone() }
    }

    pub fn scale(&self, c: u32) -> FMatrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Self { data, ..self.clone() }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.field, self.rows, cols);
        for r in 0..self.rows {
            out.data[r * cols..r * cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * cols + self.cols..(r + 1) * cols].copy_from_slice(other.row(r));
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block2(a: &FMatrix, b: &FMatrix, c: &FMatrix, d: &FMatrix) -> FMatrix {
        a.hstack(b).vstack(&c.hstack(d))
    }

    /// Copy of the sub-block starting at `(r0, c0)` with the given shape.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> FMatrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = Self::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.data[r * cols + c] = self.data[(r0 + r) * self.cols + c0 + c];
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (FMatrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(sel) = (row..m.rows).find(|&r| m.data[r * m.cols + col] != 0) else {
                continue;
            };
            if sel != row {
                for c in 0..m.cols {
                    m.data.swap(sel * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m.data[row * m.cols + col]);
            for c in 0..m.cols {
                let i = row * m.cols + c;
                m.data[i] = f.mul(m.data[i], inv);
            }
            for r in 0..m.rows {
                let factor = m.data[r * m.cols + col];
                if r == row || factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let sub = f.mul(factor, m.data[row * m.cols + c]);
                    let i = r * m.cols + c;
                    m.data[i] = f.sub(m.data[i], sub);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The null space `{x : self·x = 0}` as a canonical subspace of GF(p)^cols.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vecs: Vec<Vec<u32>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![0u32; self.cols];
                v[fc] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, fc));
                }
                v
            })
            .collect();
        Subspace::span(f, self.cols, &vecs)
    }

    /// Solves `self·x = rhs`, returning a particular solution when consistent
    /// and the homogeneous kernel in any case.
    pub fn solve(&self, rhs: &[u32]) -> Solution {
        assert_eq!(rhs.len(), self.rows, "rhs length must equal row count");
        let f = self.field;
        let aug = self.hstack(&FMatrix::from_columns(f, self.rows, &[rhs.to_vec()]));
        let (r, pivots) = aug.rref();
        let kernel = self.kernel_basis();
        if pivots.last() == Some(&self.cols) {
            return Solution { particular: None, kernel };
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols);
        }
        Solution { particular: Some(x), kernel }
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<FMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&FMatrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FMatrix<GF({})>{:?}", self.field.p(), self.to_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f = gf(2);
        assert_eq!(FMatrix::identity(f, 2).rank(), 2);
        assert_eq!(FMatrix::from_rows(f, 2, &[vec![1, 1], vec![1, 1]]).rank(), 1);
        assert_eq!(FMatrix::zeros(f, 3, 4).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(2);
        let k = FMatrix::from_rows(f, 2, &[vec![1, 1]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[1, 1]));
        assert_eq!(FMatrix::identity(f, 3).kernel_basis().dim(), 0);
        assert_eq!(FMatrix::zeros(f, 2, 3).kernel_basis().dim(), 3);
    }

    #[test]
    fn solve_examples() {
        let f = gf(2);
        let s = FMatrix::identity(f, 2).solve(&[1, 0]);
        assert_eq!(s.particular, Some(vec![1, 0]));
        assert_eq!(s.kernel.dim(), 0);
        assert_eq!(FMatrix::zeros(f, 2, 2).solve(&[1, 0]).particular, None);
        let s = FMatrix::from_rows(f, 2, &[vec![1, 1]]).solve(&[1]);
        assert_eq!(s.particular, Some(vec![1, 0]));
        assert!(s.kernel.contains(&[1, 1]) && s.kernel.dim() == 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = gf(5);
        let m = FMatrix::from_rows(f, 2, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FMatrix::identity(f, 2));
        assert!(FMatrix::from_rows(f, 2, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn negative_entries_reduce() {
        let m = FMatrix::from_rows(gf(3), 2, &[vec![-1, 4]]);
        assert_eq!(m.row(0), &[2, 1]);
    }
}
