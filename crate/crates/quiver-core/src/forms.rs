use crate::{Quiver, QuiverError};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Square integer matrix stored as rows.
pub type IntMatrix = Vec<Vec<i64>>;

/// Failures of the compatibility equation `Λ·(−B̃) = D`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("−B̃ is singular; supply Λ explicitly")]
    Singular,
    #[error("the solution of Λ(−B̃) = D is not integral; supply Λ explicitly")]
    NonIntegral,
    #[error("the solution of Λ(−B̃) = D is not skew-symmetric; supply Λ explicitly")]
    NotSkew,
    #[error("Λ(−B̃) ≠ D")]
    Incompatible,
    #[error("matrix shape or sign error: {0}")]
    Invalid(String),
}

/// Euler form, skew matrix, valuation diagonal and (optionally) Λ of a quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerData {
    pub euler: IntMatrix,
    pub btilde: IntMatrix,
    pub d: Vec<i64>,
    pub lambda: Option<IntMatrix>,
}

impl EulerData {
    /// Computes `E` and `B̃`; attempts `Λ` from `D` (identity by default).
    pub fn compute(q: &Quiver, d: Option<Vec<i64>>) -> Result<Self, QuiverError> {
        let euler = euler_matrix(q)?;
        let bt = btilde(q)?;
        let d = d.unwrap_or_else(|| vec![1; q.n()]);
        let lambda = compatible_lambda(&bt, &d).ok();
        Ok(Self { euler, btilde: bt, d, lambda })
    }
}

fn require_hereditary(q: &Quiver) -> Result<(), QuiverError> {
    if q.has_relations() {
        return Err(QuiverError::HasRelations);
    }
    if !q.is_acyclic() {
        return Err(QuiverError::Cyclic);
    }
    Ok(())
}

/// `E_ii = 1`, `E_ij = −#(arrows i → j)`, so `⟨d, e⟩ = dᵀ E e`.
pub fn euler_matrix(q: &Quiver) -> Result<IntMatrix, QuiverError> {
    require_hereditary(q)?;
    let n = q.n();
    Ok((1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| if i == j { 1 } else { -(q.count_arrows(i, j) as i64) })
                .collect()
        })
        .collect())
}

/// `B̃_ij = #(i → j) − #(j → i)`.
pub fn btilde(q: &Quiver) -> Result<IntMatrix, QuiverError> {
    require_hereditary(q)?;
    let n = q.n();
    Ok((1..=n)
        .map(|i| {
            (1..=n).map(|j| q.count_arrows(i, j) as i64 - q.count_arrows(j, i) as i64).collect()
        })
        .collect())
}

pub fn euler_form(e: &IntMatrix, x: &[i64], y: &[i64]) -> i64 {
    bilinear(e, x, y)
}

/// `⟨x, y⟩_a = ⟨x, y⟩ − ⟨y, x⟩`.
pub fn skew_euler_form(e: &IntMatrix, x: &[i64], y: &[i64]) -> i64 {
    bilinear(e, x, y) - bilinear(e, y, x)
}

/// `λ(x, y) = xᵀ Λ y`.
pub fn lambda_form(lambda: &IntMatrix, x: &[i64], y: &[i64]) -> i64 {
    bilinear(lambda, x, y)
}

fn bilinear(m: &IntMatrix, x: &[i64], y: &[i64]) -> i64 {
    assert_eq!(m.len(), x.len());
    m.iter()
        .zip(x)
        .map(|(row, &xi)| {
            assert_eq!(row.len(), y.len());
            xi * row.iter().zip(y).map(|(&a, &b)| a * b).sum::<i64>()
        })
        .sum()
}

fn is_skew(m: &IntMatrix) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..n).all(|j| m[i][j] == -m[j][i]))
}

/// Solves `Λ·(−B̃) = D` for `Λ = D·(−B̃)⁻¹` over the rationals.
pub fn compatible_lambda(bt: &IntMatrix, d: &[i64]) -> Result<IntMatrix, LambdaError> {
    let n = bt.len();
    if !is_skew(bt) {
        return Err(LambdaError::Invalid("B̃ is not skew-symmetric".into()));
    }
    if d.len() != n || d.iter().any(|&x| x <= 0) {
        return Err(LambdaError::Invalid("D must be a positive diagonal of matching size".into()));
    }
    let neg: Vec<Vec<Ratio<i128>>> =
        bt.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(-(x as i128))).collect()).collect();
    let inv = invert(neg).ok_or(LambdaError::Singular)?;
    let mut lambda = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = inv[i][j] * Ratio::from_integer(d[i] as i128);
            if !v.is_integer() {
                return Err(LambdaError::NonIntegral);
            }
            lambda[i][j] = v.to_integer() as i64;
        }
    }
    if !is_skew(&lambda) {
        return Err(LambdaError::NotSkew);
    }
    Ok(lambda)
}

/// Checks a user-supplied `Λ`: skew-symmetric and `Λ·(−B̃) = D`.
pub fn validate_lambda(lambda: &IntMatrix, bt: &IntMatrix, d: &[i64]) -> Result<(), LambdaError> {
    let n = bt.len();
    if lambda.len() != n || !is_skew(lambda) {
        return Err(LambdaError::NotSkew);
    }
    for i in 0..n {
        for j in 0..n {
            let v: i64 = (0..n).map(|k| -lambda[i][k] * bt[k][j]).sum();
            if v != if i == j { d[i] } else { 0 } {
                return Err(LambdaError::Incompatible);
            }
        }
    }
    Ok(())
}

fn invert(mut m: Vec<Vec<Ratio<i128>>>) -> Option<Vec<Vec<Ratio<i128>>>> {
    let n = m.len();
    let zero = Ratio::from_integer(0);
    let mut inv: Vec<Vec<Ratio<i128>>> = (0..n)
        .map(|i| (0..n).map(|j| Ratio::from_integer((i == j) as i128)).collect())
        .collect();
    for col in 0..n {
        let sel = (col..n).find(|&r| m[r][col] != zero)?;
        m.swap(sel, col);
        inv.swap(sel, col);
        let piv = m[col][col];
        for j in 0..n {
            m[col][j] /= piv;
            inv[col][j] /= piv;
        }
        for r in 0..n {
            if r == col || m[r][col] == zero {
                continue;
            }
            let f = m[r][col];
            for j in 0..n {
                let a = m[col][j];
                let b = inv[col][j];
                m[r][j] -= f * a;
                inv[r][j] -= f * b;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_examples() {
        assert_eq!(euler_matrix(&Quiver::linear_a(2)).unwrap(), vec![vec![1, -1], vec![0, 1]]);
        assert_eq!(euler_matrix(&Quiver::kronecker()).unwrap(), vec![vec![1, -2], vec![0, 1]]);
        assert_eq!(euler_matrix(&Quiver::new(2, &[])).unwrap(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(euler_matrix(&Quiver::preprojective_a2()), Err(QuiverError::HasRelations));
        let cyc = Quiver::new(2, &[("a", 1, 2), ("b", 2, 1)]);
        assert_eq!(euler_matrix(&cyc), Err(QuiverError::Cyclic));
    }

    #[test]
    fn btilde_examples() {
        assert_eq!(btilde(&Quiver::linear_a(2)).unwrap(), vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(btilde(&Quiver::kronecker()).unwrap(), vec![vec![0, 2], vec![-2, 0]]);
        assert_eq!(btilde(&Quiver::new(3, &[])).unwrap(), vec![vec![0; 3]; 3]);
    }

    #[test]
    fn lambda_examples() {
        let a2 = btilde(&Quiver::linear_a(2)).unwrap();
        assert_eq!(compatible_lambda(&a2, &[1, 1]).unwrap(), vec![vec![0, 1], vec![-1, 0]]);
        let a3 = btilde(&Quiver::linear_a(3)).unwrap();
        assert_eq!(compatible_lambda(&a3, &[1, 1, 1]), Err(LambdaError::Singular));
        let k2 = btilde(&Quiver::kronecker()).unwrap();
        assert_eq!(compatible_lambda(&k2, &[2, 2]).unwrap(), vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(compatible_lambda(&k2, &[1, 1]), Err(LambdaError::NonIntegral));
        assert_eq!(compatible_lambda(&k2, &[2, 4]), Err(LambdaError::NotSkew));
    }

    #[test]
    fn validate_lambda_checks_equation() {
        let a2 = btilde(&Quiver::linear_a(2)).unwrap();
        assert!(validate_lambda(&vec![vec![0, 1], vec![-1, 0]], &a2, &[1, 1]).is_ok());
        assert_eq!(
            validate_lambda(&vec![vec![0, -1], vec![1, 0]], &a2, &[1, 1]),
            Err(LambdaError::Incompatible)
        );
        assert_eq!(
            validate_lambda(&vec![vec![0, 1], vec![1, 0]], &a2, &[1, 1]),
            Err(LambdaError::NotSkew)
        );
    }
}
