use crate::{QtError, SqrtP, VLaurent};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// An element of the quantum torus for a fixed skew-symmetric `Λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    lambda: Vec<Vec<i64>>,
    terms: BTreeMap<Vec<i64>, VLaurent>,
}

fn is_skew(l: &[Vec<i64>]) -> bool {
    let n = l.len();
    l.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..n).all(|j| l[i][j] == -l[j][i]))
}

impl SkewPoly {
    pub fn zero(lambda: Vec<Vec<i64>>) -> Result<Self, QtError> {
        if !is_skew(&lambda) {
            return Err(QtError::BadLambda);
        }
        Ok(Self { lambda, terms: BTreeMap::new() })
    }

    /// `X^0`.
    pub fn one(lambda: Vec<Vec<i64>>) -> Result<Self, QtError> {
        let n = lambda.len();
        Self::monomial(lambda, vec![0; n], VLaurent::one())
    }

    /// `c · X^e`.
    pub fn monomial(lambda: Vec<Vec<i64>>, e: Vec<i64>, c: VLaurent) -> Result<Self, QtError> {
        let mut p = Self::zero(lambda)?;
        p.add_term(e, c)?;
        Ok(p)
    }

    /// Adds `c · X^e` in place.
    pub fn add_term(&mut self, e: Vec<i64>, c: VLaurent) -> Result<(), QtError> {
        if e.len() != self.n() {
            return Err(QtError::ExponentLength { expected: self.n(), got: e.len() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let sum = self.terms.get(&e).map_or(c.clone(), |old| old + &c);
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[Vec<i64>] {
        &self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &BTreeMap<Vec<i64>, VLaurent> {
        &self.terms
    }

    pub fn coeff(&self, e: &[i64]) -> VLaurent {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// `eᵀΛf`.
    pub fn lambda_form(&self, e: &[i64], f: &[i64]) -> i64 {
        (0..self.n()).map(|i| e[i] * (0..self.n()).map(|j| self.lambda[i][j] * f[j]).sum::<i64>()).sum()
    }

    fn check(&self, o: &SkewPoly) -> Result<(), QtError> {
        if self.lambda == o.lambda {
            Ok(())
        } else {
            Err(QtError::LambdaMismatch)
        }
    }

    pub fn add(&self, o: &SkewPoly) -> Result<SkewPoly, QtError> {
        self.check(o)?;
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, o: &SkewPoly) -> Result<SkewPoly, QtError> {
        self.add(&o.scale(&VLaurent::constant(-1)))
    }

    /// Multiplies every coefficient by a central scalar.
    pub fn scale(&self, c: &VLaurent) -> SkewPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.clone(), x * c))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        SkewPoly { lambda: self.lambda.clone(), terms }
    }

    /// Multiplies by `v^k`.
    pub fn scale_vpow(&self, k: i64) -> SkewPoly {
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x.shift(k))).collect();
        SkewPoly { lambda: self.lambda.clone(), terms }
    }

    /// Product under `X^e · X^f = v^{eᵀΛf} X^{e+f}`.
    pub fn mul(&self, o: &SkewPoly) -> Result<SkewPoly, QtError> {
        self.check(o)?;
        let mut out = SkewPoly { lambda: self.lambda.clone(), terms: BTreeMap::new() };
        for (e, x) in &self.terms {
            for (f, y) in &o.terms {
                let sum: Vec<i64> = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(sum, (x * y).shift(self.lambda_form(e, f)))?;
            }
        }
        Ok(out)
    }

    /// Coefficients evaluated at `v = √p`, zeros dropped.
    pub fn at_sqrt_p(&self, p: u32) -> BTreeMap<Vec<i64>, SqrtP> {
        self.terms
            .iter()
            .map(|(e, c)| (e.clone(), c.at_sqrt_p(p)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Whether the two agree after substituting `v = √p`.
    pub fn eq_at_sqrt_p(&self, o: &SkewPoly, p: u32) -> bool {
        self.lambda == o.lambda && self.at_sqrt_p(p) == o.at_sqrt_p(p)
    }

    /// Stable text form, e.g. `x^(-1,0) + v * x^(0,1)`.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    /// `{"lambda": …, "terms": [{"exp": …, "coeff": [[vpow, int], …]}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"exp": e, "coeff": c.terms().map(|(k, x)| [k, x]).collect::<Vec<_>>()}))
            .collect();
        json!({"lambda": self.lambda, "terms": terms})
    }

    /// Inverse of [`SkewPoly::to_json`].
    pub fn from_json(v: &Value) -> Option<SkewPoly> {
        let lambda: Vec<Vec<i64>> = serde_json::from_value(v.get("lambda")?.clone()).ok()?;
        let mut p = SkewPoly::zero(lambda).ok()?;
        for t in v.get("terms")?.as_array()? {
            let e: Vec<i64> = serde_json::from_value(t.get("exp")?.clone()).ok()?;
            let c: Vec<(i64, i64)> = serde_json::from_value(t.get("coeff")?.clone()).ok()?;
            p.add_term(e, VLaurent::from_pairs(c)).ok()?;
        }
        Some(p)
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let exp: Vec<String> = e.iter().map(i64::to_string).collect();
            let x = format!("x^({})", exp.join(","));
            // Single-term negative coefficients fold into the separator.
            let (neg, c) = match c.terms().collect::<Vec<_>>()[..] {
                [(_, k)] if k < 0 => (true, c.scale(-1)),
                _ => (false, c.clone()),
            };
            let body = if c == VLaurent::one() {
                x
            } else if c.len() == 1 {
                format!("{c} * {x}")
            } else {
                format!("({c}) * {x}")
            };
            match (idx, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// A solved coefficient with its pure-power classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coefficient {
    pub value: VLaurent,
    /// `Some(k)` when the coefficient is exactly `v^k`.
    pub pure_power: Option<i64>,
}

impl Coefficient {
    fn new(value: VLaurent) -> Self {
        let pure_power = value.pure_power();
        Self { value, pure_power }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoTermSolution {
    pub a: Coefficient,
    pub b: Coefficient,
}

/// The unique central coefficients with `P = cA·A + cB·B`, if they exist in
/// `Z[v, v⁻¹]`.
///
/// Each exponent in the joint support gives one linear equation in
/// `(cA, cB)`. Two equations with nonzero determinant fix the candidate by
/// Cramer's rule, which is then checked against every equation. When `A` and
/// `B` are proportional the solution is not unique and `None` is returned.
pub fn solve_two_term(p: &SkewPoly, a: &SkewPoly, b: &SkewPoly) -> Option<TwoTermSolution> {
    if p.lambda != a.lambda || p.lambda != b.lambda || a.is_zero() || b.is_zero() {
        return None;
    }
    let support: Vec<&Vec<i64>> = a
        .terms
        .keys()
        .chain(b.terms.keys())
        .chain(p.terms.keys())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let eqs: Vec<(VLaurent, VLaurent, VLaurent)> =
        support.iter().map(|e| (a.coeff(e), b.coeff(e), p.coeff(e))).collect();
    for (i, (a1, b1, p1)) in eqs.iter().enumerate() {
        for (a2, b2, p2) in &eqs[i + 1..] {
            let det = &(a1 * b2) - &(a2 * b1);
            if det.is_zero() {
                continue;
            }
            let ca = (&(p1 * b2) - &(p2 * b1)).exact_div(&det)?;
            let cb = (&(a1 * p2) - &(a2 * p1)).exact_div(&det)?;
            let ok = eqs.iter().all(|(x, y, z)| &(&(x * &ca) + &(y * &cb)) == z);
            return ok.then(|| TwoTermSolution { a: Coefficient::new(ca), b: Coefficient::new(cb) });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Vec<Vec<i64>> {
        vec![vec![0, 1], vec![-1, 0]]
    }

    fn x(e: &[i64]) -> SkewPoly {
        SkewPoly::monomial(a2(), e.to_vec(), VLaurent::one()).unwrap()
    }

    #[test]
    fn monomial_products() {
        assert_eq!(x(&[1, 0]).mul(&x(&[0, 1])).unwrap(), x(&[1, 1]).scale_vpow(1));
        assert_eq!(x(&[0, 1]).mul(&x(&[1, 0])).unwrap(), x(&[1, 1]).scale_vpow(-1));
        assert_eq!(x(&[3, -2]).mul(&x(&[0, 0])).unwrap(), x(&[3, -2]));
    }

    #[test]
    fn mismatched_lambda_is_rejected() {
        let other = SkewPoly::one(vec![vec![0, 2], vec![-2, 0]]).unwrap();
        assert_eq!(x(&[1, 0]).mul(&other), Err(QtError::LambdaMismatch));
        assert_eq!(x(&[1, 0]).add(&other), Err(QtError::LambdaMismatch));
        assert_eq!(SkewPoly::zero(vec![vec![0, 1], vec![1, 0]]), Err(QtError::BadLambda));
        let mut p = x(&[0, 0]);
        assert!(p.add_term(vec![1], VLaurent::one()).is_err());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(x(&[-1, 0]).add(&x(&[-1, 1])).unwrap().to_string(), "x^(-1,0) + x^(-1,1)");
        assert_eq!(x(&[0, 0]).scale_vpow(1).to_string(), "v * x^(0,0)");
        assert_eq!(SkewPoly::zero(a2()).unwrap().to_string(), "0");
        let p = x(&[1, 0]).sub(&x(&[0, 1]).scale(&VLaurent::from_pairs([(0, 1), (2, 1)]))).unwrap();
        assert_eq!(p.to_string(), "(-1 - v^2) * x^(0,1) + x^(1,0)");
        let q = x(&[0, 0]).sub(&x(&[0, 1]).scale_vpow(-1)).unwrap();
        assert_eq!(q.to_string(), "x^(0,0) - v^-1 * x^(0,1)");
    }

    #[test]
    fn json_roundtrip() {
        let p = x(&[1, -1]).scale_vpow(2).add(&x(&[0, 3])).unwrap();
        let v = p.to_json();
        assert_eq!(v["terms"][0]["exp"], json!([0, 3]));
        assert_eq!(SkewPoly::from_json(&v), Some(p));
    }

    #[test]
    fn two_term_solutions() {
        let a = x(&[-1, 0]).add(&x(&[-1, 1])).unwrap();
        let b = x(&[0, -1]);
        let sol = solve_two_term(&a, &a, &b).unwrap();
        assert_eq!((sol.a.pure_power, sol.b.value.is_zero()), (Some(0), true));
        let p = a.scale_vpow(1).add(&b.scale(&VLaurent::constant(2))).unwrap();
        let sol = solve_two_term(&p, &a, &b).unwrap();
        assert_eq!(sol.a.pure_power, Some(1));
        assert_eq!(sol.b.pure_power, None);
        assert_eq!(sol.b.value, VLaurent::constant(2));
        assert_eq!(solve_two_term(&x(&[5, 5]), &a, &b), None);
        assert_eq!(solve_two_term(&a, &a, &a), None);
    }
}
