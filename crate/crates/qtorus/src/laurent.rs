use crate::SqrtP;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer Laurent polynomial in `v`, stored as `power → coefficient` with no
/// zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VLaurent {
    terms: BTreeMap<i64, i64>,
}

impl VLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `v^k`.
    pub fn vpow(k: i64) -> Self {
        Self::monomial(1, k)
    }

    /// `c · v^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from `(power, coefficient)` pairs, summing repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in pairs {
            out.add_term(k, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, k: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(power, coefficient)` pairs in ascending power.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn coeff(&self, k: i64) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_pairs(self.terms().map(|(k, x)| (k, x * c)))
    }

    /// `Some(k)` when this is exactly `v^k`.
    pub fn pure_power(&self) -> Option<i64> {
        match self.terms.iter().collect::<Vec<_>>()[..] {
            [(&k, &1)] => Some(k),
            _ => None,
        }
    }

    pub fn min_power(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_power(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Exact quotient in `Z[v, v⁻¹]`, if one exists.
    ///
    /// Both sides are shifted to ordinary polynomials with nonzero constant
    /// term, where Laurent divisibility coincides with polynomial
    /// divisibility; long division then runs from the top degree.
    pub fn exact_div(&self, d: &VLaurent) -> Option<VLaurent> {
        let (dlo, dhi) = (d.min_power()?, d.max_power()?);
        let Some(plo) = self.min_power() else {
            return Some(Self::zero());
        };
        let lead = d.coeff(dhi);
        let mut rem = self.shift(-plo);
        let dd = d.shift(-dlo);
        let ddeg = dhi - dlo;
        let mut q = Self::zero();
        while let Some(top) = rem.max_power() {
            if top < ddeg {
                return None;
            }
            let c = rem.coeff(top);
            if c % lead != 0 {
                return None;
            }
            let t = Self::monomial(c / lead, top - ddeg);
            rem = &rem - &(&t * &dd);
            q = &q + &t;
        }
        Some(q.shift(plo - dlo))
    }

    /// Value at `v = √p`.
    pub fn at_sqrt_p(&self, p: u32) -> SqrtP {
        self.terms().fold(SqrtP::zero(p), |acc, (k, c)| acc.add(&SqrtP::vpow(p, k).scale(c)))
    }

    /// Number of `+`-separated terms when printed.
    pub(crate) fn len(&self) -> usize {
        self.terms.len()
    }
}

impl Add for &VLaurent {
    type Output = VLaurent;
    fn add(self, o: &VLaurent) -> VLaurent {
        let mut out = self.clone();
        for (k, c) in o.terms() {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &VLaurent {
    type Output = VLaurent;
    fn sub(self, o: &VLaurent) -> VLaurent {
        self + &(-o)
    }
}

impl Neg for &VLaurent {
    type Output = VLaurent;
    fn neg(self) -> VLaurent {
        self.scale(-1)
    }
}

impl Mul for &VLaurent {
    type Output = VLaurent;
    fn mul(self, o: &VLaurent) -> VLaurent {
        let mut out = VLaurent::zero();
        for (a, x) in self.terms() {
            for (b, y) in o.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

fn power_str(k: i64) -> String {
    match k {
        1 => "v".to_string(),
        _ => format!("v^{k}"),
    }
}

/// Ascending powers: `1 + 2*v - v^-1` prints as `-v^-1 + 1 + 2*v`.
impl fmt::Display for VLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms().enumerate() {
            let body = match (k, c.abs()) {
                (0, a) => a.to_string(),
                (_, 1) => power_str(k),
                (_, a) => format!("{a}*{}", power_str(k)),
            };
            match (idx, c < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = VLaurent::from_pairs([(0, 1), (2, 1)]);
        let b = VLaurent::from_pairs([(0, 1), (2, -1)]);
        assert_eq!(&a * &b, VLaurent::from_pairs([(0, 1), (4, -1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(a.shift(-1).to_string(), "v^-1 + v");
        assert_eq!(VLaurent::from_pairs([(-1, -1), (0, 1), (1, 2)]).to_string(), "-v^-1 + 1 + 2*v");
        assert_eq!(VLaurent::zero().to_string(), "0");
        assert_eq!(VLaurent::vpow(3).pure_power(), Some(3));
        assert_eq!(VLaurent::monomial(2, 3).pure_power(), None);
    }

    #[test]
    fn exact_division() {
        let a = VLaurent::from_pairs([(-1, 1), (1, 1)]);
        let b = VLaurent::from_pairs([(0, 2), (3, -1)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a));
        assert_eq!(VLaurent::one().exact_div(&b), None);
        assert_eq!(VLaurent::constant(3).exact_div(&VLaurent::constant(2)), None);
        assert_eq!(VLaurent::zero().exact_div(&b), Some(VLaurent::zero()));
        assert_eq!(b.exact_div(&VLaurent::zero()), None);
    }
}
