use crate::GeomError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A vertex sequence `i` with 0/1 flags `a` of equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagType {
    pub i: Vec<usize>,
    pub a: Vec<u8>,
}

impl FlagType {
    pub fn new(i: Vec<usize>, a: Vec<u8>) -> Result<Self, GeomError> {
        if i.len() != a.len() {
            return Err(GeomError::InvalidFlag(format!(
                "{} vertices but {} flags",
                i.len(),
                a.len()
            )));
        }
        if let Some(x) = a.iter().find(|&&x| x > 1) {
            return Err(GeomError::InvalidFlag(format!("flag value {x} is not 0 or 1")));
        }
        if i.contains(&0) {
            return Err(GeomError::InvalidFlag("vertex labels start at 1".into()));
        }
        Ok(Self { i, a })
    }

    /// All flags set.
    pub fn full(i: Vec<usize>) -> Self {
        let a = vec![1; i.len()];
        Self { i, a }
    }

    /// Parses `"1,2;1,1"` (vertices, then flags). The empty type is `";"`.
    pub fn parse(s: &str) -> Result<Self, GeomError> {
        let (vs, fs) = s
            .split_once(';')
            .ok_or_else(|| GeomError::InvalidFlag(format!("missing `;` in `{s}`")))?;
        fn nums<T: std::str::FromStr>(part: &str) -> Result<Vec<T>, GeomError> {
            part.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| GeomError::InvalidFlag(format!("bad entry `{x}`"))))
                .collect()
        }
        Self::new(nums(vs)?, nums(fs)?)
    }

    pub fn len(&self) -> usize {
        self.i.len()
    }

    pub fn is_empty(&self) -> bool {
        self.i.is_empty()
    }

    /// Number of set flags at each vertex: the dimension vector a module must
    /// have to admit a chain of this type.
    pub fn dim_vector(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for (&v, &x) in self.i.iter().zip(&self.a) {
            if x == 1 && v <= n {
                d[v - 1] += 1;
            }
        }
        d
    }

    /// Same vertices with different flags.
    pub fn with_flags(&self, a: Vec<u8>) -> Result<Self, GeomError> {
        Self::new(self.i.clone(), a)
    }

    /// All ways to write `a = a′ + a″` with 0/1 entries, `a′` first.
    pub fn splits(&self) -> Vec<(FlagType, FlagType)> {
        let ones: Vec<usize> = (0..self.len()).filter(|&j| self.a[j] == 1).collect();
        (0u64..1 << ones.len())
            .map(|mask| {
                let mut a1 = vec![0u8; self.len()];
                let mut a2 = vec![0u8; self.len()];
                for (b, &j) in ones.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        a2[j] = 1;
                    } else {
                        a1[j] = 1;
                    }
                }
                (Self { i: self.i.clone(), a: a1 }, Self { i: self.i.clone(), a: a2 })
            })
            .collect()
    }

    /// Entrywise sum of flags over the same vertex sequence.
    pub fn combine(&self, other: &FlagType) -> Result<FlagType, GeomError> {
        if self.i != other.i {
            return Err(GeomError::TypeMismatch(format!(
                "vertex sequences {:?} and {:?} differ",
                self.i, other.i
            )));
        }
        let a: Vec<u8> = self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect();
        if a.iter().any(|&x| x > 1) {
            return Err(GeomError::TypeMismatch(format!("flags {:?} + {:?} exceed 1", self.a, other.a)));
        }
        Ok(FlagType { i: self.i.clone(), a })
    }

    /// Every vertex sequence over `1..=n` of length at most `depth`, shortest
    /// first, then lexicographic.
    pub fn sequences(n: usize, depth: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..depth {
            layer = layer
                .iter()
                .flat_map(|s: &Vec<usize>| {
                    (1..=n).map(move |v| {
                        let mut t = s.clone();
                        t.push(v);
                        t
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    /// Every flag vector over a vertex sequence, lexicographic.
    pub fn all_flags(i: &[usize]) -> Vec<FlagType> {
        let m = i.len();
        (0u64..1 << m)
            .map(|mask| FlagType {
                i: i.to_vec(),
                a: (0..m).map(|j| (mask >> (m - 1 - j) & 1) as u8).collect(),
            })
            .collect()
    }

    /// Every type of length at most `depth` over `1..=n`.
    pub fn all_of_depth(n: usize, depth: usize) -> Vec<FlagType> {
        Self::sequences(n, depth).iter().flat_map(|i| Self::all_flags(i)).collect()
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: Vec<String>| xs.join(",");
        write!(
            f,
            "{};{}",
            join(self.i.iter().map(|x| x.to_string()).collect()),
            join(self.a.iter().map(|x| x.to_string()).collect())
        )
    }
}
