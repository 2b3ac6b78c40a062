use crate::{ChainCtx, Half, SubCtx, WeightError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// The named weights. `f_*` live on chain pairs, `g_*` and `l_dim` on
/// submodule pairs; `zero` and `user_table` on both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightName {
    Zero,
    FHom,
    FPlusExt,
    FMinusExt,
    GSkew,
    GPlusExt,
    GMinusExt,
    #[serde(rename = "g_MN")]
    GMn,
    GSigma,
    LDim,
    UserTable,
}

const NAMES: [(WeightName, &str); 11] = [
    (WeightName::Zero, "zero"),
    (WeightName::FHom, "f_hom"),
    (WeightName::FPlusExt, "f_plus_ext"),
    (WeightName::FMinusExt, "f_minus_ext"),
    (WeightName::GSkew, "g_skew"),
    (WeightName::GPlusExt, "g_plus_ext"),
    (WeightName::GMinusExt, "g_minus_ext"),
    (WeightName::GMn, "g_MN"),
    (WeightName::GSigma, "g_sigma"),
    (WeightName::LDim, "l_dim"),
    (WeightName::UserTable, "user_table"),
];

impl WeightName {
    pub fn as_str(self) -> &'static str {
        NAMES.iter().find(|(w, _)| *w == self).map(|(_, s)| *s).expect("every name listed")
    }
}

impl fmt::Display for WeightName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WeightName {
    type Err = WeightError;
    fn from_str(s: &str) -> Result<Self, WeightError> {
        NAMES
            .iter()
            .find(|(_, n)| *n == s)
            .map(|(w, _)| *w)
            .ok_or_else(|| WeightError::UnknownName(s.to_string()))
    }
}

/// A pointwise sum of named weights, optionally with an explicit table for
/// `user_table` terms.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct WeightExpr {
    pub terms: Vec<WeightName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub user_table: Option<BTreeMap<String, i64>>,
}

impl WeightExpr {
    pub fn zero() -> Self {
        Self::named(WeightName::Zero)
    }

    pub fn named(w: WeightName) -> Self {
        Self { terms: vec![w], user_table: None }
    }

    /// A `user_table` weight read from a JSON object of half-unit integers.
    pub fn from_table_json(s: &str) -> Result<Self, WeightError> {
        let table: BTreeMap<String, i64> =
            serde_json::from_str(s).map_err(|e| WeightError::BadTable(e.to_string()))?;
        Ok(Self { terms: vec![WeightName::UserTable], user_table: Some(table) })
    }

    /// Pointwise sum. Terms keep their order, so the rightmost factor of
    /// `w1 * w2` is the last term; tables are merged by adding entries.
    pub fn compose(&self, other: &WeightExpr) -> WeightExpr {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().copied());
        let user_table = match (&self.user_table, &other.user_table) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => {
                let mut m = a.clone();
                for (k, v) in b {
                    *m.entry(k.clone()).or_insert(0) += v;
                }
                Some(m)
            }
        };
        // A merged table already sums both sides, so keep one lookup.
        if self.user_table.is_some() && other.user_table.is_some() {
            let mut seen = false;
            terms.retain(|t| {
                if *t != WeightName::UserTable {
                    return true;
                }
                let keep = !seen;
                seen = true;
                keep
            });
        }
        WeightExpr { terms, user_table }
    }

    /// The weight whose support decides where the composite is supported.
    pub fn support_term(&self) -> Option<WeightName> {
        self.terms.last().copied()
    }

    fn table_lookup(&self, key: &str) -> Result<Half, WeightError> {
        let table = self.user_table.as_ref().ok_or_else(|| WeightError::BadTable("no table given".into()))?;
        table.get(key).map(|&h| Half(h)).ok_or_else(|| WeightError::MissingKey(key.to_string()))
    }

    /// Value on a chain pair.
    pub fn eval_chains(&self, ctx: &ChainCtx<'_>) -> Result<Half, WeightError> {
        let mut acc = Half(0);
        for &t in &self.terms {
            acc = acc
                + match t {
                    WeightName::Zero => Half(0),
                    WeightName::FHom => ctx.f_hom()?,
                    WeightName::FPlusExt => ctx.f_plus_ext()?,
                    WeightName::FMinusExt => ctx.f_minus_ext()?,
                    WeightName::UserTable => self.table_lookup(&ctx.key())?,
                    other => {
                        return Err(WeightError::WrongDomain { weight: other.to_string(), domain: "chain" })
                    }
                };
        }
        Ok(acc)
    }

    /// Value on a submodule pair.
    pub fn eval_submodules(&self, ctx: &SubCtx<'_>) -> Result<Half, WeightError> {
        let mut acc = Half(0);
        for &t in &self.terms {
            acc = acc
                + match t {
                    WeightName::Zero => Half(0),
                    WeightName::GSkew => ctx.g_skew()?,
                    WeightName::GMn => ctx.g_mn()?,
                    WeightName::GSigma => ctx.g_sigma()?,
                    WeightName::GPlusExt => ctx.g_plus_ext()?,
                    WeightName::GMinusExt => ctx.g_minus_ext()?,
                    WeightName::LDim => Half::from_int(ctx.l_dim()? as i64),
                    WeightName::UserTable => self.table_lookup(&ctx.key())?,
                    other => {
                        return Err(WeightError::WrongDomain {
                            weight: other.to_string(),
                            domain: "submodule",
                        })
                    }
                };
        }
        Ok(acc)
    }
}

impl FromStr for WeightExpr {
    type Err = WeightError;

    /// Parses `name+name+…`; `user_table` must be attached separately.
    fn from_str(s: &str) -> Result<Self, WeightError> {
        let terms = s.split('+').map(|t| t.trim().parse()).collect::<Result<Vec<_>, _>>()?;
        Ok(Self { terms, user_table: None })
    }
}

impl fmt::Display for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.terms.iter().map(|t| t.as_str()).collect();
        f.write_str(&names.join("+"))
    }
}
