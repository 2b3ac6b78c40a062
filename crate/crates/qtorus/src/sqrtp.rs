use num_rational::Ratio;
use serde::{Serialize, Serializer};
use std::fmt;

/// Element `a + b√p` of `Q(√p)` with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqrtP {
    p: u32,
    a: Ratio<i128>,
    b: Ratio<i128>,
}

impl SqrtP {
    pub fn zero(p: u32) -> Self {
        Self { p, a: Ratio::from_integer(0), b: Ratio::from_integer(0) }
    }

    pub fn integer(p: u32, n: i64) -> Self {
        Self { p, a: Ratio::from_integer(n as i128), b: Ratio::from_integer(0) }
    }

    /// `(√p)^k`.
    pub fn vpow(p: u32, k: i64) -> Self {
        let half = Ratio::from_integer(p as i128).pow((k.div_euclid(2)) as i32);
        if k.rem_euclid(2) == 0 {
            Self { p, a: half, b: Ratio::from_integer(0) }
        } else {
            Self { p, a: Ratio::from_integer(0), b: half }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a == Ratio::from_integer(0) && self.b == Ratio::from_integer(0)
    }

    pub fn add(&self, o: &SqrtP) -> SqrtP {
        assert_eq!(self.p, o.p, "mixed primes");
        Self { p: self.p, a: self.a + o.a, b: self.b + o.b }
    }

    pub fn mul(&self, o: &SqrtP) -> SqrtP {
        assert_eq!(self.p, o.p, "mixed primes");
        let p = Ratio::from_integer(self.p as i128);
        Self { p: self.p, a: self.a * o.a + self.b * o.b * p, b: self.a * o.b + self.b * o.a }
    }

    pub fn scale(&self, c: i64) -> SqrtP {
        let c = Ratio::from_integer(c as i128);
        Self { p: self.p, a: self.a * c, b: self.b * c }
    }

    /// Rational and `√p` parts.
    pub fn parts(&self) -> (Ratio<i128>, Ratio<i128>) {
        (self.a, self.b)
    }
}

impl fmt::Display for SqrtP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.p)
    }
}

impl Serialize for SqrtP {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
