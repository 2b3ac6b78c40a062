use crate::CliError;
use character::{Characters, ClusterObject};
use quiver_core::{IntMatrix, Quiver};
use repcat::{Algebra, Representation};

/// Bumped whenever an entry changes meaning.
pub const CATALOG_VERSION: u32 = 1;

pub const QUIVERS: [&str; 4] = ["a2", "a3", "k2", "preproj-a2"];

pub fn quiver(name: &str) -> Option<Quiver> {
    match name {
        "a2" => Some(Quiver::linear_a(2)),
        "a3" => Some(Quiver::linear_a(3)),
        "k2" => Some(Quiver::kronecker()),
        "preproj-a2" => Some(Quiver::preprojective_a2()),
        _ => None,
    }
}

/// The skew form used for a catalog quiver when `--lambda` is omitted.
///
/// `A3` has no compatible form since `B̃` is singular; its entry is a skew
/// form under which every catalog exchange triple has pure power scalars.
pub fn default_lambda(name: &str) -> Option<IntMatrix> {
    match name {
        "a2" | "k2" => Some(vec![vec![0, 1], vec![-1, 0]]),
        "a3" => Some(vec![vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]]),
        _ => None,
    }
}

/// Module aliases per quiver, as full summand names.
fn alias(quiver: &str, name: &str) -> Option<&'static str> {
    match (quiver, name) {
        ("a3", "m12") => Some("i2"),
        ("k2", "m12") => Some("p1"),
        ("k2", "m21") => Some("i2"),
        _ => None,
    }
}

fn indexed(name: &str, prefix: &str, n: usize) -> Option<usize> {
    let i: usize = name.strip_prefix(prefix)?.parse().ok()?;
    (1..=n).contains(&i).then_some(i)
}

fn summand(alg: &Algebra, quiver: &str, name: &str) -> Result<ClusterObject, CliError> {
    let name = alias(quiver, name).unwrap_or(name);
    let n = alg.n();
    let module = |r: Result<Representation, repcat::RepError>| -> Result<ClusterObject, CliError> {
        Ok(ClusterObject::module(r?))
    };
    if name == "0" {
        return Ok(ClusterObject::zero(alg));
    }
    if let Some(i) = indexed(name, "sp", n) {
        return Ok(ClusterObject::shifted_projective(alg, i));
    }
    if let Some(i) = indexed(name, "s", n) {
        return Ok(ClusterObject::module(alg.simple(i)));
    }
    if let Some(i) = indexed(name, "p", n) {
        return module(alg.projective(i));
    }
    if let Some(i) = indexed(name, "i", n) {
        return module(alg.injective(i));
    }
    if quiver == "k2" && name == "r11" {
        return module(alg.rep(&[1, 1], &[("a", vec![vec![1]]), ("b", vec![vec![0]])]));
    }
    Err(CliError::input(format!("unknown object `{name}` for quiver `{quiver}`")))
}

/// Resolves `name1+name2+…` into a direct sum of catalog summands: `0`,
/// simples `s<i>`, projectives `p<i>`, injectives `i<i>`, shifted projectives
/// `sp<i>` and per-quiver aliases.
pub fn object(alg: &Algebra, quiver: &str, spec: &str) -> Result<ClusterObject, CliError> {
    let mut acc = ClusterObject::zero(alg);
    for part in spec.split('+').map(str::trim) {
        acc = acc.direct_sum(alg, &summand(alg, quiver, part)?);
    }
    Ok(acc)
}

pub fn module(alg: &Algebra, quiver: &str, spec: &str) -> Result<Representation, CliError> {
    let o = object(alg, quiver, spec)?;
    if !o.is_module() {
        return Err(CliError::input(format!("`{spec}` is not a module")));
    }
    Ok(o.module_part)
}

/// A curated exchange instance `(M, N, L, L')` with `dim Hom(M, ΣN) = 1`.
#[derive(Debug, Clone, Copy)]
pub struct ExchangeCase {
    pub name: &'static str,
    pub quiver: &'static str,
    pub m: &'static str,
    pub n: &'static str,
    pub l: &'static str,
    pub l_prime: &'static str,
    pub note: &'static str,
}

pub const EXCHANGE_CASES: [ExchangeCase; 6] = [
    ExchangeCase {
        name: "a2/s1-s2",
        quiver: "a2",
        m: "s1",
        n: "s2",
        l: "p1",
        l_prime: "0",
        note: "L is the middle term of the nonsplit extension; L' vanishes",
    },
    ExchangeCase {
        name: "a2/s1-sp1",
        quiver: "a2",
        m: "s1",
        n: "sp1",
        l: "sp2",
        l_prime: "0",
        note: "P1 → S1 has kernel P2, so L = ΣP2; the map S1 → I1 is an isomorphism",
    },
    ExchangeCase {
        name: "a3/m12-s3",
        quiver: "a3",
        m: "m12",
        n: "s3",
        l: "p1",
        l_prime: "s1",
        note: "L = middle term; L' = τ⁻¹ of the cokernel of S3 → τ(M12)",
    },
    ExchangeCase {
        name: "a3/s1-p2",
        quiver: "a3",
        m: "s1",
        n: "p2",
        l: "p1",
        l_prime: "s3",
        note: "L = middle term; L' = kernel of P2 → τS1 = S2",
    },
    ExchangeCase {
        name: "a3/m12-sp1",
        quiver: "a3",
        m: "m12",
        n: "sp1",
        l: "sp3",
        l_prime: "s2",
        note: "P1 → M12 is onto with kernel P3; M12 → I1 has kernel S2",
    },
    ExchangeCase {
        name: "a3/p2-sp3",
        quiver: "a3",
        m: "p2",
        n: "sp3",
        l: "s2",
        l_prime: "sp1",
        note: "P3 → P2 has cokernel S2; P2 → I3 = P1 is mono with cokernel S1 = I1",
    },
];

/// Module pairs for the abelian checkers over the preprojective algebra.
pub const ABELIAN_CASES: [(&str, &str, &str); 2] =
    [("preproj-a2/s1-s2", "s1", "s2"), ("preproj-a2/s2-s1", "s2", "s1")];

/// Modules whose pairs feed the exponent identity, per quiver.
pub const EXPONENT_CASES: [(&str, &[&str]); 3] = [
    ("a2", &["s1", "s2", "p1"]),
    ("a3", &["s1", "s2", "s3", "p1", "p2", "i2"]),
    ("k2", &["s1", "s2", "p1", "i2", "r11"]),
];

pub const FIBER_CASES: [&str; 2] = ["hand", "random"];

pub fn algebra(name: &str, p: u32, cap: Option<u64>) -> Result<Algebra, CliError> {
    let q = quiver(name).ok_or_else(|| CliError::input(format!("unknown catalog quiver `{name}`")))?;
    let alg = Algebra::new(q, p)?;
    Ok(match cap {
        Some(c) => alg.with_cap(c),
        None => alg,
    })
}

pub fn exchange_case(name: &str) -> Option<&'static ExchangeCase> {
    EXCHANGE_CASES.iter().find(|c| c.name == name)
}

/// Builds every catalog object and checks each exchange triple, returning a
/// description of the first broken entry.
pub fn self_check(p: u32) -> Result<Vec<String>, CliError> {
    let mut lines = Vec::new();
    for name in QUIVERS {
        let alg = algebra(name, p, None)?;
        let simples: Vec<String> = (1..=alg.n()).map(|i| format!("s{i}")).collect();
        for s in &simples {
            object(&alg, name, s)?;
        }
        lines.push(format!("quiver {name}: ok"));
    }
    for c in &EXCHANGE_CASES {
        let alg = algebra(c.quiver, p, None)?;
        let lambda = default_lambda(c.quiver).expect("exchange quivers have a default Λ");
        let chars = Characters::new(&alg, lambda)?;
        let get = |s| object(&alg, c.quiver, s);
        let (m, n) = (get(c.m)?, get(c.n)?);
        get(c.l)?;
        get(c.l_prime)?;
        let hom = chars.hom_c_dim(&m, &n);
        if hom != 1 {
            return Err(CliError::input(format!("catalog case {} has dim Hom(M, ΣN) = {hom}", c.name)));
        }
        lines.push(format!("exchange {}: ok", c.name));
    }
    for (quiver, names) in EXPONENT_CASES {
        let alg = algebra(quiver, p, None)?;
        for n in names {
            module(&alg, quiver, n)?;
        }
        lines.push(format!("exponent {quiver}: ok"));
    }
    Ok(lines)
}
