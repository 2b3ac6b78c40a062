use crate::{catalog, CliError, Suite};
use character::Characters;
use verify::{
    check_exchange_hereditary, check_exponent_identity, check_fiber_law, check_maintheorem1,
    check_onedim_delta, check_pointwise_balance, check_scaling_invariance, hand_fiber_instances,
    random_fiber_instances, AbelianPair, ExchangeTriple, VerificationReport,
};
use weightlib::{WeightExpr, WeightName};

/// Parameters of a suite run beyond the case selection.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub p: u32,
    pub depth: Option<usize>,
    pub cap: Option<u64>,
    pub lambda: Option<quiver_core::IntMatrix>,
    pub seed: u64,
    pub count: usize,
    pub weights: (WeightExpr, WeightExpr),
}

impl SuiteOptions {
    pub fn new(p: u32) -> Self {
        Self {
            p,
            depth: None,
            cap: None,
            lambda: None,
            seed: 1,
            count: 200,
            weights: (WeightExpr::zero(), WeightExpr::zero()),
        }
    }
}

/// Case names of a suite, in catalog order.
pub fn case_names(suite: Suite) -> Vec<String> {
    match suite {
        Suite::FiberLaw => catalog::FIBER_CASES.iter().map(|s| s.to_string()).collect(),
        Suite::Maintheorem1 | Suite::OnedimDelta | Suite::Balance | Suite::Scaling => {
            catalog::ABELIAN_CASES.iter().map(|c| c.0.to_string()).collect()
        }
        Suite::Exchange => catalog::EXCHANGE_CASES.iter().map(|c| c.name.to_string()).collect(),
        Suite::ExponentId => catalog::EXPONENT_CASES.iter().map(|c| c.0.to_string()).collect(),
    }
}

/// Flag-type depth used when none is given: 4 for the one-dimensional δ
/// identity, 3 for the sweeps that enumerate chain pairs.
pub fn default_depth(suite: Suite) -> usize {
    match suite {
        Suite::OnedimDelta => 4,
        _ => 3,
    }
}

/// Runs one suite on the selected cases, or all of them.
pub fn run_suite(suite: Suite, case: Option<&str>, opts: &SuiteOptions) -> Result<Vec<VerificationReport>, CliError> {
    let names = case_names(suite);
    let selected: Vec<String> = match case {
        Some(c) if names.iter().any(|n| n == c) => vec![c.to_string()],
        Some(c) => return Err(CliError::input(format!("unknown case `{c}`; known: {}", names.join(", ")))),
        None => names,
    };
    selected
        .iter()
        .map(|c| {
            let mut rep = run_case(suite, c, opts)?;
            if rep.instance.get("label").is_none() {
                rep.instance["label"] = c.as_str().into();
            }
            Ok(rep)
        })
        .collect()
}

fn run_case(suite: Suite, case: &str, opts: &SuiteOptions) -> Result<VerificationReport, CliError> {
    let depth = opts.depth.unwrap_or_else(|| default_depth(suite));
    match suite {
        Suite::FiberLaw => {
            let instances =
                if case == "hand" { hand_fiber_instances() } else { random_fiber_instances(opts.seed, opts.count) };
            Ok(check_fiber_law(&instances)?)
        }
        Suite::Maintheorem1 | Suite::OnedimDelta | Suite::Balance | Suite::Scaling => {
            let &(name, m, n) = catalog::ABELIAN_CASES.iter().find(|c| c.0 == case).expect("case exists");
            let alg = catalog::algebra("preproj-a2", opts.p, opts.cap)?;
            let pair = AbelianPair {
                label: name.to_string(),
                alg: &alg,
                m: catalog::module(&alg, "preproj-a2", m)?,
                n: catalog::module(&alg, "preproj-a2", n)?,
            };
            Ok(match suite {
                Suite::Maintheorem1 => check_maintheorem1(&pair, depth, (&opts.weights.0, &opts.weights.1))?,
                Suite::OnedimDelta => check_onedim_delta(&pair, depth)?,
                Suite::Balance => check_pointwise_balance(&pair, depth)?,
                _ => check_scaling_invariance(&pair, depth, &scaling_weights())?,
            })
        }
        Suite::Exchange => {
            let c = catalog::exchange_case(case).expect("case exists");
            let alg = catalog::algebra(c.quiver, opts.p, opts.cap)?;
            let lambda = resolve_lambda(c.quiver, opts)?;
            let chars = Characters::new(&alg, lambda)?;
            let get = |s| catalog::object(&alg, c.quiver, s);
            let triple = ExchangeTriple {
                label: c.name.to_string(),
                m: get(c.m)?,
                n: get(c.n)?,
                l: get(c.l)?,
                l_prime: get(c.l_prime)?,
            };
            let mut rep = check_exchange_hereditary(&chars, &triple)?;
            rep.notes.push(c.note.to_string());
            Ok(rep)
        }
        Suite::ExponentId => {
            let &(quiver, names) = catalog::EXPONENT_CASES.iter().find(|c| c.0 == case).expect("case exists");
            let alg = catalog::algebra(quiver, opts.p, opts.cap)?;
            let chars = Characters::new(&alg, resolve_lambda(quiver, opts)?)?;
            let mut pairs = Vec::new();
            for a in names {
                for b in names {
                    pairs.push((format!("{a},{b}"), catalog::module(&alg, quiver, a)?, catalog::module(&alg, quiver, b)?));
                }
            }
            Ok(check_exponent_identity(&chars, &pairs)?)
        }
    }
}

fn resolve_lambda(quiver: &str, opts: &SuiteOptions) -> Result<quiver_core::IntMatrix, CliError> {
    match &opts.lambda {
        Some(l) => Ok(l.clone()),
        None => Ok(catalog::default_lambda(quiver).expect("hereditary catalog quivers have a default Λ")),
    }
}

/// The zero weight and the three chain weights.
pub fn scaling_weights() -> Vec<WeightExpr> {
    let mut ws = vec![WeightExpr::zero()];
    ws.extend([WeightName::FPlusExt, WeightName::FHom, WeightName::FMinusExt].map(WeightExpr::named));
    ws
}

/// Every suite on every case, in a fixed order.
pub fn full_suite(opts: &SuiteOptions) -> Result<Vec<VerificationReport>, CliError> {
    let mut out = Vec::new();
    for s in [
        Suite::FiberLaw,
        Suite::Maintheorem1,
        Suite::OnedimDelta,
        Suite::Balance,
        Suite::Scaling,
        Suite::Exchange,
        Suite::ExponentId,
    ] {
        out.extend(run_suite(s, None, opts)?);
    }
    Ok(out)
}
