use crate::context::{object_from_json, parse_quiver, quiver_from_json, Context};
use crate::suites::{run_suite, SuiteOptions};
use crate::{catalog, CacheKey, CatalogAction, CharacterCache, Cli, CliError, Command, Style};
use character::{delta_eval, Characters};
use clap::Parser;
use exactlin::PrimeField;
use serde_json::{json, Value};
use std::io::Write;
use submod_geometry::{chains_of_type, grassmannian_count, submodules_of_dim, subspace_key, FlagType};
use verify::{digest, Verdict};

/// Writes one line of output, mapping I/O failures to input errors.
fn emit(out: &mut dyn Write, line: impl AsRef<str>) -> Result<(), CliError> {
    writeln!(out, "{}", line.as_ref()).map_err(|e| CliError::input(format!("write failed: {e}")))
}

fn parse_dims(s: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let dims = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::input(format!("bad dimension vector `{s}`: {e}")))?;
    if dims.len() != n {
        return Err(CliError::input(format!("dimension vector `{s}` needs {n} entries")));
    }
    Ok(dims)
}

fn parse_type(s: &str) -> Result<FlagType, CliError> {
    FlagType::parse(s).map_err(|e| CliError::input(e.to_string()))
}

fn family_key(f: &[exactlin::Subspace]) -> String {
    f.iter().map(subspace_key).collect::<Vec<_>>().join("/")
}

/// Runs one parsed command and returns its exit code.
pub fn execute(cli: &Cli, ctx: &Context, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = ctx.p(cli.p);
    PrimeField::new(p)?;
    match &cli.cmd {
        Command::Gr { rep, dim, list } => {
            let qs = ctx.quiver(cli.quiver.as_deref())?;
            let alg = ctx.algebra(&qs, p, cli.cap)?;
            let m = ctx.module(&alg, &qs, rep)?;
            let g = parse_dims(dim, alg.n())?;
            if g.iter().zip(m.dims()).any(|(a, b)| a > b) {
                return Err(CliError::input(format!("dimension vector {g:?} exceeds {:?}", m.dims())));
            }
            let count = grassmannian_count(&alg, &m, &g)?;
            let subs = if *list {
                let mut keys: Vec<String> = submodules_of_dim(&alg, &m, &g)?.iter().map(|f| family_key(f)).collect();
                keys.sort();
                Some(keys)
            } else {
                None
            };
            if cli.json {
                let mut v = json!({ "count": count });
                if let Some(k) = &subs {
                    v["submodules"] = json!(k);
                }
                emit(out, v.to_string())?;
            } else {
                emit(out, count.to_string())?;
                for k in subs.iter().flatten() {
                    emit(out, k)?;
                }
            }
        }
        Command::Character { object, style } => {
            let qs = ctx.quiver(cli.quiver.as_deref())?;
            let alg = ctx.algebra(&qs, p, cli.cap)?;
            let obj = ctx.object(&alg, &qs, object)?;
            let lambda = ctx.lambda(cli.lambda.as_deref(), &qs)?;
            let chars = Characters::new(&alg, lambda.clone())?;
            let style_name = match style {
                Style::Plain => "plain",
                Style::Tilde => "tilde",
            };
            let key = CacheKey::key(p, &qs.quiver.canonical_json(), &obj.canonical_json(), &lambda, style_name);
            let poly = match ctx.cache.get(&key) {
                Some(hit) => {
                    log::info!("character cache hit");
                    hit
                }
                None => {
                    let fresh = match style {
                        Style::Plain => chars.x_character(&obj)?,
                        Style::Tilde => chars.tilde_character(&obj)?,
                    };
                    ctx.cache.put(&key, &fresh);
                    fresh
                }
            };
            if cli.json {
                emit(out, json!({ "character": poly.canonical_string(), "terms": poly.to_json() }).to_string())?;
            } else {
                emit(out, poly.canonical_string())?;
            }
        }
        Command::Delta { rep, flag_type } => {
            let qs = ctx.quiver(cli.quiver.as_deref())?;
            let alg = ctx.algebra(&qs, p, cli.cap)?;
            let m = ctx.module(&alg, &qs, rep)?;
            let t = parse_type(flag_type)?;
            check_type(&t, alg.n())?;
            let count = delta_eval(&alg, &m, &t)?;
            if cli.json {
                emit(out, json!({ "type": t.to_string(), "delta": count }).to_string())?;
            } else {
                emit(out, count.to_string())?;
            }
        }
        Command::Flags { rep, flag_type, list } => {
            let qs = ctx.quiver(cli.quiver.as_deref())?;
            let alg = ctx.algebra(&qs, p, cli.cap)?;
            let m = ctx.module(&alg, &qs, rep)?;
            let t = parse_type(flag_type)?;
            check_type(&t, alg.n())?;
            let mut keys: Vec<String> = chains_of_type(&alg, &m, &t)?.iter().map(|c| c.canonical_key()).collect();
            keys.sort();
            if cli.json {
                let mut v = json!({ "type": t.to_string(), "count": keys.len() });
                if *list {
                    v["flags"] = json!(keys);
                }
                emit(out, v.to_string())?;
            } else {
                emit(out, keys.len().to_string())?;
                if *list {
                    for k in &keys {
                        emit(out, k)?;
                    }
                }
            }
        }
        Command::Ext { m, n } => {
            let qs = ctx.quiver(cli.quiver.as_deref())?;
            let alg = ctx.algebra(&qs, p, cli.cap)?;
            let (m, n) = (ctx.module(&alg, &qs, m)?, ctx.module(&alg, &qs, n)?);
            let v = json!({
                "hom_mn": alg.hom_dim(&m, &n),
                "ext_mn": alg.ext_dim(&m, &n),
                "hom_nm": alg.hom_dim(&n, &m),
                "ext_nm": alg.ext_dim(&n, &m),
            });
            if cli.json {
                emit(out, v.to_string())?;
            } else {
                for (label, key) in [
                    ("dim Hom(M,N)", "hom_mn"),
                    ("dim Ext1(M,N)", "ext_mn"),
                    ("dim Hom(N,M)", "hom_nm"),
                    ("dim Ext1(N,M)", "ext_nm"),
                ] {
                    emit(out, format!("{label} = {}", v[key]))?;
                }
            }
        }
        Command::Verify { suite, case, seed, count, weights } => {
            let mut opts = SuiteOptions::new(p);
            opts.depth = cli.depth;
            opts.cap = cli.cap;
            opts.seed = *seed;
            opts.count = *count;
            if let Some(l) = cli.lambda.as_deref().or(ctx.lambda.as_deref()) {
                opts.lambda = Some(serde_json::from_str(l).map_err(|e| CliError::input(format!("bad --lambda: {e}")))?);
            }
            if let Some(w) = weights {
                let (a, b) = w.split_once(';').ok_or_else(|| CliError::input("--weights expects `w1;w2`"))?;
                opts.weights = (a.parse()?, b.parse()?);
            }
            let reports = run_suite(*suite, case.as_deref(), &opts)?;
            for r in &reports {
                if cli.json {
                    emit(out, r.canonical_json())?;
                } else {
                    let label = r.instance.get("label").and_then(Value::as_str).unwrap_or("-");
                    let mut line = format!("{} {} {}", r.theorem, label, if r.passed() { "pass" } else { "fail" });
                    if r.degenerate {
                        line.push_str(" degenerate");
                    }
                    if !r.scalars.is_empty() {
                        line.push_str(&format!(" scalars=({})", r.scalars.join(", ")));
                    }
                    emit(out, line)?;
                }
            }
            if !cli.json {
                emit(out, format!("digest {}", digest(&reports)))?;
            }
            if reports.iter().any(|r| r.verdict == Verdict::Fail) {
                return Ok(1);
            }
        }
        Command::Catalog { action } => match action {
            None | Some(CatalogAction::List) => {
                let lines = catalog_listing();
                if cli.json {
                    emit(out, json!({ "version": catalog::CATALOG_VERSION, "entries": lines }).to_string())?;
                } else {
                    emit(out, format!("catalog version {}", catalog::CATALOG_VERSION))?;
                    for l in lines {
                        emit(out, l)?;
                    }
                }
            }
            Some(CatalogAction::Show { name }) => {
                if let Some(q) = catalog::quiver(name) {
                    emit(out, q.canonical_json())?;
                } else {
                    let qs = ctx.quiver(cli.quiver.as_deref())?;
                    let alg = ctx.algebra(&qs, p, cli.cap)?;
                    emit(out, ctx.object(&alg, &qs, name)?.canonical_json())?;
                }
            }
            Some(CatalogAction::Check) => {
                for l in catalog::self_check(p)? {
                    emit(out, l)?;
                }
            }
        },
        Command::Run { job } => {
            let text = std::fs::read_to_string(job).map_err(|e| CliError::input(format!("{}: {e}", job.display())))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", job.display())))?;
            return run_job(&v, ctx.cache.clone(), cli.json, out);
        }
    }
    Ok(0)
}

fn check_type(t: &FlagType, n: usize) -> Result<(), CliError> {
    if t.i.iter().any(|&v| v == 0 || v > n) {
        return Err(CliError::input(format!("flag type {t} names a vertex outside 1..={n}")));
    }
    Ok(())
}

fn catalog_listing() -> Vec<String> {
    let mut lines: Vec<String> = catalog::QUIVERS.iter().map(|q| format!("quiver {q}")).collect();
    for c in &catalog::EXCHANGE_CASES {
        lines.push(format!(
            "exchange {}: M={} N={} L={} L'={} ({})",
            c.name, c.m, c.n, c.l, c.l_prime, c.note
        ));
    }
    for c in &catalog::ABELIAN_CASES {
        lines.push(format!("abelian {}: M={} N={}", c.0, c.1, c.2));
    }
    for (q, names) in catalog::EXPONENT_CASES {
        lines.push(format!("exponent {q}: {}", names.join(" ")));
    }
    for c in catalog::FIBER_CASES {
        lines.push(format!("fiber {c}"));
    }
    lines
}

/// Validates a job file and runs its tasks in order.
///
/// A job is `{"p", "quiver", "lambda"?, "objects"?, "tasks": [{"args": […]}]}`
/// where each task's arguments form a `qcchar` command line without the
/// global job settings. The first input, cap or Λ error stops the job; a
/// failed verification is remembered and reported through the exit code.
pub fn run_job(v: &Value, cache: CharacterCache, json_out: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut ctx = Context::new(cache);
    let p = v.get("p").and_then(Value::as_u64).ok_or_else(|| CliError::input("job needs an integer `p`"))?;
    let p = u32::try_from(p).map_err(|_| CliError::input("`p` is too large"))?;
    PrimeField::new(p)?;
    ctx.p = Some(p);
    let qs = match v.get("quiver") {
        Some(Value::String(s)) => parse_quiver(s)?,
        Some(q @ Value::Object(_)) => quiver_from_json(q)?,
        _ => return Err(CliError::input("job needs a `quiver` name, path or inline object")),
    };
    match v.get("lambda") {
        None => {}
        Some(Value::String(s)) => ctx.lambda = Some(s.clone()),
        Some(m @ Value::Array(_)) => ctx.lambda = Some(m.to_string()),
        Some(_) => return Err(CliError::input("`lambda` must be \"auto\" or a matrix")),
    }
    if ctx.lambda.as_deref() == Some("auto") {
        crate::context::auto_lambda(&qs.quiver)?;
    }
    if let Some(objs) = v.get("objects") {
        let objs = objs.as_object().ok_or_else(|| CliError::input("`objects` must be a map"))?;
        let alg = ctx.algebra(&qs, p, None)?;
        for (name, o) in objs {
            object_from_json(&alg, o).map_err(|e| CliError::input(format!("object `{name}`: {e}")))?;
            ctx.objects.insert(name.clone(), o.clone());
        }
    }
    ctx.quiver = Some(qs);
    let tasks = v.get("tasks").and_then(Value::as_array).ok_or_else(|| CliError::input("job needs a `tasks` list"))?;
    let mut parsed = Vec::new();
    for (k, t) in tasks.iter().enumerate() {
        let args: Vec<String> = t
            .get("args")
            .and_then(|a| serde_json::from_value(a.clone()).ok())
            .ok_or_else(|| CliError::input(format!("task {k} needs a string list `args`")))?;
        let mut argv = vec!["qcchar".to_string()];
        argv.extend(args);
        if json_out {
            argv.push("--json".into());
        }
        let cli = Cli::try_parse_from(&argv).map_err(|e| CliError::input(format!("task {k}: {e}")))?;
        if matches!(cli.cmd, Command::Run { .. }) {
            return Err(CliError::input(format!("task {k}: jobs cannot nest")));
        }
        parsed.push(cli);
    }
    let mut code = 0;
    for cli in &parsed {
        code = code.max(execute(cli, &ctx, out)?);
    }
    Ok(code)
}
