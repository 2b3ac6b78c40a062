use crate::{catalog, CharacterCache, CliError};
use character::ClusterObject;
use quiver_core::{btilde, compatible_lambda, IntMatrix, Quiver};
use repcat::{Algebra, Representation};
use serde_json::Value;
use std::collections::BTreeMap;
use std::path::Path;

/// A quiver together with its catalog name, when it has one.
#[derive(Debug, Clone)]
pub struct QuiverSource {
    pub catalog_name: Option<String>,
    pub quiver: Quiver,
}

/// Defaults and named objects shared by every command of one invocation.
#[derive(Debug, Clone)]
pub struct Context {
    pub cache: CharacterCache,
    pub p: Option<u32>,
    pub quiver: Option<QuiverSource>,
    pub lambda: Option<String>,
    pub objects: BTreeMap<String, Value>,
}

pub const DEFAULT_P: u32 = 2;

impl Context {
    pub fn new(cache: CharacterCache) -> Self {
        Self { cache, p: None, quiver: None, lambda: None, objects: BTreeMap::new() }
    }

    pub fn p(&self, flag: Option<u32>) -> u32 {
        flag.or(self.p).unwrap_or(DEFAULT_P)
    }

    pub fn quiver(&self, flag: Option<&str>) -> Result<QuiverSource, CliError> {
        match flag {
            Some(s) => parse_quiver(s),
            None => self.quiver.clone().ok_or_else(|| CliError::input("--quiver is required")),
        }
    }

    pub fn algebra(&self, qs: &QuiverSource, p: u32, cap: Option<u64>) -> Result<Algebra, CliError> {
        let alg = Algebra::new(qs.quiver.clone(), p)?;
        Ok(match cap {
            Some(c) => alg.with_cap(c),
            None => alg,
        })
    }

    /// Job-file objects first, then JSON files, then catalog names.
    pub fn object(&self, alg: &Algebra, qs: &QuiverSource, spec: &str) -> Result<ClusterObject, CliError> {
        if let Some(v) = self.objects.get(spec) {
            return object_from_json(alg, v);
        }
        if spec.ends_with(".json") {
            return object_from_json(alg, &read_json(Path::new(spec))?);
        }
        match &qs.catalog_name {
            Some(name) => catalog::object(alg, name, spec),
            None => Err(CliError::input(format!("unknown object `{spec}`"))),
        }
    }

    pub fn module(&self, alg: &Algebra, qs: &QuiverSource, spec: &str) -> Result<Representation, CliError> {
        let o = self.object(alg, qs, spec)?;
        if !o.is_module() {
            return Err(CliError::input(format!("`{spec}` is not a module")));
        }
        Ok(o.module_part)
    }

    /// Explicit flag, then job default, then the catalog default, then `auto`.
    pub fn lambda(&self, flag: Option<&str>, qs: &QuiverSource) -> Result<IntMatrix, CliError> {
        let spec = flag.map(str::to_string).or_else(|| self.lambda.clone());
        match spec.as_deref() {
            Some("auto") => auto_lambda(&qs.quiver),
            Some(s) => serde_json::from_str(s).map_err(|e| CliError::input(format!("bad --lambda: {e}"))),
            None => match qs.catalog_name.as_deref().and_then(catalog::default_lambda) {
                Some(l) => Ok(l),
                None => auto_lambda(&qs.quiver),
            },
        }
    }
}

/// `Λ` solving `Λ(−B̃) = I`.
pub fn auto_lambda(q: &Quiver) -> Result<IntMatrix, CliError> {
    let bt = btilde(q).map_err(|e| CliError::input(e.to_string()))?;
    compatible_lambda(&bt, &vec![1; q.n()]).map_err(|e| CliError::Lambda(e.to_string()))
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn parse_quiver(spec: &str) -> Result<QuiverSource, CliError> {
    if let Some(q) = catalog::quiver(spec) {
        return Ok(QuiverSource { catalog_name: Some(spec.to_string()), quiver: q });
    }
    if spec.ends_with(".json") {
        return quiver_from_json(&read_json(Path::new(spec))?);
    }
    Err(CliError::input(format!("unknown quiver `{spec}`")))
}

pub fn quiver_from_json(v: &Value) -> Result<QuiverSource, CliError> {
    let quiver: Quiver = serde_json::from_value(v.clone()).map_err(|e| CliError::input(e.to_string()))?;
    quiver.validate().map_err(|e| CliError::input(e.to_string()))?;
    Ok(QuiverSource { catalog_name: None, quiver })
}

/// Accepts a representation `{"dims", "matrices"}` or a cluster object
/// `{"module": …, "shifted": […]}`.
pub fn object_from_json(alg: &Algebra, v: &Value) -> Result<ClusterObject, CliError> {
    match v.get("module") {
        Some(m) => {
            let module_part = alg.rep_from_json(m)?;
            let shifted: Vec<usize> = match v.get("shifted") {
                Some(s) => serde_json::from_value(s.clone()).map_err(|e| CliError::input(e.to_string()))?,
                None => vec![0; alg.n()],
            };
            if shifted.len() != alg.n() {
                return Err(CliError::input(format!("`shifted` must have length {}", alg.n())));
            }
            Ok(ClusterObject { module_part, shifted })
        }
        None => Ok(ClusterObject::module(alg.rep_from_json(v)?)),
    }
}
