use qtorus::SkewPoly;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "QCCHAR_CACHE";
pub const DEFAULT_CACHE_DIR: &str = ".qcchar-cache";

/// On-disk store of computed characters, one canonical JSON file per input.
///
/// The file name is the SHA-256 of the canonical key, and the key is stored
/// alongside the value so a hash collision or a hand-edited file is treated
/// as a miss.
#[derive(Debug, Clone)]
pub struct CharacterCache {
    dir: Option<PathBuf>,
}

impl CharacterCache {
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Self { dir: Some(dir.into()) }
    }

    pub fn from_env() -> Self {
        Self::at(std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| DEFAULT_CACHE_DIR.into()))
    }

    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Canonical key over everything that determines a character.
    pub fn key(p: u32, quiver_json: &str, object_json: &str, lambda: &[Vec<i64>], style: &str) -> Value {
        json!({ "p": p, "quiver": quiver_json, "object": object_json, "lambda": lambda, "style": style })
    }

    fn path(&self, key: &Value) -> Option<PathBuf> {
        let digest = hex::encode(Sha256::digest(key.to_string().as_bytes()));
        self.dir.as_ref().map(|d| d.join(format!("{digest}.json")))
    }

    pub fn get(&self, key: &Value) -> Option<SkewPoly> {
        let text = fs::read_to_string(self.path(key)?).ok()?;
        let stored: Value = serde_json::from_str(&text).ok()?;
        if stored.get("key")? != key {
            log::warn!("cache entry does not match its key; recomputing");
            return None;
        }
        SkewPoly::from_json(stored.get("character")?)
    }

    /// Stores a value; failures are logged, since the cache is an optimisation.
    pub fn put(&self, key: &Value, value: &SkewPoly) {
        let Some(path) = self.path(key) else { return };
        let body = json!({ "key": key, "character": value.to_json() }).to_string();
        let res = path.parent().map_or(Ok(()), fs::create_dir_all).and_then(|_| fs::write(&path, body));
        if let Err(e) = res {
            log::warn!("could not write cache entry {}: {e}", path.display());
        }
    }
}
