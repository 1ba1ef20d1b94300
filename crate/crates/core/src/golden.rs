//! Frozen reference values.
//!
//! A golden file is JSON: `{"name", "generator", "values": {key: "<17 significant digits>"}}`.
//! Values are stored as strings so the digits survive any JSON tooling.
//! Writing requires [`GoldenStore::with_regeneration`] (or the
//! `CIRCLELAB_REGEN_GOLDENS=1` environment variable).

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const GOLDEN_DIR_ENV: &str = "CIRCLELAB_GOLDEN_DIR";
pub const REGEN_ENV: &str = "CIRCLELAB_REGEN_GOLDENS";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenFile {
    pub name: String,
    pub generator: String,
    pub values: BTreeMap<String, String>,
}

impl GoldenFile {
    pub fn new(name: impl Into<String>, generator: impl Into<String>) -> Self {
        GoldenFile { name: name.into(), generator: generator.into(), values: BTreeMap::new() }
    }

    pub fn insert(&mut self, key: impl Into<String>, value: f64) {
        self.values.insert(key.into(), format_17(value));
    }

    pub fn get(&self, key: &str) -> Result<f64> {
        let raw = self
            .values
            .get(key)
            .ok_or_else(|| Error::Golden(format!("{}: missing key `{key}`", self.name)))?;
        raw.parse().map_err(|_| Error::Golden(format!("{}: `{key}` is not a number: {raw}", self.name)))
    }
}

/// 17 significant digits, enough to round-trip any f64.
pub fn format_17(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone)]
pub struct GoldenStore {
    dir: PathBuf,
    regenerate: bool,
}

impl GoldenStore {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        GoldenStore { dir: dir.into(), regenerate: false }
    }

    /// The directory named by `CIRCLELAB_GOLDEN_DIR`, else the goldens
    /// shipped with this crate.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(GOLDEN_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("goldens"));
        let regenerate = std::env::var(REGEN_ENV).is_ok_and(|v| v == "1");
        GoldenStore { dir, regenerate }
    }

    pub fn with_regeneration(mut self, on: bool) -> Self {
        self.regenerate = on;
        self
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn regenerating(&self) -> bool {
        self.regenerate
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.join(format!("{name}.json"))
    }

    pub fn load(&self, name: &str) -> Result<GoldenFile> {
        let path = self.path(name);
        let text = fs::read_to_string(&path)
            .map_err(|e| Error::Golden(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Golden(format!("malformed {}: {e}", path.display())))
    }

    pub fn save(&self, file: &GoldenFile) -> Result<()> {
        if !self.regenerate {
            return Err(Error::Golden(format!(
                "refusing to overwrite golden `{}` without regeneration enabled",
                file.name
            )));
        }
        fs::create_dir_all(&self.dir)?;
        let text = serde_json::to_string_pretty(file)?;
        fs::write(self.path(&file.name), text + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for v in [std::f64::consts::PI, -1.0 / 3.0, 1e-300, 6.02214076e23] {
            let s = format_17(v);
            assert_eq!(s.parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn save_requires_flag() {
        let dir = std::env::temp_dir().join(format!("circlelab-golden-{}", std::process::id()));
        let store = GoldenStore::new(&dir);
        let mut g = GoldenFile::new("t", "unit test");
        g.insert("pi", std::f64::consts::PI);
        assert!(store.save(&g).is_err());
        let store = store.with_regeneration(true);
        store.save(&g).unwrap();
        let back = store.load("t").unwrap();
        assert_eq!(back.get("pi").unwrap(), std::f64::consts::PI);
        assert!(back.get("e").is_err());
        assert!(store.load("missing").is_err());
        fs::remove_dir_all(dir).ok();
    }
}
