//! The on-disk memo snapshot `<dir>/memo.json`.

use std::collections::BTreeMap;
use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};

use eo_core::cache::CacheWarning;
use eo_core::report::Engine;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FILE_NAME: &str = "memo.json";

/// Catalan counts as integer strings and Hurwitz numbers as `"p/q"`, both keyed `"g,n,μ"`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    #[serde(default)]
    pub catalan: BTreeMap<String, String>,
    #[serde(default)]
    pub hurwitz: BTreeMap<String, String>,
}

impl Snapshot {
    pub fn capture(engine: &Engine) -> Self {
        Snapshot { catalan: engine.catalan.counts().export(), hurwitz: engine.hurwitz.numbers().export() }
    }

    pub fn len(&self) -> usize {
        self.catalan.len() + self.hurwitz.len()
    }

    /// Loads every entry that validates; the rest come back as warnings.
    pub fn apply(&self, engine: &Engine) -> Vec<CacheWarning> {
        let mut warnings = engine.catalan.counts().import(&self.catalan);
        warnings.extend(engine.hurwitz.numbers().import(&self.hurwitz));
        warnings
    }
}

pub fn default_dir() -> Option<PathBuf> {
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("eo"))
}

pub fn read(path: &Path) -> Result<Snapshot, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|source| CliError::Snapshot { path: path.to_path_buf(), source })
}

/// A missing file is an empty snapshot.
pub fn read_or_empty(path: &Path) -> Result<Snapshot, CliError> {
    match read(path) {
        Err(CliError::Io { source, .. }) if source.kind() == ErrorKind::NotFound => Ok(Snapshot::default()),
        other => other,
    }
}

pub fn to_json(snapshot: &Snapshot) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(snapshot)? + "\n")
}

/// Writes through a sibling temporary file so readers never see a partial snapshot.
pub fn write(path: &Path, snapshot: &Snapshot) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
    fs::write(&tmp, to_json(snapshot)?).map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
}
