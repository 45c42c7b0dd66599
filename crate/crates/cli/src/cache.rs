//! On-disk cache of spectrum documents, keyed by `(m, n, k, schema_version)`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

use crate::document::{OutputDocument, SpecDoc, SCHEMA_VERSION};

pub const CACHE_DIR_ENV: &str = "KS_COSET_CACHE_DIR";

/// `$XDG_CACHE_HOME/ks-coset`, else `$HOME/.cache/ks-coset`, else a
/// directory under the system temp dir.
pub fn default_dir() -> PathBuf {
    let non_empty = |key: &str| std::env::var_os(key).filter(|v| !v.is_empty());
    if let Some(xdg) = non_empty("XDG_CACHE_HOME") {
        return PathBuf::from(xdg).join("ks-coset");
    }
    if let Some(home) = non_empty("HOME") {
        return PathBuf::from(home).join(".cache").join("ks-coset");
    }
    std::env::temp_dir().join("ks-coset")
}

pub enum Lookup {
    Hit {
        doc: Box<OutputDocument>,
        bytes: String,
    },
    Miss,
    Corrupt(String),
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, command: &str, spec: SpecDoc) -> PathBuf {
        self.dir.join(format!(
            "{command}-m{}-n{}-k{}-v{SCHEMA_VERSION}.json",
            spec.m, spec.n, spec.k
        ))
    }

    pub fn load(&self, command: &str, spec: SpecDoc) -> Lookup {
        let path = self.path(command, spec);
        let bytes = match fs::read_to_string(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Corrupt(format!("{}: {e}", path.display())),
        };
        match OutputDocument::from_json(&bytes) {
            Ok(doc) if doc.schema_version == SCHEMA_VERSION && doc.spec == Some(spec) => {
                Lookup::Hit {
                    doc: Box::new(doc),
                    bytes,
                }
            }
            Ok(_) => Lookup::Corrupt(format!("{}: key mismatch", path.display())),
            Err(e) => Lookup::Corrupt(format!("{}: {e}", path.display())),
        }
    }

    /// Writes through a temporary file in the same directory, then renames.
    pub fn store(&self, command: &str, spec: SpecDoc, json: &str) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache dir {}", self.dir.display()))?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(json.as_bytes())?;
        tmp.as_file().sync_all()?;
        let path = self.path(command, spec);
        tmp.persist(&path)
            .with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }
}
