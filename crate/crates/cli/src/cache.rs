//! On-disk cache of the class polynomial and character tables.
//!
//! Entries are JSON documents tagged with [`SCHEMA_VERSION`]. Anything that
//! fails to load (missing, unreadable, older schema, wrong shape) is silently
//! recomputed and rewritten; writes go to a temporary file that is then
//! renamed over the target, so concurrent readers never see a partial entry.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use heckez::center::{class_polynomials, seed_class_polynomials};
use heckez::charmap::{character_table, seed_character_table};
use heckez::{CharacterTable, ClassPolyTable};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the cache directory.
pub const ENV_VAR: &str = "HECKEZ_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    schema_version: u32,
    n: usize,
    data: T,
}

#[derive(Deserialize)]
struct Header {
    schema_version: u32,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// The cache configured through the environment, if any.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(ENV_VAR).filter(|d| !d.is_empty()).map(Self::new)
    }

    fn path(&self, kind: &str, n: usize) -> PathBuf {
        self.dir.join(format!("{kind}-n{n}.json"))
    }

    fn load<T: DeserializeOwned>(&self, kind: &str, n: usize) -> Option<T> {
        let text = fs::read_to_string(self.path(kind, n)).ok()?;
        let header: Header = serde_json::from_str(&text).ok()?;
        if header.schema_version != SCHEMA_VERSION {
            return None;
        }
        let entry: Entry<T> = serde_json::from_str(&text).ok()?;
        (entry.n == n).then_some(entry.data)
    }

    fn store<T: Serialize>(&self, kind: &str, n: usize, data: &T) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            schema_version: SCHEMA_VERSION,
            n,
            data,
        };
        let target = self.path(kind, n);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.flush()?;
        tmp.persist(&target).map_err(|e| e.error)?;
        Ok(())
    }

    /// Makes the tables for `n` available in memory, from disk when a valid
    /// entry exists and by computing (then writing back) otherwise.
    pub fn warm(&self, n: usize) {
        match self.load::<ClassPolyTable>("classpoly", n) {
            Some(t) if t.n() == n => {
                seed_class_polynomials(t);
            }
            _ => self.write_back("classpoly", n, class_polynomials(n).as_ref()),
        }
        match self.load::<CharacterTable>("chartable", n) {
            Some(t) if t.n() == n => {
                seed_character_table(t);
            }
            _ => self.write_back("chartable", n, character_table(n).as_ref()),
        }
    }

    fn write_back<T: Serialize>(&self, kind: &str, n: usize, data: &T) {
        // a cache that cannot be written only costs time
        if let Err(e) = self.store(kind, n, data) {
            eprintln!(
                "warning: could not write cache entry {}: {e}",
                self.path(kind, n).display()
            );
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}
