//! On-disk memo of plethysm expansions, shared between runs.
//!
//! The directory comes from `--cache-dir` or the `MINORREL_CACHE_DIR`
//! environment variable; without either nothing is read or written. The
//! cache is a single JSON file, replaced atomically. A missing or unreadable
//! file only costs recomputation.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use minorrel_core::partitions::Partition;
use minorrel_core::symfunc::{SchurExpansion, SymFunc};

use crate::json::{self, PlethysmEntry, TermJson};

pub const ENV_VAR: &str = "MINORREL_CACHE_DIR";
const FILE: &str = "plethysm-v1.json";

/// The flag wins over the environment; an empty variable counts as unset.
pub fn resolve_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()).map(PathBuf::from))
}

pub struct PlethysmCache {
    dir: PathBuf,
    loaded: usize,
}

fn entry_to_core(e: PlethysmEntry) -> Option<(Partition, u32, SchurExpansion)> {
    let mu = Partition::new(e.mu).ok()?;
    let size = e.t.checked_mul(mu.size())?;
    let mut terms = Vec::with_capacity(e.terms.len());
    for TermJson { partition, mult } in e.terms {
        let p = Partition::new(partition).ok()?;
        if p.size() != size || mult == 0 {
            return None;
        }
        terms.push((p, mult));
    }
    Some((mu, e.t, SchurExpansion::from_terms(terms)))
}

impl PlethysmCache {
    pub fn new(dir: PathBuf) -> Self {
        PlethysmCache { dir, loaded: 0 }
    }

    pub fn path(&self) -> PathBuf {
        self.dir.join(FILE)
    }

    /// Seeds `sf` from disk. Returns the number of entries used; malformed
    /// entries are skipped.
    pub fn load_into(&mut self, sf: &mut SymFunc) -> io::Result<usize> {
        let text = match fs::read_to_string(self.path()) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e),
        };
        let entries: Vec<PlethysmEntry> =
            serde_json::from_str(&text).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        for e in entries {
            if let Some((mu, t, exp)) = entry_to_core(e) {
                sf.preload(mu, t, exp);
            }
        }
        self.loaded = sf.plethysms().count();
        Ok(self.loaded)
    }

    /// Writes every memoized plethysm of `sf` if there is anything new.
    pub fn store(&self, sf: &SymFunc) -> io::Result<bool> {
        let entries: Vec<PlethysmEntry> = sf
            .plethysms()
            .map(|(mu, t, e)| PlethysmEntry { mu: json::partition(mu), t, terms: json::expansion(e) })
            .collect();
        if entries.len() <= self.loaded {
            return Ok(false);
        }
        fs::create_dir_all(&self.dir)?;
        write_atomic(&self.path(), serde_json::to_string(&entries)?.as_bytes())?;
        Ok(true)
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}
