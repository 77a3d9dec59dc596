//! On-disk polynomial cache: one JSON document per `(family, n, mu-mode)`.

use crate::error::{Error, Result};
use crate::exactpoly::BiPoly;
use crate::recurrences::{FamilyTag, MuMode};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::io::Write;
use std::path::{Path, PathBuf};

pub const CACHE_ENV: &str = "UMEMURA_CACHE";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheKey {
    pub family: String,
    pub n: i64,
    pub mu_mode: String,
}

impl CacheKey {
    pub fn new(family: FamilyTag, n: i64, mu: &MuMode) -> Self {
        let mu_mode = if family.depends_on_mu() {
            mu.to_string()
        } else {
            "none".to_string()
        };
        CacheKey {
            family: family.short_name().to_string(),
            n,
            mu_mode,
        }
    }

    /// `<family>_<n>_<muMode>.json`, with `/` in a rational `mu` written `_`.
    pub fn file_name(&self) -> String {
        format!("{}_{}_{}.json", self.family, self.n, self.mu_mode.replace('/', "_"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub payload: BiPoly,
    pub checksum: String,
    pub tool_version: String,
}

pub fn checksum(payload: &BiPoly) -> String {
    hex::encode(Sha256::digest(payload.to_json().as_bytes()))
}

impl CacheEntry {
    pub fn new(key: CacheKey, payload: BiPoly) -> Self {
        CacheEntry {
            checksum: checksum(&payload),
            key,
            payload,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut s = serde_json::to_string(self).expect("cache entries serialize");
        s.push('\n');
        s.into_bytes()
    }
}

/// Outcome of [`Cache::store`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StoreOutcome {
    Written,
    /// An identical entry was already present.
    Unchanged,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// Directory from `UMEMURA_CACHE`, else `./cache`.
    pub fn from_env() -> Self {
        Self::new(std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| "cache".into()))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// Reads and validates an entry; `Ok(None)` when absent.
    pub fn load(&self, key: &CacheKey) -> Result<Option<CacheEntry>> {
        let path = self.path_for(key);
        let bytes = match std::fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let corrupt = |reason: String| Error::CorruptCache {
            path: path.display().to_string(),
            reason,
        };
        let entry: CacheEntry =
            serde_json::from_slice(&bytes).map_err(|e| corrupt(e.to_string()))?;
        if &entry.key != key {
            return Err(corrupt(format!("key mismatch: {:?}", entry.key)));
        }
        if entry.checksum != checksum(&entry.payload) {
            return Err(corrupt("checksum does not match payload".into()));
        }
        if entry.to_bytes() != bytes {
            return Err(corrupt("entry is not in canonical form".into()));
        }
        Ok(Some(entry))
    }

    /// Writes an entry through a temporary file and a rename. An existing
    /// valid entry must agree byte for byte with the new one.
    pub fn store(&self, key: CacheKey, payload: BiPoly) -> Result<StoreOutcome> {
        let entry = CacheEntry::new(key, payload);
        if let Some(existing) = self.load(&entry.key)? {
            if existing.to_bytes() == entry.to_bytes() {
                return Ok(StoreOutcome::Unchanged);
            }
            if existing.payload != entry.payload {
                return Err(Error::CorruptCache {
                    path: self.path_for(&entry.key).display().to_string(),
                    reason: "cached polynomial differs from regeneration".into(),
                });
            }
        }
        std::fs::create_dir_all(&self.dir)?;
        let path = self.path_for(&entry.key);
        let tmp = self.dir.join(format!(
            ".{}.{}.tmp",
            entry.key.file_name(),
            std::process::id()
        ));
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(&entry.to_bytes())?;
            f.sync_all()?;
        }
        std::fs::rename(&tmp, &path)?;
        Ok(StoreOutcome::Written)
    }
}
