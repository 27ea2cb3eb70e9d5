//! Content-addressed store of finished reports.
//!
//! Keys are SHA-256 digests of a canonical JSON request. Requests must leave
//! out anything that does not change the result, such as the thread count.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Result;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "ROOKGON_CACHE";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// An explicit directory wins over the environment; no cache otherwise.
    pub fn configured(dir: Option<&Path>) -> Option<Cache> {
        match dir {
            Some(d) => Some(Cache::new(d)),
            None => std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(Cache::new),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key<R: Serialize>(request: &R) -> Result<String> {
        let bytes = serde_json::to_vec(request)?;
        Ok(hex::encode(Sha256::digest(bytes)))
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// The stored report, or `None` on a miss. Unreadable entries count as
    /// misses and are logged.
    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let path = self.path(key);
        let text = fs::read_to_string(&path).ok()?;
        match serde_json::from_str(&text) {
            Ok(v) => Some(v),
            Err(e) => {
                log::warn!("corrupt cache entry {}: {e}; recomputing", path.display());
                None
            }
        }
    }

    /// Writes through a temporary file so readers never see a partial entry.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_vec_pretty(value)?)?;
        fs::rename(&tmp, self.path(key))?;
        Ok(())
    }

    /// Returns the cached value or computes and stores it. The flag is true on a hit.
    pub fn get_or_compute<T, F>(&self, key: &str, compute: F) -> Result<(T, bool)>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        if let Some(v) = self.get(key) {
            return Ok((v, true));
        }
        let v = compute()?;
        self.put(key, &v)?;
        Ok((v, false))
    }
}
