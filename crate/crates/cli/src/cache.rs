//! On-disk cache of `U`-invariant bases.
//!
//! One file per `(multidegree, weight)` block, holding the basis in the
//! public polynomial JSON format. A file that fails to parse or carries the
//! wrong key is treated as a miss and rewritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use uquot_core::{BasisSource, Direct, Error, Multidegree, Polynomial, Result};

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheEntry {
    pub key: String,
    pub basis: Vec<Polynomial>,
}

/// Canonical key, e.g. `m=1,1,5;w=3`.
pub fn cache_key(m: &Multidegree, weight: i64) -> String {
    format!("m={};w={}", m.key(), weight)
}

pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir)
            .map_err(|e| Error::Source(format!("cannot create cache dir {}: {e}", dir.display())))?;
        Ok(DiskCache { dir })
    }

    fn path_for(&self, m: &Multidegree, weight: i64) -> PathBuf {
        let stem: String = m.key().replace(',', "-");
        self.dir.join(format!("u_{stem}_w{weight}.json"))
    }

    fn read(&self, path: &Path, key: &str) -> Option<Vec<Polynomial>> {
        let text = fs::read_to_string(path).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.key == key).then_some(entry.basis)
    }

    fn write(&self, path: &Path, entry: &CacheEntry) -> Result<()> {
        let io = |e: std::io::Error| Error::Source(format!("cannot write {}: {e}", path.display()));
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        let text = serde_json::to_string(entry).expect("cache entry serializes");
        f.write_all(text.as_bytes()).map_err(io)?;
        f.write_all(b"\n").map_err(io)?;
        drop(f);
        fs::rename(&tmp, path).map_err(io)
    }
}

impl BasisSource for DiskCache {
    fn u_inv_basis(&self, m: &Multidegree, tau: i64) -> Result<Vec<Polynomial>> {
        let key = cache_key(m, tau);
        let path = self.path_for(m, tau);
        if let Some(hit) = self.read(&path, &key) {
            return Ok(hit);
        }
        let basis = Direct.u_inv_basis(m, tau)?;
        let entry = CacheEntry { key, basis };
        self.write(&path, &entry)?;
        Ok(entry.basis)
    }
}
