//! On-disk cache of enumerated Weyl groups, keyed by `(family, rank)`.
//!
//! The file is the JSON document produced by [`to_cache_bytes`]; a hit is
//! accepted only if re-serializing the decoded group reproduces the file
//! byte for byte.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::weyl::{length_of, simple_reflections};
use super::{CartanType, Family, RootSystem, WeylElement, WeylGroup};
use crate::error::{Error, Result};

pub const CACHE_VERSION: u32 = 1;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "WEYLCERT_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    family: Family,
    rank: usize,
    order: usize,
    /// `(signed images, length)` per element, in enumeration order.
    elements: Vec<(Vec<i32>, u32)>,
}

pub fn cache_path(dir: &Path, cartan: CartanType) -> PathBuf {
    dir.join(format!("weyl-{}{}-v{}.json", cartan.family, cartan.rank, CACHE_VERSION))
}

pub fn to_cache_bytes(weyl: &WeylGroup) -> Vec<u8> {
    let file = CacheFile {
        version: CACHE_VERSION,
        family: weyl.cartan().family,
        rank: weyl.rank(),
        order: weyl.order(),
        elements: weyl
            .elements()
            .iter()
            .map(|w| (w.encoding(), w.length()))
            .collect(),
    };
    let mut bytes = serde_json::to_vec(&file).expect("cache file serializes");
    bytes.push(b'\n');
    bytes
}

pub fn from_cache_bytes(cartan: CartanType, bytes: &[u8]) -> Result<WeylGroup> {
    let file: CacheFile =
        serde_json::from_slice(bytes).map_err(|e| Error::Cache(e.to_string()))?;
    if file.version != CACHE_VERSION || file.family != cartan.family || file.rank != cartan.rank {
        return Err(Error::Cache("cache key or version mismatch".into()));
    }
    if file.order as u128 != cartan.weyl_order() || file.elements.len() != file.order {
        return Err(Error::Cache("cached element count is wrong".into()));
    }
    let rs = RootSystem::new(cartan)?;
    let n = rs.ambient_dim();
    let mut elements = Vec::with_capacity(file.order);
    for (code, len) in &file.elements {
        let w = WeylElement::from_encoding(code)
            .filter(|w| w.dim() == n)
            .ok_or_else(|| Error::Cache(format!("bad element encoding {code:?}")))?;
        if length_of(&rs, &w) != *len {
            return Err(Error::Cache(format!("bad length for {code:?}")));
        }
        elements.push(w.with_length(*len));
    }
    let generators = simple_reflections(&rs);
    let weyl = WeylGroup::from_parts(rs, elements, generators);
    if to_cache_bytes(&weyl) != bytes {
        return Err(Error::Cache("cache file is not canonical".into()));
    }
    if weyl.elements().len() != file.order
        || weyl
            .elements()
            .windows(2)
            .any(|p| p[0].encoding() == p[1].encoding())
    {
        return Err(Error::Cache("duplicate elements".into()));
    }
    Ok(weyl)
}

/// Loads the group from `dir` if a valid cache file exists, otherwise
/// enumerates it and writes the file atomically (temp file, then rename).
pub fn load_or_enumerate(cartan: CartanType, dir: &Path, guard: u128) -> Result<WeylGroup> {
    cartan.check_guard(guard)?;
    let path = cache_path(dir, cartan);
    if let Ok(bytes) = fs::read(&path) {
        if let Ok(w) = from_cache_bytes(cartan, &bytes) {
            return Ok(w);
        }
    }
    let weyl = WeylGroup::enumerate(&RootSystem::new(cartan)?, guard)?;
    write_atomic(dir, &path, &to_cache_bytes(&weyl))?;
    Ok(weyl)
}

fn write_atomic(dir: &Path, path: &Path, bytes: &[u8]) -> Result<()> {
    let io = |e: std::io::Error| Error::Cache(e.to_string());
    fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(bytes).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
