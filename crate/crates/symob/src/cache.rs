//! On-disk cache for expensive precomputations (character tables and
//! idempotent families), with checksum validation and atomic writes.
//!
//! Entries are JSON files keyed by the object parameters plus the active
//! convention tag, so a convention change or version bump transparently
//! invalidates stale entries. Corrupted or mismatched files are rebuilt
//! rather than reported as errors.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::characters::{character_table, CharacterTable};
use crate::error::{Result, SymobError};
use crate::eulerian::{eulerian_idempotents, IdempotentFamily};
use crate::verify::full_convention_tag;

/// Environment variable consulted for the default cache directory.
pub const CACHE_ENV: &str = "SYMOB_CACHE";

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    kind: String,
    key: String,
    tool_version: String,
    convention_tag: String,
    checksum: String,
    payload: serde_json::Value,
}

/// Resolve the cache directory: explicit flag, then `SYMOB_CACHE`, then
/// `~/.cache/symob`. Returns `None` when no usable location exists.
pub fn resolve_cache_dir(explicit: Option<&Path>) -> Option<PathBuf> {
    if let Some(dir) = explicit {
        return Some(dir.to_path_buf());
    }
    if let Ok(dir) = std::env::var(CACHE_ENV) {
        if !dir.is_empty() {
            return Some(PathBuf::from(dir));
        }
    }
    std::env::var("HOME")
        .ok()
        .map(|home| Path::new(&home).join(".cache").join("symob"))
}

fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn entry_path(dir: &Path, kind: &str, key: &str) -> PathBuf {
    // The convention tag contains characters unsuitable for file names, so
    // the on-disk name carries a short hash of (key, tag) instead.
    let tagged = format!("{key};{}", full_convention_tag());
    let hash = sha256_hex(tagged.as_bytes());
    dir.join(format!("{kind}-{key}-{}.json", &hash[..12]))
}

fn load_entry(path: &Path, kind: &str, key: &str) -> Option<serde_json::Value> {
    let bytes = fs::read(path).ok()?;
    let entry: CacheEntry = serde_json::from_slice(&bytes).ok()?;
    if entry.kind != kind
        || entry.key != key
        || entry.tool_version != env!("CARGO_PKG_VERSION")
        || entry.convention_tag != full_convention_tag()
    {
        return None;
    }
    let payload_bytes = serde_json::to_vec(&entry.payload).ok()?;
    if entry.checksum != sha256_hex(&payload_bytes) {
        return None;
    }
    Some(entry.payload)
}

fn store_entry(path: &Path, kind: &str, key: &str, payload: &serde_json::Value) -> Result<()> {
    let dir = path
        .parent()
        .ok_or_else(|| SymobError::Cache("cache path has no parent directory".into()))?;
    fs::create_dir_all(dir).map_err(|e| SymobError::Cache(e.to_string()))?;
    let payload_bytes =
        serde_json::to_vec(payload).map_err(|e| SymobError::Cache(e.to_string()))?;
    let entry = CacheEntry {
        kind: kind.to_string(),
        key: key.to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        convention_tag: full_convention_tag(),
        checksum: sha256_hex(&payload_bytes),
        payload: payload.clone(),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| SymobError::Cache(e.to_string()))?;
    serde_json::to_writer(&mut tmp, &entry).map_err(|e| SymobError::Cache(e.to_string()))?;
    tmp.persist(path)
        .map_err(|e| SymobError::Cache(e.to_string()))?;
    Ok(())
}

fn get_or_build<T, F>(dir: Option<&Path>, kind: &str, key: &str, build: F) -> Result<T>
where
    T: Serialize + DeserializeOwned,
    F: FnOnce() -> Result<T>,
{
    let Some(dir) = dir else {
        return build();
    };
    let path = entry_path(dir, kind, key);
    if let Some(payload) = load_entry(&path, kind, key) {
        if let Ok(value) = serde_json::from_value::<T>(payload) {
            return Ok(value);
        }
    }
    let value = build()?;
    let payload =
        serde_json::to_value(&value).map_err(|e| SymobError::Cache(e.to_string()))?;
    // A failed write degrades to recomputation next time; not fatal.
    if let Err(err) = store_entry(&path, kind, key, &payload) {
        eprintln!("warning: failed to write cache entry {}: {err}", path.display());
    }
    Ok(value)
}

/// Character table of S_k, read from cache when possible.
pub fn cached_character_table(k: usize, dir: Option<&Path>) -> Result<CharacterTable> {
    get_or_build(dir, "character-table", &format!("k{k}"), || {
        Ok((*character_table(k)).clone())
    })
}

/// Eulerian idempotent family in QS_n, read from cache when possible.
pub fn cached_idempotent_family(
    n: usize,
    signed: bool,
    dir: Option<&Path>,
) -> Result<IdempotentFamily> {
    let tag = if signed { "signed" } else { "unsigned" };
    get_or_build(dir, "idempotent-family", &format!("n{n}-{tag}"), || {
        Ok((*eulerian_idempotents(n, signed)).clone())
    })
}
