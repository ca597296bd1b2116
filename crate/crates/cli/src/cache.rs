//! On-disk coefficient cache. An entry lives in `<dir>/<key hash>.json`, where
//! the key hash is the sha256 of the request (series, params, order, format
//! version) and the entry also records the sha256 of its payload.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::series::AnySeries;

/// Bumped whenever the payload layout or coefficient encoding changes.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheKey {
    pub series: String,
    pub params: Map<String, Value>,
    pub order: usize,
    pub format_version: u32,
}

impl CacheKey {
    pub fn new(series: &str, params: &Map<String, Value>, order: usize) -> Self {
        CacheKey {
            series: series.to_string(),
            params: params.clone(),
            order,
            format_version: FORMAT_VERSION,
        }
    }

    pub fn hash(&self) -> String {
        sha256_json(&json!(self))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub payload_sha256: String,
    pub payload: Value,
}

/// sha256 of the compact serialization; object keys are sorted, so equal
/// values always hash the same.
pub fn sha256_json(v: &Value) -> String {
    let text = serde_json::to_string(v).expect("json values serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn entry_path(dir: &Path, key: &CacheKey) -> PathBuf {
    dir.join(format!("{}.json", key.hash()))
}

/// The cached series for `key`, if present. A present entry whose payload
/// fails its hash is an error, never a silent recompute.
pub fn load(dir: &Path, key: &CacheKey) -> Result<Option<AnySeries>> {
    let path = entry_path(dir, key);
    if !path.exists() {
        return Ok(None);
    }
    let entry = read_entry(&path)?;
    check_entry(&entry).with_context(|| format!("cache entry {}", path.display()))?;
    if entry.key != *key {
        bail!("cache entry {} holds a different key", path.display());
    }
    Ok(Some(AnySeries::from_json(&entry.payload)?))
}

pub fn store(dir: &Path, key: &CacheKey, series: &AnySeries) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let payload = series.to_json();
    let entry = CacheEntry {
        key: key.clone(),
        payload_sha256: sha256_json(&payload),
        payload,
    };
    let path = entry_path(dir, key);
    // write then rename so a reader never sees half an entry
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_string(&entry)?)?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

fn read_entry(path: &Path) -> Result<CacheEntry> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Re-hashes the payload, then re-parses it and checks that the series
/// serializes back to the same hash.
pub fn check_entry(entry: &CacheEntry) -> Result<()> {
    let found = sha256_json(&entry.payload);
    if found != entry.payload_sha256 {
        bail!("hash mismatch: stored {}, payload hashes to {found}", entry.payload_sha256);
    }
    let again = sha256_json(&AnySeries::from_json(&entry.payload)?.to_json());
    if again != entry.payload_sha256 {
        bail!("payload does not re-serialize to its stored hash");
    }
    Ok(())
}

fn entry_files(dir: &Path) -> Result<Vec<PathBuf>> {
    if !dir.is_dir() {
        bail!("cache directory {} does not exist", dir.display());
    }
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    Ok(files)
}

pub fn list(dir: &Path) -> Result<String> {
    let mut out = format!("{:<16} {:<10} {:>5} {:>7} {:>7}  params\n", "key", "series", "order", "entries", "version");
    for path in entry_files(dir)? {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("?");
        let short = &stem[..stem.len().min(16)];
        match read_entry(&path) {
            Ok(e) => {
                let entries = e.payload.get("entries").and_then(Value::as_array).map_or(0, Vec::len);
                out.push_str(&format!(
                    "{short:<16} {:<10} {:>5} {entries:>7} {:>7}  {}\n",
                    e.key.series,
                    e.key.order,
                    e.key.format_version,
                    Value::Object(e.key.params.clone())
                ));
            }
            Err(_) => out.push_str(&format!("{short:<16} (unreadable)\n")),
        }
    }
    Ok(out)
}

/// Removes entries with another format version and entries that do not
/// parse. Returns how many files were removed.
pub fn gc(dir: &Path) -> Result<usize> {
    let mut removed = 0;
    for path in entry_files(dir)? {
        let stale = match read_entry(&path) {
            Ok(e) => e.key.format_version != FORMAT_VERSION,
            Err(_) => true,
        };
        if stale {
            fs::remove_file(&path)?;
            removed += 1;
        }
    }
    Ok(removed)
}

/// `(file, problem)` for every entry that fails [`check_entry`], plus the
/// number of entries checked.
pub fn verify_hashes(dir: &Path) -> Result<(usize, Vec<(PathBuf, String)>)> {
    let files = entry_files(dir)?;
    let mut bad = Vec::new();
    for path in &files {
        let result = read_entry(path).and_then(|e| {
            check_entry(&e)?;
            if path.file_stem().and_then(|s| s.to_str()) != Some(e.key.hash().as_str()) {
                bail!("file name does not match the key hash");
            }
            Ok(())
        });
        if let Err(err) = result {
            bad.push((path.clone(), format!("{err:#}")));
        }
    }
    Ok((files.len(), bad))
}
