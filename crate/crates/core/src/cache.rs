//! Persistent value cache: one JSON object mapping key strings such as
//! `3;[[1],[1],[1]];[[1,1,1],[],[]]` to values such as `-w+w^2`.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::characters::{CharKey, CharacterEngine};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};

fn cache_error(path: &Path, message: impl ToString) -> Error {
    Error::Cache { path: path.display().to_string(), message: message.to_string() }
}

/// Loads entries into the engine's value cache. A missing file loads nothing.
pub fn load(engine: &CharacterEngine, path: &Path) -> Result<usize> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(cache_error(path, e)),
    };
    let entries: BTreeMap<String, String> = serde_json::from_str(&text).map_err(|e| cache_error(path, e))?;
    for (key, value) in &entries {
        let key = CharKey::from_cache_key(key)?;
        let value = CyclotomicNumber::parse_poly(key.k(), value)?;
        engine.insert_cached(key, value);
    }
    Ok(entries.len())
}

/// Writes the whole value cache, replacing the file atomically.
pub fn save(engine: &CharacterEngine, path: &Path) -> Result<()> {
    let entries: BTreeMap<String, String> = engine.cached_values().into_iter().map(|(k, v)| (k.cache_key(), v.to_poly_string())).collect();
    let text = serde_json::to_string_pretty(&entries).map_err(|e| cache_error(path, e))?;
    let tmp = path.with_extension("tmp");
    let write = || -> std::io::Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    };
    write().map_err(|e| cache_error(path, e))
}
