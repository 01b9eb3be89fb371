//! Content-addressed disk cache for atom sets.
//!
//! Files are JSON with a header `{format_version, group, subset, davenport,
//! atom_count}` and a body of sequence literals. The file name is the
//! SHA-256 of `(format_version, group spec, canonical subset rendering)`, so
//! stale entries from older formats or other subsets are unreachable.
//! Writes go to a temporary file in the same directory followed by a
//! rename.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::io::Write;
use std::path::{Path, PathBuf};
use zerosum_core::invariants::render_subset;
use zerosum_core::{AtomSet, FiniteAbelianGroup, GroupElement, Limits, Sequence};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache file is corrupt: {0}")]
    Corrupt(String),
    #[error("cache file is stale (format {found}, expected {expected})")]
    Stale { found: u32, expected: u32 },
    #[error("cache io: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    group: String,
    subset: String,
    davenport: u64,
    atom_count: u64,
    atoms: Vec<String>,
}

/// Cache key for a (group, subset) pair under the current format.
pub fn cache_key(group: &FiniteAbelianGroup, subset: &[GroupElement]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(FORMAT_VERSION.to_le_bytes());
    hasher.update(b"|");
    hasher.update(group.spec_string().as_bytes());
    hasher.update(b"|");
    hasher.update(render_subset(subset).as_bytes());
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

fn cache_path(dir: &Path, group: &FiniteAbelianGroup, subset: &[GroupElement]) -> PathBuf {
    dir.join(format!("{}.json", cache_key(group, subset)))
}

/// Stores an atom set, atomically. Creates the directory on demand.
pub fn cache_store(dir: &Path, atoms: &AtomSet) -> Result<PathBuf, CacheError> {
    std::fs::create_dir_all(dir)?;
    let subset = atoms.subset();
    let file = CacheFile {
        format_version: FORMAT_VERSION,
        group: atoms.group().spec_string(),
        subset: render_subset(&subset),
        davenport: atoms.davenport(),
        atom_count: atoms.atoms().len() as u64,
        atoms: atoms.atoms().iter().map(|a| a.to_string()).collect(),
    };
    let path = cache_path(dir, atoms.group(), &subset);
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, &file)
        .map_err(|e| CacheError::Corrupt(format!("serialize: {e}")))?;
    tmp.flush()?;
    tmp.persist(&path).map_err(|e| CacheError::Io(e.error))?;
    Ok(path)
}

/// Loads an atom set if present. Header mismatches reject the file; a
/// missing file is `Ok(None)`.
pub fn cache_load(
    dir: &Path,
    group: &FiniteAbelianGroup,
    subset: &[GroupElement],
) -> Result<Option<AtomSet>, CacheError> {
    let path = cache_path(dir, group, subset);
    let bytes = match std::fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let file: CacheFile = serde_json::from_slice(&bytes)
        .map_err(|e| CacheError::Corrupt(format!("parse: {e}")))?;
    if file.format_version != FORMAT_VERSION {
        return Err(CacheError::Stale { found: file.format_version, expected: FORMAT_VERSION });
    }
    if file.group != group.spec_string() || file.subset != render_subset(subset) {
        return Err(CacheError::Corrupt("header names a different atom set".into()));
    }
    if file.atom_count != file.atoms.len() as u64 {
        return Err(CacheError::Corrupt("atom count differs from body length".into()));
    }
    let mut atoms = Vec::with_capacity(file.atoms.len());
    for literal in &file.atoms {
        atoms.push(
            Sequence::parse(group, literal)
                .map_err(|e| CacheError::Corrupt(format!("bad literal {literal:?}: {e}")))?,
        );
    }
    let set = AtomSet::from_parts(group, subset, atoms)
        .map_err(|e| CacheError::Corrupt(format!("validation: {e}")))?;
    if set.davenport() != file.davenport {
        return Err(CacheError::Corrupt("header davenport differs from atoms".into()));
    }
    Ok(Some(set))
}

/// Loads from the cache when possible, recomputing (and re-storing) on a
/// miss or on any stale/corrupt entry.
pub fn load_or_enumerate(
    dir: Option<&Path>,
    group: &FiniteAbelianGroup,
    subset: &[GroupElement],
    limits: &Limits,
) -> zerosum_core::Result<AtomSet> {
    if let Some(dir) = dir {
        if let Ok(Some(set)) = cache_load(dir, group, subset) {
            return Ok(set);
        }
    }
    let set = zerosum_core::atoms::enumerate_atoms(group, subset, limits)?;
    if let Some(dir) = dir {
        let _ = cache_store(dir, &set); // best effort
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use zerosum_core::atoms::enumerate_atoms;

    fn c6_atoms() -> (FiniteAbelianGroup, AtomSet) {
        let g = FiniteAbelianGroup::make_group(&[6]).unwrap();
        let all: Vec<GroupElement> = g.elements().collect();
        let set = enumerate_atoms(&g, &all, &Limits::default()).unwrap();
        (g, set)
    }

    #[test]
    fn roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let (g, set) = c6_atoms();
        cache_store(dir.path(), &set).unwrap();
        let loaded = cache_load(dir.path(), &g, &set.subset()).unwrap().unwrap();
        assert_eq!(loaded, set);
    }

    #[test]
    fn load_on_empty_cache_is_absent() {
        let dir = tempfile::tempdir().unwrap();
        let (g, set) = c6_atoms();
        assert!(cache_load(dir.path(), &g, &set.subset()).unwrap().is_none());
    }

    #[test]
    fn version_bump_is_stale() {
        let dir = tempfile::tempdir().unwrap();
        let (g, set) = c6_atoms();
        let path = cache_store(dir.path(), &set).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let bumped = text.replace("\"format_version\":1", "\"format_version\":999");
        std::fs::write(&path, bumped).unwrap();
        assert!(matches!(
            cache_load(dir.path(), &g, &set.subset()),
            Err(CacheError::Stale { found: 999, .. })
        ));
    }

    #[test]
    fn corrupt_file_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let (g, set) = c6_atoms();
        let path = cache_store(dir.path(), &set).unwrap();
        std::fs::write(&path, b"{not json").unwrap();
        assert!(matches!(
            cache_load(dir.path(), &g, &set.subset()),
            Err(CacheError::Corrupt(_))
        ));
        // and a well-formed file whose body lies about an atom
        let text = {
            cache_store(dir.path(), &set).unwrap();
            std::fs::read_to_string(&path).unwrap()
        };
        std::fs::write(&path, text.replace("(1)^6", "(1)^5")).unwrap();
        assert!(matches!(
            cache_load(dir.path(), &g, &set.subset()),
            Err(CacheError::Corrupt(_))
        ));
    }

    #[test]
    fn load_or_enumerate_recovers_from_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let (g, set) = c6_atoms();
        let path = cache_store(dir.path(), &set).unwrap();
        std::fs::write(&path, b"garbage").unwrap();
        let all = set.subset();
        let recovered =
            load_or_enumerate(Some(dir.path()), &g, &all, &Limits::default()).unwrap();
        assert_eq!(recovered, set);
    }
}
