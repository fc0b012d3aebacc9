//! On-disk orbit cache.
//!
//! One file per (algebra, seed, signed) key, as JSON lines: a header
//! record `{version, algebra, seed, size, signed}` followed by one weight
//! record per line. Any header mismatch (including the format version)
//! invalidates the file and the orbit is recomputed.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use weylchar::weylorb::{SignedWeight, WeylOrbit};
use weylchar::{RootSystem, Weight};

/// Environment variable naming the cache directory; caching is off when
/// it is unset.
pub const CACHE_ENV: &str = "WEYLCHAR_CACHE_DIR";

pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache encoding error: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheHeader {
    pub version: u32,
    pub algebra: String,
    pub seed: Vec<String>,
    pub size: usize,
    pub signed: bool,
}

/// A parsed cache hit.
#[derive(Debug, Clone)]
pub struct CachedOrbit {
    pub weights: Vec<Weight>,
    /// Present exactly when the file holds a signed orbit.
    pub signs: Option<Vec<i8>>,
}

#[derive(Debug, Clone)]
pub struct OrbitCache {
    dir: PathBuf,
}

fn seed_strings(seed: &Weight) -> Vec<String> {
    seed.coords().iter().map(|c| c.to_string()).collect()
}

impl OrbitCache {
    pub fn new(dir: PathBuf) -> Self {
        OrbitCache { dir }
    }

    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).map(|dir| OrbitCache::new(PathBuf::from(dir)))
    }

    pub fn dir(&self) -> &PathBuf {
        &self.dir
    }

    fn file_path(&self, seed: &Weight, signed: bool) -> PathBuf {
        let coords: String = seed
            .coords()
            .iter()
            .map(|c| c.to_string().replace('-', "m").replace('/', "d"))
            .collect::<Vec<_>>()
            .join("_");
        let kind = if signed { "signed" } else { "plain" };
        self.dir
            .join(format!("orbit-{}-{}-{}.jsonl", seed.algebra(), coords, kind))
    }

    fn expected_header(seed: &Weight, size: usize, signed: bool) -> CacheHeader {
        CacheHeader {
            version: CACHE_FORMAT_VERSION,
            algebra: seed.algebra().to_string(),
            seed: seed_strings(seed),
            size,
            signed,
        }
    }

    /// Loads a cached orbit; `None` on miss, version mismatch, or any
    /// inconsistency between header and records.
    pub fn load(&self, rs: &RootSystem, seed: &Weight, signed: bool) -> Option<CachedOrbit> {
        let _ = rs;
        let path = self.file_path(seed, signed);
        let file = fs::File::open(path).ok()?;
        let mut lines = BufReader::new(file).lines();
        let header: CacheHeader = serde_json::from_str(&lines.next()?.ok()?).ok()?;
        if header.version != CACHE_FORMAT_VERSION
            || header.algebra != seed.algebra().to_string()
            || header.seed != seed_strings(seed)
            || header.signed != signed
        {
            return None;
        }
        let mut weights = Vec::with_capacity(header.size);
        let mut signs = if signed {
            Some(Vec::with_capacity(header.size))
        } else {
            None
        };
        for line in lines {
            let line = line.ok()?;
            if line.trim().is_empty() {
                continue;
            }
            let value: serde_json::Value = serde_json::from_str(&line).ok()?;
            let weight: Weight = serde_json::from_value(value.clone()).ok()?;
            if weight.algebra() != seed.algebra() {
                return None;
            }
            if let Some(signs) = signs.as_mut() {
                let s = value.get("sign")?.as_i64()?;
                if s != 1 && s != -1 {
                    return None;
                }
                signs.push(s as i8);
            }
            weights.push(weight);
        }
        if weights.len() != header.size {
            return None;
        }
        Some(CachedOrbit { weights, signs })
    }

    fn write_lines(
        &self,
        seed: &Weight,
        signed: bool,
        size: usize,
        records: impl Iterator<Item = serde_json::Value>,
    ) -> Result<(), CacheError> {
        fs::create_dir_all(&self.dir)?;
        let path = self.file_path(seed, signed);
        let mut out = fs::File::create(path)?;
        let header = Self::expected_header(seed, size, signed);
        writeln!(out, "{}", serde_json::to_string(&header)?)?;
        for record in records {
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        }
        Ok(())
    }

    pub fn store_orbit(&self, orbit: &WeylOrbit) -> Result<(), CacheError> {
        self.write_lines(
            orbit.seed(),
            false,
            orbit.len(),
            orbit.iter().map(|w| serde_json::to_value(w).expect("weight json")),
        )
    }

    pub fn store_signed(&self, seed: &Weight, signed: &[SignedWeight]) -> Result<(), CacheError> {
        self.write_lines(
            seed,
            true,
            signed.len(),
            signed.iter().map(|s| {
                let mut v = serde_json::to_value(&s.weight).expect("weight json");
                v["sign"] = json!(s.sign);
                v
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use weylchar::weylorb;
    use weylchar::AlgebraId;

    fn system(name: &str) -> RootSystem {
        RootSystem::new(AlgebraId::parse(name).unwrap())
    }

    #[test]
    fn round_trip_plain_orbit() {
        let dir = tempfile::tempdir().unwrap();
        let cache = OrbitCache::new(dir.path().to_path_buf());
        let a2 = system("A2");
        let seed = Weight::from_ints(a2.algebra(), &[1, 0]).unwrap();
        let orbit = weylorb::orbit(&a2, &seed).unwrap();
        assert!(cache.load(&a2, &seed, false).is_none());
        cache.store_orbit(&orbit).unwrap();
        let hit = cache.load(&a2, &seed, false).unwrap();
        assert_eq!(hit.weights, orbit.elements());
        assert!(hit.signs.is_none());
    }

    #[test]
    fn round_trip_signed_orbit() {
        let dir = tempfile::tempdir().unwrap();
        let cache = OrbitCache::new(dir.path().to_path_buf());
        let a2 = system("A2");
        let signed = weylorb::signed_orbit(&a2, a2.rho()).unwrap();
        cache.store_signed(a2.rho(), &signed).unwrap();
        let hit = cache.load(&a2, a2.rho(), true).unwrap();
        assert_eq!(hit.weights.len(), 6);
        let signs = hit.signs.unwrap();
        assert_eq!(signs.iter().filter(|&&s| s == 1).count(), 3);
        // the signed and plain keys do not collide
        assert!(cache.load(&a2, a2.rho(), false).is_none());
    }

    #[test]
    fn version_mismatch_invalidates() {
        let dir = tempfile::tempdir().unwrap();
        let cache = OrbitCache::new(dir.path().to_path_buf());
        let a2 = system("A2");
        let seed = Weight::from_ints(a2.algebra(), &[1, 0]).unwrap();
        let orbit = weylorb::orbit(&a2, &seed).unwrap();
        cache.store_orbit(&orbit).unwrap();
        // corrupt the version field
        let path = cache.file_path(&seed, false);
        let contents = fs::read_to_string(&path).unwrap();
        let bumped = contents.replacen("\"version\":1", "\"version\":999", 1);
        fs::write(&path, bumped).unwrap();
        assert!(cache.load(&a2, &seed, false).is_none());
    }

    #[test]
    fn truncated_file_invalidates() {
        let dir = tempfile::tempdir().unwrap();
        let cache = OrbitCache::new(dir.path().to_path_buf());
        let a2 = system("A2");
        let seed = Weight::from_ints(a2.algebra(), &[1, 0]).unwrap();
        let orbit = weylorb::orbit(&a2, &seed).unwrap();
        cache.store_orbit(&orbit).unwrap();
        let path = cache.file_path(&seed, false);
        let contents = fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = contents.lines().collect();
        fs::write(&path, lines[..2].join("\n")).unwrap();
        assert!(cache.load(&a2, &seed, false).is_none());
    }
}
