//! On-disk series cache.
//!
//! One file per key, named by the SHA-256 of the parameters:
//!
//! ```text
//! ubdkit-cache v1
//! key 3f2a...
//! params series|entry=fP|terms=301|ubdkit 0.1.0
//! series v1
//! ...
//! end
//! ```
//!
//! Writers take `<key>.lock` with `create_new`; when the lock is held the
//! result is simply not stored.

use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use ubdkit::qseries::{format_series, parse_series, AnySeries, SeriesCoeff};
use ubdkit::LaurentSeries;

const MAGIC: &str = "ubdkit-cache v1";
pub const CODE_VERSION: &str = concat!("ubdkit ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheKey {
    pub params: String,
    pub hex: String,
}

impl CacheKey {
    pub fn new(operation: &str, params: &[(&str, String)]) -> Self {
        let mut s = operation.to_string();
        for (k, v) in params {
            s.push_str(&format!("|{k}={v}"));
        }
        s.push('|');
        s.push_str(CODE_VERSION);
        let hex = Sha256::digest(s.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        CacheKey { params: s, hex }
    }
}

#[derive(Debug)]
pub enum Lookup {
    Hit(AnySeries),
    Miss,
    /// Present but unreadable; the reason is reported and the entry rebuilt.
    Corrupt(String),
}

#[derive(Clone, Debug)]
pub struct SeriesCache {
    dir: PathBuf,
}

impl SeriesCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SeriesCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.series", key.hex))
    }

    pub fn load(&self, key: &CacheKey) -> Lookup {
        let text = match fs::read_to_string(self.path(key)) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Corrupt(e.to_string()),
        };
        match decode(&text, key) {
            Ok(s) => Lookup::Hit(s),
            Err(e) => Lookup::Corrupt(e),
        }
    }

    /// Stores `series` unless another writer holds the lock. Returns whether
    /// the file was written.
    pub fn store<K: SeriesCoeff>(&self, key: &CacheKey, series: &LaurentSeries<K>) -> io::Result<bool> {
        fs::create_dir_all(&self.dir)?;
        let lock = self.dir.join(format!("{}.lock", key.hex));
        match OpenOptions::new().write(true).create_new(true).open(&lock) {
            Ok(_) => {}
            Err(e) if e.kind() == io::ErrorKind::AlreadyExists => return Ok(false),
            Err(e) => return Err(e),
        }
        let result = (|| {
            let tmp = self.dir.join(format!("{}.tmp", key.hex));
            let mut f = fs::File::create(&tmp)?;
            f.write_all(encode(key, series).as_bytes())?;
            f.sync_all()?;
            fs::rename(&tmp, self.path(key))
        })();
        let _ = fs::remove_file(&lock);
        result.map(|_| true)
    }
}

pub fn encode<K: SeriesCoeff>(key: &CacheKey, series: &LaurentSeries<K>) -> String {
    format!("{MAGIC}\nkey {}\nparams {}\n{}", key.hex, key.params, format_series(series))
}

pub fn decode(text: &str, key: &CacheKey) -> Result<AnySeries, String> {
    let mut parts = text.splitn(4, '\n');
    if parts.next() != Some(MAGIC) {
        return Err("bad cache header".into());
    }
    if parts.next() != Some(&format!("key {}", key.hex)) {
        return Err("key mismatch".into());
    }
    if parts.next() != Some(&format!("params {}", key.params)) {
        return Err("parameter mismatch".into());
    }
    let body = parts.next().ok_or("missing series")?;
    parse_series(body).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ubdkit::Rational;

    #[test]
    fn keys_are_stable_and_distinct() {
        let a = CacheKey::new("series", &[("entry", "fP".into()), ("terms", "10".into())]);
        let b = CacheKey::new("series", &[("entry", "fP".into()), ("terms", "11".into())]);
        assert_eq!(a, CacheKey::new("series", &[("entry", "fP".into()), ("terms", "10".into())]));
        assert_ne!(a.hex, b.hex);
        assert_eq!(a.hex.len(), 64);
    }

    #[test]
    fn decode_rejects_foreign_keys() {
        let a = CacheKey::new("series", &[("entry", "fP".into())]);
        let b = CacheKey::new("series", &[("entry", "fQ".into())]);
        let s = LaurentSeries::new(1, 0, vec![Rational::from_integer(1.into())]).unwrap();
        let text = encode(&a, &s);
        assert!(matches!(decode(&text, &a), Ok(AnySeries::Rational(ref t)) if *t == s));
        assert!(decode(&text, &b).is_err());
        assert!(decode(&text[..text.len() - 4], &a).is_err());
    }
}
