//! Append-only census cache.
//!
//! Records are lines `sequence k n count`. Every appended batch ends with
//! `checksum <sha256>` over the batch's record lines, so truncation or edits
//! are caught on load.

use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use palcomb::Count;
use sha2::{Digest, Sha256};

use crate::CliError;

pub const CACHE_DIR_ENV: &str = "PALCOMB_CACHE_DIR";
pub const CACHE_FILE: &str = "census-cache.txt";

type Key = (String, u64);

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    tables: BTreeMap<Key, BTreeMap<u64, Count>>,
}

fn checksum(records: &str) -> String {
    format!("{:x}", Sha256::digest(records.as_bytes()))
}

impl Cache {
    /// `--cache` wins; otherwise the file inside `$PALCOMB_CACHE_DIR`, if set.
    pub fn resolve(explicit: Option<&Path>) -> Option<PathBuf> {
        explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(|d| PathBuf::from(d).join(CACHE_FILE)))
    }

    pub fn open(path: &Path) -> Result<Self, CliError> {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(CliError::Io(path.display().to_string(), e)),
        };
        let corrupt = |line: usize, why: &str| CliError::Cache(format!("{}:{line}: {why}", path.display()));
        let mut tables: BTreeMap<Key, BTreeMap<u64, Count>> = BTreeMap::new();
        let mut batch = String::new();
        let mut pending: Vec<(Key, u64, Count)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if let Some(sum) = line.strip_prefix("checksum ") {
                if sum != checksum(&batch) {
                    return Err(corrupt(i + 1, "checksum mismatch"));
                }
                for (key, n, count) in pending.drain(..) {
                    let table = tables.entry(key).or_default();
                    if table.get(&n).is_some_and(|c| *c != count) {
                        return Err(corrupt(i + 1, "conflicting records"));
                    }
                    table.insert(n, count);
                }
                batch.clear();
                continue;
            }
            let fields: Vec<&str> = line.split(' ').collect();
            let parsed = match fields[..] {
                [seq, k, n, count] => k
                    .parse()
                    .ok()
                    .zip(n.parse().ok())
                    .zip(count.parse().ok())
                    .map(|((k, n), c)| ((seq.to_string(), k), n, c)),
                _ => None,
            };
            pending.push(parsed.ok_or_else(|| corrupt(i + 1, "malformed record"))?);
            batch.push_str(line);
            batch.push('\n');
        }
        if !pending.is_empty() {
            return Err(corrupt(text.lines().count(), "batch without checksum"));
        }
        Ok(Self {
            path: path.to_path_buf(),
            tables,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn rows(&self, sequence: &str, k: u64) -> Option<&BTreeMap<u64, Count>> {
        self.tables.get(&(sequence.to_string(), k))
    }

    /// Rows `from..=to` if all are cached.
    pub fn lookup(&self, sequence: &str, k: u64, from: u64, to: u64) -> Option<BTreeMap<u64, Count>> {
        let rows = self.rows(sequence, k)?;
        (from..=to).map(|n| rows.get(&n).map(|c| (n, *c))).collect()
    }

    /// Appends the rows not yet cached as one checksummed batch.
    pub fn append(&mut self, sequence: &str, k: u64, rows: &BTreeMap<u64, Count>) -> Result<usize, CliError> {
        let table = self.tables.entry((sequence.to_string(), k)).or_default();
        let mut batch = String::new();
        let mut added = 0;
        for (&n, &count) in rows {
            match table.get(&n) {
                Some(&c) if c == count => {}
                Some(&c) => {
                    return Err(CliError::Cache(format!(
                        "{sequence} k={k} n={n}: cached {c}, computed {count}"
                    )))
                }
                None => {
                    batch.push_str(&format!("{sequence} {k} {n} {count}\n"));
                    table.insert(n, count);
                    added += 1;
                }
            }
        }
        if added == 0 {
            return Ok(0);
        }
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.display().to_string(), e))?;
        }
        let io = |e| CliError::Io(self.path.display().to_string(), e);
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path).map_err(io)?;
        writeln!(file, "{batch}checksum {}", checksum(&batch)).map_err(io)?;
        Ok(added)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        let rows: BTreeMap<u64, Count> = [(1, 2), (2, 4), (3, 8)].into_iter().collect();
        let mut c = Cache::open(&path).unwrap();
        assert_eq!(c.append("rich", 2, &rows).unwrap(), 3);
        assert_eq!(c.append("rich", 2, &rows).unwrap(), 0);
        let c = Cache::open(&path).unwrap();
        assert_eq!(c.lookup("rich", 2, 1, 3), Some(rows.clone()));
        assert_eq!(c.lookup("rich", 2, 1, 4), None);

        let text = std::fs::read_to_string(&path).unwrap();
        std::fs::write(&path, text.replace("rich 2 3 8", "rich 2 3 9")).unwrap();
        assert!(matches!(Cache::open(&path), Err(CliError::Cache(_))));
        std::fs::write(&path, "rich 2 1 2\n").unwrap();
        assert!(matches!(Cache::open(&path), Err(CliError::Cache(_))));
    }
}
