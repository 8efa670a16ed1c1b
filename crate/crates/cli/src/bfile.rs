//! OEIS b-files: one "index value" pair per line, '#' comments.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use palcomb::Count;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisBFile {
    pub id: String,
    pub entries: BTreeMap<u64, Count>,
}

impl OeisBFile {
    /// Parses b-file text. Blank lines are skipped, indices must increase strictly.
    pub fn parse(id: impl Into<String>, text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        let mut last: Option<u64> = None;
        for (i, raw) in text.split('\n').enumerate() {
            let line_no = i + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| CliError::BFile { line: line_no, message };
            let (index, value) = line
                .split_once(' ')
                .ok_or_else(|| err(format!("expected \"index value\", got {line:?}")))?;
            let index: u64 = index
                .trim()
                .parse()
                .map_err(|_| err(format!("bad index {index:?}")))?;
            let value: Count = value
                .trim()
                .parse()
                .map_err(|_| err(format!("bad value {value:?}")))?;
            if last.is_some_and(|l| index <= l) {
                return Err(err(format!("index {index} does not increase")));
            }
            last = Some(index);
            entries.insert(index, value);
        }
        Ok(Self { id: id.into(), entries })
    }

    /// Reads a file; the sequence id is taken from the file stem
    /// (`b216264.txt` becomes `A216264`).
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("unknown");
        let id = match stem.strip_prefix('b') {
            Some(digits) if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) => {
                format!("A{digits}")
            }
            _ => stem.to_string(),
        };
        Self::parse(id, &text)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, v) in &self.entries {
            writeln!(out, "{i} {v}").unwrap();
        }
        out
    }

    pub fn first_index(&self) -> Option<u64> {
        self.entries.keys().next().copied()
    }
}
