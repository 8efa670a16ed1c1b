use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use palcomb::Count;
use serde_json::{json, Value};

use crate::sequences::Sequence;
use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
    Bfile,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "bfile" => Ok(Format::Bfile),
            _ => Err(CliError::Usage(format!("unknown format {s:?} (csv, json, bfile)"))),
        }
    }
}

/// Counts beyond `u64` are written as JSON strings.
pub fn count_json(c: Count) -> Value {
    match u64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

/// A plain table; every cell is preformatted.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Csv => {
                let mut out = self.columns.join(",");
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|v| match v {
                            Value::String(s) => s.clone(),
                            Value::Null => String::new(),
                            other => other.to_string(),
                        })
                        .collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
                Ok(out)
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj = self.columns.iter().zip(row).map(|(c, v)| (c.to_string(), v.clone()));
                        Value::Object(obj.collect())
                    })
                    .collect();
                let mut s = serde_json::to_string_pretty(&rows).expect("plain values serialize");
                s.push('\n');
                Ok(s)
            }
            Format::Bfile => Err(CliError::Usage("b-file output is only available for census".into())),
        }
    }
}

pub fn render_census(
    sequence: Sequence,
    k: u64,
    rows: &BTreeMap<u64, Count>,
    format: Format,
) -> Result<String, CliError> {
    match format {
        Format::Bfile => {
            let mut out = String::new();
            match sequence.oeis().filter(|l| l.k == k) {
                Some(link) => {
                    writeln!(
                        out,
                        "# {} ({}, k = {k}); index i counts words of length {}",
                        link.id,
                        sequence.name(),
                        if link.scale == 1 { "i".to_string() } else { format!("{}i", link.scale) }
                    )
                    .unwrap();
                    for (&n, c) in rows {
                        if let Some(i) = link.index_of(n) {
                            writeln!(out, "{i} {c}").unwrap();
                        }
                    }
                }
                None => {
                    writeln!(out, "# {} (k = {k}); index is the word length", sequence.name()).unwrap();
                    for (n, c) in rows {
                        writeln!(out, "{n} {c}").unwrap();
                    }
                }
            }
            Ok(out)
        }
        _ => Table {
            columns: vec!["n", "count"],
            rows: rows.iter().map(|(&n, &c)| vec![json!(n), count_json(c)]).collect(),
        }
        .render(format),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> BTreeMap<u64, Count> {
        [(1, 0), (2, 2), (3, 0), (4, 6)].into_iter().collect()
    }

    #[test]
    fn csv_and_json() {
        let csv = render_census(Sequence::EvenPairs, 2, &rows(), Format::Csv).unwrap();
        assert_eq!(csv, "n,count\n1,0\n2,2\n3,0\n4,6\n");
        let json: Value = serde_json::from_str(&render_census(Sequence::EvenPairs, 2, &rows(), Format::Json).unwrap()).unwrap();
        assert_eq!(json[3]["count"], 6);
    }

    #[test]
    fn bfile_uses_oeis_indexing() {
        let out = render_census(Sequence::Creaky, 2, &rows(), Format::Bfile).unwrap();
        let body: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(body, vec!["1 2", "2 6"]);
    }

    #[test]
    fn huge_counts_stay_exact() {
        assert_eq!(count_json(u128::MAX), json!(u128::MAX.to_string()));
    }
}
