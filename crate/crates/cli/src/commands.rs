//! The subcommands, as functions from arguments to printable output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use palcomb::antipal::{
    creaky_factorizations, is_a_rich, is_antipalindrome, is_antipalstar, is_creaky,
    prime_antipalstar_factorization,
};
use palcomb::pairs::{is_credible, pal_factorizations, Factorization};
use palcomb::palindrome::{analyze_conjugacy_class, is_palindrome};
use palcomb::rich::{bound_report, in_language_i, is_rich, table1_ratio, Relation};
use palcomb::verify::{self, Suite};
use palcomb::{Count, Word};
use serde_json::{json, Value};

use crate::bfile::OeisBFile;
use crate::cache::Cache;
use crate::output::{count_json, render_census, Format, Table};
use crate::sequences::{compute, CensusRequest, Sequence};
use crate::CliError;

/// Printable result plus whether the command's check succeeded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

/// Rows `1..=n_max`, served from the cache when complete there and appended
/// to it otherwise.
pub fn census_rows(req: &CensusRequest, cache_path: Option<&Path>) -> Result<BTreeMap<u64, Count>, CliError> {
    let name = req.sequence.name();
    let mut cache = cache_path.map(Cache::open).transpose()?;
    if let Some(rows) = cache.as_ref().and_then(|c| c.lookup(name, req.k, 1, req.n_max)) {
        return Ok(rows);
    }
    let rows = compute(req)?;
    if let Some(cache) = cache.as_mut() {
        cache.append(name, req.k, &rows)?;
    }
    Ok(rows)
}

#[derive(Clone, Debug)]
pub struct CensusArgs {
    pub request: CensusRequest,
    pub format: Format,
    pub cache: Option<PathBuf>,
    pub with_zero_row: bool,
}

pub fn census(args: &CensusArgs) -> Result<Outcome, CliError> {
    let seq = args.request.sequence;
    let mut rows = census_rows(&args.request, args.cache.as_deref())?;
    if args.with_zero_row {
        let zero = seq
            .zero_row()
            .ok_or_else(|| CliError::Usage(format!("{} has no length-0 value", seq.name())))?;
        rows.insert(0, zero);
    }
    Ok(Outcome::ok(render_census(seq, args.request.k, &rows, args.format)?))
}

struct Renderer {
    letters: Option<Vec<char>>,
}

impl Renderer {
    fn word(&self, w: &Word) -> String {
        match &self.letters {
            _ if w.is_empty() => "ε".to_string(),
            Some(letters) => w.symbols().iter().map(|&s| letters[s as usize]).collect(),
            None => w.to_string(),
        }
    }

    fn split(&self, f: &Factorization) -> String {
        format!("{}·{}", self.word(&f.left), self.word(&f.right))
    }
}

fn listing(items: &[String]) -> String {
    if items.is_empty() {
        "none".to_string()
    } else {
        items.join(" ")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn binary_flag(w: &Word, f: impl FnOnce(&Word) -> palcomb::Result<bool>) -> Result<&'static str, CliError> {
    if w.is_binary() {
        Ok(yes_no(f(w)?))
    } else {
        Ok("n/a (binary only)")
    }
}

/// Classification report for one word. With `remap`, letters are numbered in
/// order of first appearance and echoed back in the original spelling.
pub fn check(text: &str, k: u32, remap: bool) -> Result<Outcome, CliError> {
    let (w, r) = if remap {
        let mut letters: Vec<char> = Vec::new();
        for ch in text.chars().filter(|&c| c != 'ε') {
            if !letters.contains(&ch) {
                letters.push(ch);
            }
        }
        let w = if text == "ε" { Word::empty(2)? } else { Word::parse_remapped(text)? };
        (w, Renderer { letters: Some(letters) })
    } else {
        (Word::parse(text, k)?, Renderer { letters: None })
    };

    let mut out = String::new();
    let mapping = match &r.letters {
        Some(l) if !l.is_empty() => {
            let pairs: Vec<String> = l.iter().enumerate().map(|(i, c)| format!("{c}={i}")).collect();
            format!(" ({})", pairs.join(", "))
        }
        _ => String::new(),
    };
    writeln!(out, "word: {} (length {}, k = {}{mapping})", r.word(&w), w.len(), w.alphabet_size()).unwrap();
    writeln!(out, "palindrome: {}", yes_no(is_palindrome(&w))).unwrap();
    writeln!(out, "antipalindrome: {}", binary_flag(&w, is_antipalindrome)?).unwrap();
    writeln!(out, "antipalstar: {}", binary_flag(&w, is_antipalstar)?).unwrap();
    writeln!(out, "credible: {}", yes_no(is_credible(&w))).unwrap();
    writeln!(out, "creaky: {}", binary_flag(&w, is_creaky)?).unwrap();
    writeln!(out, "rich: {}", yes_no(is_rich(&w))).unwrap();
    writeln!(out, "a-rich: {}", binary_flag(&w, is_a_rich)?).unwrap();
    writeln!(out, "language-i: {}", binary_flag(&w, |w| Ok(in_language_i(w)))?).unwrap();

    if w.is_empty() {
        writeln!(out, "palindromic pair factorizations: ε·ε").unwrap();
    } else {
        let d = w.primitive_decomposition()?;
        writeln!(out, "primitive root: {} ^ {}", r.word(&d.root), d.exponent).unwrap();
        let fs = pal_factorizations(&w)?;
        let listed: Vec<String> = fs.iter().map(|f| r.split(f)).collect();
        writeln!(out, "palindromic pair factorizations ({}): {}", fs.len(), listing(&listed)).unwrap();
        if w.is_binary() {
            let cs = creaky_factorizations(&w)?;
            let listed: Vec<String> = cs.iter().map(|f| r.split(f)).collect();
            writeln!(out, "antipalindromic pair factorizations ({}): {}", cs.len(), listing(&listed)).unwrap();
        }
        let class = analyze_conjugacy_class(&w)?;
        let pals: Vec<String> = class.palindromes.iter().map(|p| r.word(p)).collect();
        write!(out, "palindromes in conjugacy class ({}): {}", pals.len(), listing(&pals)).unwrap();
        if let Some(wit) = &class.witness {
            write!(out, " [x = {}, i = {}]", r.word(&wit.half), wit.exponent).unwrap();
        }
        out.push('\n');
    }
    if w.is_binary() && is_antipalstar(&w)? {
        let p = prime_antipalstar_factorization(&w)?;
        let listed: Vec<String> = p.factors.iter().map(|f| r.word(f)).collect();
        writeln!(out, "prime antipalstar factorization: {}", listed.join("·")).unwrap();
    }
    Ok(Outcome::ok(out))
}

pub fn verify(suite_name: &str, max_n: Option<usize>) -> Result<Outcome, CliError> {
    let suite = Suite::from_name(suite_name).ok_or_else(|| CliError::UnknownSuite(suite_name.to_string()))?;
    let max_n = max_n.unwrap_or(suite.default_max_n());
    let report = verify::run(suite, max_n)?;
    let (name, alias) = suite.names();
    let label = if name == alias { name.to_string() } else { format!("{name} ({alias})") };
    let text = match &report.counterexample {
        None => format!("PASS {label}: max-n {max_n}, {} checks\n", report.checked),
        Some(c) => format!("FAIL {label}: max-n {max_n}, counterexample {c}\n"),
    };
    Ok(Outcome {
        text,
        ok: report.passed(),
    })
}

fn rich_rows(n_max: u64, threads: usize, override_budget: bool, cache: Option<&Path>) -> Result<BTreeMap<u64, Count>, CliError> {
    census_rows(
        &CensusRequest {
            sequence: Sequence::Rich,
            n_max,
            k: 2,
            threads,
            override_budget,
        },
        cache,
    )
}

/// Rich-word counts against `n^{√n}`, with growth summaries.
pub fn table1(
    n_max: u64,
    threads: usize,
    override_budget: bool,
    cache: Option<&Path>,
    format: Format,
) -> Result<Outcome, CliError> {
    let rows = rich_rows(n_max, threads, override_budget, cache)?;
    let mut table = Table {
        columns: vec!["n", "rich", "n_pow_sqrt_n", "ratio", "nth_root", "growth"],
        rows: Vec::new(),
    };
    for (&n, &c) in &rows {
        let nf = n as f64;
        let cf = c as f64;
        let growth = match n.checked_sub(1).and_then(|p| rows.get(&p)) {
            Some(&prev) => json!(format!("{:.4}", cf / prev as f64)),
            None => Value::Null,
        };
        table.rows.push(vec![
            json!(n),
            count_json(c),
            json!(format!("{:.2}", nf.powf(nf.sqrt()))),
            json!(format!("{:.4}", table1_ratio(n, c as u64))),
            json!(format!("{:.4}", cf.powf(1.0 / nf))),
            growth,
        ]);
    }
    Ok(Outcome::ok(table.render(format)?))
}

fn relation(r: Relation) -> &'static str {
    match r {
        Relation::Greater => ">",
        Relation::Equal => "=",
        Relation::Less => "<",
    }
}

/// The exact lower-bound chain for even lengths `4..=n_max`.
pub fn bounds(n_max: u64, format: Format) -> Result<Outcome, CliError> {
    let mut table = Table {
        columns: vec![
            "n",
            "language_i",
            "p_n",
            "sum_sq",
            "max_sq",
            "last_term",
            "chain",
            "ln_lower",
            "leading_term",
        ],
        rows: Vec::new(),
    };
    let mut ok = true;
    for n in (4..=n_max).step_by(2) {
        let r = bound_report::<Count, f64>(n, None)?;
        ok &= r.i_vs_p.holds_weakly()
            && r.i_vs_sum.holds_weakly()
            && r.sum_vs_max.holds_weakly()
            && r.max_vs_last.holds_weakly();
        let last = r.scaled_last_term as f64 / (n * n) as f64;
        table.rows.push(vec![
            json!(n),
            count_json(r.language_i_count),
            count_json(r.exact_p),
            count_json(r.sum_of_squares),
            count_json(r.max_square),
            json!(format!("{last:.4}")),
            json!(format!(
                "I{}p I{}sum sum{}max max{}last",
                relation(r.i_vs_p),
                relation(r.i_vs_sum),
                relation(r.sum_vs_max),
                relation(r.max_vs_last)
            )),
            json!(format!("{:.4}", r.ln_cr_lower)),
            json!(format!("{:.4}", r.leading_term)),
        ]);
    }
    Ok(Outcome {
        text: table.render(format)?,
        ok,
    })
}

#[derive(Clone, Debug)]
pub struct CompareArgs {
    pub sequence: Sequence,
    pub bfile: PathBuf,
    pub n_max: Option<u64>,
    pub threads: usize,
    pub cache: Option<PathBuf>,
}

/// Largest length compared by default.
pub fn default_compare_limit(seq: Sequence) -> u64 {
    match seq {
        Sequence::Rich => 26,
        _ => 20,
    }
}

pub fn oeis_compare(args: &CompareArgs) -> Result<Outcome, CliError> {
    let seq = args.sequence;
    let link = seq
        .oeis()
        .ok_or_else(|| CliError::Usage(format!("{} has no OEIS counterpart", seq.name())))?;
    let file = OeisBFile::read(&args.bfile)?;
    let first = file
        .first_index()
        .ok_or_else(|| CliError::Usage(format!("{} has no entries", args.bfile.display())))?;
    let limit = args.n_max.unwrap_or(default_compare_limit(seq));
    let top = file
        .entries
        .keys()
        .map(|&i| link.length_of(i))
        .filter(|&n| n <= limit)
        .max()
        .unwrap_or(0);

    let mut out = String::new();
    if file.id != link.id {
        writeln!(out, "note: file id {} differs from {}", file.id, link.id).unwrap();
    }
    let span = if link.scale == 1 { "length i".to_string() } else { format!("length {}i", link.scale) };
    writeln!(out, "{} vs {} (k = {}): index i is {span}", link.id, seq.name(), link.k).unwrap();
    if first == 0 {
        writeln!(out, "offset: file starts at index 0, so the empty word is counted; computed row n = 0 is {}", seq.zero_row().unwrap_or(0)).unwrap();
    } else {
        writeln!(out, "offset: file starts at index {first} (length {}); no n = 0 row", link.length_of(first)).unwrap();
    }

    let mut rows = computed_rows(seq, top, link.k, args)?;
    if let Some(z) = seq.zero_row() {
        rows.insert(0, z);
    }
    let (mut compared, mut differ, mut skipped) = (0, 0, 0);
    for (&i, &filed) in &file.entries {
        let n = link.length_of(i);
        let Some(&computed) = rows.get(&n) else {
            skipped += 1;
            continue;
        };
        compared += 1;
        let verdict = if computed == filed {
            "equal"
        } else {
            differ += 1;
            "DIFFER"
        };
        writeln!(out, "{i} n={n} file={filed} computed={computed} {verdict}").unwrap();
    }
    writeln!(out, "{compared} compared, {differ} differ, {skipped} beyond n = {top} skipped").unwrap();
    Ok(Outcome {
        text: out,
        ok: differ == 0 && compared > 0,
    })
}

fn computed_rows(seq: Sequence, top: u64, k: u64, args: &CompareArgs) -> Result<BTreeMap<u64, Count>, CliError> {
    census_rows(
        &CensusRequest {
            sequence: seq,
            n_max: top,
            k,
            threads: args.threads,
            override_budget: false,
        },
        args.cache.as_deref(),
    )
}
