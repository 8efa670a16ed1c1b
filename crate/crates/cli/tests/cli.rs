use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn palcomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_palcomb"))
        .args(args)
        .env_remove("PALCOMB_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn census_csv_matches_brute_force() {
    let out = palcomb(&["census", "rich", "--n-max", "10"]);
    assert!(out.status.success());
    let expected: String = std::iter::once("n,count".to_string())
        .chain((1..=10).map(|n| format!("{n},{}", palcomb::oracle::brute_count("rich", n, 2).unwrap())))
        .map(|l| l + "\n")
        .collect();
    assert_eq!(stdout(&out), expected);
}

#[test]
fn thread_count_never_changes_output() {
    let one = palcomb(&["census", "rich", "--n-max", "20", "--threads", "1"]);
    let four = palcomb(&["census", "rich", "--n-max", "20", "--threads", "4"]);
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn creaky_census_equals_even_pairs() {
    let creaky = palcomb(&["census", "creaky", "--n-max", "12"]);
    let even = palcomb(&["census", "even-pairs", "--n-max", "12", "--k", "2"]);
    assert_eq!(stdout(&creaky), stdout(&even));
}

#[test]
fn json_and_zero_row() {
    let out = palcomb(&["census", "pal-pairs", "--n-max", "3", "--format", "json", "--with-zero-row"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["n"], 0);
    assert_eq!(v[0]["count"], 1);
    assert_eq!(v[3]["count"], 8);
    assert!(!palcomb(&["census", "rho", "--n-max", "3", "--with-zero-row"]).status.success());
}

#[test]
fn bfile_output_is_self_hosting() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b216264.txt");
    let out = palcomb(&["census", "rich", "--n-max", "14", "--format", "bfile", "--with-zero-row"]);
    std::fs::write(&path, &out.stdout).unwrap();
    let cmp = palcomb(&["oeis-compare", "rich", path.to_str().unwrap()]);
    assert!(cmp.status.success(), "{}", stdout(&cmp));
}

#[test]
fn budget_and_unknown_names_fail() {
    let out = palcomb(&["census", "rich", "--n-max", "33"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    assert!(!palcomb(&["census", "fibonacci", "--n-max", "3"]).status.success());
    assert!(!palcomb(&["verify", "theorem99"]).status.success());
}

#[test]
fn check_reports() {
    let out = stdout(&palcomb(&["check", "001011"]));
    assert!(out.contains("antipalindrome: yes"));
    let out = stdout(&palcomb(&["check", "aabaab", "--remap"]));
    assert!(out.contains("palindromic pair factorizations (2): aa·baab aabaa·b"), "{out}");
    let out = stdout(&palcomb(&["check", "ε"]));
    for flag in ["palindrome", "credible", "creaky", "rich"] {
        assert!(out.contains(&format!("{flag}: yes")), "{flag}");
    }
    assert!(!palcomb(&["check", "012"]).status.success());
}

#[test]
fn verify_suites_pass() {
    for (suite, n) in [("theorem5", "14"), ("theorem9", "16"), ("theorem1", "16")] {
        let out = palcomb(&["verify", suite, "--max-n", n]);
        assert!(out.status.success(), "{}", stdout(&out));
        assert!(stdout(&out).starts_with("PASS"));
    }
}

#[test]
fn table1_rows() {
    let out = stdout(&palcomb(&["table1", "--n-max", "5"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[4], "4,16,16.00,1.0000,2.0000,2.0000");
    assert!(lines[5].starts_with("5,32,36.55,0.875"));
}

#[test]
fn oeis_fixtures_agree() {
    for (seq, file, n) in [("rich", "b216264.txt", "25"), ("pal-pairs", "b007055.txt", "14"), ("creaky", "b045655.txt", "14")] {
        let out = palcomb(&["oeis-compare", seq, data(file).to_str().unwrap(), "--n-max", n]);
        assert!(out.status.success(), "{}", stdout(&out));
        assert!(stdout(&out).contains(" 0 differ"));
    }
}

#[test]
fn oeis_mismatch_and_malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("b216264.txt");
    std::fs::write(&bad, "0 1\n1 2\n2 5\n").unwrap();
    let out = palcomb(&["oeis-compare", "rich", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("DIFFER"));
    std::fs::write(&bad, "0 1\n1 2\n1 4\n").unwrap();
    let out = palcomb(&["oeis-compare", "rich", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn cache_extends_and_detects_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.txt");
    let c = cache.to_str().unwrap();
    let first = palcomb(&["census", "rich", "--n-max", "8", "--cache", c]);
    let again = palcomb(&["census", "rich", "--n-max", "8", "--cache", c]);
    assert_eq!(stdout(&first), stdout(&again));
    palcomb(&["census", "rich", "--n-max", "10", "--cache", c]);
    let text = std::fs::read_to_string(&cache).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("checksum")).count(), 2);
    assert_eq!(text.lines().filter(|l| l.starts_with("rich 2 ")).count(), 10);

    std::fs::write(&cache, text.replace("rich 2 8 252", "rich 2 8 253")).unwrap();
    let out = palcomb(&["census", "rich", "--n-max", "8", "--cache", c]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("cache corrupted"));
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_palcomb"))
        .args(["census", "language-i", "--n-max", "6"])
        .env("PALCOMB_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("census-cache.txt")).unwrap();
    assert!(text.contains("language-i 2 6 40"));
}
