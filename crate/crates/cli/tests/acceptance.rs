//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use palcomb::antipal::count_creaky;
use palcomb::oracle::brute_count;
use palcomb::pairs::PairCounter;
use palcomb::palindrome::{conjugates_of_palindromes, rho};
use palcomb::rich::{bound_report, census_rich, hru_estimate, partitions, table1_ratio, Relation};
use palcomb::verify::{run, Suite};
use palcomb::{Count, Error};
use palcomb_cli::commands::{oeis_compare, CompareArgs};
use palcomb_cli::sequences::Sequence;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, Box<dyn Fn() -> Outcome>);

fn within(value: f64, target: f64, tol: f64, what: &str) -> Result<(), String> {
    if (value - target).abs() <= tol {
        Ok(())
    } else {
        Err(format!("{what} = {value:.6}, expected {target} ± {tol}"))
    }
}

fn suites(list: &[(Suite, usize)]) -> Outcome {
    let mut parts = Vec::new();
    for &(suite, max_n) in list {
        let r = run(suite, max_n).map_err(|e| e.to_string())?;
        match r.counterexample {
            None => parts.push(format!("{suite} n<={max_n}: {} checks", r.checked)),
            Some(c) => return Err(format!("{suite}: {c}")),
        }
    }
    Ok(parts.join("; "))
}

fn table_small() -> Outcome {
    let t = census_rich(5, 1).map_err(|e| e.to_string())?;
    let (c4, c5) = (t.rows[&4], t.rows[&5]);
    if (c4, c5) != (16, 32) {
        return Err(format!("C_R(4), C_R(5) = {c4}, {c5}"));
    }
    within(table1_ratio(4, c4), 1.0, 1e-3, "ratio(4)")?;
    within(table1_ratio(5, c5), 0.875, 1e-3, "ratio(5)")?;
    Ok(format!("16, 32; ratios {:.4}, {:.4}", table1_ratio(4, c4), table1_ratio(5, c5)))
}

fn table_large() -> Outcome {
    let mut parts = Vec::new();
    for (threads, budget) in [(1usize, 600u64), (8, 120)] {
        let start = Instant::now();
        let t = census_rich(26, threads).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if (t.rows[&25], t.rows[&26]) != (3_089_518, 4_903_164) {
            return Err(format!("C_R(25), C_R(26) = {}, {}", t.rows[&25], t.rows[&26]));
        }
        if elapsed > Duration::from_secs(budget) {
            return Err(format!("{threads} worker(s) took {elapsed:?}, budget {budget}s"));
        }
        parts.push(format!("{threads} worker(s) {:.2}s", elapsed.as_secs_f64()));
    }
    Ok(format!("3089518, 4903164 ({})", parts.join(", ")))
}

fn growth_prose() -> Outcome {
    let t = census_rich(25, 1).map_err(|e| e.to_string())?;
    let (c24, c25) = (t.rows[&24] as f64, t.rows[&25] as f64);
    let root = c25.powf(1.0 / 25.0);
    let growth = c25 / c24;
    within(root, 1.818, 1e-3, "C_R(25)^(1/25)")?;
    within(growth, 1.599, 5e-3, "C_R(25)/C_R(24)")?;
    Ok(format!("root {root:.4}, growth {growth:.4}"))
}

fn closed_forms() -> Outcome {
    for (k, cap) in [(2u32, 14usize), (3, 10)] {
        for n in 1..=cap {
            let r: Count = rho(k.into(), n as u64).map_err(|e| e.to_string())?;
            let c: Count = conjugates_of_palindromes(k.into(), n as u64).map_err(|e| e.to_string())?;
            let br = brute_count("primitive-palindrome", n, k).map_err(|e| e.to_string())? as Count;
            let bc = brute_count("palindrome-conjugate", n, k).map_err(|e| e.to_string())? as Count;
            if (r, c) != (br, bc) {
                return Err(format!("k = {k}, n = {n}: rho {r} vs {br}, c {c} vs {bc}"));
            }
        }
    }
    let c24: Count = conjugates_of_palindromes(2, 4).map_err(|e| e.to_string())?;
    if c24 != 6 {
        return Err(format!("c(2,4) = {c24}"));
    }
    Ok("k=2 n<=14, k=3 n<=10 exact; c(2,4) = 6".into())
}

fn bound_chain() -> Outcome {
    let mut record = Vec::new();
    let sym = |r: Relation| match r {
        Relation::Greater => '>',
        Relation::Equal => '=',
        Relation::Less => '<',
    };
    for n in (4..=30).step_by(2) {
        let r = bound_report::<Count, f64>(n, None).map_err(|e| e.to_string())?;
        let links = [r.i_vs_p, r.i_vs_sum, r.sum_vs_max, r.max_vs_last];
        if links.iter().any(|l| !l.holds_weakly()) {
            return Err(format!("n = {n}: chain broken {links:?}"));
        }
        if n >= 8 && links.iter().any(|&l| l != Relation::Greater) {
            return Err(format!("n = {n}: expected strict chain, got {links:?}"));
        }
        record.push(format!("{n}:{}", links.iter().map(|&l| sym(l)).collect::<String>()));
    }
    let p100 = partitions::<Count>(100).map_err(|e| e.to_string())? as f64;
    let rel = hru_estimate::<f64>(100) / p100 - 1.0;
    within(rel, 0.0, 0.05, "HRU relative error at 100")?;
    Ok(format!("{}; HRU(100) off by {:.2}%", record.join(" "), rel * 100.0))
}

fn creaky_bijection() -> Outcome {
    let s = suites(&[(Suite::CreakyBijection, 14)])?;
    let mut counter = PairCounter::<Count>::new(2).map_err(|e| e.to_string())?;
    for n in 0..=20u64 {
        let e = counter.even_pairs(n).map_err(|e| e.to_string())?;
        let c = count_creaky(n).map_err(|e| e.to_string())?;
        if Count::from(c) != e {
            return Err(format!("n = {n}: {c} creaky words, E = {e}"));
        }
    }
    Ok(format!("{s}; count_creaky = E(n,2) for n<=20"))
}

fn oeis() -> Outcome {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let mut parts = Vec::new();
    for (seq, file, n) in [
        (Sequence::Rich, "b216264.txt", 25),
        (Sequence::PalPairs, "b007055.txt", 14),
        (Sequence::Creaky, "b045655.txt", 14),
    ] {
        let out = oeis_compare(&CompareArgs {
            sequence: seq,
            bfile: data.join(file),
            n_max: Some(n),
            threads: 1,
            cache: None,
        })
        .map_err(|e| e.to_string())?;
        if !out.ok {
            return Err(format!("{}:\n{}", seq.name(), out.text));
        }
        let summary = out.text.lines().last().unwrap_or_default().to_string();
        parts.push(format!("{} n<={n}: {summary}", seq.oeis().unwrap().id));
    }
    Ok(parts.join("; "))
}

fn refusals() -> Outcome {
    for n in [33, 59, 60] {
        match census_rich(n, 1) {
            Err(Error::Budget(_)) => {}
            other => return Err(format!("n = {n}: expected a budget refusal, got {other:?}")),
        }
    }
    Ok("n = 33, 59, 60 refused without override".into())
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("rich census rows 4, 5 and ratios", 1, Box::new(table_small)),
        ("rich census rows 25, 26", 720, Box::new(table_large)),
        ("growth of C_R at 25", 600, Box::new(growth_prose)),
        ("odd pairs = k * even pairs", 60, Box::new(|| suites(&[(Suite::OddEvenPairs, 20)]))),
        ("primitive palindromes and palindrome conjugates", 60, Box::new(closed_forms)),
        ("palindromes per conjugacy class", 120, Box::new(|| suites(&[(Suite::ClassPalindromes, 16)]))),
        (
            "factorization counts equal primitive exponents",
            60,
            Box::new(|| suites(&[(Suite::PalFactorizationCount, 14), (Suite::CreakyFactorizationCount, 14)])),
        ),
        ("language I is rich", 120, Box::new(|| suites(&[(Suite::LanguageIRich, 18)]))),
        ("partition lower-bound chain", 10, Box::new(bound_chain)),
        (
            "antipalstars, antipalindromic factors, a-rich words",
            120,
            Box::new(|| {
                suites(&[(Suite::AntipalstarUnique, 16), (Suite::AntipalFactorBound, 16), (Suite::ARich, 16)])
            }),
        ),
        ("creaky words biject onto even pairs", 60, Box::new(creaky_bijection)),
        ("OEIS b-file cross-checks", 600, Box::new(oeis)),
        ("census refuses lengths beyond 32", 1, Box::new(refusals)),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if result.is_ok() && elapsed > Duration::from_secs(*budget) {
            result = Err(format!("took {elapsed:?}, budget {budget}s"));
        }
        match result {
            Ok(detail) => println!("PASS {:>2} {name} [{:.2}s]: {detail}", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{:.2}s]: {why}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
