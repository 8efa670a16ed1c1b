//! Exhaustive verification suites. Each suite checks one structural result on
//! every binary word up to a length bound, comparing the fast implementations
//! with the definitions in [`crate::oracle`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::antipal::{
    a_rich_words, antipal_factor_count, creaky_factorizations, creaky_to_even_pair,
    even_pair_to_creaky, is_antipalindrome, is_antipalstar, is_creaky,
    prime_antipalstar_factorization,
};
use crate::oracle::{self, brute_count, brute_predicate, Canonical, FactorKind, WordRange};
use crate::pairs::{
    is_credible, pair_parity, pal_factorizations, split_count, PairCounter,
};
use crate::palindrome::{
    analyze_conjugacy_class, conjugates_of_palindromes, is_palindrome, rho,
};
use crate::rich::{census_i, census_rich, in_language_i, is_rich};
use crate::{Count, Error, Result, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// At most two palindromes per conjugacy class, with the `(x x^R)^i` witness.
    ClassPalindromes,
    /// Palindromic-pair factorization count equals the primitive exponent.
    PalFactorizationCount,
    /// `O(n, k) = k E(n, k)` and both match brute force.
    OddEvenPairs,
    /// Every word of `I` is rich.
    LanguageIRich,
    /// Unique factorization into prime antipalstars.
    AntipalstarUnique,
    /// At most `n - 1` distinct antipalindromic factors.
    AntipalFactorBound,
    /// Exactly two a-rich words per length.
    ARich,
    /// Creaky factorization count equals the primitive exponent.
    CreakyFactorizationCount,
    /// Creaky words biject onto even palindromic pairs.
    CreakyBijection,
    /// The smaller structural facts about palindromes, antipalindromes and rich words.
    Propositions,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::ClassPalindromes,
        Suite::PalFactorizationCount,
        Suite::OddEvenPairs,
        Suite::LanguageIRich,
        Suite::AntipalstarUnique,
        Suite::AntipalFactorBound,
        Suite::ARich,
        Suite::CreakyFactorizationCount,
        Suite::CreakyBijection,
        Suite::Propositions,
    ];

    /// Primary name and the numbered alias accepted by the CLI.
    pub fn names(self) -> (&'static str, &'static str) {
        match self {
            Suite::ClassPalindromes => ("class-palindromes", "theorem1"),
            Suite::PalFactorizationCount => ("pal-factorization-count", "theorem4"),
            Suite::OddEvenPairs => ("odd-even-pairs", "theorem5"),
            Suite::LanguageIRich => ("language-i-rich", "theorem6"),
            Suite::AntipalstarUnique => ("antipalstar-unique", "theorem8"),
            Suite::AntipalFactorBound => ("antipal-factor-bound", "theorem9"),
            Suite::ARich => ("a-rich", "theorem10"),
            Suite::CreakyFactorizationCount => ("creaky-factorization-count", "theorem12"),
            Suite::CreakyBijection => ("creaky-bijection", "theorem13"),
            Suite::Propositions => ("propositions", "propositions"),
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| {
            let (a, b) = s.names();
            a == name || b == name
        })
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::ClassPalindromes => 16,
            Suite::PalFactorizationCount => 14,
            Suite::OddEvenPairs => 20,
            Suite::LanguageIRich => 18,
            Suite::AntipalstarUnique => 16,
            Suite::AntipalFactorBound => 16,
            Suite::ARich => 16,
            Suite::CreakyFactorizationCount => 14,
            Suite::CreakyBijection => 14,
            Suite::Propositions => 12,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.names().0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub word: Option<Word>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.word {
            Some(w) => write!(f, "{w}: {}", self.detail),
            None => f.write_str(&self.detail),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    /// Number of individual checks performed.
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

type Check = std::result::Result<u64, Counterexample>;

fn fail(word: &Word, detail: impl Into<String>) -> Counterexample {
    Counterexample {
        word: Some(word.clone()),
        detail: detail.into(),
    }
}

fn fail_plain(detail: impl Into<String>) -> Counterexample {
    Counterexample {
        word: None,
        detail: detail.into(),
    }
}

fn ensure(cond: bool, word: &Word, detail: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(1)
    } else {
        Err(fail(word, detail()))
    }
}

fn internal(word: &Word, e: Error) -> Counterexample {
    fail(word, format!("unexpected error: {e}"))
}

fn words(k: u32, n: usize, filter: Canonical) -> Result<Vec<Word>> {
    Ok(oracle::enumerate(WordRange::all(k, n).with_filter(filter))?.collect())
}

/// Runs `check` on every word of the range in parallel; reports the
/// lexicographically first failure.
fn for_all(k: u32, n: usize, filter: Canonical, check: impl Fn(&Word) -> Check + Sync) -> Result<Check> {
    let ws = words(k, n, filter)?;
    let results: Vec<Check> = ws.par_iter().map(&check).collect();
    let mut total = 0;
    for r in results {
        match r {
            Ok(c) => total += c,
            Err(e) => return Ok(Err(e)),
        }
    }
    Ok(Ok(total))
}

fn for_all_lengths(
    lengths: impl IntoIterator<Item = usize>,
    filter: Canonical,
    check: impl Fn(&Word) -> Check + Sync,
) -> Result<Check> {
    let mut total = 0;
    for n in lengths {
        match for_all(2, n, filter, &check)? {
            Ok(c) => total += c,
            Err(e) => return Ok(Err(e)),
        }
    }
    Ok(Ok(total))
}

/// Runs one suite up to the given word length.
pub fn run(suite: Suite, max_n: usize) -> Result<SuiteReport> {
    let outcome = match suite {
        Suite::ClassPalindromes => class_palindromes(max_n)?,
        Suite::PalFactorizationCount => pal_factorization_count(max_n)?,
        Suite::OddEvenPairs => odd_even_pairs(max_n)?,
        Suite::LanguageIRich => language_i_rich(max_n)?,
        Suite::AntipalstarUnique => antipalstar_unique(max_n)?,
        Suite::AntipalFactorBound => antipal_factor_bound(max_n)?,
        Suite::ARich => a_rich(max_n)?,
        Suite::CreakyFactorizationCount => creaky_factorization_count(max_n)?,
        Suite::CreakyBijection => creaky_bijection(max_n)?,
        Suite::Propositions => propositions(max_n)?,
    };
    let (checked, counterexample) = match outcome {
        Ok(c) => (c, None),
        Err(e) => (0, Some(e)),
    };
    Ok(SuiteReport {
        suite,
        max_n,
        checked,
        counterexample,
    })
}

fn class_palindromes(max_n: usize) -> Result<Check> {
    for_all_lengths(1..=max_n, Canonical::LeastRotation, |w| {
        let report = analyze_conjugacy_class(w).map_err(|e| internal(w, e))?;
        let count = report.palindrome_count();
        ensure(count <= 2, w, || format!("{count} palindromes in class"))?;
        let brute: BTreeSet<Word> = w.conjugates().into_iter().filter(|c| oracle::naive_is_palindrome(c.symbols())).collect();
        ensure(brute == report.palindromes, w, || "palindrome set differs from brute force".into())?;
        let root = w.primitive_decomposition().map_err(|e| internal(w, e))?.root;
        if root.len() % 2 == 1 {
            ensure(count <= 1, w, || "odd primitive root with two palindromes".into())?;
        } else {
            ensure(count != 1, w, || "even primitive root with one palindrome".into())?;
        }
        // a member (y y^R)^i with y y^R primitive exists iff there are two palindromes
        let has_form = w.conjugates().iter().any(|c| {
            let d = c.primitive_decomposition().expect("nonempty");
            d.root.len() % 2 == 0 && oracle::naive_is_palindrome(d.root.symbols())
        });
        ensure(has_form == (count == 2), w, || "two-palindrome characterization fails".into())?;
        match (&report.witness, count) {
            (Some(wit), 2) => {
                let core = wit.half.concat(&wit.half.reverse());
                ensure(oracle::naive_is_primitive(core.symbols()), w, || "x x^R not primitive".into())?;
                ensure(
                    report.palindromes.contains(&wit.forward()) && report.palindromes.contains(&wit.backward()),
                    w,
                    || "witness words are not the class palindromes".into(),
                )
            }
            (None, c) if c < 2 => Ok(1),
            _ => Err(fail(w, "witness presence does not match the count")),
        }
    })
}

fn pal_factorization_count(max_n: usize) -> Result<Check> {
    for_all_lengths(1..=max_n, Canonical::All, |w| {
        let fs = pal_factorizations(w).map_err(|e| internal(w, e))?;
        let splits = oracle::naive_splits(w.symbols(), oracle::naive_is_palindrome);
        ensure(fs.iter().map(|f| f.left.len()).eq(splits.iter().copied()), w, || "factorizations differ from brute force".into())?;
        let credible = is_credible(w);
        ensure(credible == !fs.is_empty(), w, || "credible iff a palindromic pair fails".into())?;
        if credible {
            let m = w.primitive_decomposition().map_err(|e| internal(w, e))?.exponent;
            ensure(fs.len() == m, w, || format!("{} factorizations, exponent {m}", fs.len()))
        } else {
            Ok(1)
        }
    })
}

fn odd_even_pairs(max_n: usize) -> Result<Check> {
    let mut checked = 0;
    for k in [2u64, 3, 4] {
        let mut counter = PairCounter::<Count>::new(k)?;
        for n in 1..=max_n as u64 {
            let e = counter.even_pairs(n)?;
            let o = counter.odd_pairs(n)?;
            if o != e * Count::from(k) {
                return Ok(Err(fail_plain(format!("O({n},{k}) = {o} but k E = {}", e * Count::from(k)))));
            }
            checked += 1;
        }
    }
    for (k, cap) in [(2u32, 14usize), (3, 10)] {
        let mut counter = PairCounter::<Count>::new(k.into())?;
        for n in 1..=max_n.min(cap) {
            let checks = [
                ("even-pair", counter.even_pairs(n as u64)?),
                ("odd-pair", counter.odd_pairs(n as u64)?),
            ];
            for (pred, value) in checks {
                let brute = Count::from(brute_count(pred, n, k)?);
                if brute != value {
                    return Ok(Err(fail_plain(format!("{pred}: n = {n}, k = {k}: recurrence {value}, brute force {brute}"))));
                }
                checked += 1;
            }
            if n % 2 == 0 {
                let primed = [
                    ("even-prim-even-pair", counter.even_primitive(n as u64)?),
                    ("even-prim-odd-pair", counter.odd_primitive(n as u64)?),
                ];
                for (pred, value) in primed {
                    let brute = Count::from(brute_count(pred, n, k)?);
                    if brute != value {
                        return Ok(Err(fail_plain(format!("{pred}: n = {n}, k = {k}: recurrence {value}, brute force {brute}"))));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(Ok(checked))
}

fn language_i_rich(max_n: usize) -> Result<Check> {
    let census = census_i::<Count>(max_n.max(1) as u64)?;
    let mut checked = 0;
    for n in 1..=max_n {
        let counted: u64 = match for_all(2, n, Canonical::All, |w| {
            let member = in_language_i(w);
            ensure(
                member == brute_predicate("language-i", w.symbols(), 2).expect("known predicate"),
                w,
                || "membership in I differs from brute force".into(),
            )?;
            if member {
                ensure(is_rich(w), w, || "word of I is not rich".into())
            } else {
                Ok(0)
            }
        })? {
            Ok(c) => c,
            Err(e) => return Ok(Err(e)),
        };
        if Count::from(counted) != census.rows[&(n as u64)] {
            return Ok(Err(fail_plain(format!("C_I({n}): census {} vs filter {counted}", census.rows[&(n as u64)]))));
        }
        checked += counted;
    }
    Ok(Ok(checked))
}

fn antipalstar_unique(max_n: usize) -> Result<Check> {
    for_all_lengths(1..=max_n, Canonical::All, |w| {
        let star = is_antipalstar(w).map_err(|e| internal(w, e))?;
        ensure(
            star == brute_predicate("antipalstar", w.symbols(), 2).expect("binary"),
            w,
            || "antipalstar test differs from brute force".into(),
        )?;
        let greedy = prime_antipalstar_factorization(w);
        if !star {
            return ensure(greedy.is_err(), w, || "factorized a non-antipalstar".into());
        }
        let greedy = greedy.map_err(|e| internal(w, e))?;
        ensure(greedy.join() == *w, w, || "factors do not reconstruct the word".into())?;
        let all = oracle::all_prime_antipalstar_factorizations(w.symbols());
        ensure(all.len() == 1, w, || format!("{} prime factorizations", all.len()))?;
        let greedy_raw: Vec<Vec<u8>> = greedy.factors.iter().map(|f| f.symbols().to_vec()).collect();
        ensure(all[0] == greedy_raw, w, || "greedy factorization is not the prime one".into())
    })
}

fn antipal_factor_bound(max_n: usize) -> Result<Check> {
    for_all_lengths(1..=max_n, Canonical::All, |w| {
        let count = antipal_factor_count(w).map_err(|e| internal(w, e))?;
        let brute = oracle::brute_distinct_factors(w, FactorKind::Antipalindrome)
            .map_err(|e| internal(w, e))?
            .len();
        ensure(count == brute, w, || format!("count {count}, brute force {brute}"))?;
        ensure(count < w.len(), w, || format!("{count} antipalindromic factors"))
    })
}

fn a_rich(max_n: usize) -> Result<Check> {
    let mut checked = 0;
    for n in 1..=max_n {
        let attaining: BTreeSet<Word> = words(2, n, Canonical::All)?
            .into_par_iter()
            .filter(|w| antipal_factor_count(w).expect("binary") == n - 1)
            .collect();
        let expected: BTreeSet<Word> = a_rich_words(n)?.into_iter().collect();
        if attaining != expected {
            return Ok(Err(fail_plain(format!("length {n}: a-rich words {attaining:?}"))));
        }
        checked += 1;
    }
    Ok(Ok(checked))
}

fn creaky_factorization_count(max_n: usize) -> Result<Check> {
    for_all_lengths(1..=max_n, Canonical::All, |w| {
        let fs = creaky_factorizations(w).map_err(|e| internal(w, e))?;
        let creaky = is_creaky(w).map_err(|e| internal(w, e))?;
        ensure(
            creaky == brute_predicate("creaky", w.symbols(), 2).expect("binary"),
            w,
            || "creaky test differs from brute force".into(),
        )?;
        ensure(creaky == !fs.is_empty(), w, || "creaky iff product of two antipalindromes fails".into())?;
        if creaky {
            let m = w.primitive_decomposition().map_err(|e| internal(w, e))?.exponent;
            ensure(fs.len() == m, w, || format!("{} factorizations, exponent {m}", fs.len()))
        } else {
            Ok(1)
        }
    })
}

fn creaky_bijection(max_n: usize) -> Result<Check> {
    let mut checked = 0;
    let mut counter = PairCounter::<Count>::new(2)?;
    for n in 1..=max_n {
        let all = words(2, n, Canonical::All)?;
        let creaky: Vec<&Word> = all.iter().filter(|w| is_creaky(w).expect("binary")).collect();
        let even_pairs: BTreeSet<&Word> = all
            .iter()
            .filter(|w| brute_predicate("even-pair", w.symbols(), 2).expect("known"))
            .collect();
        let mut image: BTreeMap<Word, Word> = BTreeMap::new();
        for w in &creaky {
            let e = match creaky_to_even_pair(w) {
                Ok(e) => e,
                Err(err) => return Ok(Err(internal(w, err))),
            };
            if !even_pairs.contains(&e) {
                return Ok(Err(fail(w, format!("image {e} is not an even palindromic pair"))));
            }
            match even_pair_to_creaky(&e) {
                Ok(back) if back == **w => {}
                other => return Ok(Err(fail(w, format!("round trip through {e} gives {other:?}")))),
            }
            if let Some(prev) = image.insert(e.clone(), (*w).clone()) {
                return Ok(Err(fail(w, format!("collides with {prev} on {e}"))));
            }
            checked += 1;
        }
        let expected = counter.even_pairs(n as u64)?;
        if Count::from(creaky.len() as u64) != expected || image.len() != even_pairs.len() {
            return Ok(Err(fail_plain(format!(
                "length {n}: {} creaky words, {} even pairs, E = {expected}",
                creaky.len(),
                even_pairs.len()
            ))));
        }
    }
    Ok(Ok(checked))
}

fn propositions(max_n: usize) -> Result<Check> {
    let mut checked = 0;
    let mut add = |c: Check| -> std::result::Result<(), Counterexample> {
        checked += c?;
        Ok(())
    };
    macro_rules! step {
        ($e:expr) => {
            match $e {
                Ok(c) => {
                    if let Err(e) = add(c) {
                        return Ok(Err(e));
                    }
                }
                Err(e) => return Err(e),
            }
        };
    }

    // powers of a word are all palindromes/antipalindromes/creaky or none are
    step!(for_all_lengths(1..=max_n.min(14), Canonical::All, |x| {
        let mut n = 0;
        let pal: Vec<bool> = (1..=3).filter(|m| x.len() * m <= 14).map(|m| is_palindrome(&x.pow(m))).collect();
        n += ensure(pal.iter().all(|&p| p == pal[0]), x, || "palindromic powers disagree".into())?;
        let anti: Vec<bool> = (1..=3)
            .filter(|m| x.len() * m <= 14)
            .map(|m| is_antipalindrome(&x.pow(m)).expect("binary"))
            .collect();
        n += ensure(anti.iter().all(|&p| p == anti[0]), x, || "antipalindromic powers disagree".into())?;
        let creaky: Vec<bool> = (1..=3)
            .filter(|m| x.len() * m <= 14)
            .map(|m| is_creaky(&x.pow(m)).expect("binary"))
            .collect();
        n += ensure(creaky.iter().all(|&p| p == creaky[0]), x, || "creaky powers disagree".into())?;
        Ok(n)
    }));

    // u v palindrome iff u, v powers of a common palindrome; same for antipalindromes
    step!(for_all_lengths(2..=max_n.min(12), Canonical::All, |w| {
        let mut n = 0;
        for i in 1..w.len() {
            let (u, v) = (w.prefix(i), w.suffix_from(i));
            let root = w.primitive_decomposition().expect("nonempty").root;
            let powers = u.len() % root.len() == 0 && v.len() % root.len() == 0;
            if is_palindrome(&u) && is_palindrome(&v) {
                let common = powers && is_palindrome(&root);
                n += ensure(is_palindrome(w) == common, w, || format!("palindrome product at split {i}"))?;
            }
            if is_antipalindrome(&u).expect("binary") && is_antipalindrome(&v).expect("binary") {
                let common = powers && is_antipalindrome(&root).expect("binary");
                n += ensure(
                    is_antipalindrome(w).expect("binary") == common,
                    w,
                    || format!("antipalindrome product at split {i}"),
                )?;
            }
        }
        Ok(n)
    }));

    // even palindromes are y ⧢ y^R; antipalindromes are z̄ ⧢ z^R
    step!(for_all_lengths((2..=max_n.min(12)).step_by(2), Canonical::All, |x| {
        let odd_positions: Vec<u8> = x.symbols().iter().step_by(2).copied().collect();
        let y = Word::binary(&odd_positions);
        let shuffled = y.perfect_shuffle(&y.reverse()).expect("same length");
        let mut n = ensure(is_palindrome(x) == (shuffled == *x), x, || "shuffle characterization of palindromes".into())?;
        let z = y.negate().expect("binary");
        let anti = z.negate().unwrap().perfect_shuffle(&z.reverse()).expect("same length");
        n += ensure(
            is_antipalindrome(x).expect("binary") == (anti == *x),
            x,
            || "shuffle characterization of antipalindromes".into(),
        )?;
        Ok(n)
    }));

    // right quotient P/P equals P², with the quotient witness bounded by |x| + 2
    step!(for_all_lengths(0..=max_n.min(10), Canonical::All, |x| {
        let in_quotient = (0..=x.len() + 2).any(|ylen| {
            palindromes_of_length(ylen)
                .into_iter()
                .any(|y| is_palindrome(&x.concat(&y)))
        });
        let in_square = brute_predicate("pal-pair", x.symbols(), 2).expect("known");
        ensure(in_quotient == in_square, x, || "P/P and P² disagree".into())
    }));

    // credible iff P²; creaky iff A²
    step!(for_all_lengths(0..=max_n.min(14), Canonical::All, |w| {
        let mut n = ensure(
            is_credible(w) == brute_predicate("pal-pair", w.symbols(), 2).expect("known"),
            w,
            || "credible vs P²".into(),
        )?;
        let product = w.is_empty()
            || !oracle::naive_splits(w.symbols(), oracle::naive_is_antipalindrome).is_empty();
        n += ensure(is_creaky(w).expect("binary") == product, w, || "creaky vs A²".into())?;
        Ok(n)
    }));

    // even-primitive words: at most one even-even and one odd-odd factorization;
    // powers keep the parity of their even-primitive base
    step!(for_all_lengths((2..=max_n.min(14)).step_by(2), Canonical::All, |w| {
        if !w.is_even_primitive().expect("even nonempty") {
            return Ok(0);
        }
        let fs = pal_factorizations(w).expect("nonempty");
        let even = fs.iter().filter(|f| f.left.len() % 2 == 0).count();
        let odd = fs.len() - even;
        let mut n = ensure(even <= 1 && odd <= 1, w, || format!("{even} even, {odd} odd factorizations"))?;
        let base = pair_parity(w).expect("even");
        for m in 2..=3 {
            if w.len() * m > 14 {
                break;
            }
            let p = pair_parity(&w.pow(m)).expect("even");
            n += ensure(
                p.includes_even() == base.includes_even() && p.includes_odd() == base.includes_odd(),
                w,
                || format!("parity of power {m} differs"),
            )?;
        }
        Ok(n)
    }));

    // rich words: factor-closed, reversal-closed, longest palindromic suffix criterion
    step!(for_all_lengths(0..=max_n.min(14), Canonical::All, |w| {
        let rich = is_rich(w);
        let mut n = ensure(
            rich == brute_predicate("rich", w.symbols(), 2).expect("known"),
            w,
            || "richness differs from brute force".into(),
        )?;
        n += ensure(
            rich == oracle::brute_longest_pal_suffix_unioccurrent(w).expect("short"),
            w,
            || "longest palindromic suffix criterion".into(),
        )?;
        n += ensure(rich == is_rich(&w.reverse()), w, || "reversal changes richness".into())?;
        if rich {
            for i in 0..w.len() {
                for j in i + 1..=w.len() {
                    if !is_rich(&w.factor(i, j)) {
                        return Err(fail(w, format!("factor [{i}, {j}) is not rich")));
                    }
                }
            }
            n += 1;
        }
        Ok(n)
    }));

    // closed forms against brute force
    for (k, cap) in [(2u32, 14usize), (3, 10)] {
        for n in 1..=max_n.min(cap) {
            let r: Count = rho(k.into(), n as u64)?;
            let c: Count = conjugates_of_palindromes(k.into(), n as u64)?;
            let br = Count::from(brute_count("primitive-palindrome", n, k)?);
            let bc = Count::from(brute_count("palindrome-conjugate", n, k)?);
            if r != br || c != bc {
                return Ok(Err(fail_plain(format!("k = {k}, n = {n}: rho {r}/{br}, c {c}/{bc}"))));
            }
            checked += 2;
        }
    }

    // split counts against brute force
    for k in [2u32, 3] {
        for n in (2..=max_n.min(if k == 2 { 12 } else { 8 })).step_by(2) {
            for i in 0..n {
                let expected: Count = split_count(n as u64, i as u64, k.into())?;
                let brute = oracle::enumerate(WordRange::all(k, n))?
                    .filter(|w| {
                        oracle::naive_is_palindrome(&w.symbols()[..i])
                            && oracle::naive_is_palindrome(&w.symbols()[i..])
                    })
                    .count() as Count;
                if brute != expected {
                    return Ok(Err(fail_plain(format!("#P_{i}({n}) over {k} letters: {expected} vs {brute}"))));
                }
                checked += 1;
            }
        }
    }

    // rich census against the filter
    let census = census_rich(max_n.clamp(1, 16) as u64, 1)?;
    for (n, c) in &census.rows {
        let brute = brute_count("rich", *n as usize, 2)?;
        if brute != *c {
            return Ok(Err(fail_plain(format!("C_R({n}) = {c}, brute force {brute}"))));
        }
        checked += 1;
    }
    Ok(Ok(checked))
}

fn palindromes_of_length(len: usize) -> Vec<Word> {
    let half = len.div_ceil(2);
    oracle::enumerate(WordRange::all(2, half))
        .expect("small")
        .map(|h| {
            let mut s = h.symbols().to_vec();
            let tail: Vec<u8> = s[..len / 2].iter().rev().copied().collect();
            s.extend(tail);
            Word::binary(&s)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            let (a, b) = s.names();
            assert_eq!(Suite::from_name(a), Some(s));
            assert_eq!(Suite::from_name(b), Some(s));
        }
        assert_eq!(Suite::from_name("theorem99"), None);
    }

    #[test]
    fn small_runs_pass() {
        for s in Suite::ALL {
            let r = run(s, 6).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.counterexample);
            assert!(r.checked > 0, "{s} checked nothing");
        }
    }

    #[test]
    fn palindromes_of_length_enumerates() {
        assert_eq!(palindromes_of_length(0).len(), 1);
        assert_eq!(palindromes_of_length(3).len(), 4);
        assert!(palindromes_of_length(4).iter().all(is_palindrome));
    }
}
