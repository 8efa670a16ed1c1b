//! Brute-force reference implementations.
//!
//! Everything here works on raw symbol slices with direct definitions
//! (quadratic scans, explicit rotations, exhaustive splits) and shares no
//! code with the fast paths it checks.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::word::Symbol;
use crate::{Error, Result, Word};

/// Largest number of words an enumeration may visit.
pub const ENUMERATION_CAP: u64 = 1 << 30;

/// Longest word accepted by the quadratic factor scans.
pub const SCAN_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Canonical {
    All,
    /// Only words that are the least rotation in their conjugacy class.
    LeastRotation,
    /// Only words starting with the given symbol.
    FirstSymbol(Symbol),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordRange {
    pub alphabet: u32,
    pub len: usize,
    pub filter: Canonical,
}

impl WordRange {
    pub fn all(alphabet: u32, len: usize) -> Self {
        Self {
            alphabet,
            len,
            filter: Canonical::All,
        }
    }

    pub fn with_filter(mut self, filter: Canonical) -> Self {
        self.filter = filter;
        self
    }

    fn size(&self) -> Result<u64> {
        if self.alphabet == 0 || self.alphabet > crate::word::MAX_ALPHABET {
            return Err(Error::InvalidArgument(format!(
                "unsupported alphabet size {}",
                self.alphabet
            )));
        }
        u32::try_from(self.len)
            .ok()
            .and_then(|n| u64::from(self.alphabet).checked_pow(n))
            .filter(|&t| t <= ENUMERATION_CAP)
            .ok_or_else(|| {
                Error::Budget(format!("{}^{} words exceeds 2^30", self.alphabet, self.len))
            })
    }
}

fn nth_word(index: u64, k: u64, len: usize) -> Vec<Symbol> {
    let mut out = vec![0; len];
    let mut x = index;
    for slot in out.iter_mut().rev() {
        *slot = (x % k) as Symbol;
        x /= k;
    }
    out
}

fn rotations(s: &[Symbol]) -> Vec<Vec<Symbol>> {
    (0..s.len().max(1))
        .map(|i| {
            let i = i.min(s.len());
            [&s[i..], &s[..i]].concat()
        })
        .collect()
}

fn is_least_rotation(s: &[Symbol]) -> bool {
    rotations(s).iter().all(|r| s <= r.as_slice())
}

fn keep(s: &[Symbol], filter: Canonical) -> bool {
    match filter {
        Canonical::All => true,
        Canonical::LeastRotation => is_least_rotation(s),
        Canonical::FirstSymbol(a) => s.first() == Some(&a),
    }
}

/// Words of the range in lexicographic order.
pub fn enumerate(range: WordRange) -> Result<impl Iterator<Item = Word>> {
    let total = range.size()?;
    let k = u64::from(range.alphabet);
    Ok((0..total).filter_map(move |i| {
        let s = nth_word(i, k, range.len);
        keep(&s, range.filter).then(|| Word::from_parts_unchecked(s, range.alphabet))
    }))
}

fn reversed(s: &[Symbol]) -> Vec<Symbol> {
    s.iter().rev().copied().collect()
}

fn complemented(s: &[Symbol]) -> Vec<Symbol> {
    s.iter().map(|&a| 1 - a).collect()
}

pub fn naive_is_palindrome(s: &[Symbol]) -> bool {
    s == reversed(s).as_slice()
}

pub fn naive_is_antipalindrome(s: &[Symbol]) -> bool {
    s == complemented(&reversed(s)).as_slice()
}

/// Not a proper power, checked against every divisor of the length.
pub fn naive_is_primitive(s: &[Symbol]) -> bool {
    let n = s.len();
    n > 0
        && (1..n)
            .filter(|d| n % d == 0)
            .all(|d| s != s[..d].repeat(n / d).as_slice())
}

/// Even length, and not a power of a shorter even-length word.
pub fn naive_is_even_primitive(s: &[Symbol]) -> bool {
    let n = s.len();
    n > 0
        && n % 2 == 0
        && (2..n)
            .step_by(2)
            .filter(|d| n % d == 0)
            .all(|d| s != s[..d].repeat(n / d).as_slice())
}

/// Split points `i` with `s[..i]` and `s[i..]` (nonempty) both satisfying `pred`.
pub fn naive_splits(s: &[Symbol], pred: impl Fn(&[Symbol]) -> bool) -> Vec<usize> {
    (0..s.len())
        .filter(|&i| pred(&s[..i]) && pred(&s[i..]))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    Palindrome,
    Antipalindrome,
}

/// Distinct nonempty (anti)palindromic factors by scanning every window.
pub fn brute_distinct_factors(w: &Word, kind: FactorKind) -> Result<BTreeSet<Word>> {
    if w.len() > SCAN_CAP {
        return Err(Error::Budget(format!("scan of length {} > {SCAN_CAP}", w.len())));
    }
    let s = w.symbols();
    let mut out = BTreeSet::new();
    for i in 0..s.len() {
        for j in i + 1..=s.len() {
            let f = &s[i..j];
            let hit = match kind {
                FactorKind::Palindrome => naive_is_palindrome(f),
                FactorKind::Antipalindrome => naive_is_antipalindrome(f),
            };
            if hit {
                out.insert(Word::from_parts_unchecked(f.to_vec(), w.alphabet_size()));
            }
        }
    }
    Ok(out)
}

pub fn brute_distinct_palindromic_factors(w: &Word) -> Result<BTreeSet<Word>> {
    brute_distinct_factors(w, FactorKind::Palindrome)
}

fn occurrences(hay: &[Symbol], needle: &[Symbol]) -> usize {
    if needle.is_empty() || needle.len() > hay.len() {
        return 0;
    }
    hay.windows(needle.len()).filter(|x| *x == needle).count()
}

/// For every prefix, the longest palindromic suffix occurs only once in it.
pub fn brute_longest_pal_suffix_unioccurrent(w: &Word) -> Result<bool> {
    if w.len() > SCAN_CAP {
        return Err(Error::Budget(format!("scan of length {} > {SCAN_CAP}", w.len())));
    }
    let s = w.symbols();
    Ok((1..=s.len()).all(|i| {
        let prefix = &s[..i];
        let longest = (0..i)
            .map(|start| &prefix[start..])
            .find(|suf| naive_is_palindrome(suf))
            .expect("single letters are palindromes");
        occurrences(prefix, longest) == 1
    }))
}

fn naive_is_rich(s: &[Symbol], alphabet: u32) -> bool {
    let w = Word::from_parts_unchecked(s.to_vec(), alphabet);
    brute_distinct_palindromic_factors(&w)
        .map(|set| set.len() == s.len())
        .unwrap_or(false)
}

fn naive_in_language_i(s: &[Symbol]) -> bool {
    let mut runs: Vec<usize> = Vec::new();
    for (i, a) in s.iter().enumerate() {
        if i > 0 && s[i - 1] == *a {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    (0..runs.len().saturating_sub(2)).all(|i| runs[i] <= runs[i + 2])
}

fn naive_is_antipalstar(s: &[Symbol]) -> bool {
    if s.is_empty() {
        return false;
    }
    // try every first factor
    (2..=s.len()).step_by(2).any(|j| {
        naive_is_antipalindrome(&s[..j]) && (j == s.len() || naive_is_antipalstar(&s[j..]))
    })
}

/// Predicates understood by [`brute_count`].
pub const PREDICATES: &[&str] = &[
    "palindrome",
    "primitive",
    "primitive-palindrome",
    "palindrome-conjugate",
    "credible",
    "pal-pair",
    "even-pair",
    "odd-pair",
    "even-prim-even-pair",
    "even-prim-odd-pair",
    "rich",
    "language-i",
    "antipalindrome",
    "antipalstar",
    "creaky",
    "a-rich",
];

/// Evaluates a named predicate by its definition.
pub fn brute_predicate(name: &str, s: &[Symbol], alphabet: u32) -> Result<bool> {
    let is_binary = alphabet == 2;
    let binary_only = |op: &'static str| -> Result<()> {
        if is_binary {
            Ok(())
        } else {
            Err(Error::BinaryOnly(op))
        }
    };
    let even_splits = |s: &[Symbol]| {
        naive_splits(s, naive_is_palindrome)
            .into_iter()
            .any(|i| i % 2 == 0 && s.len() % 2 == 0)
    };
    let odd_splits = |s: &[Symbol]| {
        naive_splits(s, naive_is_palindrome)
            .into_iter()
            .any(|i| i % 2 == 1 && s.len() % 2 == 0)
    };
    Ok(match name {
        "palindrome" => naive_is_palindrome(s),
        "primitive" => naive_is_primitive(s),
        "primitive-palindrome" => naive_is_palindrome(s) && naive_is_primitive(s),
        "palindrome-conjugate" => rotations(s).iter().any(|r| naive_is_palindrome(r)),
        "credible" => {
            let r = reversed(s);
            rotations(s).contains(&r)
        }
        "pal-pair" => s.is_empty() || !naive_splits(s, naive_is_palindrome).is_empty(),
        "even-pair" => s.is_empty() || even_splits(s),
        "odd-pair" => odd_splits(s),
        "even-prim-even-pair" => naive_is_even_primitive(s) && even_splits(s),
        "even-prim-odd-pair" => naive_is_even_primitive(s) && odd_splits(s),
        "rich" => naive_is_rich(s, alphabet),
        "language-i" => naive_in_language_i(s),
        "antipalindrome" => {
            binary_only("antipalindrome")?;
            naive_is_antipalindrome(s)
        }
        "antipalstar" => {
            binary_only("antipalstar")?;
            naive_is_antipalstar(s)
        }
        "creaky" => {
            binary_only("creaky")?;
            let target = complemented(&reversed(s));
            rotations(s).contains(&target)
        }
        "a-rich" => {
            binary_only("a-rich")?;
            let w = Word::from_parts_unchecked(s.to_vec(), 2);
            !s.is_empty()
                && brute_distinct_factors(&w, FactorKind::Antipalindrome)?.len() == s.len() - 1
        }
        other => return Err(Error::UnknownPredicate(other.to_string())),
    })
}

/// Number of words of length `n` over `k` letters satisfying the named predicate.
pub fn brute_count(predicate: &str, n: usize, k: u32) -> Result<u64> {
    if !PREDICATES.contains(&predicate) {
        return Err(Error::UnknownPredicate(predicate.to_string()));
    }
    let total = WordRange::all(k, n).size()?;
    let kk = u64::from(k);
    // surface binary-only errors before spawning work
    brute_predicate(predicate, &vec![0; n], k)?;
    let count = (0..total)
        .into_par_iter()
        .filter(|&i| brute_predicate(predicate, &nth_word(i, kk, n), k).unwrap_or(false))
        .count();
    Ok(count as u64)
}

/// Every way of writing `s` as a product of prime antipalstars, where a
/// prime is a nonempty antipalindrome that is not a product of two or more
/// nonempty antipalindromes.
pub fn all_prime_antipalstar_factorizations(s: &[Symbol]) -> Vec<Vec<Vec<Symbol>>> {
    fn is_prime(f: &[Symbol]) -> bool {
        naive_is_antipalindrome(f)
            && !f.is_empty()
            && !(2..f.len())
                .step_by(2)
                .any(|j| naive_is_antipalindrome(&f[..j]) && naive_is_antipalstar(&f[j..]))
    }
    if s.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for j in (2..=s.len()).step_by(2) {
        if is_prime(&s[..j]) {
            for mut rest in all_prime_antipalstar_factorizations(&s[j..]) {
                rest.insert(0, s[..j].to_vec());
                out.push(rest);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    fn strs(it: impl IntoIterator<Item = Word>) -> Vec<String> {
        it.into_iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(strs(enumerate(WordRange::all(2, 2)).unwrap()), ["00", "01", "10", "11"]);
        let least = WordRange::all(2, 3).with_filter(Canonical::LeastRotation);
        assert_eq!(strs(enumerate(least).unwrap()), ["000", "001", "011", "111"]);
        assert_eq!(strs(enumerate(WordRange::all(3, 1)).unwrap()), ["0", "1", "2"]);
        assert!(matches!(enumerate(WordRange::all(2, 31)), Err(Error::Budget(_))));
    }

    #[test]
    fn fixed_first_symbol_halves_enumeration() {
        for n in 1..=10 {
            let half = enumerate(WordRange::all(2, n).with_filter(Canonical::FirstSymbol(0)))
                .unwrap()
                .count();
            assert_eq!(2 * half, 1 << n);
        }
    }

    #[test]
    fn distinct_factor_examples() {
        assert_eq!(
            strs(brute_distinct_palindromic_factors(&b("0101")).unwrap()),
            ["0", "010", "1", "101"]
        );
        assert!(brute_distinct_palindromic_factors(&b("")).unwrap().is_empty());
        assert_eq!(strs(brute_distinct_palindromic_factors(&b("00")).unwrap()), ["0", "00"]);
        let long = Word::new(vec![0; 65], 2).unwrap();
        assert!(brute_distinct_palindromic_factors(&long).is_err());
    }

    #[test]
    fn brute_count_examples() {
        assert_eq!(brute_count("palindrome", 3, 2), Ok(4));
        assert_eq!(brute_count("rich", 8, 2), Ok(252));
        assert_eq!(brute_count("antipalindrome", 2, 2), Ok(2));
        assert_eq!(
            brute_count("nonsense", 2, 2),
            Err(Error::UnknownPredicate("nonsense".into()))
        );
        assert_eq!(brute_count("creaky", 2, 3), Err(Error::BinaryOnly("creaky")));
    }

    #[test]
    fn longest_suffix_examples() {
        assert_eq!(brute_longest_pal_suffix_unioccurrent(&b("000")), Ok(true));
        assert_eq!(brute_longest_pal_suffix_unioccurrent(&b("00101100")), Ok(false));
    }

    #[test]
    fn prime_factorization_enumeration() {
        let all = all_prime_antipalstar_factorizations(&[0, 1, 0, 1]);
        assert_eq!(all, vec![vec![vec![0, 1], vec![0, 1]]]);
        assert!(all_prime_antipalstar_factorizations(&[0, 0]).is_empty());
    }
}
