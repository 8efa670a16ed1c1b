//! Antipalindromes over `{0, 1}`: words equal to their reversed complement.
//!
//! Covers antipalstars and their prime factorization, the bound on distinct
//! antipalindromic factors, a-rich words, creaky words (products of two
//! antipalindromes) and a length-preserving bijection from creaky words onto
//! even palindromic pairs.

use std::collections::HashSet;

use crate::pairs::{even_even_factorization, splits_where, Factorization, PairCounter};
use crate::{CountScalar, Error, Result, Word};

fn require_binary(w: &Word, op: &'static str) -> Result<()> {
    if w.is_binary() {
        Ok(())
    } else {
        Err(Error::BinaryOnly(op))
    }
}

fn is_antipalindromic(s: &[u8]) -> bool {
    s.len() % 2 == 0 && s.iter().zip(s.iter().rev()).all(|(a, b)| a != b)
}

pub fn is_antipalindrome(w: &Word) -> Result<bool> {
    require_binary(w, "is_antipalindrome")?;
    Ok(is_antipalindromic(w.symbols()))
}

/// `reachable[j]`: the prefix of length `j` is a product of nonempty
/// antipalindromes (`reachable[0]` is the empty product).
fn antipalstar_reachability(s: &[u8]) -> Vec<bool> {
    let mut reachable = vec![false; s.len() + 1];
    reachable[0] = true;
    for j in 1..=s.len() {
        reachable[j] = (0..j).any(|i| reachable[i] && is_antipalindromic(&s[i..j]));
    }
    reachable
}

/// A concatenation of one or more antipalindromes; `ε` is not one.
pub fn is_antipalstar(w: &Word) -> Result<bool> {
    require_binary(w, "is_antipalstar")?;
    Ok(!w.is_empty() && antipalstar_reachability(w.symbols())[w.len()])
}

/// The factorization of an antipalstar into prime antipalstars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeAntipalstarFactorization {
    pub factors: Vec<Word>,
}

impl PrimeAntipalstarFactorization {
    pub fn join(&self) -> Word {
        self.factors
            .iter()
            .fold(Word::empty(2).expect("binary"), |acc, f| acc.concat(f))
    }
}

/// Strips the shortest nonempty antipalindromic prefix until nothing is left.
/// Prime antipalindromes never have another prime as a proper prefix, so the
/// greedy choice is the only one, and it gets stuck exactly on non-antipalstars.
pub fn prime_antipalstar_factorization(w: &Word) -> Result<PrimeAntipalstarFactorization> {
    require_binary(w, "prime_antipalstar_factorization")?;
    if w.is_empty() {
        return Err(Error::NotAntipalstar { position: 0 });
    }
    let s = w.symbols();
    let mut factors = Vec::new();
    let mut pos = 0;
    while pos < s.len() {
        let end = (pos + 2..=s.len())
            .step_by(2)
            .find(|&j| is_antipalindromic(&s[pos..j]))
            .ok_or(Error::NotAntipalstar { position: pos })?;
        factors.push(w.factor(pos, end));
        pos = end;
    }
    Ok(PrimeAntipalstarFactorization { factors })
}

/// Number of distinct nonempty antipalindromic factors; at most `|w| - 1`.
pub fn antipal_factor_count(w: &Word) -> Result<usize> {
    require_binary(w, "antipal_factor_count")?;
    let s = w.symbols();
    let mut seen: HashSet<&[u8]> = HashSet::new();
    // expand around every even center
    for center in 1..s.len() {
        let mut r = 1;
        while r <= center && center + r <= s.len() && s[center - r] != s[center + r - 1] {
            seen.insert(&s[center - r..center + r]);
            r += 1;
        }
    }
    Ok(seen.len())
}

/// The two words of length `n` with `n - 1` distinct antipalindromic factors:
/// `(01)^k`, `(10)^k` for `n = 2k` and `(01)^k 0`, `(10)^k 1` for `n = 2k + 1`.
pub fn a_rich_words(n: usize) -> Result<[Word; 2]> {
    if n == 0 {
        return Err(Error::InvalidArgument("a-rich words need n >= 1".into()));
    }
    let alternating = |first: u8| Word::binary(&(0..n).map(|i| first ^ (i % 2) as u8).collect::<Vec<_>>());
    let words = [alternating(0), alternating(1)];
    for w in &words {
        debug_assert_eq!(antipal_factor_count(w)?, n - 1);
    }
    Ok(words)
}

pub fn is_a_rich(w: &Word) -> Result<bool> {
    if w.is_empty() {
        require_binary(w, "is_a_rich")?;
        return Ok(false);
    }
    Ok(antipal_factor_count(w)? == w.len() - 1)
}

/// A creaky word is a conjugate of its reversed complement; these are exactly
/// the products of two antipalindromes. `ε` is creaky.
pub fn is_creaky(w: &Word) -> Result<bool> {
    let target = w.reverse().negate().map_err(|_| Error::BinaryOnly("is_creaky"))?;
    Ok(w.is_conjugate_of(&target))
}

/// All `w = u·v` with `u`, `v` antipalindromes and `v ≠ ε`.
pub fn creaky_factorizations(w: &Word) -> Result<Vec<Factorization>> {
    require_binary(w, "creaky_factorizations")?;
    splits_where(w, "creaky_factorizations", |x| is_antipalindromic(x.symbols()))
}

/// `C_{A²}(n)` by enumerating all binary words of length `n`.
pub fn count_creaky(n: u64) -> Result<u64> {
    crate::pairs::count_words_where(n, 2, |w| is_creaky(w).unwrap_or(false))
}

/// `C_{A²}(n)` through the identity with even palindromic pairs, `E(n, 2)`.
pub fn count_creaky_via_pairs<C: CountScalar>(n: u64) -> Result<C> {
    PairCounter::<C>::new(2)?.even_pairs(n)
}

/// Negates the right half of an even-length word: antipalindromes become
/// even-length palindromes and back.
pub fn negate_right_half(w: &Word) -> Result<Word> {
    require_binary(w, "negate_right_half")?;
    if w.len() % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "negate_right_half needs an even length, got {}",
            w.len()
        )));
    }
    let half = w.len() / 2;
    Ok(w.prefix(half).concat(&w.suffix_from(half).negate()?))
}

/// Maps a factorization into antipalindromes to one into even-length
/// palindromes by negating the right half of each factor.
pub fn negate_right_halves(f: &Factorization) -> Result<Factorization> {
    Ok(Factorization {
        left: negate_right_half(&f.left)?,
        right: negate_right_half(&f.right)?,
    })
}

/// A factorization of a word `root^exponent` identified by which copy of the
/// root its split point falls in.
struct Located {
    root: Word,
    exponent: usize,
    copy: usize,
}

fn locate_creaky(f: &Factorization) -> Result<Located> {
    let w = f.join();
    let d = w.primitive_decomposition()?;
    Ok(Located {
        copy: f.left.len() / d.root.len(),
        root: d.root,
        exponent: d.exponent,
    })
}

fn locate_even_pair(f: &Factorization) -> Result<Located> {
    let w = f.join();
    let d = w.even_primitive_root()?;
    Ok(Located {
        copy: f.left.len() / d.root.len(),
        root: d.root,
        exponent: d.exponent,
    })
}

/// `root^copy · x`, `y · root^(exponent - copy - 1)` for `root = x·y`.
fn lift(root_split: &Factorization, exponent: usize, copy: usize) -> Factorization {
    let root = root_split.join();
    Factorization {
        left: root.pow(copy).concat(&root_split.left),
        right: root_split.right.concat(&root.pow(exponent - copy - 1)),
    }
}

fn unique_creaky_split(z: &Word) -> Result<Factorization> {
    let mut fs = creaky_factorizations(z)?;
    if fs.len() != 1 {
        return Err(Error::Precondition(format!(
            "primitive creaky word {z} has {} factorizations",
            fs.len()
        )));
    }
    Ok(fs.pop().expect("one factorization"))
}

fn unique_even_split(z: &Word) -> Result<Factorization> {
    even_even_factorization(z)?.ok_or_else(|| {
        Error::Precondition(format!("{z} has no factorization into even palindromes"))
    })
}

/// Bijection from primitive creaky words of length `L` onto even-primitive
/// even palindromic pairs of length `L`.
///
/// Negating right halves is a bijection `h` between all antipalindromic
/// factorizations of length `L` and all even-even palindromic factorizations
/// of length `L`. Factorizations of non-primitive words are matched by the
/// bijection on shorter lengths (`g`), so the primitive parts are matched by
/// iterating `h ∘ g⁻¹` until the image leaves the non-primitive part.
fn primitive_creaky_to_pair(z: &Word) -> Result<Word> {
    let mut f = negate_right_halves(&unique_creaky_split(z)?)?;
    loop {
        let loc = locate_even_pair(&f)?;
        if loc.exponent == 1 {
            return Ok(loc.root);
        }
        // g⁻¹: back to the factorization of the matching creaky power
        let creaky_root = primitive_pair_to_creaky(&loc.root)?;
        let pre = lift(&unique_creaky_split(&creaky_root)?, loc.exponent, loc.copy);
        f = negate_right_halves(&pre)?;
    }
}

fn primitive_pair_to_creaky(e: &Word) -> Result<Word> {
    let mut f = negate_right_halves(&unique_even_split(e)?)?;
    loop {
        let loc = locate_creaky(&f)?;
        if loc.exponent == 1 {
            return Ok(loc.root);
        }
        let pair_root = primitive_creaky_to_pair(&loc.root)?;
        let pre = lift(&unique_even_split(&pair_root)?, loc.exponent, loc.copy);
        f = negate_right_halves(&pre)?;
    }
}

/// Length-preserving bijection from creaky words onto even palindromic pairs.
/// `w = z^m` with `z` primitive goes to `e^m`, where `e` is the image of `z`.
/// When negating right halves already yields an even-primitive word, `e` is
/// exactly that word.
pub fn creaky_to_even_pair(w: &Word) -> Result<Word> {
    require_binary(w, "creaky_to_even_pair")?;
    if w.is_empty() || !is_creaky(w)? {
        return Err(Error::Precondition(format!("{w} is not a nonempty creaky word")));
    }
    let d = w.primitive_decomposition()?;
    Ok(primitive_creaky_to_pair(&d.root)?.pow(d.exponent))
}

/// Inverse of [`creaky_to_even_pair`].
pub fn even_pair_to_creaky(w: &Word) -> Result<Word> {
    require_binary(w, "even_pair_to_creaky")?;
    if w.is_empty() || w.len() % 2 != 0 {
        return Err(Error::Precondition(format!(
            "{w} is not a nonempty even palindromic pair"
        )));
    }
    let d = w.even_primitive_root()?;
    if even_even_factorization(&d.root)?.is_none() {
        return Err(Error::Precondition(format!("{w} is not an even palindromic pair")));
    }
    Ok(primitive_pair_to_creaky(&d.root)?.pow(d.exponent))
}

/// True iff `w` is a product of two even-length palindromes (`ε` included).
pub fn is_even_pal_pair(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Ok(true);
    }
    if w.len() % 2 != 0 {
        return Ok(false);
    }
    Ok(even_even_factorization(w)?.is_some())
}
