//! Palindromic pairs: words in `P²`, their factorizations, parity, and the
//! exact counts `E(n, k)` and `O(n, k)` of even and odd pairs.

use std::collections::BTreeMap;

use crate::arith::divisors;
use crate::palindrome::is_palindrome;
use crate::scalar::{add, from_u64, mul, pow, sub};
use crate::{CountScalar, Error, Result, Word};

/// A split `w = left · right` with `right` nonempty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    pub left: Word,
    pub right: Word,
}

impl Factorization {
    pub fn join(&self) -> Word {
        self.left.concat(&self.right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairParity {
    Even,
    Odd,
    Both,
    None,
}

impl PairParity {
    pub fn includes_even(self) -> bool {
        matches!(self, PairParity::Even | PairParity::Both)
    }

    pub fn includes_odd(self) -> bool {
        matches!(self, PairParity::Odd | PairParity::Both)
    }

    fn from_flags(even: bool, odd: bool) -> Self {
        match (even, odd) {
            (true, true) => PairParity::Both,
            (true, false) => PairParity::Even,
            (false, true) => PairParity::Odd,
            (false, false) => PairParity::None,
        }
    }
}

/// A word is credible when it is a conjugate of its reversal; these are
/// exactly the members of `P²`. The empty word counts as credible.
pub fn is_credible(w: &Word) -> bool {
    w.is_conjugate_of(&w.reverse())
}

/// All `w = u·v` with `u`, `v` palindromes and `v ≠ ε`, by increasing `|u|`.
pub fn pal_factorizations(w: &Word) -> Result<Vec<Factorization>> {
    splits_where(w, "pal_factorizations", is_palindrome)
}

pub(crate) fn splits_where(
    w: &Word,
    op: &'static str,
    pred: impl Fn(&Word) -> bool,
) -> Result<Vec<Factorization>> {
    if w.is_empty() {
        return Err(Error::EmptyWord(op));
    }
    Ok((0..w.len())
        .filter_map(|i| {
            let left = w.prefix(i);
            if !pred(&left) {
                return None;
            }
            let right = w.suffix_from(i);
            pred(&right).then_some(Factorization { left, right })
        })
        .collect())
}

/// Even/odd classification of an even-length word by the parity of its
/// palindromic factorizations. Words outside `P²` (and `ε`) are `None`.
pub fn pair_parity(w: &Word) -> Result<PairParity> {
    if w.len() % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "pair_parity needs an even length, got {}",
            w.len()
        )));
    }
    if w.is_empty() {
        return Ok(PairParity::None);
    }
    let fs = pal_factorizations(w)?;
    let even = fs.iter().any(|f| f.left.len() % 2 == 0);
    let odd = fs.iter().any(|f| f.left.len() % 2 == 1);
    Ok(PairParity::from_flags(even, odd))
}

/// The unique factorization of an even-primitive word into two even-length
/// palindromes, if any.
pub fn even_even_factorization(w: &Word) -> Result<Option<Factorization>> {
    if w.len() % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "even_even_factorization needs an even length, got {}",
            w.len()
        )));
    }
    Ok(pal_factorizations(w)?
        .into_iter()
        .find(|f| f.left.len() % 2 == 0))
}

/// `#P_i(n)`: words of length `n` that split at position `i` into a
/// palindrome of length `i` followed by one of length `n - i`.
pub fn split_count<C: CountScalar>(n: u64, i: u64, k: u64) -> Result<C> {
    if n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("split_count needs even n, got {n}")));
    }
    if i >= n {
        return Err(Error::InvalidArgument(format!(
            "split position {i} out of range for n = {n}"
        )));
    }
    if i % 2 == 0 {
        pow(k, n / 2, "split_count")
    } else {
        pow(k, n / 2 + 1, "split_count")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Even,
    Odd,
}

/// Memoized `E'(n)` and `O'(n)` for a fixed alphabet size.
///
/// `E'(n) = (n/2) k^{n/2} - Σ_{2d | n, 2d < n} (n/2d) E'(2d)`, and the same
/// with `k^{n/2+1}` for `O'(n)`.
#[derive(Debug, Clone)]
pub struct PairCounter<C> {
    k: u64,
    even: BTreeMap<u64, C>,
    odd: BTreeMap<u64, C>,
}

impl<C: CountScalar> PairCounter<C> {
    pub fn new(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("alphabet size must be positive".into()));
        }
        Ok(Self {
            k,
            even: BTreeMap::new(),
            odd: BTreeMap::new(),
        })
    }

    pub fn alphabet_size(&self) -> u64 {
        self.k
    }

    /// `E'(n)`: even-primitive even palindromic pairs of length `n`.
    pub fn even_primitive(&mut self, n: u64) -> Result<C> {
        self.primed(n, Kind::Even)
    }

    /// `O'(n)`: even-primitive odd palindromic pairs of length `n`.
    pub fn odd_primitive(&mut self, n: u64) -> Result<C> {
        self.primed(n, Kind::Odd)
    }

    /// `E(n, k)`; zero for odd `n`, and 1 for `n = 0` (the empty word).
    pub fn even_pairs(&mut self, n: u64) -> Result<C> {
        self.unprimed(n, Kind::Even)
    }

    /// `O(n, k)`; zero for odd `n` and for `n = 0`.
    pub fn odd_pairs(&mut self, n: u64) -> Result<C> {
        self.unprimed(n, Kind::Odd)
    }

    fn unprimed(&mut self, n: u64, kind: Kind) -> Result<C> {
        if n == 0 {
            return Ok(if kind == Kind::Even { C::one() } else { C::zero() });
        }
        if n % 2 != 0 {
            return Ok(C::zero());
        }
        let mut total = C::zero();
        for d in divisors(n)?.into_iter().filter(|d| d % 2 == 0) {
            total = add(&total, &self.primed(d, kind)?, "pair count")?;
        }
        Ok(total)
    }

    fn primed(&mut self, n: u64, kind: Kind) -> Result<C> {
        if n == 0 || n % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "primed pair counts need even n >= 2, got {n}"
            )));
        }
        let memo = match kind {
            Kind::Even => &self.even,
            Kind::Odd => &self.odd,
        };
        if let Some(v) = memo.get(&n) {
            return Ok(v.clone());
        }
        let exp = match kind {
            Kind::Even => n / 2,
            Kind::Odd => n / 2 + 1,
        };
        let head = mul(
            &from_u64::<C>(n / 2, "pair count")?,
            &pow::<C>(self.k, exp, "pair count")?,
            "pair count",
        )?;
        let mut tail = C::zero();
        for d in divisors(n)?
            .into_iter()
            .filter(|&d| d % 2 == 0 && d < n)
        {
            let term = mul(
                &from_u64::<C>(n / d, "pair count")?,
                &self.primed(d, kind)?,
                "pair count",
            )?;
            tail = add(&tail, &term, "pair count")?;
        }
        let value = sub(&head, &tail, "pair count")?;
        match kind {
            Kind::Even => self.even.insert(n, value.clone()),
            Kind::Odd => self.odd.insert(n, value.clone()),
        };
        Ok(value)
    }
}

/// `E'(n)` over `k` letters.
pub fn count_even_prim<C: CountScalar>(n: u64, k: u64) -> Result<C> {
    PairCounter::new(k)?.even_primitive(n)
}

/// `O'(n)` over `k` letters.
pub fn count_odd_prim<C: CountScalar>(n: u64, k: u64) -> Result<C> {
    PairCounter::new(k)?.odd_primitive(n)
}

/// `E(n, k)`.
pub fn count_even_pairs<C: CountScalar>(n: u64, k: u64) -> Result<C> {
    PairCounter::new(k)?.even_pairs(n)
}

/// `O(n, k)`.
pub fn count_odd_pairs<C: CountScalar>(n: u64, k: u64) -> Result<C> {
    PairCounter::new(k)?.odd_pairs(n)
}

/// Upper bound on `k^n` for the enumerating census.
pub const ENUMERATION_BUDGET: u64 = 1 << 30;

/// `|P² ∩ Σ^n|` by enumerating all words and testing credibility.
pub fn count_pal_pairs<C: CountScalar>(n: u64, k: u64) -> Result<C> {
    let count = count_words_where(n, k, is_credible)?;
    from_u64(count, "count_pal_pairs")
}

/// Counts the words of length `n` over `k` letters satisfying `pred`,
/// in parallel on the current rayon pool.
pub(crate) fn count_words_where(
    n: u64,
    k: u64,
    pred: impl Fn(&Word) -> bool + Sync,
) -> Result<u64> {
    use rayon::prelude::*;
    if k == 0 || k > u64::from(crate::word::MAX_ALPHABET) {
        return Err(Error::InvalidArgument(format!("unsupported alphabet size {k}")));
    }
    let total = k
        .checked_pow(u32::try_from(n).map_err(|_| Error::Budget(format!("length {n}")))?)
        .filter(|&t| t <= ENUMERATION_BUDGET)
        .ok_or_else(|| Error::Budget(format!("{k}^{n} words exceeds 2^30")))?;
    let k32 = k as u32;
    let n = n as usize;
    Ok((0..total)
        .into_par_iter()
        .filter(|&idx| {
            let mut symbols = vec![0u8; n];
            let mut x = idx;
            for slot in symbols.iter_mut().rev() {
                *slot = (x % k) as u8;
                x /= k;
            }
            pred(&Word::from_parts_unchecked(symbols, k32))
        })
        .count() as u64)
}
