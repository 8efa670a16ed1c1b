//! Finite words over a `k`-letter alphabet `{0, 1, ..., k-1}`.
//!
//! Symbols are small integers. The text form renders `0..=9` as digits and
//! `10..=35` as `a..=z`, which caps the alphabet at 36 letters.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

pub type Symbol = u8;

/// Largest alphabet with a one-character text rendering.
pub const MAX_ALPHABET: u32 = 36;

const DIGITS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Symbol>,
    alphabet: u32,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, alphabet: u32) -> Result<Self> {
        check_alphabet(alphabet)?;
        if let Some(position) = symbols.iter().position(|&s| u32::from(s) >= alphabet) {
            return Err(Error::SymbolOutOfRange {
                symbol: symbols[position].into(),
                position,
                alphabet,
            });
        }
        Ok(Self { symbols, alphabet })
    }

    /// The empty word over an alphabet of the given size.
    pub fn empty(alphabet: u32) -> Result<Self> {
        Self::new(Vec::new(), alphabet)
    }

    /// A binary word; panics on symbols other than 0 and 1.
    pub fn binary(symbols: &[Symbol]) -> Self {
        Self::new(symbols.to_vec(), 2).expect("binary word with symbol outside {0,1}")
    }

    /// Parses the text rendering (`0-9`, then `a-z`).
    pub fn parse(text: &str, alphabet: u32) -> Result<Self> {
        check_alphabet(alphabet)?;
        let text = if text == "ε" { "" } else { text };
        let symbols = text
            .chars()
            .enumerate()
            .map(|(position, ch)| {
                ch.to_digit(MAX_ALPHABET)
                    .filter(|&d| d < alphabet && !ch.is_ascii_uppercase())
                    .map(|d| d as Symbol)
                    .ok_or(Error::Parse {
                        ch,
                        position,
                        alphabet,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { symbols, alphabet })
    }

    /// Maps arbitrary characters to symbols in order of first appearance
    /// (`aabaab` becomes `001001`). The alphabet is at least binary.
    pub fn parse_remapped(text: &str) -> Result<Self> {
        let mut seen: Vec<char> = Vec::new();
        let mut symbols = Vec::with_capacity(text.len());
        for ch in text.chars() {
            let idx = match seen.iter().position(|&c| c == ch) {
                Some(i) => i,
                None => {
                    seen.push(ch);
                    seen.len() - 1
                }
            };
            symbols.push(idx as Symbol);
        }
        let alphabet = (seen.len() as u32).max(2);
        check_alphabet(alphabet)?;
        Ok(Self { symbols, alphabet })
    }

    pub(crate) fn from_parts_unchecked(symbols: Vec<Symbol>, alphabet: u32) -> Self {
        debug_assert!(symbols.iter().all(|&s| u32::from(s) < alphabet));
        Self { symbols, alphabet }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet == 2
    }

    /// The factor `self[start..end]` (0-based, half-open).
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Self::from_parts_unchecked(self.symbols[start..end].to_vec(), self.alphabet)
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.factor(0, len)
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        self.factor(start, self.len())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Self::from_parts_unchecked(symbols, self.alphabet.max(other.alphabet))
    }

    pub fn pow(&self, exponent: usize) -> Word {
        Self::from_parts_unchecked(self.symbols.repeat(exponent), self.alphabet)
    }

    pub fn reverse(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Self::from_parts_unchecked(symbols, self.alphabet)
    }

    /// Swaps 0 and 1. Binary alphabet only.
    pub fn negate(&self) -> Result<Word> {
        if !self.is_binary() {
            return Err(Error::BinaryOnly("negate"));
        }
        Ok(Self::from_parts_unchecked(
            self.symbols.iter().map(|&s| s ^ 1).collect(),
            2,
        ))
    }

    /// `self[0] other[0] self[1] other[1] ...`
    pub fn perfect_shuffle(&self, other: &Word) -> Result<Word> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: other.alphabet,
            });
        }
        let symbols = self
            .symbols
            .iter()
            .zip(&other.symbols)
            .flat_map(|(&a, &b)| [a, b])
            .collect();
        Ok(Self::from_parts_unchecked(symbols, self.alphabet))
    }

    /// Left rotation by `shift` positions: `w[shift..] w[..shift]`.
    pub fn rotate(&self, shift: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let mut symbols = self.symbols.clone();
        symbols.rotate_left(shift % self.len());
        Self::from_parts_unchecked(symbols, self.alphabet)
    }

    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len().max(1)).map(move |i| self.rotate(i))
    }

    /// The conjugacy class: all distinct rotations.
    pub fn conjugates(&self) -> BTreeSet<Word> {
        self.rotations().collect()
    }

    pub fn is_conjugate_of(&self, other: &Word) -> bool {
        self.len() == other.len() && self.rotations().any(|r| r.symbols == other.symbols)
    }

    /// Lexicographically least rotation; the canonical representative of the class.
    pub fn least_rotation(&self) -> Word {
        self.rotations().min().unwrap_or_else(|| self.clone())
    }

    /// Failure function: `border[i]` is the length of the longest proper border
    /// of `w[..=i]`.
    pub fn border_array(&self) -> Vec<usize> {
        let w = &self.symbols;
        let mut border = vec![0usize; w.len()];
        let mut k = 0usize;
        for i in 1..w.len() {
            while k > 0 && w[i] != w[k] {
                k = border[k - 1];
            }
            if w[i] == w[k] {
                k += 1;
            }
            border[i] = k;
        }
        border
    }

    /// Smallest period; `0` for the empty word.
    pub fn minimal_period(&self) -> usize {
        match self.border_array().last() {
            Some(&b) => self.len() - b,
            None => 0,
        }
    }

    /// `w = root^exponent` with `root` primitive.
    pub fn primitive_decomposition(&self) -> Result<PrimitiveDecomposition> {
        if self.is_empty() {
            return Err(Error::EmptyWord("primitive_decomposition"));
        }
        let p = self.minimal_period();
        let root_len = if self.len() % p == 0 { p } else { self.len() };
        Ok(PrimitiveDecomposition {
            root: self.prefix(root_len),
            exponent: self.len() / root_len,
        })
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive_decomposition()
            .map(|d| d.exponent == 1)
            .unwrap_or(false)
    }

    /// True iff the (even, nonempty) word is not a power of a shorter
    /// even-length word: it is primitive or the square of an odd-length
    /// primitive word.
    pub fn is_even_primitive(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyWord("is_even_primitive"));
        }
        if self.len() % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "is_even_primitive needs an even length, got {}",
                self.len()
            )));
        }
        let d = self.primitive_decomposition()?;
        Ok(d.exponent == 1 || (d.exponent == 2 && d.root.len() % 2 == 1))
    }

    /// The shortest even-length word whose power is `self` (`self` even, nonempty).
    pub fn even_primitive_root(&self) -> Result<PrimitiveDecomposition> {
        if self.is_empty() || self.len() % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "even_primitive_root needs a nonempty even-length word, got length {}",
                self.len()
            )));
        }
        let d = self.primitive_decomposition()?;
        if d.root.len() % 2 == 0 {
            Ok(d)
        } else {
            Ok(PrimitiveDecomposition {
                root: d.root.pow(2),
                exponent: d.exponent / 2,
            })
        }
    }

    pub fn run_length_encode(&self) -> RunLengthEncoding {
        let mut blocks: Vec<(Symbol, usize)> = Vec::new();
        for &s in &self.symbols {
            match blocks.last_mut() {
                Some((last, n)) if *last == s => *n += 1,
                _ => blocks.push((s, 1)),
            }
        }
        RunLengthEncoding { blocks }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        let s: String = self
            .symbols
            .iter()
            .map(|&s| DIGITS[s as usize] as char)
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self}/{})", self.alphabet)
    }
}

fn check_alphabet(alphabet: u32) -> Result<()> {
    if alphabet == 0 || alphabet > MAX_ALPHABET {
        return Err(Error::AlphabetSize {
            got: alphabet,
            max: MAX_ALPHABET,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunLengthEncoding {
    blocks: Vec<(Symbol, usize)>,
}

impl RunLengthEncoding {
    pub fn blocks(&self) -> &[(Symbol, usize)] {
        &self.blocks
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(|&(_, n)| n)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn decode(&self, alphabet: u32) -> Result<Word> {
        let symbols = self
            .blocks
            .iter()
            .flat_map(|&(s, n)| std::iter::repeat_n(s, n))
            .collect();
        Word::new(symbols, alphabet)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveDecomposition {
    pub root: Word,
    pub exponent: usize,
}

impl PrimitiveDecomposition {
    pub fn expand(&self) -> Word {
        self.root.pow(self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 36).unwrap()
    }

    fn b(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("stressed").reverse(), w("desserts"));
        assert_eq!(b("").reverse(), b(""));
        assert_eq!(w("aba").reverse(), w("aba"));
    }

    #[test]
    fn negate_examples() {
        assert_eq!(b("001011").negate().unwrap(), b("110100"));
        assert_eq!(b("").negate().unwrap(), b(""));
        assert_eq!(b("0").negate().unwrap(), b("1"));
        assert_eq!(
            Word::parse("012", 3).unwrap().negate(),
            Err(Error::BinaryOnly("negate"))
        );
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(w("clip").perfect_shuffle(&w("aloe")).unwrap(), w("calliope"));
        assert_eq!(b("").perfect_shuffle(&b("")).unwrap(), b(""));
        assert_eq!(b("00").perfect_shuffle(&b("11")).unwrap(), b("0101"));
        assert!(matches!(
            b("0").perfect_shuffle(&b("01")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn conjugate_examples() {
        let set = |xs: &[&str]| xs.iter().map(|s| b(s)).collect::<BTreeSet<_>>();
        assert_eq!(b("0011").conjugates(), set(&["0011", "0110", "1100", "1001"]));
        assert_eq!(b("0101").conjugates(), set(&["0101", "1010"]));
        assert_eq!(w("aaaa").conjugates().len(), 1);
    }

    #[test]
    fn primitive_decomposition_examples() {
        let d = w("aabaab").primitive_decomposition().unwrap();
        assert_eq!((d.root, d.exponent), (w("aab"), 2));
        let d = w("abc").primitive_decomposition().unwrap();
        assert_eq!((d.root, d.exponent), (w("abc"), 1));
        let d = w("aaaa").primitive_decomposition().unwrap();
        assert_eq!((d.root, d.exponent), (w("a"), 4));
        // period 2 does not divide 5
        let d = w("ababa").primitive_decomposition().unwrap();
        assert_eq!((d.root, d.exponent), (w("ababa"), 1));
        assert_eq!(
            b("").primitive_decomposition(),
            Err(Error::EmptyWord("primitive_decomposition"))
        );
    }

    #[test]
    fn even_primitive_examples() {
        assert!(w("aabaab").is_even_primitive().unwrap());
        assert!(!w("abab").is_even_primitive().unwrap());
        assert!(b("01").is_even_primitive().unwrap());
        assert!(b("010").is_even_primitive().is_err());
        assert!(b("").is_even_primitive().is_err());
        let r = b("000000").even_primitive_root().unwrap();
        assert_eq!((r.root, r.exponent), (b("00"), 3));
    }

    #[test]
    fn run_length_examples() {
        assert_eq!(
            b("001011").run_length_encode().blocks(),
            &[(0, 2), (1, 1), (0, 1), (1, 2)]
        );
        assert!(b("").run_length_encode().is_empty());
        assert_eq!(b("0000").run_length_encode().blocks(), &[(0, 4)]);
    }

    #[test]
    fn parse_rejects_foreign_characters() {
        assert!(matches!(
            Word::parse("0120", 2),
            Err(Error::Parse { ch: '2', position: 2, .. })
        ));
        assert!(Word::parse("0A", 36).is_err());
        assert!(Word::new(vec![0, 3], 3).is_err());
        assert!(Word::empty(0).is_err());
    }

    #[test]
    fn remapped_parse() {
        let x = Word::parse_remapped("aabaab").unwrap();
        assert_eq!(x, b("001001"));
        let x = Word::parse_remapped("referee").unwrap();
        assert_eq!(x.alphabet_size(), 3);
        assert_eq!(x.to_string(), "0121011");
    }
}
