//! Named integer sequences the CLI can tabulate.

use std::collections::BTreeMap;

use palcomb::antipal::count_creaky;
use palcomb::pairs::{count_pal_pairs, PairCounter};
use palcomb::palindrome::{conjugates_of_palindromes, rho};
use palcomb::rich::{census_i, census_rich_with, CensusOptions};
use palcomb::Count;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    Rich,
    LanguageI,
    EvenPairs,
    OddPairs,
    Creaky,
    PalPairs,
    Rho,
    ConjPal,
}

/// How an OEIS entry indexes a sequence: OEIS index `i` is length `scale * i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OeisLink {
    pub id: &'static str,
    pub scale: u64,
    /// Alphabet size the entry counts over.
    pub k: u64,
}

impl OeisLink {
    pub fn length_of(&self, index: u64) -> u64 {
        self.scale * index
    }

    pub fn index_of(&self, n: u64) -> Option<u64> {
        (n % self.scale == 0).then_some(n / self.scale)
    }
}

impl Sequence {
    pub const ALL: [Sequence; 8] = [
        Sequence::Rich,
        Sequence::LanguageI,
        Sequence::EvenPairs,
        Sequence::OddPairs,
        Sequence::Creaky,
        Sequence::PalPairs,
        Sequence::Rho,
        Sequence::ConjPal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::Rich => "rich",
            Sequence::LanguageI => "language-i",
            Sequence::EvenPairs => "even-pairs",
            Sequence::OddPairs => "odd-pairs",
            Sequence::Creaky => "creaky",
            Sequence::PalPairs => "pal-pairs",
            Sequence::Rho => "rho",
            Sequence::ConjPal => "conj-pal",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Sequence::Rich => "binary rich words",
            Sequence::LanguageI => "binary words whose block exponents satisfy s_i <= s_{i+2}",
            Sequence::EvenPairs => "products of two even-length palindromes",
            Sequence::OddPairs => "products of two odd-length palindromes",
            Sequence::Creaky => "binary products of two antipalindromes",
            Sequence::PalPairs => "products of two palindromes",
            Sequence::Rho => "primitive palindromes",
            Sequence::ConjPal => "words conjugate to a palindrome",
        }
    }

    pub fn from_name(name: &str) -> Result<Self, CliError> {
        Self::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| CliError::UnknownSequence(name.to_string()))
    }

    /// Sequences defined only over two letters.
    pub fn binary_only(self) -> bool {
        matches!(self, Sequence::Rich | Sequence::LanguageI | Sequence::Creaky)
    }

    pub fn oeis(self) -> Option<OeisLink> {
        match self {
            Sequence::Rich => Some(OeisLink { id: "A216264", scale: 1, k: 2 }),
            Sequence::PalPairs => Some(OeisLink { id: "A007055", scale: 1, k: 2 }),
            Sequence::Creaky => Some(OeisLink { id: "A045655", scale: 2, k: 2 }),
            _ => None,
        }
    }

    /// The length-0 value, when it is defined.
    pub fn zero_row(self) -> Option<Count> {
        match self {
            Sequence::OddPairs => Some(0),
            Sequence::Rho | Sequence::ConjPal => None,
            _ => Some(1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusRequest {
    pub sequence: Sequence,
    pub n_max: u64,
    pub k: u64,
    pub threads: usize,
    pub override_budget: bool,
}

/// Rows `1..=n_max`.
pub fn compute(req: &CensusRequest) -> Result<BTreeMap<u64, Count>, CliError> {
    let CensusRequest { sequence, n_max, k, .. } = *req;
    if n_max == 0 {
        return Ok(BTreeMap::new());
    }
    if sequence.binary_only() && k != 2 {
        return Err(CliError::Usage(format!("{} is defined for k = 2 only", sequence.name())));
    }
    let rows = match sequence {
        Sequence::Rich => {
            let opts = CensusOptions {
                threads: req.threads,
                allow_beyond_budget: req.override_budget,
                ..CensusOptions::default()
            };
            census_rich_with(n_max, &opts)?
                .rows
                .into_iter()
                .map(|(n, c)| (n, Count::from(c)))
                .collect()
        }
        Sequence::LanguageI => census_i::<Count>(n_max)?.rows,
        Sequence::EvenPairs | Sequence::OddPairs => {
            let mut counter = PairCounter::<Count>::new(k)?;
            (1..=n_max)
                .map(|n| {
                    let c = if sequence == Sequence::EvenPairs {
                        counter.even_pairs(n)?
                    } else {
                        counter.odd_pairs(n)?
                    };
                    Ok((n, c))
                })
                .collect::<palcomb::Result<_>>()?
        }
        Sequence::Creaky => (1..=n_max)
            .map(|n| Ok((n, Count::from(count_creaky(n)?))))
            .collect::<palcomb::Result<_>>()?,
        Sequence::PalPairs => (1..=n_max)
            .map(|n| Ok((n, count_pal_pairs::<Count>(n, k)?)))
            .collect::<palcomb::Result<_>>()?,
        Sequence::Rho => (1..=n_max)
            .map(|n| Ok((n, rho::<Count>(k, n)?)))
            .collect::<palcomb::Result<_>>()?,
        Sequence::ConjPal => (1..=n_max)
            .map(|n| Ok((n, conjugates_of_palindromes::<Count>(k, n)?)))
            .collect::<palcomb::Result<_>>()?,
    };
    Ok(rows)
}
