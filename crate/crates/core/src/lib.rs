//! Combinatorics of palindromes and antipalindromes.
//!
//! Exact counting (primitive palindromes, conjugates of palindromes, even and
//! odd palindromic pairs, creaky words, rich words, the language `I`),
//! structural factorizations, a palindromic tree with undo for the rich-word
//! census, and deliberately naive brute-force oracles that every fast path is
//! tested against.
//!
//! Counting functions are generic over the count type (anything implementing
//! [`CountScalar`], e.g. `u64`, `u128` or [`num_bigint::BigUint`]); overflow
//! is reported as [`Error::Overflow`] instead of wrapping. Floating-point
//! estimates are generic over [`num_traits::Float`]. The aliases below pin the
//! defaults used by the CLI.

pub mod antipal;
pub mod arith;
pub mod eertree;
mod error;
pub mod oracle;
pub mod pairs;
pub mod palindrome;
pub mod rich;
pub mod scalar;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use scalar::CountScalar;
pub use word::{PrimitiveDecomposition, RunLengthEncoding, Symbol, Word};

/// Default exact count type. Wide enough for `E'(n)`/`O'(n)` with `n <= 60`, `k <= 4`.
pub type Count = u128;

/// Arbitrary-precision count type for partition numbers and large censuses.
pub type BigCount = num_bigint::BigUint;

/// Default floating type for bound and ratio reports.
pub type Real = f64;

pub type Census = rich::CensusTable<Count>;
pub type Bounds = rich::BoundReport<Count, Real>;
