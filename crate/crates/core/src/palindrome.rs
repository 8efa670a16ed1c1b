//! Palindromes, their distribution over conjugacy classes, and the closed-form
//! counts ρ(k, n) (primitive palindromes) and c(k, n) (conjugates of palindromes).

use std::collections::BTreeSet;

use crate::arith::{divisors, mobius};
use crate::scalar::{add, from_u64, mul, pow, sub};
use crate::{CountScalar, Error, Result, Word};

pub fn is_palindrome(w: &Word) -> bool {
    let s = w.symbols();
    s.iter().eq(s.iter().rev())
}

/// The word `x` and exponent `i` such that the class contains `(x x^R)^i`
/// with `x x^R` primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureWitness {
    pub half: Word,
    pub exponent: usize,
}

impl StructureWitness {
    /// `(x x^R)^i`
    pub fn forward(&self) -> Word {
        self.half.concat(&self.half.reverse()).pow(self.exponent)
    }

    /// `(x^R x)^i`
    pub fn backward(&self) -> Word {
        self.half.reverse().concat(&self.half).pow(self.exponent)
    }
}

/// Palindromes inside one conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPalindromeReport {
    pub palindromes: BTreeSet<Word>,
    /// Present exactly when the class holds two palindromes.
    pub witness: Option<StructureWitness>,
}

impl ClassPalindromeReport {
    pub fn palindrome_count(&self) -> usize {
        self.palindromes.len()
    }
}

/// Collects the palindromes among the rotations of `w`. When there are two,
/// the witness is read off the primitive root of either one: the root has even
/// length and its first half is `x`.
pub fn analyze_conjugacy_class(w: &Word) -> Result<ClassPalindromeReport> {
    if w.is_empty() {
        return Err(Error::EmptyWord("analyze_conjugacy_class"));
    }
    let palindromes: BTreeSet<Word> = w
        .conjugates()
        .into_iter()
        .filter(is_palindrome)
        .collect();
    let witness = match palindromes.len() {
        0 | 1 => None,
        2 => {
            let first = palindromes.iter().next().expect("two palindromes");
            let d = first.primitive_decomposition()?;
            if d.root.len() % 2 != 0 {
                return Err(Error::Precondition(format!(
                    "class of {w} has two palindromes but an odd primitive root"
                )));
            }
            let witness = StructureWitness {
                half: d.root.prefix(d.root.len() / 2),
                exponent: d.exponent,
            };
            let expected: BTreeSet<Word> = [witness.forward(), witness.backward()].into();
            if expected != palindromes {
                return Err(Error::Precondition(format!(
                    "witness reconstruction failed for the class of {w}"
                )));
            }
            Some(witness)
        }
        n => {
            return Err(Error::Precondition(format!(
                "class of {w} holds {n} palindromes"
            )))
        }
    };
    Ok(ClassPalindromeReport {
        palindromes,
        witness,
    })
}

/// ρ(k, n) = Σ_{d | n} μ(d) k^{⌊(n/d + 1)/2⌋}, the number of primitive
/// palindromes of length `n` over `k` letters.
pub fn rho<C: CountScalar>(k: u64, n: u64) -> Result<C> {
    check_kn(k, n)?;
    let mut positive = C::zero();
    let mut negative = C::zero();
    for d in divisors(n)? {
        let term: C = pow(k, (n / d).div_ceil(2), "rho")?;
        match mobius(d)? {
            1 => positive = add(&positive, &term, "rho")?,
            -1 => negative = add(&negative, &term, "rho")?,
            _ => {}
        }
    }
    sub(&positive, &negative, "rho")
}

/// c(k, n) = Σ_{d | n} f(d) ρ(k, d) with f(d) = d for odd d and d/2 for even d.
pub fn conjugates_of_palindromes<C: CountScalar>(k: u64, n: u64) -> Result<C> {
    check_kn(k, n)?;
    let mut total = C::zero();
    for d in divisors(n)? {
        let f = if d % 2 == 1 { d } else { d / 2 };
        let term = mul(&from_u64::<C>(f, "conjugates_of_palindromes")?, &rho::<C>(k, d)?, "conjugates_of_palindromes")?;
        total = add(&total, &term, "conjugates_of_palindromes")?;
    }
    Ok(total)
}

fn check_kn(k: u64, n: u64) -> Result<()> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "k and n must be positive, got k = {k}, n = {n}"
        )));
    }
    Ok(())
}
