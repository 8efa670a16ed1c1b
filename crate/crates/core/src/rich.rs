//! Rich words, the language `I`, exact censuses, partition numbers and the
//! lower-bound arithmetic for the number of binary rich words.

use std::collections::BTreeMap;

use num_traits::{Float, FloatConst};
use rayon::prelude::*;

use crate::eertree::Eertree;
use crate::scalar::{add, from_u64, mul, to_f64};
use crate::{CountScalar, Error, Result, Word};

/// A word is rich iff every push onto its palindromic tree creates a node:
/// each push adds at most one palindrome and a rich word of length `n` has `n`.
pub fn is_rich(w: &Word) -> bool {
    let mut t = Eertree::new(w.alphabet_size()).expect("word alphabets are valid");
    w.symbols().iter().all(|&a| t.push_unchecked(a))
}

/// Membership in `I`: run-length exponents satisfy `s_i <= s_{i+2}`.
pub fn in_language_i(w: &Word) -> bool {
    let s: Vec<usize> = w.run_length_encode().exponents().collect();
    s.windows(3).all(|x| x[0] <= x[2])
}

/// Exact `n -> count` rows for one sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable<C> {
    pub sequence_name: String,
    pub alphabet_size: u32,
    pub rows: BTreeMap<u64, C>,
    pub generator_version: String,
}

impl<C: CountScalar> CensusTable<C> {
    pub fn new(sequence_name: impl Into<String>, alphabet_size: u32) -> Self {
        Self {
            sequence_name: sequence_name.into(),
            alphabet_size,
            rows: BTreeMap::new(),
            generator_version: generator_version(),
        }
    }

    pub fn get(&self, n: u64) -> Option<&C> {
        self.rows.get(&n)
    }

    pub fn n_max(&self) -> u64 {
        self.rows.keys().next_back().copied().unwrap_or(0)
    }

    /// True when rows cover exactly `1..=n_max` (a zero row is tolerated).
    pub fn is_contiguous(&self) -> bool {
        self.rows
            .keys()
            .filter(|&&n| n > 0)
            .enumerate()
            .all(|(i, &n)| n == i as u64 + 1)
    }
}

pub fn generator_version() -> String {
    format!("{} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"))
}

/// Lengths above this need [`CensusOptions::allow_beyond_budget`].
pub const RICH_CENSUS_BUDGET: u64 = 32;

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub threads: usize,
    /// Depth at which the search tree is cut into independent tasks.
    pub split_depth: usize,
    pub allow_beyond_budget: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            threads: 1,
            split_depth: 12,
            allow_beyond_budget: false,
        }
    }
}

/// `C_R(n)` for `n = 1..=n_max` over the binary alphabet.
pub fn census_rich(n_max: u64, threads: usize) -> Result<CensusTable<u64>> {
    census_rich_with(
        n_max,
        &CensusOptions {
            threads,
            ..CensusOptions::default()
        },
    )
}

/// Depth-first census of binary rich words. Richness is prefix-closed, so a
/// branch is abandoned as soon as a push creates no palindrome. Words start
/// with 0 and every count is doubled.
pub fn census_rich_with(n_max: u64, opts: &CensusOptions) -> Result<CensusTable<u64>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    if n_max > RICH_CENSUS_BUDGET && !opts.allow_beyond_budget {
        return Err(Error::Budget(format!(
            "rich census up to n = {n_max} exceeds the default limit of {RICH_CENSUS_BUDGET}"
        )));
    }
    if opts.threads == 0 {
        return Err(Error::InvalidArgument("threads must be at least 1".into()));
    }
    let n_max = n_max as usize;
    let depth = opts.split_depth.clamp(1, n_max);

    // counts[len] for words starting with 0
    let mut counts = vec![0u64; n_max + 1];
    let mut tree = Eertree::new(2)?;
    tree.push_unchecked(0);
    let mut prefixes: Vec<Vec<u8>> = Vec::new();
    collect_prefixes(&mut tree, depth, &mut counts, &mut prefixes);

    if depth < n_max {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        let deeper = pool.install(|| {
            prefixes
                .par_iter()
                .map(|prefix| {
                    let mut local = vec![0u64; n_max + 1];
                    let mut t = Eertree::new(2).expect("binary");
                    for &a in prefix {
                        t.push_unchecked(a);
                    }
                    extend(&mut t, n_max, &mut local);
                    local
                })
                .reduce(
                    || vec![0u64; n_max + 1],
                    |mut acc, x| {
                        acc.iter_mut().zip(x).for_each(|(a, b)| *a += b);
                        acc
                    },
                )
        });
        counts.iter_mut().zip(deeper).for_each(|(a, b)| *a += b);
    }

    let mut table = CensusTable::new("rich", 2);
    for (n, c) in counts.into_iter().enumerate().skip(1) {
        table.rows.insert(n as u64, 2 * c);
    }
    Ok(table)
}

/// Counts rich words up to `depth` and records the rich words of exactly that length.
fn collect_prefixes(t: &mut Eertree, depth: usize, counts: &mut [u64], out: &mut Vec<Vec<u8>>) {
    counts[t.len()] += 1;
    if t.len() == depth {
        out.push(t.text().to_vec());
        return;
    }
    for a in 0..2 {
        if t.push_unchecked(a) {
            collect_prefixes(t, depth, counts, out);
        }
        t.pop().expect("balanced push");
    }
}

/// Counts rich extensions strictly longer than the current text.
fn extend(t: &mut Eertree, n_max: usize, counts: &mut [u64]) {
    if t.len() == n_max {
        return;
    }
    for a in 0..2 {
        if t.push_unchecked(a) {
            counts[t.len()] += 1;
            extend(t, n_max, counts);
        }
        t.pop().expect("balanced push");
    }
}

/// `C_I(n)` for `n = 1..=n_max`: compositions counted by dynamic programming,
/// doubled for the choice of first letter.
pub fn census_i<C: CountScalar>(n_max: u64) -> Result<CensusTable<C>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let n = usize::try_from(n_max).map_err(|_| Error::Overflow("census_i"))?;
    let side = n + 2;
    let at = |rem: usize, a: usize, b: usize| (rem * side + a) * side + b;
    // f[rem][a][b]: block sequences of total length rem whose first block
    // has size >= a and whose second block has size >= b
    let mut f = vec![C::zero(); (n + 1) * side * side];
    for cell in &mut f[..side * side] {
        *cell = C::one();
    }
    for rem in 1..=n {
        for b in 1..=n {
            let mut acc = C::zero();
            for a in (1..=rem).rev() {
                acc = add(&acc, &f[at(rem - a, b, a)], "census_i")?;
                f[at(rem, a, b)] = acc.clone();
            }
        }
    }
    let two: C = from_u64(2, "census_i")?;
    let mut table = CensusTable::new("language-i", 2);
    for len in 1..=n {
        table.rows.insert(len as u64, mul(&two, &f[at(len, 1, 1)], "census_i")?);
    }
    Ok(table)
}

/// Partition numbers `p(n, k)` (exactly `k` parts) for all `n, k <= n_max`.
#[derive(Clone, Debug)]
pub struct PartitionTable<C> {
    by_parts: Vec<Vec<C>>,
}

impl<C: CountScalar> PartitionTable<C> {
    /// `p(n, k) = p(n-1, k-1) + p(n-k, k)`.
    pub fn new(n_max: u64) -> Result<Self> {
        let n_max = n_max as usize;
        let mut by_parts = vec![vec![C::zero(); n_max + 1]; n_max + 1];
        by_parts[0][0] = C::one();
        for n in 1..=n_max {
            for k in 1..=n {
                let v = add(&by_parts[n - 1][k - 1], &by_parts[n - k][k], "partitions")?;
                by_parts[n][k] = v;
            }
        }
        Ok(Self { by_parts })
    }

    pub fn n_max(&self) -> u64 {
        self.by_parts.len() as u64 - 1
    }

    pub fn with_parts(&self, n: u64, k: u64) -> C {
        let (n, k) = (n as usize, k as usize);
        if k > n {
            return C::zero();
        }
        self.by_parts[n][k].clone()
    }

    pub fn total(&self, n: u64) -> Result<C> {
        self.by_parts[n as usize]
            .iter()
            .try_fold(C::zero(), |acc, x| add(&acc, x, "partitions"))
    }
}

/// p(n)
pub fn partitions<C: CountScalar>(n: u64) -> Result<C> {
    PartitionTable::new(n)?.total(n)
}

/// p(n, k)
pub fn partitions_k<C: CountScalar>(n: u64, k: u64) -> Result<C> {
    Ok(PartitionTable::<C>::new(n)?.with_parts(n, k))
}

/// Hardy-Ramanujan-Uspensky estimate `e^{π √(2n/3)} / (4 n √3)`.
pub fn hru_estimate<F: Float + FloatConst>(n: u64) -> F {
    let n = F::from(n).expect("u64 converts to float");
    let two = F::from(2.0).unwrap();
    let three = F::from(3.0).unwrap();
    let four = F::from(4.0).unwrap();
    (F::PI() * (two * n / three).sqrt()).exp() / (four * n * three.sqrt())
}

/// The leading constant `2π/√3` of the lower bound.
pub fn leading_constant<F: Float + FloatConst>() -> F {
    let two = F::from(2.0).unwrap();
    two * F::PI() / F::from(3.0).unwrap().sqrt()
}

/// How one link of the inequality chain evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Greater,
    Equal,
    Less,
}

impl Relation {
    fn of<C: Ord>(a: &C, b: &C) -> Self {
        match a.cmp(b) {
            std::cmp::Ordering::Greater => Relation::Greater,
            std::cmp::Ordering::Equal => Relation::Equal,
            std::cmp::Ordering::Less => Relation::Less,
        }
    }

    pub fn holds_weakly(self) -> bool {
        self != Relation::Less
    }
}

/// Every term of the chain
/// `C_I(n) > Σ_{k=1}^{n/2-1} p(n/2,k)² > (max_k p(n/2,k))² > 4 p(n/2)² / n²`
/// evaluated exactly, with the floating summaries alongside.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport<C, F> {
    pub n: u64,
    /// Set when an odd length was requested and the chain of `n - 1` is reported.
    pub substituted_from: Option<u64>,
    pub language_i_count: C,
    pub exact_p: C,
    pub half_p: C,
    pub sum_of_squares: C,
    pub max_square: C,
    /// `4 p(n/2)²`; the last link compares `max_square · n²` with it.
    pub scaled_last_term: C,
    pub i_vs_p: Relation,
    pub i_vs_sum: Relation,
    pub sum_vs_max: Relation,
    pub max_vs_last: Relation,
    /// `ln(4 p(n/2)² / n²)`, the lower bound on `ln C_R(n)` from the chain.
    pub ln_cr_lower: F,
    /// `(2π/√3) √n`
    pub leading_term: F,
    pub hru_p_estimate: F,
    pub n_pow_sqrt_n: F,
    /// `C_R(n) / n^{√n}` when a rich count was supplied.
    pub table1_ratio: Option<F>,
}

/// Chain report for even `n >= 4`.
pub fn bound_report<C: CountScalar, F: Float + FloatConst>(
    n: u64,
    cr_value: Option<&C>,
) -> Result<BoundReport<C, F>> {
    if n % 2 != 0 || n < 4 {
        return Err(Error::InvalidArgument(format!(
            "bound_report needs an even n >= 4, got {n}"
        )));
    }
    let half = n / 2;
    let parts = PartitionTable::<C>::new(n)?;
    let language_i_count = census_i::<C>(n)?.rows[&n].clone();
    let exact_p = parts.total(n)?;
    let half_p = parts.total(half)?;
    let mut sum_of_squares = C::zero();
    let mut max_part = C::zero();
    for k in 1..half {
        let v = parts.with_parts(half, k);
        sum_of_squares = add(&sum_of_squares, &mul(&v, &v, "bound_report")?, "bound_report")?;
        max_part = max_part.max(v);
    }
    let max_square = mul(&max_part, &max_part, "bound_report")?;
    let four: C = from_u64(4, "bound_report")?;
    let scaled_last_term = mul(&four, &mul(&half_p, &half_p, "bound_report")?, "bound_report")?;
    let n_sq: C = from_u64(n * n, "bound_report")?;
    let max_scaled = mul(&max_square, &n_sq, "bound_report")?;

    let nf = F::from(n).unwrap();
    let ln_cr_lower = F::from(4.0).unwrap().ln() + F::from(2.0).unwrap() * F::from(to_f64(&half_p)).unwrap().ln()
        - F::from(2.0).unwrap() * nf.ln();
    let n_pow_sqrt_n = nf.powf(nf.sqrt());
    Ok(BoundReport {
        n,
        substituted_from: None,
        i_vs_p: Relation::of(&language_i_count, &exact_p),
        i_vs_sum: Relation::of(&language_i_count, &sum_of_squares),
        sum_vs_max: Relation::of(&sum_of_squares, &max_square),
        max_vs_last: Relation::of(&max_scaled, &scaled_last_term),
        language_i_count,
        exact_p,
        half_p,
        sum_of_squares,
        max_square,
        scaled_last_term,
        ln_cr_lower,
        leading_term: leading_constant::<F>() * nf.sqrt(),
        hru_p_estimate: hru_estimate(n),
        n_pow_sqrt_n,
        table1_ratio: cr_value.map(|c| F::from(to_f64(c)).unwrap() / n_pow_sqrt_n),
    })
}

/// Like [`bound_report`], but an odd `n` reuses the chain of `n - 1`, which
/// bounds `C_I(n)` because `C_I` is increasing.
pub fn bound_report_any<C: CountScalar, F: Float + FloatConst>(
    n: u64,
    cr_value: Option<&C>,
) -> Result<BoundReport<C, F>> {
    if n % 2 == 0 {
        return bound_report(n, cr_value);
    }
    let mut r = bound_report::<C, F>(n - 1, None)?;
    r.substituted_from = Some(n);
    r.n = n;
    let nf = F::from(n).unwrap();
    r.n_pow_sqrt_n = nf.powf(nf.sqrt());
    r.table1_ratio = cr_value.map(|c| F::from(to_f64(c)).unwrap() / r.n_pow_sqrt_n);
    Ok(r)
}

/// `C_R(n) / n^{√n}`.
pub fn table1_ratio(n: u64, cr: u64) -> f64 {
    let nf = n as f64;
    cr as f64 / nf.powf(nf.sqrt())
}
