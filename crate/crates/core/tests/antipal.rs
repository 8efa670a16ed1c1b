use std::collections::BTreeSet;

use palcomb::antipal::{
    count_creaky, count_creaky_via_pairs, creaky_to_even_pair, even_pair_to_creaky, is_creaky,
    is_even_pal_pair, negate_right_halves,
};
use palcomb::oracle::{brute_count, enumerate, WordRange};
use palcomb::pairs::PairCounter;
use palcomb::{Count, Word};

#[test]
fn creaky_counts_equal_even_pair_counts() {
    let mut counter = PairCounter::<Count>::new(2).unwrap();
    for n in 0..=20u64 {
        let e = counter.even_pairs(n).unwrap();
        assert_eq!(count_creaky(n).unwrap() as Count, e, "n = {n}");
        assert_eq!(count_creaky_via_pairs::<Count>(n).unwrap(), e);
    }
    for n in 0..=12 {
        assert_eq!(count_creaky(n as u64).unwrap(), brute_count("creaky", n, 2).unwrap());
    }
}

#[test]
fn bijection_is_injective_and_onto() {
    for n in 1..=14 {
        let creaky: Vec<Word> = enumerate(WordRange::all(2, n))
            .unwrap()
            .filter(|w| is_creaky(w).unwrap())
            .collect();
        let images: BTreeSet<Word> = creaky.iter().map(|w| creaky_to_even_pair(w).unwrap()).collect();
        assert_eq!(images.len(), creaky.len(), "n = {n}");
        assert!(images.iter().all(|e| is_even_pal_pair(e).unwrap()));
        let even = brute_count("even-pair", n, 2).unwrap() as usize;
        assert_eq!(images.len(), even, "n = {n}");
        for e in &images {
            let back = even_pair_to_creaky(e).unwrap();
            assert_eq!(&creaky_to_even_pair(&back).unwrap(), e);
        }
    }
}

#[test]
fn agrees_with_half_negation_on_even_primitive_images() {
    for n in (2..=12).step_by(2) {
        for w in enumerate(WordRange::all(2, n)).unwrap() {
            if !is_creaky(&w).unwrap() {
                continue;
            }
            let d = w.primitive_decomposition().unwrap();
            let f = palcomb::antipal::creaky_factorizations(&d.root).unwrap();
            if f.len() != 1 {
                continue;
            }
            let naive = negate_right_halves(&f[0]).unwrap().join().pow(d.exponent);
            if naive.is_even_primitive().unwrap() {
                assert_eq!(creaky_to_even_pair(&w).unwrap(), naive, "{w}");
            }
        }
    }
}

#[test]
fn half_negation_alone_collides() {
    let a = Word::parse("0011", 2).unwrap();
    let b = Word::parse("0101", 2).unwrap();
    let image = |w: &Word| {
        let d = w.primitive_decomposition().unwrap();
        let f = palcomb::antipal::creaky_factorizations(&d.root).unwrap();
        negate_right_halves(&f[0]).unwrap().join().pow(d.exponent)
    };
    assert_eq!(image(&a), image(&b));
    assert_ne!(creaky_to_even_pair(&a).unwrap(), creaky_to_even_pair(&b).unwrap());
}
