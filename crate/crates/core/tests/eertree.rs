use palcomb::eertree::Eertree;
use palcomb::oracle::{brute_distinct_palindromic_factors, enumerate, naive_is_palindrome, WordRange};
use palcomb::Word;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn longest_pal_suffix(s: &[u8]) -> usize {
    (0..=s.len()).find(|&i| naive_is_palindrome(&s[i..])).map_or(0, |i| s.len() - i)
}

#[test]
fn distinct_palindromes_match_factor_sets() {
    for (k, cap) in [(2u32, 12usize), (3, 7)] {
        for n in 0..=cap {
            for w in enumerate(WordRange::all(k, n)).unwrap() {
                let t = Eertree::from_word(&w);
                let brute = brute_distinct_palindromic_factors(&w).unwrap();
                assert_eq!(t.distinct_palindromes(), brute.len(), "{w}");
                assert_eq!(t.longest_suffix_palindrome(), longest_pal_suffix(w.symbols()), "{w}");
                t.check_invariants().unwrap();
            }
        }
    }
}

#[test]
fn push_reports_new_longest_suffix() {
    for w in enumerate(WordRange::all(2, 10)).unwrap() {
        let mut t = Eertree::new(2).unwrap();
        for (i, &a) in w.symbols().iter().enumerate() {
            let before = brute_distinct_palindromic_factors(&w.prefix(i)).unwrap();
            let created = t.push(a).unwrap();
            let suffix = w.factor(i + 1 - t.longest_suffix_palindrome(), i + 1);
            assert_eq!(created, !before.contains(&suffix), "{w} at {i}");
        }
    }
}

#[test]
fn random_push_pop_round_trips() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for k in [2u32, 3, 5] {
        let mut t = Eertree::new(k).unwrap();
        let mut text: Vec<u8> = Vec::new();
        for step in 0..100_000 {
            if text.is_empty() || (text.len() < 40 && rng.gen_bool(0.55)) {
                let a = rng.gen_range(0..k) as u8;
                t.push(a).unwrap();
                text.push(a);
            } else {
                t.pop().unwrap();
                text.pop();
            }
            if step % 997 == 0 {
                let fresh = Eertree::from_word(&Word::new(text.clone(), k).unwrap());
                assert_eq!(t.distinct_palindromes(), fresh.distinct_palindromes());
                assert_eq!(t.longest_suffix_palindrome(), fresh.longest_suffix_palindrome());
                t.check_invariants().unwrap();
            }
        }
        while !t.is_empty() {
            t.pop().unwrap();
        }
        assert_eq!(t, Eertree::new(k).unwrap());
    }
}
