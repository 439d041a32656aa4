use std::collections::BTreeSet;

use num::BigUint;
use proptest::prelude::*;

use pascal_subwords::oracle::brute_count;
use pascal_subwords::patterns::{
    enumerate_occurrences, is_subword, pattern_count, restricted_count, restricted_count_recursive,
    subword_count, vincular_count, Permutation, RestrictedPattern, Word,
};
use pascal_subwords::posets::{permutations_of_length, words_of_length};

fn words_up_to(size: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|l| words_of_length(size, l))
        .collect()
}

fn subsets(k: usize) -> Vec<BTreeSet<usize>> {
    (0u32..1 << (k + 1))
        .map(|bits| (0..=k).filter(|i| bits >> i & 1 == 1).collect())
        .collect()
}

fn word(size: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..size, 0..=max_len).prop_map(Word::new)
}

fn pattern(size: u8, max_len: usize) -> impl Strategy<Value = RestrictedPattern<Word>> {
    word(size, max_len).prop_flat_map(|body| {
        let k = body.len();
        prop::collection::btree_set(0..=k, 0..=k + 1)
            .prop_map(move |r| RestrictedPattern::new(body.clone(), r).unwrap())
    })
}

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|e| Permutation::new(e).unwrap())
    })
}

#[test]
fn engines_agree_exhaustively_over_ab() {
    let hosts = words_up_to(2, 6);
    for body in words_up_to(2, 3) {
        for r in subsets(body.len()) {
            let p = RestrictedPattern::new(body.clone(), r).unwrap();
            for v in &hosts {
                let dp = restricted_count(&p, v);
                assert_eq!(restricted_count_recursive(&p, v), dp, "{p:?} in {v:?}");
                assert_eq!(BigUint::from(enumerate_occurrences(&p, v).len()), dp);
                assert_eq!(brute_count(&p, v), dp);
            }
        }
    }
}

#[test]
fn vincular_matches_oracle_up_to_six() {
    let hosts: Vec<Permutation> = (0..=6).flat_map(permutations_of_length).collect();
    for k in 0..=3 {
        for sigma in permutations_of_length(k) {
            for r in subsets(k) {
                let p = RestrictedPattern::new(sigma.clone(), r).unwrap();
                for pi in &hosts {
                    assert_eq!(vincular_count(&p, pi), brute_count(&p, pi), "{p:?} in {pi}");
                }
            }
        }
    }
}

#[test]
fn singleton_alphabet_gives_binomials() {
    for n in 0..=12usize {
        for k in 0..=n {
            let expected = num::integer::binomial(BigUint::from(n), BigUint::from(k));
            assert_eq!(
                subword_count(&Word::repeat(0, k), &Word::repeat(0, n)),
                expected
            );
        }
    }
}

#[test]
fn binomial_identity_on_small_words() {
    // binom(v, ε) = 1 and binom(v, v) = 1
    for v in words_up_to(3, 4) {
        assert_eq!(subword_count(&Word::empty(), &v), BigUint::from(1u32));
        assert_eq!(subword_count(&v, &v), BigUint::from(1u32));
    }
}

proptest! {
    #[test]
    fn engines_agree_on_longer_hosts(p in pattern(3, 4), v in word(3, 10)) {
        let dp = restricted_count(&p, &v);
        prop_assert_eq!(restricted_count_recursive(&p, &v), dp.clone());
        prop_assert_eq!(BigUint::from(enumerate_occurrences(&p, &v).len()), dp);
    }

    #[test]
    fn specializations(u in word(2, 4), v in word(2, 7)) {
        let plain = RestrictedPattern::plain(u.clone());
        prop_assert_eq!(restricted_count(&plain, &v), subword_count(&u, &v));
        let pinned = RestrictedPattern::pinned(u.clone());
        let want = BigUint::from(u32::from(u == v));
        prop_assert_eq!(restricted_count(&pinned, &v), want);
        let empty_pinned = RestrictedPattern::new(Word::empty(), [0]).unwrap();
        prop_assert_eq!(restricted_count(&empty_pinned, &v), BigUint::from(u32::from(v.is_empty())));
    }

    #[test]
    fn more_adjacencies_never_add_occurrences(p in pattern(2, 4), v in word(2, 8), drop in any::<u64>()) {
        let weaker: BTreeSet<usize> = p
            .adjacency()
            .iter()
            .copied()
            .filter(|i| drop >> i & 1 == 0)
            .collect();
        let q = RestrictedPattern::new(p.body().clone(), weaker).unwrap();
        prop_assert!(restricted_count(&p, &v) <= restricted_count(&q, &v));
    }

    #[test]
    fn greedy_containment_matches_counting(u in word(3, 5), v in word(3, 9)) {
        prop_assert_eq!(is_subword(&u, &v), subword_count(&u, &v) > BigUint::from(0u32));
    }

    #[test]
    fn occurrences_are_increasing_and_satisfy_adjacency(p in pattern(2, 3), v in word(2, 8)) {
        let n = v.len();
        for occ in enumerate_occurrences(&p, &v) {
            let mut phi = vec![0];
            phi.extend_from_slice(occ.positions());
            phi.push(n + 1);
            prop_assert!(phi.windows(2).all(|w| w[0] < w[1]));
            for &i in p.adjacency() {
                prop_assert_eq!(phi[i + 1], phi[i] + 1);
            }
            for (j, &a) in occ.positions().iter().zip(p.body().letters()) {
                prop_assert_eq!(v.letters()[j - 1], a);
            }
        }
    }

    #[test]
    fn classical_is_vincular_with_no_adjacency(
        sigma in permutation(3),
        pi in permutation(7),
    ) {
        let p = RestrictedPattern::plain(sigma.clone());
        prop_assert_eq!(vincular_count(&p, &pi), pattern_count(&sigma, &pi));
        prop_assert_eq!(brute_count(&p, &pi), pattern_count(&sigma, &pi));
    }

    #[test]
    fn dual_is_an_involution(p in pattern(2, 4)) {
        let d = p.dual();
        prop_assert_eq!(d.body(), p.body());
        prop_assert!(d.adjacency().is_disjoint(p.adjacency()));
        prop_assert_eq!(d.adjacency().len() + p.adjacency().len(), p.len() + 1);
        prop_assert_eq!(d.dual(), p);
    }
}
