use std::collections::HashSet;

use proptest::prelude::*;

use grothlab::algebra::permutations;
use grothlab::partitions::{
    enumerate_extensions, from_paper_order, iota, is_good_extension, verify_hmult_lemma,
    Composition, Partition, SignedPair,
};

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A strictly decreasing padded base, increments and weakly increasing
/// column bounds, all small.
fn lemma_input() -> impl Strategy<Value = (Vec<u32>, Vec<u32>, Vec<usize>, usize)> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::sample::subsequence((0u32..=4).collect::<Vec<_>>(), n),
            prop::collection::vec(0u32..=2, 1..=3),
        )
            .prop_flat_map(move |(mut base, incs)| {
                base.reverse();
                let len = incs.len();
                (
                    Just(base),
                    Just(incs),
                    prop::collection::vec(1usize..=n, len).prop_map(|mut c| {
                        c.sort();
                        c
                    }),
                    Just(n),
                )
            })
    })
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=5, 0..=4).prop_map(|mut v| {
        v.sort_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn extensions_are_counted_by_multisets((base, incs, cols, _n) in lemma_input()) {
        let exts = enumerate_extensions(&Composition(base), &incs, &cols).unwrap();
        let expected: u64 = incs
            .iter()
            .zip(&cols)
            .map(|(&t, &c)| binomial(t as u64 + c as u64 - 1, t as u64))
            .product();
        prop_assert_eq!(exts.len() as u64, expected);
        let distinct: HashSet<_> = exts.iter().map(|e| e.chain.clone()).collect();
        prop_assert_eq!(distinct.len(), exts.len());
        prop_assert!(exts.iter().all(|e| e.is_valid()));
    }

    #[test]
    fn iota_is_a_sign_reversing_involution((base, incs, cols, n) in lemma_input()) {
        let exts = enumerate_extensions(&Composition(base), &incs, &cols).unwrap();
        for e in exts.into_iter().filter(|e| !is_good_extension(e)) {
            for sigma in permutations(n) {
                let p = SignedPair::new(sigma, e.clone());
                let q = iota(&p).unwrap();
                prop_assert_eq!(q.sign, -p.sign);
                prop_assert_eq!(q.top_row_values(), p.top_row_values());
                prop_assert!(!is_good_extension(&q.extension));
                prop_assert!(q.extension.is_valid());
                prop_assert_eq!(iota(&q).unwrap(), p);
            }
        }
    }

    #[test]
    fn lemma_holds((base, incs, cols, n) in lemma_input()) {
        let report = verify_hmult_lemma(&base, &incs, &cols, n).unwrap();
        prop_assert!(report.holds());
    }

    #[test]
    fn conjugation_is_an_involution(p in partition_strategy()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn column_heights_read_the_conjugate_from_the_right(p in partition_strategy()) {
        let mut expected: Vec<usize> = p.conjugate().parts().iter().map(|&c| c as usize).collect();
        expected.reverse();
        prop_assert_eq!(p.column_heights(), expected);
    }

    #[test]
    fn subpartitions_match_a_filter_oracle(p in partition_strategy()) {
        let subs: HashSet<Partition> = p.subpartitions().into_iter().collect();
        let mut oracle = HashSet::new();
        for size in 0..=p.size() {
            for q in Partition::all_of_size(size, p.largest(), p.len()) {
                if p.contains(&q) {
                    oracle.insert(q);
                }
            }
        }
        prop_assert_eq!(subs, oracle);
    }
}

#[test]
fn good_extensions_of_a_staircase_are_partitions() {
    let exts = enumerate_extensions(&Composition(vec![2, 1, 0]), &[1, 1], &[2, 3]).unwrap();
    let good: Vec<_> = exts.iter().filter(|e| is_good_extension(e)).collect();
    assert!(!good.is_empty());
    assert!(good
        .iter()
        .all(|e| e.chain.iter().all(Composition::is_partition)));
}

#[test]
fn paper_order_is_reversed() {
    assert_eq!(from_paper_order(&[3, 2, 1]), vec![1, 2, 3]);
}

#[test]
fn lemma_rejects_repeated_parts() {
    assert!(verify_hmult_lemma(&[1, 1], &[1], &[1], 2).is_err());
    assert!(verify_hmult_lemma(&[3, 2, 1], &[1], &[1], 2).is_err());
}
