use std::collections::BTreeSet;

use itertools::Itertools;
use proptest::prelude::*;

use grothlab::partitions::{Partition, StrictPartition};
use grothlab::tableaux::{
    enumerate_maximal_mt, enumerate_maximal_smt, enumerate_mt, enumerate_smt, enumerate_sst,
    enumerate_ssyt, Entry, MultisetTableau, ShiftedMultisetTableau, TableauJson,
};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn sp(v: &[u32]) -> StrictPartition {
    StrictPartition::new(v.to_vec()).unwrap()
}

/// Every way to fill `boxes` boxes with nonempty sorted multisets of
/// `letters` using at most `boxes + extra` letters in total.
fn all_fillings<T: Clone + Ord>(letters: &[T], boxes: usize, extra: usize) -> Vec<Vec<Vec<T>>> {
    let mut out = vec![(Vec::new(), 0usize)];
    for _ in 0..boxes {
        let mut next = Vec::new();
        for (filled, used) in &out {
            for size in 1..=1 + extra - used {
                for m in letters.iter().cloned().combinations_with_replacement(size) {
                    let mut f: Vec<Vec<T>> = filled.clone();
                    f.push(m);
                    next.push((f, used + size - 1));
                }
            }
        }
        out = next;
    }
    out.into_iter().map(|(f, _)| f).collect()
}

fn split_rows<T: Clone>(flat: &[Vec<T>], lens: &[u32]) -> Vec<Vec<Vec<T>>> {
    let mut rows = Vec::new();
    let mut at = 0;
    for &l in lens {
        rows.push(flat[at..at + l as usize].to_vec());
        at += l as usize;
    }
    rows
}

fn mt_oracle(shape: &Partition, n: u32, extra: usize) -> BTreeSet<String> {
    let letters: Vec<u32> = (1..=n).collect();
    all_fillings(&letters, shape.size() as usize, extra)
        .into_iter()
        .map(|f| MultisetTableau::from_rows_unchecked(split_rows(&f, shape.parts())))
        .filter(MultisetTableau::is_valid)
        .map(|t| t.to_text())
        .collect()
}

fn smt_oracle(shape: &StrictPartition, n: u32, extra: usize, signed: bool) -> BTreeSet<String> {
    let letters: Vec<Entry> = (1..=n)
        .flat_map(|v| [Entry::new(v, true), Entry::new(v, false)])
        .collect();
    all_fillings(&letters, shape.size() as usize, extra)
        .into_iter()
        .map(|f| ShiftedMultisetTableau::from_rows_unchecked(split_rows(&f, shape.parts()), signed))
        .filter(ShiftedMultisetTableau::is_valid)
        .map(|t| t.to_text())
        .collect()
}

fn texts<T>(ts: &[T], f: impl Fn(&T) -> String) -> BTreeSet<String> {
    let set: BTreeSet<String> = ts.iter().map(f).collect();
    assert_eq!(set.len(), ts.len(), "enumeration repeats a tableau");
    set
}

#[test]
fn mt_enumeration_matches_filter_oracle() {
    for (shape, n, extra) in [
        (p(&[2, 1]), 3, 2),
        (p(&[2]), 2, 3),
        (p(&[1, 1]), 3, 2),
        (p(&[3, 1]), 2, 1),
    ] {
        let got = texts(
            &enumerate_mt(&shape, n, extra as u32),
            MultisetTableau::to_text,
        );
        assert_eq!(got, mt_oracle(&shape, n, extra), "{}", shape);
    }
}

#[test]
fn smt_enumeration_matches_filter_oracle() {
    for signed in [false, true] {
        for (shape, n, extra) in [(sp(&[2, 1]), 3, 1), (sp(&[2]), 2, 2), (sp(&[3, 1]), 2, 1)] {
            let got = texts(
                &enumerate_smt(&shape, n, extra as u32, signed),
                ShiftedMultisetTableau::to_text,
            );
            assert_eq!(
                got,
                smt_oracle(&shape, n, extra, signed),
                "{} signed={}",
                shape.as_partition(),
                signed
            );
        }
    }
}

#[test]
fn semistandard_enumerations_are_the_extra_zero_case() {
    for shape in [p(&[2, 1]), p(&[3]), p(&[2, 2])] {
        assert_eq!(
            texts(&enumerate_ssyt(&shape, 3), MultisetTableau::to_text),
            mt_oracle(&shape, 3, 0)
        );
    }
    for signed in [false, true] {
        let shape = sp(&[3, 1]);
        assert_eq!(
            texts(
                &enumerate_sst(&shape, 3, signed),
                ShiftedMultisetTableau::to_text
            ),
            smt_oracle(&shape, 3, 0, signed)
        );
    }
}

/// Number of SSYT of shape λ with entries at most n, by the hook-content
/// formula.
fn hook_content(shape: &Partition, n: i64) -> u64 {
    let conj = shape.conjugate();
    let (mut num, mut den) = (1i64, 1i64);
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row as usize {
            let hook = (row as i64 - j as i64) + (conj.part(j) as i64 - i as i64) - 1;
            num *= n + j as i64 - i as i64;
            den *= hook;
        }
    }
    (num / den) as u64
}

#[test]
fn ssyt_counts_match_hook_content() {
    for shape in [
        p(&[1]),
        p(&[2, 1]),
        p(&[3, 2]),
        p(&[2, 2, 1]),
        p(&[4, 1]),
        p(&[3, 3]),
    ] {
        for n in 1..=4 {
            assert_eq!(
                enumerate_ssyt(&shape, n).len() as u64,
                hook_content(&shape, n as i64),
                "{} n={}",
                shape,
                n
            );
        }
    }
}

#[test]
fn maximal_enumerations_filter_the_full_census() {
    for (shape, extra) in [(p(&[2, 1]), 2), (p(&[3, 1]), 2), (p(&[2, 2]), 1)] {
        let n = shape.len() as u32;
        let oracle: BTreeSet<String> = enumerate_mt(&shape, n, extra)
            .iter()
            .filter(|t| t.is_maximal())
            .map(MultisetTableau::to_text)
            .collect();
        assert_eq!(
            texts(
                &enumerate_maximal_mt(&shape, extra),
                MultisetTableau::to_text
            ),
            oracle
        );
    }
    for (shape, extra) in [(sp(&[2, 1]), 2), (sp(&[3, 1]), 2)] {
        let n = shape.len() as u32;
        let oracle: BTreeSet<String> = enumerate_smt(&shape, n, extra, false)
            .iter()
            .filter(|t| t.is_maximal())
            .map(ShiftedMultisetTableau::to_text)
            .collect();
        assert_eq!(
            texts(
                &enumerate_maximal_smt(&shape, extra),
                ShiftedMultisetTableau::to_text
            ),
            oracle
        );
    }
}

fn any_mt() -> impl Strategy<Value = MultisetTableau> {
    let all: Vec<MultisetTableau> = [p(&[2, 1]), p(&[2, 2]), p(&[3])]
        .iter()
        .flat_map(|s| enumerate_mt(s, 3, 2))
        .collect();
    prop::sample::select(all)
}

fn any_smt() -> impl Strategy<Value = ShiftedMultisetTableau> {
    let all: Vec<ShiftedMultisetTableau> = [sp(&[2, 1]), sp(&[3, 1])]
        .iter()
        .flat_map(|s| enumerate_smt(s, 3, 1, true))
        .collect();
    prop::sample::select(all)
}

proptest! {
    #[test]
    fn mt_serializations_round_trip(t in any_mt()) {
        prop_assert_eq!(MultisetTableau::from_text(&t.to_text()).unwrap(), t.clone());
        let j = TableauJson::from_mt(&t);
        let back: TableauJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        prop_assert_eq!(back.to_mt_unchecked().unwrap(), t);
    }

    #[test]
    fn smt_serializations_round_trip(t in any_smt()) {
        prop_assert_eq!(ShiftedMultisetTableau::from_text(&t.to_text(), true).unwrap(), t.clone());
        let j = TableauJson::from_smt(&t);
        let back: TableauJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        prop_assert_eq!(back.to_smt_unchecked().unwrap(), t);
    }

    #[test]
    fn weights_count_entries(t in any_mt()) {
        let entries: usize = t.rows().iter().flatten().map(Vec::len).sum();
        prop_assert_eq!(t.weight().iter().sum::<u32>() as usize, entries);
        prop_assert_eq!(t.column_weight().iter().sum::<u32>() as usize, entries - t.shape().size() as usize);
    }

    #[test]
    fn shifted_weights_count_entries(t in any_smt()) {
        let entries: usize = t.rows().iter().flatten().map(Vec::len).sum();
        prop_assert_eq!(t.weight().iter().sum::<u32>() as usize, entries);
        let boxes: usize = t.row_lengths().iter().map(|&l| l as usize).sum();
        prop_assert_eq!(t.diagonal_weight().iter().sum::<u32>() as usize, entries - boxes);
    }
}
