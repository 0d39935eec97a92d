//! Bounded exhaustive generation. Every family is infinite, so each
//! enumerator takes a cap on entry values and a cap on the number of
//! entries beyond one per box.

use itertools::Itertools;

use crate::partitions::{Partition, StrictPartition};

use super::skew::shift_down;
use super::{Entry, MultisetTableau, ShiftedMultisetTableau, SkewFilling};

/// Sorted multisets of `1..=n` with sizes `1..=max_size`.
fn value_multisets(n: u32, max_size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        out.extend((1..=n).combinations_with_replacement(size));
    }
    out
}

/// Sorted multisets over `1' < 1 < ... < n' < n` with sizes `1..=max_size`
/// where each primed letter appears at most once.
fn entry_multisets(n: u32, max_size: usize) -> Vec<Vec<Entry>> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for keys in (1..=2 * n).combinations_with_replacement(size) {
            if keys.windows(2).any(|w| w[0] == w[1] && w[0] % 2 == 1) {
                continue;
            }
            out.push(keys.into_iter().map(Entry::from_key).collect());
        }
    }
    out
}

/// All multiset tableaux of the given shape with values at most `n` and at
/// most `extra` entries beyond one per box.
pub fn enumerate_mt(shape: &Partition, n: u32, extra: u32) -> Vec<MultisetTableau> {
    let cands = value_multisets(n, 1 + extra as usize);
    let lens: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut rows: Vec<Vec<Vec<u32>>> = lens.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fill_mt(&lens, &cands, 0, 0, extra as usize, &mut rows, &mut out);
    out
}

fn fill_mt(
    lens: &[usize],
    cands: &[Vec<u32>],
    i: usize,
    p: usize,
    budget: usize,
    rows: &mut Vec<Vec<Vec<u32>>>,
    out: &mut Vec<MultisetTableau>,
) {
    if i == lens.len() {
        out.push(MultisetTableau::from_rows_unchecked(rows.clone()));
        return;
    }
    if p == lens[i] {
        fill_mt(lens, cands, i + 1, 0, budget, rows, out);
        return;
    }
    let left_max = if p > 0 {
        rows[i][p - 1].last().copied()
    } else {
        None
    };
    let above_max = if i > 0 {
        rows[i - 1][p].last().copied()
    } else {
        None
    };
    for b in cands {
        if b.len() - 1 > budget {
            continue;
        }
        let lo = b[0];
        if left_max.is_some_and(|m| m > lo) || above_max.is_some_and(|m| m >= lo) {
            continue;
        }
        rows[i].push(b.clone());
        fill_mt(lens, cands, i, p + 1, budget - (b.len() - 1), rows, out);
        rows[i].pop();
    }
}

pub fn enumerate_ssyt(shape: &Partition, n: u32) -> Vec<MultisetTableau> {
    enumerate_mt(shape, n, 0)
}

/// Maximal multiset tableaux with at most `extra` extra entries.
pub fn enumerate_maximal_mt(shape: &Partition, extra: u32) -> Vec<MultisetTableau> {
    enumerate_mt(shape, shape.len() as u32, extra)
        .into_iter()
        .filter(MultisetTableau::is_maximal)
        .collect()
}

/// All shifted multiset tableaux of the given shape with values at most `n`
/// and at most `extra` entries beyond one per box; `signed` selects the
/// signed family.
pub fn enumerate_smt(
    shape: &StrictPartition,
    n: u32,
    extra: u32,
    signed: bool,
) -> Vec<ShiftedMultisetTableau> {
    let cands = entry_multisets(n, 1 + extra as usize);
    let lens: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut rows: Vec<Vec<Vec<Entry>>> = lens.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fill_smt(
        &lens,
        &cands,
        signed,
        0,
        0,
        extra as usize,
        &mut rows,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn fill_smt(
    lens: &[usize],
    cands: &[Vec<Entry>],
    signed: bool,
    i: usize,
    p: usize,
    budget: usize,
    rows: &mut Vec<Vec<Vec<Entry>>>,
    out: &mut Vec<ShiftedMultisetTableau>,
) {
    if i == lens.len() {
        out.push(ShiftedMultisetTableau::from_rows_unchecked(
            rows.clone(),
            signed,
        ));
        return;
    }
    if p == lens[i] {
        fill_smt(lens, cands, signed, i + 1, 0, budget, rows, out);
        return;
    }
    let left_max = if p > 0 {
        rows[i][p - 1].last().copied()
    } else {
        None
    };
    let above_min = if i > 0 {
        Some(rows[i - 1][p + 1][0])
    } else {
        None
    };
    for b in cands {
        if b.len() - 1 > budget {
            continue;
        }
        let lo = b[0];
        if p == 0 && !signed && lo.primed {
            continue;
        }
        if left_max.is_some_and(|m| !m.lt_u(lo)) || above_min.is_some_and(|m| !m.lt_p(lo)) {
            continue;
        }
        rows[i].push(b.clone());
        fill_smt(
            lens,
            cands,
            signed,
            i,
            p + 1,
            budget - (b.len() - 1),
            rows,
            out,
        );
        rows[i].pop();
    }
}

pub fn enumerate_sst(shape: &StrictPartition, n: u32, signed: bool) -> Vec<ShiftedMultisetTableau> {
    enumerate_smt(shape, n, 0, signed)
}

pub fn enumerate_maximal_smt(shape: &StrictPartition, extra: u32) -> Vec<ShiftedMultisetTableau> {
    enumerate_smt(shape, shape.len() as u32, extra, false)
        .into_iter()
        .filter(ShiftedMultisetTableau::is_maximal)
        .collect()
}

/// Semistandard fillings of `outer / inner` over all outer shapes with at
/// most `rows` rows and at most `max_cells` cells, where entry `v` may only
/// occupy rows `i < heights[v - 1]` (0-based).
fn enumerate_restricted(
    inner: &Partition,
    rows: usize,
    heights: &[usize],
    max_cells: u32,
) -> Vec<SkewFilling> {
    let mut out = Vec::new();
    let mut filled: Vec<Vec<u32>> = Vec::new();
    restricted_rows(
        inner,
        rows,
        heights,
        max_cells as usize,
        &mut filled,
        &mut out,
    );
    out
}

fn restricted_rows(
    inner: &Partition,
    rows: usize,
    heights: &[usize],
    budget: usize,
    filled: &mut Vec<Vec<u32>>,
    out: &mut Vec<SkewFilling>,
) {
    let i = filled.len();
    if i == rows {
        let outer: Vec<u32> = (0..rows)
            .map(|r| inner.part(r) + filled[r].len() as u32)
            .collect();
        let outer = Partition::new(outer).expect("rows kept weakly decreasing");
        out.push(
            SkewFilling::new(outer, inner.clone(), filled.clone()).expect("shape built to fit"),
        );
        return;
    }
    let start = inner.part(i) as usize;
    let prev_end = if i == 0 {
        usize::MAX
    } else {
        inner.part(i - 1) as usize + filled[i - 1].len()
    };
    let alphabet: Vec<u32> = (1..=heights.len() as u32)
        .filter(|&v| i < heights[v as usize - 1])
        .collect();
    let max_len = budget.min(prev_end.saturating_sub(start));
    for len in 0..=max_len {
        for row in alphabet.iter().copied().combinations_with_replacement(len) {
            let col_ok = row.iter().enumerate().all(|(k, &v)| {
                let c = start + k;
                if i == 0 || c < inner.part(i - 1) as usize {
                    return true;
                }
                let above = filled[i - 1][c - inner.part(i - 1) as usize];
                above < v
            });
            if !col_ok {
                continue;
            }
            filled.push(row);
            restricted_rows(inner, rows, heights, budget - len, filled, out);
            filled.pop();
        }
    }
}

/// Restricted tableaux `RT(λ/μ)` over all `λ ⊇ μ` with `|λ/μ| <= max_cells`.
pub fn enumerate_rt(mu: &Partition, max_cells: u32) -> Vec<SkewFilling> {
    enumerate_restricted(mu, mu.len(), &mu.column_heights(), max_cells)
}

/// Shifted restricted tableaux over all outer shapes with at most
/// `max_cells` cells.
pub fn enumerate_srt(mu: &StrictPartition, max_cells: u32) -> Vec<SkewFilling> {
    enumerate_restricted(
        &shift_down(mu),
        mu.len(),
        &mu.as_partition().column_heights(),
        max_cells,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn tiny_counts() {
        assert_eq!(enumerate_ssyt(&p(&[1]), 2).len(), 2);
        let boxes: Vec<String> = enumerate_mt(&p(&[1]), 2, 1)
            .iter()
            .map(|t| t.to_text())
            .collect();
        assert_eq!(boxes, vec!["1\n", "2\n", "1 1\n", "1 2\n", "2 2\n"]);
        // s_(2,1) in three variables has 8 tableaux
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), 3).len(), 8);
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2).is_empty());
    }

    #[test]
    fn every_member_is_valid() {
        for t in enumerate_mt(&p(&[2, 1]), 3, 2) {
            assert!(t.is_valid(), "{:?}", t);
        }
        let s = StrictPartition::new(vec![2, 1]).unwrap();
        for signed in [false, true] {
            for t in enumerate_smt(&s, 3, 2, signed) {
                assert!(t.is_valid(), "{:?}", t);
                assert!(t.entry_count() <= 3 + 2);
            }
        }
    }

    #[test]
    fn restricted_tableaux_respect_rows() {
        let mu = p(&[2, 1]);
        let all = enumerate_rt(&mu, 2);
        assert!(all.iter().all(|r| r.is_restricted(&mu)));
        assert_eq!(all[0].cell_count(), 0);
        let smu = StrictPartition::new(vec![2, 1]).unwrap();
        assert!(enumerate_srt(&smu, 2)
            .iter()
            .all(|r| r.is_shifted_restricted(&smu)));
    }
}
