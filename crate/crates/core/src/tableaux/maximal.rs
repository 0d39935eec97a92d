//! Maximal tableaux and restricted tableaux determine each other: row `i`
//! of the restricted tableau holds `|b_ij| - 1` copies of `j` for every box
//! `b_ij` on row `i`.

use crate::partitions::{Partition, StrictPartition};

use super::skew::shift_down;
use super::{Entry, MultisetTableau, ShiftedMultisetTableau, SkewFilling, TableauError};

/// Row `i` of the restricted tableau from the box sizes of row `i`, listed
/// left to right (labels `l, l-1, ...`).
fn row_from_sizes(sizes: &[usize], ell: usize) -> Vec<u32> {
    let mut row = Vec::new();
    // labels increase right to left, so walk the row backwards
    for (p, &s) in sizes.iter().enumerate().rev() {
        let label = (ell - p) as u32;
        row.extend(std::iter::repeat_n(label, s - 1));
    }
    row
}

/// Inverse of [`row_from_sizes`] for a row of `len` boxes.
fn sizes_from_row(row: &[u32], len: usize, ell: usize) -> Result<Vec<usize>, TableauError> {
    let mut sizes = vec![1; len];
    for &v in row {
        let v = v as usize;
        if v == 0 || v > ell || ell - v >= len {
            return Err(TableauError::ShapeMismatch(format!(
                "entry {} has no box on a row of length {}",
                v, len
            )));
        }
        sizes[ell - v] += 1;
    }
    Ok(sizes)
}

pub fn maximal_mt_to_rt(t: &MultisetTableau) -> Result<SkewFilling, TableauError> {
    if !t.is_maximal() {
        return Err(TableauError::NotMaximal);
    }
    let ell = t.ell();
    let rows: Vec<Vec<u32>> = t
        .rows()
        .iter()
        .map(|r| row_from_sizes(&r.iter().map(Vec::len).collect::<Vec<_>>(), ell))
        .collect();
    let outer =
        Partition::new(t.weight()).map_err(|e| TableauError::ShapeMismatch(e.to_string()))?;
    SkewFilling::new(outer, t.shape(), rows)
}

pub fn rt_to_maximal_mt(r: &SkewFilling, mu: &Partition) -> Result<MultisetTableau, TableauError> {
    if !r.is_restricted(mu) {
        return Err(TableauError::NotRestricted);
    }
    let ell = mu.largest() as usize;
    let mut rows = Vec::new();
    for (i, &len) in mu.parts().iter().enumerate() {
        let sizes = sizes_from_row(&r.rows()[i], len as usize, ell)?;
        rows.push(sizes.into_iter().map(|s| vec![i as u32 + 1; s]).collect());
    }
    let t = MultisetTableau::new(rows)?;
    if !t.is_maximal() {
        return Err(TableauError::NotMaximal);
    }
    Ok(t)
}

pub fn maximal_smt_to_srt(t: &ShiftedMultisetTableau) -> Result<SkewFilling, TableauError> {
    if !t.is_maximal() {
        return Err(TableauError::NotMaximal);
    }
    let ell = t.ell();
    let m = t.rows().len();
    let rows: Vec<Vec<u32>> = t
        .rows()
        .iter()
        .map(|r| row_from_sizes(&r.iter().map(Vec::len).collect::<Vec<_>>(), ell))
        .collect();
    let mu = t.shape();
    let outer: Vec<u32> = t
        .weight()
        .iter()
        .enumerate()
        .map(|(i, &w)| w - (m - 1 - i) as u32)
        .collect();
    let outer = Partition::new(outer).map_err(|e| TableauError::ShapeMismatch(e.to_string()))?;
    SkewFilling::new(outer, shift_down(&mu), rows)
}

pub fn srt_to_maximal_smt(
    r: &SkewFilling,
    mu: &StrictPartition,
) -> Result<ShiftedMultisetTableau, TableauError> {
    if !r.is_shifted_restricted(mu) {
        return Err(TableauError::NotRestricted);
    }
    let ell = mu.largest() as usize;
    let mut rows = Vec::new();
    for (i, &len) in mu.parts().iter().enumerate() {
        let row = r.rows().get(i).map_or(&[][..], Vec::as_slice);
        let sizes = sizes_from_row(row, len as usize, ell)?;
        rows.push(
            sizes
                .into_iter()
                .map(|s| vec![Entry::unprimed(i as u32 + 1); s])
                .collect(),
        );
    }
    let t = ShiftedMultisetTableau::new(rows, false)?;
    if !t.is_maximal() {
        return Err(TableauError::NotMaximal);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_encoding_round_trips() {
        let sizes = vec![1, 2, 2, 2];
        let row = row_from_sizes(&sizes, 4);
        assert_eq!(row, vec![1, 2, 3]);
        assert_eq!(sizes_from_row(&row, 4, 4).unwrap(), sizes);
        assert!(sizes_from_row(&[1], 2, 4).is_err());
    }

    #[test]
    fn singleton_tableau_maps_to_empty_filling() {
        let mu = Partition::new(vec![3, 1]).unwrap();
        let t = MultisetTableau::row_filled(&mu);
        let r = maximal_mt_to_rt(&t).unwrap();
        assert_eq!(r.cell_count(), 0);
        assert_eq!(rt_to_maximal_mt(&r, &mu).unwrap(), t);

        let smu = StrictPartition::new(vec![3, 1]).unwrap();
        let s = ShiftedMultisetTableau::row_filled(&smu);
        let r = maximal_smt_to_srt(&s).unwrap();
        assert_eq!(r.cell_count(), 0);
        assert_eq!(srt_to_maximal_smt(&r, &smu).unwrap(), s);
    }

    #[test]
    fn non_maximal_input_is_rejected() {
        let t = MultisetTableau::from_text("1 2\n").unwrap();
        assert_eq!(maximal_mt_to_rt(&t), Err(TableauError::NotMaximal));
    }
}
