//! Multiset tableaux, their shifted analogues, restricted skew fillings,
//! bounded enumeration, and the maximal/restricted correspondences.
//!
//! Text format: one row per line, boxes separated by `|`, entries inside a
//! box separated by spaces, primed entries written `4'`. Row `i` of a
//! shifted tableau starts with `i` dots.

mod entry;
mod enumerate;
mod maximal;
mod multiset;
mod shifted;
mod skew;

pub use entry::Entry;
pub use enumerate::{
    enumerate_maximal_mt, enumerate_maximal_smt, enumerate_mt, enumerate_rt, enumerate_smt,
    enumerate_srt, enumerate_sst, enumerate_ssyt,
};
pub use maximal::{maximal_mt_to_rt, maximal_smt_to_srt, rt_to_maximal_mt, srt_to_maximal_smt};
pub use multiset::MultisetTableau;
pub use shifted::ShiftedMultisetTableau;
pub use skew::{shift_down, SkewFilling};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("row lengths {0:?} do not form a valid shape")]
    NotPartitionShape(Vec<u32>),
    #[error("empty box at row {}, position {}", row + 1, pos + 1)]
    EmptyBox { row: usize, pos: usize },
    #[error("box at row {}, position {} is too large for the box to its right", row + 1, pos + 1)]
    RowViolation { row: usize, pos: usize },
    #[error("box at row {}, position {} is too large for the box below it", row + 1, pos + 1)]
    ColumnViolation { row: usize, pos: usize },
    #[error("primed entry repeated in box at row {}, position {}", row + 1, pos + 1)]
    RepeatedPrime { row: usize, pos: usize },
    #[error("smallest entry of row {} is primed", row + 1)]
    PrimedRowMinimum { row: usize },
    #[error("tableau is not maximal")]
    NotMaximal,
    #[error("filling is not a restricted tableau")]
    NotRestricted,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// Parses `a b|c|d e'` into boxes of entries.
pub(crate) fn parse_boxes(line: &str) -> Result<Vec<Vec<Entry>>, TableauError> {
    line.split('|')
        .map(|b| {
            b.split_whitespace()
                .map(str::parse::<Entry>)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect()
}

/// Checks `Σ_{1<=j<=k} size(i+1, j) - size(i, j-1) <= bound` for every row
/// `i = 1..rows` and every `k = 0..=ell`, with `size(i, 0) = 0`.
pub(crate) fn partial_sums_bounded<F>(rows: usize, ell: usize, bound: i64, size: F) -> bool
where
    F: Fn(usize, usize) -> usize,
{
    (1..=rows).all(|i| {
        let mut sum = 0i64;
        (1..=ell).all(|j| {
            sum += size(i + 1, j) as i64 - size(i, j - 1) as i64;
            sum <= bound
        })
    })
}

/// JSON mirror of the text format. Entries are strings such as `"4'"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Vec<u32>,
    pub boxes: Vec<Vec<Vec<String>>>,
    pub signed: bool,
}

impl TableauJson {
    fn entries_to_strings<T: ToString>(rows: &[Vec<Vec<T>>]) -> Vec<Vec<Vec<String>>> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|b| b.iter().map(T::to_string).collect())
                    .collect()
            })
            .collect()
    }

    fn parse_entries(&self) -> Result<Vec<Vec<Vec<Entry>>>, TableauError> {
        let lens: Vec<u32> = self.boxes.iter().map(|r| r.len() as u32).collect();
        if lens != self.shape {
            return Err(TableauError::ShapeMismatch(format!(
                "shape {:?} but rows of lengths {:?}",
                self.shape, lens
            )));
        }
        self.boxes
            .iter()
            .map(|r| {
                r.iter()
                    .map(|b| b.iter().map(|s| s.parse()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn from_mt(t: &MultisetTableau) -> Self {
        TableauJson {
            shape: t.row_lengths(),
            boxes: Self::entries_to_strings(t.rows()),
            signed: false,
        }
    }

    pub fn from_smt(t: &ShiftedMultisetTableau) -> Self {
        TableauJson {
            shape: t.row_lengths(),
            boxes: Self::entries_to_strings(t.rows()),
            signed: t.signed(),
        }
    }

    /// Rebuilds an unshifted tableau without validating it.
    pub fn to_mt_unchecked(&self) -> Result<MultisetTableau, TableauError> {
        let rows = self
            .parse_entries()?
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|b| {
                        b.into_iter()
                            .map(|e| {
                                if e.primed {
                                    Err(TableauError::Parse(format!("primed entry {}", e)))
                                } else {
                                    Ok(e.value)
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<Vec<u32>>>, _>>()?;
        Ok(MultisetTableau::from_rows_unchecked(rows))
    }

    /// Rebuilds a shifted tableau without validating it.
    pub fn to_smt_unchecked(&self) -> Result<ShiftedMultisetTableau, TableauError> {
        Ok(ShiftedMultisetTableau::from_rows_unchecked(
            self.parse_entries()?,
            self.signed,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_mirrors_text() {
        let t = ShiftedMultisetTableau::from_text("1'|1 2'\n.2\n", true).unwrap();
        let j = TableauJson::from_smt(&t);
        assert_eq!(j.shape, vec![2, 1]);
        assert_eq!(j.boxes[0][1], vec!["1", "2'"]);
        let text = serde_json::to_string(&j).unwrap();
        let back: TableauJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_smt_unchecked().unwrap(), t);

        let m = MultisetTableau::from_text("1 1|2\n2\n").unwrap();
        assert_eq!(TableauJson::from_mt(&m).to_mt_unchecked().unwrap(), m);
    }

    #[test]
    fn json_shape_must_match_boxes() {
        let j = TableauJson {
            shape: vec![2],
            boxes: vec![vec![vec!["1".into()]]],
            signed: false,
        };
        assert!(j.to_mt_unchecked().is_err());
    }
}
