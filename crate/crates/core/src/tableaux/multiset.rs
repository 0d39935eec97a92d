use std::fmt;

use crate::partitions::Partition;

use super::{parse_boxes, TableauError};

/// A left-justified tableau whose boxes hold nonempty multisets of positive
/// integers, each stored sorted.
///
/// Columns are labeled `l, ..., 1` from left to right where `l` is the
/// length of the first row, so the box in row `i` at position `p` (both
/// 0-based) sits in the column labeled `l - p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisetTableau {
    rows: Vec<Vec<Vec<u32>>>,
}

impl MultisetTableau {
    /// Builds and validates a multiset tableau. Boxes may be given unsorted.
    pub fn new(rows: Vec<Vec<Vec<u32>>>) -> Result<Self, TableauError> {
        let t = Self::from_rows_unchecked(rows);
        t.validate()?;
        Ok(t)
    }

    /// Sorts each box but checks nothing else.
    pub fn from_rows_unchecked(mut rows: Vec<Vec<Vec<u32>>>) -> Self {
        for b in rows.iter_mut().flatten() {
            b.sort_unstable();
        }
        MultisetTableau { rows }
    }

    /// The tableau of shape `shape` with every box in row `i` equal to `{i}`.
    pub fn row_filled(shape: &Partition) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![vec![i as u32 + 1]; len as usize])
            .collect();
        MultisetTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<Vec<u32>>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Vec<u32>>> {
        self.rows
    }

    pub fn get(&self, row: usize, pos: usize) -> Option<&[u32]> {
        self.rows
            .get(row)
            .and_then(|r| r.get(pos))
            .map(Vec::as_slice)
    }

    pub fn row_lengths(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.row_lengths()).unwrap_or_default()
    }

    /// Number of column labels, the first row's length.
    pub fn ell(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn entry_count(&self) -> usize {
        self.rows.iter().flatten().map(Vec::len).sum()
    }

    pub fn validate(&self) -> Result<(), TableauError> {
        let lens = self.row_lengths();
        if lens.contains(&0) || lens.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::NotPartitionShape(lens));
        }
        for (i, row) in self.rows.iter().enumerate() {
            for (p, b) in row.iter().enumerate() {
                let (Some(&lo), Some(&hi)) = (b.first(), b.last()) else {
                    return Err(TableauError::EmptyBox { row: i, pos: p });
                };
                if p > 0 && *row[p - 1].last().expect("checked") > lo {
                    return Err(TableauError::RowViolation { row: i, pos: p });
                }
                if let Some(below) = self.get(i + 1, p) {
                    if below.first().is_some_and(|&z| hi >= z) {
                        return Err(TableauError::ColumnViolation { row: i, pos: p });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// `w_i` = number of entries equal to `i`; trailing zeros dropped.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = Vec::new();
        for &v in self.rows.iter().flatten().flatten() {
            let v = v as usize;
            if w.len() < v {
                w.resize(v, 0);
            }
            w[v - 1] += 1;
        }
        w
    }

    /// `T_j` = entries in the column labeled `j` minus its height, for
    /// `j = 1..l`.
    pub fn column_weight(&self) -> Vec<u32> {
        let l = self.ell();
        let mut cw = vec![0; l];
        for row in &self.rows {
            for (p, b) in row.iter().enumerate() {
                if p < l {
                    cw[l - 1 - p] += b.len() as u32 - 1;
                }
            }
        }
        cw
    }

    /// A semistandard Young tableau: a multiset tableau of singletons.
    pub fn is_ssyt(&self) -> bool {
        self.is_valid() && self.rows.iter().flatten().all(|b| b.len() == 1)
    }

    /// Box sizes `|b_ij|` for row `i` (1-based) and label `j`, zero when
    /// the box does not exist.
    pub(crate) fn label_size(&self, i: usize, j: usize) -> usize {
        let l = self.ell();
        if i == 0 || j == 0 || j > l {
            return 0;
        }
        self.get(i - 1, l - j).map_or(0, <[u32]>::len)
    }

    /// Row `i` holds only the value `i`, and for every `i` and `k` the
    /// partial sums `Σ_{j<=k} |b_(i+1)j| - |b_i(j-1)|` are at most 1.
    pub fn is_maximal(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().flatten().all(|&v| v as usize == i + 1));
        self.is_valid()
            && rows_ok
            && super::partial_sums_bounded(self.rows.len(), self.ell(), 1, |i, j| {
                self.label_size(i, j)
            })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let boxes: Vec<String> = row
                .iter()
                .map(|b| b.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            out.push_str(&boxes.join("|"));
            out.push('\n');
        }
        out
    }

    /// Parses the text form without validating the tableau conditions.
    pub fn parse_unchecked(text: &str) -> Result<Self, TableauError> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
            if line.trim_start().starts_with('.') {
                return Err(TableauError::Parse(format!(
                    "row {} has a shift marker in an unshifted tableau",
                    i + 1
                )));
            }
            let boxes = parse_boxes(line)?;
            let row = boxes
                .into_iter()
                .map(|b| {
                    b.into_iter()
                        .map(|e| {
                            if e.primed {
                                Err(TableauError::Parse(format!(
                                    "primed entry {} in row {}",
                                    e,
                                    i + 1
                                )))
                            } else {
                                Ok(e.value)
                            }
                        })
                        .collect::<Result<Vec<u32>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub fn from_text(text: &str) -> Result<Self, TableauError> {
        let t = Self::parse_unchecked(text)?;
        t.validate()?;
        Ok(t)
    }
}

impl fmt::Display for MultisetTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MultisetTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.to_text().lines().map(str::to_string).collect();
        write!(f, "MT[{}]", rows.join(" / "))
    }
}
