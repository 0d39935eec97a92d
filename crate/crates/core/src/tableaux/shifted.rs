use std::fmt;

use crate::partitions::StrictPartition;

use super::{parse_boxes, Entry, TableauError};

/// A shifted tableau whose boxes hold nonempty multisets over the primed
/// alphabet, each primed letter at most once per box.
///
/// Row `i` (0-based) starts `i` columns to the right of row 0, so the box
/// at row `i`, position `p` lies in absolute column `i + p`, directly below
/// the box `(i - 1, p + 1)`. Diagonals run in the `\` direction and are
/// labeled `l, ..., 1` from left to right: position `p` in any row is on
/// diagonal `l - p`.
///
/// `signed` marks membership in the signed family, where a row minimum
/// may be primed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedMultisetTableau {
    rows: Vec<Vec<Vec<Entry>>>,
    signed: bool,
}

impl ShiftedMultisetTableau {
    pub fn new(rows: Vec<Vec<Vec<Entry>>>, signed: bool) -> Result<Self, TableauError> {
        let t = Self::from_rows_unchecked(rows, signed);
        t.validate()?;
        Ok(t)
    }

    /// Sorts each box but checks nothing else.
    pub fn from_rows_unchecked(mut rows: Vec<Vec<Vec<Entry>>>, signed: bool) -> Self {
        for b in rows.iter_mut().flatten() {
            b.sort_unstable();
        }
        ShiftedMultisetTableau { rows, signed }
    }

    /// Every box in row `i` equal to `{i}` (unprimed).
    pub fn row_filled(shape: &StrictPartition) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![vec![Entry::unprimed(i as u32 + 1)]; len as usize])
            .collect();
        ShiftedMultisetTableau {
            rows,
            signed: false,
        }
    }

    pub fn rows(&self) -> &[Vec<Vec<Entry>>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Vec<Entry>>> {
        self.rows
    }

    pub fn signed(&self) -> bool {
        self.signed
    }

    /// The same boxes viewed as a member of the signed or unsigned family.
    pub fn with_signed(mut self, signed: bool) -> Self {
        self.signed = signed;
        self
    }

    pub fn get(&self, row: usize, pos: usize) -> Option<&[Entry]> {
        self.rows
            .get(row)
            .and_then(|r| r.get(pos))
            .map(Vec::as_slice)
    }

    pub fn row_lengths(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    pub fn shape(&self) -> StrictPartition {
        StrictPartition::new(self.row_lengths()).unwrap_or_default()
    }

    pub fn ell(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn entry_count(&self) -> usize {
        self.rows.iter().flatten().map(Vec::len).sum()
    }

    pub fn validate(&self) -> Result<(), TableauError> {
        let lens = self.row_lengths();
        if lens.contains(&0) || lens.windows(2).any(|w| w[0] <= w[1]) {
            return Err(TableauError::NotPartitionShape(lens));
        }
        for (i, row) in self.rows.iter().enumerate() {
            for (p, b) in row.iter().enumerate() {
                let (Some(&lo), Some(&hi)) = (b.first(), b.last()) else {
                    return Err(TableauError::EmptyBox { row: i, pos: p });
                };
                if b.windows(2).any(|w| w[0] == w[1] && w[0].primed) {
                    return Err(TableauError::RepeatedPrime { row: i, pos: p });
                }
                if let Some(right) = row.get(p + 1) {
                    if !hi.lt_u(right[0]) {
                        return Err(TableauError::RowViolation { row: i, pos: p });
                    }
                }
                if p > 0 {
                    if let Some(below) = self.get(i + 1, p - 1) {
                        if !lo.lt_p(below[0]) {
                            return Err(TableauError::ColumnViolation { row: i, pos: p });
                        }
                    }
                }
            }
            if !self.signed && row[0][0].primed {
                return Err(TableauError::PrimedRowMinimum { row: i });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// `w_i` counts both `i` and `i'`; trailing zeros dropped.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = Vec::new();
        for e in self.rows.iter().flatten().flatten() {
            let v = e.value as usize;
            if w.len() < v {
                w.resize(v, 0);
            }
            w[v - 1] += 1;
        }
        w
    }

    /// `T_j` = entries on diagonal `j` minus boxes on it, for `j = 1..l`.
    pub fn diagonal_weight(&self) -> Vec<u32> {
        let l = self.ell();
        let mut dw = vec![0; l];
        for row in &self.rows {
            for (p, b) in row.iter().enumerate() {
                if p < l {
                    dw[l - 1 - p] += b.len() as u32 - 1;
                }
            }
        }
        dw
    }

    /// A shifted semistandard tableau (signed or not per the flag): every
    /// box a singleton.
    pub fn is_semistandard(&self) -> bool {
        self.is_valid() && self.rows.iter().flatten().all(|b| b.len() == 1)
    }

    /// Unprimes the smallest entry of each row.
    pub fn strip_signs(&self) -> ShiftedMultisetTableau {
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            if let Some(first) = row.first_mut() {
                if first[0].primed {
                    first[0].primed = false;
                    first.sort_unstable();
                }
            }
        }
        ShiftedMultisetTableau {
            rows,
            signed: false,
        }
    }

    /// All `2^m` signed tableaux with this unsigned representative.
    pub fn sign_variants(&self) -> Vec<ShiftedMultisetTableau> {
        let base = self.strip_signs();
        let m = base.rows.len();
        (0..1usize << m)
            .map(|mask| {
                let mut rows = base.rows.clone();
                for (i, row) in rows.iter_mut().enumerate() {
                    if mask >> i & 1 == 1 {
                        row[0][0].primed = true;
                        row[0].sort_unstable();
                    }
                }
                ShiftedMultisetTableau { rows, signed: true }
            })
            .collect()
    }

    pub(crate) fn label_size(&self, i: usize, j: usize) -> usize {
        let l = self.ell();
        if i == 0 || j == 0 || j > l {
            return 0;
        }
        self.get(i - 1, l - j).map_or(0, <[Entry]>::len)
    }

    /// An unsigned tableau whose row `i` holds only unprimed `i`s, with the
    /// partial sums `Σ_{j<=k} |d_(i+1)j| - |d_i(j-1)|` never positive.
    pub fn is_maximal(&self) -> bool {
        let rows_ok = self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .flatten()
                .all(|e| !e.primed && e.value as usize == i + 1)
        });
        !self.signed
            && self.is_valid()
            && rows_ok
            && super::partial_sums_bounded(self.rows.len(), self.ell(), 0, |i, j| {
                self.label_size(i, j)
            })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&".".repeat(i));
            let boxes: Vec<String> = row
                .iter()
                .map(|b| b.iter().map(Entry::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            out.push_str(&boxes.join("|"));
            out.push('\n');
        }
        out
    }

    /// Parses the text form without validating the tableau conditions.
    /// Row `i` must carry exactly `i` leading dots.
    pub fn parse_unchecked(text: &str, signed: bool) -> Result<Self, TableauError> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
            let body = line.trim_start_matches('.');
            let dots = line.len() - body.len();
            if dots != i {
                return Err(TableauError::Parse(format!(
                    "row {} has {} shift markers, expected {}",
                    i + 1,
                    dots,
                    i
                )));
            }
            rows.push(parse_boxes(body)?);
        }
        Ok(Self::from_rows_unchecked(rows, signed))
    }

    pub fn from_text(text: &str, signed: bool) -> Result<Self, TableauError> {
        let t = Self::parse_unchecked(text, signed)?;
        t.validate()?;
        Ok(t)
    }
}

impl fmt::Display for ShiftedMultisetTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for ShiftedMultisetTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.to_text().lines().map(str::to_string).collect();
        let tag = if self.signed { "SMT±" } else { "SMT" };
        write!(f, "{}[{}]", tag, rows.join(" / "))
    }
}
