//! A mutable tableau shared by both flavors. Cells are addressed by
//! `(row, pos)` with `pos` counted from the start of the row; the shifted
//! flavor places `(row, pos)` in absolute column `row + pos`.

use crate::tableaux::{Entry, MultisetTableau, ShiftedMultisetTableau};

use super::column::{geq, gt_u, insert_by, leq, lt_u, reverse_insert_by};
use super::{InStep, InsertionError, OutStep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Grid {
    pub rows: Vec<Vec<Vec<Entry>>>,
    pub shifted: bool,
}

impl Grid {
    pub fn from_mt(t: &MultisetTableau) -> Self {
        let rows = t
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|b| b.iter().map(|&v| Entry::unprimed(v)).collect())
                    .collect()
            })
            .collect();
        Grid {
            rows,
            shifted: false,
        }
    }

    pub fn to_mt(&self) -> MultisetTableau {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|b| b.iter().map(|e| e.value).collect())
                    .collect()
            })
            .collect();
        MultisetTableau::from_rows_unchecked(rows)
    }

    pub fn from_smt(t: &ShiftedMultisetTableau) -> Self {
        Grid {
            rows: t.rows().to_vec(),
            shifted: true,
        }
    }

    pub fn to_smt(&self, signed: bool) -> ShiftedMultisetTableau {
        ShiftedMultisetTableau::from_rows_unchecked(self.rows.clone(), signed)
    }

    fn len(&self, row: usize) -> usize {
        self.rows.get(row).map_or(0, Vec::len)
    }

    fn offset(&self, row: usize) -> usize {
        if self.shifted {
            row
        } else {
            0
        }
    }

    pub fn abs_col(&self, row: usize, pos: usize) -> usize {
        pos + self.offset(row)
    }

    /// Position within `row` of absolute column `col`, if that cell exists.
    fn pos_in(&self, row: usize, col: usize) -> Option<usize> {
        col.checked_sub(self.offset(row))
            .filter(|&p| p < self.len(row))
    }

    /// Rows (top to bottom) with a cell in absolute column `col`.
    fn column_rows(&self, col: usize) -> Vec<usize> {
        (0..self.rows.len())
            .take_while(|&r| self.pos_in(r, col).is_some())
            .collect()
    }

    /// Row of the circled cell of diagonal `pk` lying in absolute column `col`.
    fn circled_row(&self, col: usize, pk: usize) -> Option<usize> {
        if !self.shifted {
            return None;
        }
        let r = col.checked_sub(pk)?;
        (self.len(r) > pk).then_some(r)
    }

    /// The part of column `col` above its circled cell, or the whole column.
    fn undercolumn(&self, col: usize, pk: usize) -> Vec<usize> {
        let rows = self.column_rows(col);
        match self.circled_row(col, pk) {
            Some(r) => rows.into_iter().filter(|&i| i < r).collect(),
            None => rows,
        }
    }

    fn singleton(&self, row: usize, pos: usize) -> Result<Entry, InsertionError> {
        match self.rows[row][pos].as_slice() {
            [e] => Ok(*e),
            _ => Err(InsertionError::NotSingleton { row, pos }),
        }
    }

    fn read_column(&self, rows: &[usize], col: usize) -> Result<Vec<Entry>, InsertionError> {
        rows.iter()
            .map(|&r| self.singleton(r, self.pos_in(r, col).expect("row has this column")))
            .collect()
    }

    fn check_column_k(&self, pk: usize) -> Result<(), InsertionError> {
        if self.rows.first().is_none_or(|r| r.len() <= pk) {
            return Err(InsertionError::NoSuchColumn(pk));
        }
        Ok(())
    }

    /// One application of `out` on column/diagonal `k` (`pk = l - k`).
    pub fn out_step(&mut self, pk: usize) -> Result<OutStep, InsertionError> {
        self.check_column_k(pk)?;
        let mut best: Option<(usize, Entry)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(b) = row.get(pk) {
                if b.len() >= 2 {
                    let top = *b.last().expect("nonempty");
                    // ties go to the lower box
                    if best.is_none_or(|(_, e)| top >= e) {
                        best = Some((i, top));
                    }
                }
            }
        }
        let (row, removed) = best.ok_or(InsertionError::NoNoncircled)?;
        self.rows[row][pk].pop();
        let ins = if self.shifted { lt_u } else { leq };
        let mut cur = removed;
        let mut col = self.abs_col(row, pk) + 1;
        let mut path = Vec::new();
        loop {
            let rows = self.undercolumn(col, pk);
            let mut entries = self.read_column(&rows, col)?;
            match insert_by(cur, &mut entries, ins) {
                Some((idx, old)) => {
                    let r = rows[idx];
                    let p = self.pos_in(r, col).expect("row has this column");
                    self.rows[r][p] = vec![cur];
                    path.push((r, p));
                    cur = old;
                    col += 1;
                }
                None => {
                    let r = rows.last().map_or(0, |&r| r + 1);
                    if self.circled_row(col, pk) == Some(r) {
                        return Err(InsertionError::AppendIntoCircled { col });
                    }
                    let p = col
                        .checked_sub(self.offset(r))
                        .filter(|&p| p == self.len(r))
                        .ok_or(InsertionError::AppendBlocked { col })?;
                    if r == self.rows.len() {
                        self.rows.push(Vec::new());
                    }
                    self.rows[r].push(vec![cur]);
                    path.push((r, p));
                    return Ok(OutStep {
                        removed,
                        from: (row, pk),
                        path,
                        appended: (r, p),
                    });
                }
            }
        }
    }

    /// Whether `(row, pos)` is a removable corner strictly right of `pk`.
    fn check_corner(&self, row: usize, pos: usize, pk: usize) -> Result<(), InsertionError> {
        let last = self.len(row).checked_sub(1) == Some(pos);
        let below_pos = if self.shifted {
            pos.checked_sub(1)
        } else {
            Some(pos)
        };
        let below = below_pos.is_some_and(|p| self.len(row + 1) > p);
        if !last || below || pos <= pk {
            return Err(InsertionError::NotCorner { row, pos });
        }
        Ok(())
    }

    fn remove_corner(
        &mut self,
        row: usize,
        pos: usize,
        pk: usize,
    ) -> Result<Entry, InsertionError> {
        self.check_corner(row, pos, pk)?;
        let e = self.singleton(row, pos)?;
        self.rows[row].pop();
        if self.rows[row].is_empty() && row + 1 == self.rows.len() {
            self.rows.pop();
        }
        Ok(e)
    }

    fn reverse_step(
        &mut self,
        cur: Entry,
        rows: &[usize],
        col: usize,
    ) -> Result<(Entry, (usize, usize)), InsertionError> {
        let rel = if self.shifted { gt_u } else { geq };
        let mut entries = self.read_column(rows, col)?;
        let (idx, old) = reverse_insert_by(cur, &mut entries, rel)?;
        let r = rows[idx];
        let p = self.pos_in(r, col).expect("row has this column");
        self.rows[r][p] = vec![cur];
        Ok((old, (r, p)))
    }

    /// Unshifted `in_b`: reverse-insert leftward until an entry leaves the
    /// column just right of column `k`, then deposit it into column `k`.
    pub fn in_step_unshifted(
        &mut self,
        b: (usize, usize),
        pk: usize,
    ) -> Result<InStep, InsertionError> {
        self.check_column_k(pk)?;
        let entry = self.remove_corner(b.0, b.1, pk)?;
        let mut cur = entry;
        let mut col = b.1;
        let mut path = Vec::new();
        while col > pk + 1 {
            col -= 1;
            let rows = self.column_rows(col);
            let (old, cell) = self.reverse_step(cur, &rows, col)?;
            path.push(cell);
            cur = old;
        }
        let k_rows = self.column_rows(pk);
        let r = *k_rows
            .iter()
            .rev()
            .find(|&&r| self.rows[r][pk][0] <= cur)
            .ok_or(InsertionError::DepositFailure(cur))?;
        if let Some(below) = self.rows.get(r + 1).and_then(|row| row.get(pk)) {
            if cur >= below[0] {
                return Err(InsertionError::DepositFailure(cur));
            }
        }
        let bx = &mut self.rows[r][pk];
        bx.push(cur);
        bx.sort();
        Ok(InStep {
            consumed: b,
            entry,
            path,
            deposited: cur,
            into: (r, pk),
        })
    }

    /// Shifted `in_b`: moving left, an entry `>_u` the circled entry of the
    /// next column joins that box; otherwise it is reverse-inserted into the
    /// undercolumn and the bumped entry continues.
    pub fn in_step_shifted(
        &mut self,
        b: (usize, usize),
        pk: usize,
    ) -> Result<InStep, InsertionError> {
        self.check_column_k(pk)?;
        let entry = self.remove_corner(b.0, b.1, pk)?;
        let mut cur = entry;
        let mut col = self.abs_col(b.0, b.1);
        let mut path = Vec::new();
        loop {
            col = col
                .checked_sub(1)
                .ok_or(InsertionError::NoReverseTarget(cur))?;
            if let Some(r) = self.circled_row(col, pk) {
                let circled = self.rows[r][pk][0];
                if cur.gt_u(circled) {
                    let bx = &mut self.rows[r][pk];
                    if cur.primed && bx.contains(&cur) {
                        return Err(InsertionError::PrimedDuplicate(cur));
                    }
                    bx.push(cur);
                    bx.sort();
                    return Ok(InStep {
                        consumed: b,
                        entry,
                        path,
                        deposited: cur,
                        into: (r, pk),
                    });
                }
            }
            let rows = self.undercolumn(col, pk);
            let (old, cell) = self.reverse_step(cur, &rows, col)?;
            path.push(cell);
            cur = old;
        }
    }

    pub fn in_step(&mut self, b: (usize, usize), pk: usize) -> Result<InStep, InsertionError> {
        if self.shifted {
            self.in_step_shifted(b, pk)
        } else {
            self.in_step_unshifted(b, pk)
        }
    }

    /// Whether every box in column/diagonal `pk` holds a single entry.
    pub fn column_is_single(&self, pk: usize) -> bool {
        self.rows
            .iter()
            .all(|r| r.get(pk).is_none_or(|b| b.len() == 1))
    }
}
