use std::fmt;

use crate::partitions::{Partition, StrictPartition};

use super::TableauError;

/// A filling of the skew shape `outer / inner` with one positive integer per
/// cell. `rows[i]` lists the entries of row `i` from column `inner_i` to
/// column `outer_i - 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewFilling {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

impl SkewFilling {
    pub fn new(
        outer: Partition,
        inner: Partition,
        rows: Vec<Vec<u32>>,
    ) -> Result<Self, TableauError> {
        if !outer.contains(&inner) {
            return Err(TableauError::ShapeMismatch(format!(
                "{} does not contain {}",
                outer, inner
            )));
        }
        let mut rows = rows;
        while rows.len() < outer.len() {
            rows.push(Vec::new());
        }
        if rows.len() > outer.len() && rows[outer.len()..].iter().any(|r| !r.is_empty()) {
            return Err(TableauError::ShapeMismatch("extra nonempty rows".into()));
        }
        rows.truncate(outer.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() as u32 != outer.part(i) - inner.part(i) {
                return Err(TableauError::ShapeMismatch(format!(
                    "row {} has {} entries, shape needs {}",
                    i + 1,
                    r.len(),
                    outer.part(i) - inner.part(i)
                )));
            }
        }
        Ok(SkewFilling { outer, inner, rows })
    }

    /// The empty filling of `shape / shape`.
    pub fn empty(shape: Partition) -> Self {
        let rows = vec![Vec::new(); shape.len()];
        SkewFilling {
            outer: shape.clone(),
            inner: shape,
            rows,
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry at row `i`, absolute column `c`, if that cell is in the skew shape.
    pub fn at(&self, i: usize, c: usize) -> Option<u32> {
        let start = self.inner.part(i) as usize;
        c.checked_sub(start)
            .and_then(|k| self.rows.get(i).and_then(|r| r.get(k)))
            .copied()
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..self.rows.len()).all(|i| {
            let start = self.inner.part(i) as usize;
            (0..self.rows[i].len()).all(|k| {
                let c = start + k;
                // a cell of the inner shape above imposes no condition
                self.at(i - 1, c)
                    .is_none_or(|above| above < self.rows[i][k])
            })
        });
        rows_ok && cols_ok
    }

    /// `w_j` = number of entries equal to `j`, for `j = 1..len`.
    pub fn weight(&self, len: usize) -> Vec<u32> {
        let mut w = vec![0; len];
        for &v in self.rows.iter().flatten() {
            if (v as usize) <= len && v > 0 {
                w[v as usize - 1] += 1;
            }
        }
        w
    }

    fn restricted(&self, heights: &[usize]) -> bool {
        let ell = heights.len() as u32;
        self.is_semistandard()
            && self.rows.iter().enumerate().all(|(i, r)| {
                r.iter()
                    .all(|&v| v >= 1 && v <= ell && i < heights[v as usize - 1])
            })
    }

    /// A restricted tableau of shape `λ/μ`: semistandard, alphabet
    /// `1..l` with `l = μ_1`, and every entry `j` on or above row `c_j`.
    pub fn is_restricted(&self, mu: &Partition) -> bool {
        &self.inner == mu && self.restricted(&mu.column_heights())
    }

    /// A shifted restricted tableau for the strict partition `μ`: inner
    /// shape `μ - δ`, at most `m` rows, restriction as for [`Self::is_restricted`]
    /// with the column heights of `μ`.
    pub fn is_shifted_restricted(&self, mu: &StrictPartition) -> bool {
        let m = mu.len();
        self.inner == shift_down(mu)
            && self.outer.len() <= m
            && self.restricted(&mu.as_partition().column_heights())
    }

    /// For a shifted restricted tableau, the strict partition `λ = outer + δ`.
    pub fn shifted_outer(&self, m: usize) -> Option<StrictPartition> {
        let parts: Vec<u32> = (0..m)
            .map(|i| self.outer.part(i) + (m - 1 - i) as u32)
            .collect();
        StrictPartition::new(parts).ok()
    }
}

/// `μ - δ` for a strict partition with `m` parts, `δ = (m-1, ..., 0)`.
pub fn shift_down(mu: &StrictPartition) -> Partition {
    let m = mu.len();
    Partition::new(
        mu.parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p - (m - 1 - i) as u32)
            .collect(),
    )
    .expect("a strict partition minus the staircase is a partition")
}

impl fmt::Display for SkewFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            let mut cells: Vec<String> = vec![".".to_string(); self.inner.part(i) as usize];
            cells.extend(r.iter().map(u32::to_string));
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkewFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewFilling{}/{}{:?}", self.outer, self.inner, self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn restricted_example() {
        let mu = p(&[4, 3, 3, 2]);
        let r = SkewFilling::new(
            p(&[7, 6, 5, 4]),
            mu.clone(),
            vec![vec![1, 2, 3], vec![2, 2, 4], vec![3, 3], vec![3, 4]],
        )
        .unwrap();
        assert!(r.is_restricted(&mu));
        assert_eq!(r.weight(4), vec![1, 3, 4, 2]);
        // a 1 below row c_1 = 1 is not allowed
        let bad = SkewFilling::new(
            p(&[7, 6, 5, 4]),
            mu.clone(),
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![3, 3], vec![3, 4]],
        )
        .unwrap();
        assert!(!bad.is_restricted(&mu));
    }

    #[test]
    fn shifted_restricted_example() {
        let mu = StrictPartition::new(vec![7, 5, 4, 2]).unwrap();
        assert_eq!(shift_down(&mu), p(&[4, 3, 3, 2]));
        let r = SkewFilling::new(
            p(&[7, 6, 5, 4]),
            shift_down(&mu),
            vec![vec![2, 3, 5], vec![3, 3, 6], vec![4, 7], vec![6, 7]],
        )
        .unwrap();
        assert!(r.is_shifted_restricted(&mu));
        assert_eq!(r.weight(7), vec![0, 1, 3, 1, 1, 2, 2]);
        assert_eq!(r.shifted_outer(4).unwrap().parts(), &[10, 8, 6, 4]);
    }

    #[test]
    fn column_strictness_is_checked() {
        let r = SkewFilling::new(p(&[2, 2]), p(&[1]), vec![vec![2], vec![1, 2]]).unwrap();
        assert!(!r.is_semistandard());
        let r = SkewFilling::new(p(&[2, 2]), p(&[1]), vec![vec![1], vec![1, 2]]).unwrap();
        assert!(r.is_semistandard());
    }

    #[test]
    fn shape_must_match() {
        assert!(SkewFilling::new(p(&[2]), p(&[1]), vec![vec![1, 1]]).is_err());
        assert!(SkewFilling::new(p(&[1]), p(&[2]), vec![]).is_err());
    }
}
