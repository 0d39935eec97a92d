//! Column insertion on multiset tableaux and the maps built from it: the
//! single steps `out` and `in_b`, and the bijections
//! `Ψ: MT(μ) → ⋃ SSYT(λ) × RT(λ/μ)` and
//! `Φ: SMT±(μ) → ⋃ SST±(λ) × SRT(λ)`.
//!
//! Columns are labeled `l, ..., 1` from left to right with `l = μ_1`, so
//! column `k` sits at position `l - k` in every row.

mod bijection;
mod column;
mod grid;
mod trace;

pub use bijection::{phi, phi_inverse, phi_k, phi_unsigned, psi, psi_inverse, psi_k};
pub use column::{
    column_insert, column_reverse_insert, is_valid_column, is_valid_shifted_column, shifted_insert,
    shifted_reverse_insert,
};
pub use trace::{in_trace, out_trace, AnyTableau, Trace, TraceEvent};

use thiserror::Error;

use crate::tableaux::{Entry, MultisetTableau, ShiftedMultisetTableau, TableauError};

use grid::Grid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertionError {
    #[error("column {k} is not a column label in 1..={ell}")]
    BadColumn { k: usize, ell: usize },
    #[error("no cells at position {}", .0 + 1)]
    NoSuchColumn(usize),
    #[error("every box of the column already holds a single entry")]
    NoNoncircled,
    #[error("cell at row {}, position {} is not a removable corner right of the column", row + 1, pos + 1)]
    NotCorner { row: usize, pos: usize },
    #[error("box at row {}, position {} holds more than one entry", row + 1, pos + 1)]
    NotSingleton { row: usize, pos: usize },
    #[error("nothing in the column can be bumped by {0}")]
    NoReverseTarget(Entry),
    #[error("{0} cannot be placed in the column")]
    DepositFailure(Entry),
    #[error("primed {0} is already in the box")]
    PrimedDuplicate(Entry),
    #[error("append into column {col} would land on a circled box")]
    AppendIntoCircled { col: usize },
    #[error("append into column {col} does not extend a row")]
    AppendBlocked { col: usize },
    #[error("shapes do not fit: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// Record of one `out` step. Cells are `(row, pos)`, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutStep {
    pub removed: Entry,
    pub from: (usize, usize),
    /// Cells written by the insertion chain, ending with the new cell.
    pub path: Vec<(usize, usize)>,
    pub appended: (usize, usize),
}

/// Record of one `in_b` step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InStep {
    pub consumed: (usize, usize),
    pub entry: Entry,
    /// Cells rewritten by reverse insertion, right to left.
    pub path: Vec<(usize, usize)>,
    pub deposited: Entry,
    pub into: (usize, usize),
}

fn position(k: usize, ell: usize) -> Result<usize, InsertionError> {
    if k == 0 || k > ell {
        return Err(InsertionError::BadColumn { k, ell });
    }
    Ok(ell - k)
}

/// One `out` step on column `k` of an unshifted tableau with `l = ell`.
pub fn out_mt(
    t: &MultisetTableau,
    k: usize,
    ell: usize,
) -> Result<(MultisetTableau, OutStep), InsertionError> {
    let mut g = Grid::from_mt(t);
    let step = g.out_step(position(k, ell)?)?;
    Ok((g.to_mt(), step))
}

/// One `in_b` step on column `k`, consuming the corner `b`.
pub fn in_mt(
    t: &MultisetTableau,
    k: usize,
    ell: usize,
    b: (usize, usize),
) -> Result<(MultisetTableau, InStep), InsertionError> {
    let mut g = Grid::from_mt(t);
    let step = g.in_step(b, position(k, ell)?)?;
    Ok((g.to_mt(), step))
}

/// One `out` step on diagonal `k` of a shifted tableau.
pub fn out_smt(
    t: &ShiftedMultisetTableau,
    k: usize,
    ell: usize,
) -> Result<(ShiftedMultisetTableau, OutStep), InsertionError> {
    let mut g = Grid::from_smt(t);
    let step = g.out_step(position(k, ell)?)?;
    Ok((g.to_smt(t.signed()), step))
}

pub fn in_smt(
    t: &ShiftedMultisetTableau,
    k: usize,
    ell: usize,
    b: (usize, usize),
) -> Result<(ShiftedMultisetTableau, InStep), InsertionError> {
    let mut g = Grid::from_smt(t);
    let step = g.in_step(b, position(k, ell)?)?;
    Ok((g.to_smt(t.signed()), step))
}
