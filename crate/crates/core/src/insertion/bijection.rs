use std::collections::BTreeMap;

use crate::partitions::Partition;
use crate::tableaux::{MultisetTableau, ShiftedMultisetTableau, SkewFilling};

use super::grid::Grid;
use super::{position, InsertionError};

/// Runs `out` on position `pk` until every box there is a singleton and
/// returns the appended cells in order.
fn drain(g: &mut Grid, pk: usize) -> Result<Vec<(usize, usize)>, InsertionError> {
    let mut cells = Vec::new();
    while !g.column_is_single(pk) {
        cells.push(g.out_step(pk)?.appended);
    }
    Ok(cells)
}

/// Applies the stages `k = 1..l` and labels each appended cell by its stage.
fn forward(g: &mut Grid, ell: usize) -> Result<BTreeMap<(usize, usize), u32>, InsertionError> {
    let mut labels = BTreeMap::new();
    for k in 1..=ell {
        for cell in drain(g, ell - k)? {
            labels.insert(cell, k as u32);
        }
    }
    Ok(labels)
}

/// Undoes [`forward`]: for `k = l..1`, strips the cells labeled `k` from the
/// rightmost one leftward. `cells` holds `(row, pos, label)`.
fn backward(g: &mut Grid, ell: usize, cells: &[(usize, usize, u32)]) -> Result<(), InsertionError> {
    for k in (1..=ell as u32).rev() {
        let mut strip: Vec<(usize, usize)> = cells
            .iter()
            .filter(|c| c.2 == k)
            .map(|&(r, p, _)| (r, p))
            .collect();
        strip.sort_by_key(|&(r, p)| std::cmp::Reverse(g.abs_col(r, p)));
        for b in strip {
            g.in_step(b, ell - k as usize)?;
        }
    }
    Ok(())
}

fn shape_error(what: &str) -> InsertionError {
    InsertionError::ShapeMismatch(what.to_string())
}

/// `Ψ_k`: applies `out` on column `k` until that column holds singletons.
pub fn psi_k(
    t: &MultisetTableau,
    k: usize,
    ell: usize,
) -> Result<(MultisetTableau, Vec<(usize, usize)>), InsertionError> {
    let mut g = Grid::from_mt(t);
    let cells = drain(&mut g, position(k, ell)?)?;
    Ok((g.to_mt(), cells))
}

/// `Ψ(T) = (Q, R)` with `Q` semistandard of shape `λ` and `R` a restricted
/// tableau of shape `λ/μ`.
pub fn psi(t: &MultisetTableau) -> Result<(MultisetTableau, SkewFilling), InsertionError> {
    t.validate()?;
    let mu = t.shape();
    let ell = t.ell();
    let mut g = Grid::from_mt(t);
    let labels = forward(&mut g, ell)?;
    let q = g.to_mt();
    let rows: Vec<Vec<u32>> = q
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            (mu.part(i) as usize..r.len())
                .map(|p| labels[&(i, p)])
                .collect()
        })
        .collect();
    let r = SkewFilling::new(q.shape(), mu, rows)?;
    Ok((q, r))
}

/// `Ψ⁻¹(Q, R)`; `μ` is the inner shape of `R`.
pub fn psi_inverse(
    q: &MultisetTableau,
    r: &SkewFilling,
) -> Result<MultisetTableau, InsertionError> {
    q.validate()?;
    if !q.is_ssyt() {
        return Err(shape_error("first component is not semistandard"));
    }
    if &q.shape() != r.outer() {
        return Err(shape_error("tableau shape differs from the outer shape"));
    }
    let mu = r.inner().clone();
    if !r.is_restricted(&mu) {
        return Err(shape_error("second component is not restricted"));
    }
    let cells: Vec<(usize, usize, u32)> = r
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            let start = mu.part(i) as usize;
            row.iter().enumerate().map(move |(j, &v)| (i, start + j, v))
        })
        .collect();
    let mut g = Grid::from_mt(q);
    backward(&mut g, mu.largest() as usize, &cells)?;
    let t = g.to_mt();
    t.validate()?;
    Ok(t)
}

/// `Φ_k`: applies shifted `out` on diagonal `k` until it holds singletons.
pub fn phi_k(
    t: &ShiftedMultisetTableau,
    k: usize,
    ell: usize,
) -> Result<(ShiftedMultisetTableau, Vec<(usize, usize)>), InsertionError> {
    let mut g = Grid::from_smt(t);
    let cells = drain(&mut g, position(k, ell)?)?;
    Ok((g.to_smt(t.signed()), cells))
}

/// `Φ(T) = (Q, R)` with `Q` a shifted semistandard tableau of shape `λ` and
/// `R` a shifted restricted tableau of shape `(λ - δ) / (μ - δ)`. Cell
/// `(i, p)` of the shifted diagram is column `p - (m - 1 - i)` of `R`.
pub fn phi(
    t: &ShiftedMultisetTableau,
) -> Result<(ShiftedMultisetTableau, SkewFilling), InsertionError> {
    t.validate()?;
    let mu = t.shape();
    let m = mu.len();
    let ell = t.ell();
    let mut g = Grid::from_smt(t);
    let labels = forward(&mut g, ell)?;
    let q = g.to_smt(t.signed());
    if q.rows().len() != m {
        return Err(shape_error("rows were added below the original shape"));
    }
    let rows: Vec<Vec<u32>> = q
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            (mu.parts()[i] as usize..r.len())
                .map(|p| labels[&(i, p)])
                .collect()
        })
        .collect();
    let delta = |i: usize| (m - 1 - i) as u32;
    let outer: Vec<u32> = q
        .row_lengths()
        .iter()
        .enumerate()
        .map(|(i, &l)| l - delta(i))
        .collect();
    let outer = Partition::new(outer).map_err(|e| shape_error(&e.to_string()))?;
    let r = SkewFilling::new(outer, crate::tableaux::shift_down(&mu), rows)?;
    Ok((q, r))
}

/// `Φ⁻¹(Q, R)`; `μ` is recovered from the inner shape `μ - δ` of `R`.
pub fn phi_inverse(
    q: &ShiftedMultisetTableau,
    r: &SkewFilling,
) -> Result<ShiftedMultisetTableau, InsertionError> {
    q.validate()?;
    if !q.is_semistandard() {
        return Err(shape_error("first component is not semistandard"));
    }
    let inner = r.inner();
    let m = inner.len();
    let mu = crate::partitions::StrictPartition::new(
        (0..m).map(|i| inner.part(i) + (m - 1 - i) as u32).collect(),
    )
    .map_err(|e| shape_error(&e.to_string()))?;
    if !r.is_shifted_restricted(&mu) {
        return Err(shape_error("second component is not shifted restricted"));
    }
    let lambda = r
        .shifted_outer(m)
        .ok_or_else(|| shape_error("outer shape is not strict"))?;
    if q.shape() != lambda {
        return Err(shape_error("tableau shape differs from the outer shape"));
    }
    let cells: Vec<(usize, usize, u32)> = r
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            let start = inner.part(i) as usize + (m - 1 - i);
            row.iter().enumerate().map(move |(j, &v)| (i, start + j, v))
        })
        .collect();
    let mut g = Grid::from_smt(q);
    backward(&mut g, mu.largest() as usize, &cells)?;
    let t = g.to_smt(q.signed());
    t.validate()?;
    Ok(t)
}

/// `Φ` restricted to unsigned tableaux; the first component is unsigned.
pub fn phi_unsigned(
    t: &ShiftedMultisetTableau,
) -> Result<(ShiftedMultisetTableau, SkewFilling), InsertionError> {
    if t.signed() {
        return Err(shape_error("expected an unsigned tableau"));
    }
    let (q, r) = phi(t)?;
    q.validate()?;
    Ok((q, r))
}
