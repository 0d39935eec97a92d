//! Step-by-step records of `out` and `in_b` chains with a plain-text
//! rendering: a header line, the starting tableau, then one description
//! line and the resulting tableau per step, blocks separated by blank lines.
//! Cells are printed 1-based as `(row,pos)`.

use std::fmt::Write as _;

use crate::tableaux::{MultisetTableau, ShiftedMultisetTableau};

use super::grid::Grid;
use super::{position, InStep, InsertionError, OutStep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Out(OutStep),
    In(InStep),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub k: usize,
    pub ell: usize,
    pub shifted: bool,
    /// True for an `in_b` chain, false for an `out` chain.
    pub inverse: bool,
    /// Text of the tableau before the first step and after each step.
    pub states: Vec<String>,
    pub events: Vec<TraceEvent>,
}

/// A tableau of either flavor, as accepted by the trace drivers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyTableau {
    Unshifted(MultisetTableau),
    Shifted(ShiftedMultisetTableau),
}

impl AnyTableau {
    fn grid(&self) -> Grid {
        match self {
            AnyTableau::Unshifted(t) => Grid::from_mt(t),
            AnyTableau::Shifted(t) => Grid::from_smt(t),
        }
    }

    fn signed(&self) -> bool {
        matches!(self, AnyTableau::Shifted(t) if t.signed())
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyTableau::Unshifted(t) => t.to_text(),
            AnyTableau::Shifted(t) => t.to_text(),
        }
    }

    pub fn row_lengths(&self) -> Vec<u32> {
        match self {
            AnyTableau::Unshifted(t) => t.row_lengths(),
            AnyTableau::Shifted(t) => t.row_lengths(),
        }
    }
}

fn grid_text(g: &Grid, signed: bool) -> String {
    if g.shifted {
        g.to_smt(signed).to_text()
    } else {
        g.to_mt().to_text()
    }
}

fn cell((r, p): (usize, usize)) -> String {
    format!("({},{})", r + 1, p + 1)
}

fn cells(path: &[(usize, usize)]) -> String {
    if path.is_empty() {
        "-".to_string()
    } else {
        path.iter().map(|&c| cell(c)).collect::<Vec<_>>().join(" ")
    }
}

/// Applies `out` on column `k` until it holds singletons.
pub fn out_trace(t: &AnyTableau, k: usize, ell: usize) -> Result<Trace, InsertionError> {
    let pk = position(k, ell)?;
    let mut g = t.grid();
    let mut trace = Trace {
        k,
        ell,
        shifted: g.shifted,
        inverse: false,
        states: vec![t.to_text()],
        events: Vec::new(),
    };
    while !g.column_is_single(pk) {
        let step = g.out_step(pk)?;
        trace.states.push(grid_text(&g, t.signed()));
        trace.events.push(TraceEvent::Out(step));
    }
    Ok(trace)
}

/// Applies `in_b` on column `k` to every cell outside `target`, rightmost
/// cell first, until the shape is `target`.
pub fn in_trace(
    t: &AnyTableau,
    k: usize,
    ell: usize,
    target: &[u32],
) -> Result<Trace, InsertionError> {
    let pk = position(k, ell)?;
    let lens = t.row_lengths();
    if target.len() > lens.len() || target.iter().zip(&lens).any(|(a, b)| a > b) {
        return Err(InsertionError::ShapeMismatch(format!(
            "{:?} is not inside {:?}",
            target, lens
        )));
    }
    let mut g = t.grid();
    let mut strip: Vec<(usize, usize)> = lens
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| {
            let keep = target.get(i).copied().unwrap_or(0);
            (keep..l).map(move |p| (i, p as usize))
        })
        .collect();
    strip.sort_by_key(|&(r, p)| std::cmp::Reverse(g.abs_col(r, p)));
    let mut trace = Trace {
        k,
        ell,
        shifted: g.shifted,
        inverse: true,
        states: vec![t.to_text()],
        events: Vec::new(),
    };
    for b in strip {
        let step = g.in_step(b, pk)?;
        trace.states.push(grid_text(&g, t.signed()));
        trace.events.push(TraceEvent::In(step));
    }
    Ok(trace)
}

impl Trace {
    pub fn final_text(&self) -> &str {
        self.states.last().expect("a trace starts with a state")
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let flavor = if self.shifted { "shifted" } else { "unshifted" };
        let verb = if self.inverse { "in" } else { "out" };
        let _ = writeln!(s, "# {} {} k={} l={}", flavor, verb, self.k, self.ell);
        s.push_str(&self.states[0]);
        for (n, (ev, state)) in self.events.iter().zip(&self.states[1..]).enumerate() {
            s.push('\n');
            let _ = match ev {
                TraceEvent::Out(o) => writeln!(
                    s,
                    "step {}: remove {} from {}; path {}; new cell {}",
                    n + 1,
                    o.removed,
                    cell(o.from),
                    cells(&o.path),
                    cell(o.appended)
                ),
                TraceEvent::In(i) => writeln!(
                    s,
                    "step {}: take {} from {}; path {}; add {} to {}",
                    n + 1,
                    i.entry,
                    cell(i.consumed),
                    cells(&i.path),
                    i.deposited,
                    cell(i.into)
                ),
            };
            s.push_str(state);
        }
        s
    }
}
