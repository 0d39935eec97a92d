//! Single-column insertion and reverse insertion. Columns are listed top to
//! bottom and increase downward: strictly for the unshifted flavor, by
//! `<_p` for the shifted one.

use crate::tableaux::Entry;

use super::InsertionError;

/// Where an insertion landed: `Some((row, old))` when `old` was bumped from
/// `row`, `None` when the new entry goes below the last cell.
pub(crate) type Bump = Option<(usize, Entry)>;

/// Generic insertion: replaces the uppermost `â` with `rel(a, â)`.
pub(crate) fn insert_by(a: Entry, col: &mut Vec<Entry>, rel: fn(Entry, Entry) -> bool) -> Bump {
    match col.iter().position(|&c| rel(a, c)) {
        Some(r) => Some((r, std::mem::replace(&mut col[r], a))),
        None => {
            col.push(a);
            None
        }
    }
}

/// Generic reverse insertion: replaces the bottommost `ẑ` with `rel(z, ẑ)`.
pub(crate) fn reverse_insert_by(
    z: Entry,
    col: &mut [Entry],
    rel: fn(Entry, Entry) -> bool,
) -> Result<(usize, Entry), InsertionError> {
    match col.iter().rposition(|&c| rel(z, c)) {
        Some(r) => Ok((r, std::mem::replace(&mut col[r], z))),
        None => Err(InsertionError::NoReverseTarget(z)),
    }
}

pub(crate) fn leq(a: Entry, b: Entry) -> bool {
    a <= b
}

pub(crate) fn geq(a: Entry, b: Entry) -> bool {
    a >= b
}

pub(crate) fn lt_u(a: Entry, b: Entry) -> bool {
    a.lt_u(b)
}

pub(crate) fn gt_u(a: Entry, b: Entry) -> bool {
    a.gt_u(b)
}

fn lift(col: &[u32]) -> Vec<Entry> {
    col.iter().map(|&v| Entry::unprimed(v)).collect()
}

fn lower(col: &[Entry]) -> Vec<u32> {
    col.iter().map(|e| e.value).collect()
}

/// A column strictly increasing downward.
pub fn is_valid_column(col: &[u32]) -> bool {
    col.windows(2).all(|w| w[0] < w[1])
}

/// A shifted column: each entry `<_p` the one below it.
pub fn is_valid_shifted_column(col: &[Entry]) -> bool {
    col.windows(2).all(|w| w[0].lt_p(w[1]))
}

/// Dual RSK insertion of `a`: the uppermost entry `â >= a` is replaced and
/// bumped; if there is none, `a` is appended at the bottom.
pub fn column_insert(a: u32, col: &[u32]) -> (Vec<u32>, Option<u32>) {
    let mut c = lift(col);
    let bump = insert_by(Entry::unprimed(a), &mut c, leq);
    (lower(&c), bump.map(|(_, e)| e.value))
}

/// Reverse of [`column_insert`]: the bottommost entry `ẑ <= z` is replaced
/// by `z` and bumped out. Fails when every entry exceeds `z`.
pub fn column_reverse_insert(col: &[u32], z: u32) -> Result<(u32, Vec<u32>), InsertionError> {
    let mut c = lift(col);
    let (_, e) = reverse_insert_by(Entry::unprimed(z), &mut c, geq)?;
    Ok((e.value, lower(&c)))
}

/// Shifted insertion: replaces the uppermost `â` with `a <_u â`.
pub fn shifted_insert(a: Entry, col: &[Entry]) -> (Vec<Entry>, Option<Entry>) {
    let mut c = col.to_vec();
    let bump = insert_by(a, &mut c, lt_u);
    (c, bump.map(|(_, e)| e))
}

/// Shifted reverse insertion: replaces the bottommost `ẑ` with `z >_u ẑ`.
pub fn shifted_reverse_insert(
    col: &[Entry],
    z: Entry,
) -> Result<(Entry, Vec<Entry>), InsertionError> {
    let mut c = col.to_vec();
    let (_, e) = reverse_insert_by(z, &mut c, gt_u)?;
    Ok((e, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn append_when_nothing_is_larger() {
        assert_eq!(column_insert(5, &[1, 2, 3]), (vec![1, 2, 3, 5], None));
    }

    #[test]
    fn bump_uppermost_weakly_larger() {
        assert_eq!(column_insert(2, &[2, 4]), (vec![2, 4], Some(2)));
        assert_eq!(column_insert(3, &[2, 4]), (vec![2, 3], Some(4)));
    }

    #[test]
    fn reverse_bumps_bottommost_weakly_smaller() {
        assert_eq!(
            column_reverse_insert(&[1, 2, 3], 5).unwrap(),
            (3, vec![1, 2, 5])
        );
        assert!(column_reverse_insert(&[2, 3], 1).is_err());
    }

    #[test]
    fn shifted_append_uses_primed_orders() {
        let col = vec![Entry::unprimed(3), Entry::primed(4)];
        let (out, bump) = shifted_insert(Entry::primed(5), &col);
        assert_eq!(bump, None);
        assert_eq!(
            out,
            vec![Entry::unprimed(3), Entry::primed(4), Entry::primed(5)]
        );
        assert!(is_valid_shifted_column(&out));
        // equal primed letters do not bump under <_u
        let (_, bump) = shifted_insert(Entry::primed(4), &col);
        assert_eq!(bump, None);
        let (_, bump) = shifted_insert(Entry::unprimed(3), &col);
        assert_eq!(bump, Some(Entry::unprimed(3)));
    }
}
