use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::TableauError;

/// A letter of the primed alphabet `1' < 1 < 2' < 2 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Entry {
    pub value: u32,
    pub primed: bool,
}

impl Entry {
    pub fn new(value: u32, primed: bool) -> Self {
        Entry { value, primed }
    }

    pub fn unprimed(value: u32) -> Self {
        Entry::new(value, false)
    }

    pub fn primed(value: u32) -> Self {
        Entry::new(value, true)
    }

    /// Position in the total order: `1' -> 1, 1 -> 2, 2' -> 3, ...`.
    pub fn key(self) -> u32 {
        2 * self.value - u32::from(self.primed)
    }

    pub fn from_key(key: u32) -> Self {
        Entry::new(key.div_ceil(2), key % 2 == 1)
    }

    /// `a <_u z`: `a < z`, or equal and both unprimed.
    pub fn lt_u(self, z: Entry) -> bool {
        self < z || (self == z && !self.primed)
    }

    /// `a <_p z`: `a < z`, or equal and both primed.
    pub fn lt_p(self, z: Entry) -> bool {
        self < z || (self == z && self.primed)
    }

    pub fn gt_u(self, z: Entry) -> bool {
        z.lt_u(self)
    }

    pub fn gt_p(self, z: Entry) -> bool {
        z.lt_p(self)
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Entry {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        match digits.parse::<u32>() {
            Ok(v) if v > 0 => Ok(Entry::new(v, primed)),
            _ => Err(TableauError::Parse(format!("bad entry {:?}", s))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primed_order() {
        let seq: Vec<Entry> = ["1'", "1", "2'", "2", "3'"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert!(seq.windows(2).all(|w| w[0] < w[1]));
        for (k, e) in seq.iter().enumerate() {
            assert_eq!(Entry::from_key(k as u32 + 1), *e);
        }
    }

    #[test]
    fn relative_orders() {
        let (one, one_p, two) = (Entry::unprimed(1), Entry::primed(1), Entry::unprimed(2));
        assert!(one.lt_u(one) && !one.lt_p(one));
        assert!(one_p.lt_p(one_p) && !one_p.lt_u(one_p));
        assert!(one.lt_u(two) && one.lt_p(two));
        assert!(two.gt_u(one) && two.gt_p(one_p));
        assert!(!one.lt_u(one_p));
    }

    #[test]
    fn text_round_trip() {
        for s in ["4'", "12", "1"] {
            assert_eq!(s.parse::<Entry>().unwrap().to_string(), s);
        }
        assert!("0".parse::<Entry>().is_err());
        assert!("x'".parse::<Entry>().is_err());
    }
}
