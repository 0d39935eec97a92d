use std::cmp::Ordering;
use std::fmt;

/// A monomial `x^a t^b` with separate exponent blocks for the x-variables
/// and the t-variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: Vec<u32>,
    t: Vec<u32>,
}

impl Monomial {
    pub fn new(x: Vec<u32>, t: Vec<u32>) -> Self {
        Monomial { x, t }
    }

    pub fn one(nx: usize, nt: usize) -> Self {
        Monomial {
            x: vec![0; nx],
            t: vec![0; nt],
        }
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }

    pub fn nx(&self) -> usize {
        self.x.len()
    }

    pub fn nt(&self) -> usize {
        self.t.len()
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn t_degree(&self) -> u32 {
        self.t.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.x.iter().chain(&self.t).all(|&e| e == 0)
    }

    /// Product of two monomials over the same variable blocks.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nx(), other.nx());
        debug_assert_eq!(self.nt(), other.nt());
        Monomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            t: self.t.iter().zip(&other.t).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other` when every exponent of `other` is dominated.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let sub = |a: &[u32], b: &[u32]| -> Option<Vec<u32>> {
            a.iter().zip(b).map(|(p, q)| p.checked_sub(*q)).collect()
        };
        Some(Monomial {
            x: sub(&self.x, &other.x)?,
            t: sub(&self.t, &other.t)?,
        })
    }

    /// Relabels x-variables: the exponent of `x_i` moves to `x_{sigma[i]}`.
    pub(crate) fn permute_x(&self, sigma: &[usize]) -> Monomial {
        let mut x = vec![0; self.x.len()];
        for (i, &e) in self.x.iter().enumerate() {
            x[sigma[i]] = e;
        }
        Monomial {
            x,
            t: self.t.clone(),
        }
    }

    pub(crate) fn with_x(&self, x: Vec<u32>) -> Monomial {
        Monomial {
            x,
            t: self.t.clone(),
        }
    }

    pub(crate) fn x_only(&self) -> Monomial {
        Monomial {
            x: self.x.clone(),
            t: Vec::new(),
        }
    }

    pub(crate) fn t_only(&self) -> Monomial {
        Monomial {
            x: Vec::new(),
            t: self.t.clone(),
        }
    }
}

// Graded lexicographic, x-block compared before the t-block.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x_degree()
            .cmp(&other.x_degree())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.t_degree().cmp(&other.t_degree()))
            .then_with(|| self.t.cmp(&other.t))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}t{:?}", self.x, self.t)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (name, block) in [("x", &self.x), ("t", &self.t)] {
            for (i, &e) in block.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("{}{}", name, i + 1)),
                    _ => factors.push(format!("{}{}^{}", name, i + 1, e)),
                }
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}
