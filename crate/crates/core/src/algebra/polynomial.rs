use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Monomial};

/// Sparse polynomial over the integers in `nx` x-variables and `nt`
/// t-variables. Zero coefficients are never stored, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nx: usize,
    nt: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nx: usize, nt: usize) -> Self {
        Polynomial {
            nx,
            nt,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nx: usize, nt: usize) -> Self {
        Self::constant(nx, nt, BigInt::one())
    }

    pub fn constant(nx: usize, nt: usize, c: BigInt) -> Self {
        Self::from_monomial(Monomial::one(nx, nt), c)
    }

    pub fn from_monomial(m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero(m.nx(), m.nt());
        p.add_term(m, c);
        p
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn x_var(nx: usize, nt: usize, i: usize) -> Self {
        let mut x = vec![0; nx];
        x[i] = 1;
        Self::from_monomial(Monomial::new(x, vec![0; nt]), BigInt::one())
    }

    /// The variable `t_{j+1}` (0-based index).
    pub fn t_var(nx: usize, nt: usize, j: usize) -> Self {
        let mut t = vec![0; nt];
        t[j] = 1;
        Self::from_monomial(Monomial::new(vec![0; nx], t), BigInt::one())
    }

    pub fn x_power(nt: usize, exps: &[u32]) -> Self {
        Self::from_monomial(Monomial::new(exps.to_vec(), vec![0; nt]), BigInt::one())
    }

    /// Builds a polynomial from terms, combining duplicates.
    pub fn from_terms<I>(nx: usize, nt: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Self::zero(nx, nt);
        for (m, c) in terms {
            if m.nx() != nx || m.nt() != nt {
                return Err(AlgebraError::ShapeMismatch {
                    left: (nx, nt),
                    right: (m.nx(), m.nt()),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::x_degree).max()
    }

    pub fn max_t_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::t_degree).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.nx != other.nx || self.nt != other.nt {
            return Err(AlgebraError::ShapeMismatch {
                left: (self.nx, self.nt),
                right: (other.nx, other.nt),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.mul_filtered(other, |_| true)
    }

    /// Product keeping only the monomials accepted by `keep`. Used by the
    /// truncated series, where `keep` encodes the degree caps.
    pub(crate) fn mul_filtered<F>(
        &self,
        other: &Polynomial,
        keep: F,
    ) -> Result<Polynomial, AlgebraError>
    where
        F: Fn(&Monomial) -> bool,
    {
        self.check_same(other)?;
        let mut out = Polynomial::zero(self.nx, self.nt);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if keep(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nx, self.nt);
        }
        Polynomial {
            nx: self.nx,
            nt: self.nt,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nx, self.nt);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Keeps only terms with x-degree at most `x_cap` and t-degree at most `t_cap`.
    pub fn truncate(&self, x_cap: u32, t_cap: u32) -> Polynomial {
        self.filter(|m| m.x_degree() <= x_cap && m.t_degree() <= t_cap)
    }

    pub(crate) fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Polynomial {
        Polynomial {
            nx: self.nx,
            nt: self.nt,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of x-degree `d`.
    pub fn x_slice(&self, d: u32) -> Polynomial {
        self.filter(|m| m.x_degree() == d)
    }

    /// Relabels `x_i -> x_{sigma(i)}` with `sigma` in 0-based one-line notation.
    pub fn apply_permutation(&self, sigma: &[usize]) -> Result<Polynomial, AlgebraError> {
        if sigma.len() != self.nx || !is_permutation(sigma) {
            return Err(AlgebraError::BadPermutation {
                expected: self.nx,
                got: sigma.to_vec(),
            });
        }
        Ok(Polynomial {
            nx: self.nx,
            nt: self.nt,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permute_x(sigma), c.clone()))
                .collect(),
        })
    }

    /// Coefficient of `t^exps`, as a polynomial in the x-variables alone.
    pub fn t_coefficient(&self, exps: &[u32]) -> Result<Polynomial, AlgebraError> {
        if exps.len() != self.nt {
            return Err(AlgebraError::ShapeMismatch {
                left: (self.nx, self.nt),
                right: (self.nx, exps.len()),
            });
        }
        let mut out = Polynomial::zero(self.nx, 0);
        for (m, c) in &self.terms {
            if m.t() == exps {
                out.add_term(m.x_only(), c.clone());
            }
        }
        Ok(out)
    }

    /// Splits into `t^b -> (polynomial in x)` blocks.
    pub fn group_by_t(&self) -> BTreeMap<Monomial, Polynomial> {
        let mut groups: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.t_only())
                .or_insert_with(|| Polynomial::zero(self.nx, 0))
                .add_term(m.x_only(), c.clone());
        }
        groups
    }

    /// Multiplies an x-only polynomial by a t-only polynomial.
    pub fn join_blocks(x_part: &Polynomial, t_part: &Polynomial) -> Polynomial {
        debug_assert_eq!(x_part.nt, 0);
        debug_assert_eq!(t_part.nx, 0);
        let mut out = Polynomial::zero(x_part.nx, t_part.nt);
        for (mx, cx) in &x_part.terms {
            for (mt, ct) in &t_part.terms {
                out.add_term(Monomial::new(mx.x().to_vec(), mt.t().to_vec()), cx * ct);
            }
        }
        out
    }

    /// Substitutes `t_j -> values[j]`, returning a polynomial in x alone.
    pub fn substitute_t(&self, values: &[BigInt]) -> Result<Polynomial, AlgebraError> {
        if values.len() != self.nt {
            return Err(AlgebraError::ShapeMismatch {
                left: (self.nx, self.nt),
                right: (self.nx, values.len()),
            });
        }
        let mut out = Polynomial::zero(self.nx, 0);
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (e, val) in m.t().iter().zip(values) {
                v *= num_traits::pow(val.clone(), *e as usize);
            }
            out.add_term(m.x_only(), v);
        }
        Ok(out)
    }

    pub fn is_symmetric_in_x(&self) -> bool {
        (0..self.nx.saturating_sub(1)).all(|i| {
            let mut sigma: Vec<usize> = (0..self.nx).collect();
            sigma.swap(i, i + 1);
            self.apply_permutation(&sigma)
                .map(|p| &p == self)
                .unwrap_or(false)
        })
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// One line per term in descending graded-lex order:
    /// `coef  x-exponents | t-exponents`.
    pub fn to_lines(&self) -> Vec<String> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let xs: Vec<String> = m.x().iter().map(u32::to_string).collect();
                let ts: Vec<String> = m.t().iter().map(u32::to_string).collect();
                format!("{}  {} | {}", c, xs.join(" "), ts.join(" "))
                    .trim_end()
                    .to_string()
            })
            .collect()
    }

    pub fn parse_line(
        line: &str,
        nx: usize,
        nt: usize,
    ) -> Result<(Monomial, BigInt), AlgebraError> {
        let bad = || AlgebraError::Parse(line.to_string());
        let (coef, rest) = line
            .trim()
            .split_once(char::is_whitespace)
            .ok_or_else(bad)?;
        let (xs, ts) = rest.split_once('|').ok_or_else(bad)?;
        let parse_block = |s: &str| -> Result<Vec<u32>, AlgebraError> {
            s.split_whitespace()
                .map(|w| w.parse::<u32>().map_err(|_| bad()))
                .collect()
        };
        let x = parse_block(xs)?;
        let t = parse_block(ts)?;
        if x.len() != nx || t.len() != nt {
            return Err(bad());
        }
        let c: BigInt = coef.parse().map_err(|_| bad())?;
        Ok((Monomial::new(x, t), c))
    }

    /// Inverse of [`Polynomial::to_lines`].
    pub fn from_lines<'a, I>(nx: usize, nt: usize, lines: I) -> Result<Polynomial, AlgebraError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut p = Polynomial::zero(nx, nt);
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let (m, c) = Self::parse_line(line, nx, nt)?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

pub(crate) fn is_permutation(sigma: &[usize]) -> bool {
    let mut seen = vec![false; sigma.len()];
    sigma
        .iter()
        .all(|&s| s < seen.len() && !std::mem::replace(&mut seen[s], true))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            match (abs.is_one(), m.is_one()) {
                (_, true) => write!(f, "{}", abs)?,
                (true, false) => write!(f, "{}", m)?,
                (false, false) => write!(f, "{}*{}", abs, m)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}x,{}t]({})", self.nx, self.nt, self)
    }
}

// Operator forms panic on mismatched variable blocks; use the `checked_*`
// methods where the blocks are not known to agree.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial blocks differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial blocks differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial blocks differ")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nx: self.nx,
            nt: self.nt,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}
