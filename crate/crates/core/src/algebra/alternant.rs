use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{AlgebraError, Monomial, Polynomial, TruncatedSeries};

/// All permutations of `0..n` in one-line notation, lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Sign of a one-line permutation, by inversion count.
pub fn sign(sigma: &[usize]) -> i32 {
    let inversions = (0..sigma.len())
        .flat_map(|i| (i + 1..sigma.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| sigma[i] > sigma[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Permutations of `0..n` whose one-line notation increases after
/// position `m`: one representative per coset of `S_n / S_{n-m}`.
pub fn coset_representatives(n: usize, m: usize) -> Vec<Vec<usize>> {
    permutations(n)
        .into_iter()
        .filter(|s| s[m.min(n)..].windows(2).all(|w| w[0] < w[1]))
        .collect()
}

fn signed_sum(f: &Polynomial, perms: &[Vec<usize>]) -> Result<Polynomial, AlgebraError> {
    let mut out = Polynomial::zero(f.nx(), f.nt());
    for sigma in perms {
        let g = f.apply_permutation(sigma)?;
        let s = sign(sigma);
        for (m, c) in g.terms() {
            out.add_term(m.clone(), if s > 0 { c.clone() } else { -c });
        }
    }
    Ok(out)
}

/// `sum over sigma in S_n of sgn(sigma) * sigma(f)`, with `n = f.nx()`.
pub fn antisymmetrize(f: &Polynomial) -> Polynomial {
    signed_sum(f, &permutations(f.nx())).expect("permutations match the x-block")
}

/// Signed sum over the coset representatives increasing after position `m`.
pub fn coset_sum(f: &Polynomial, m: usize) -> Result<Polynomial, AlgebraError> {
    if m > f.nx() {
        return Err(AlgebraError::BadCoset { n: f.nx(), m });
    }
    signed_sum(f, &coset_representatives(f.nx(), m))
}

/// Series form of [`antisymmetrize`]; relabeling preserves degrees so the
/// caps carry over unchanged.
pub fn antisymmetrize_series(f: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries::new(antisymmetrize(f.poly()), f.x_cap(), f.t_cap())
}

pub fn coset_sum_series(f: &TruncatedSeries, m: usize) -> Result<TruncatedSeries, AlgebraError> {
    Ok(TruncatedSeries::new(
        coset_sum(f.poly(), m)?,
        f.x_cap(),
        f.t_cap(),
    ))
}

/// The Vandermonde product `prod_{i<j} (x_i - x_j)` in `nx` x-variables.
pub fn vandermonde(nx: usize, nt: usize) -> Polynomial {
    let mut v = Polynomial::one(nx, nt);
    for i in 0..nx {
        for j in i + 1..nx {
            v = &v * &linear_factor(nx, nt, i, j);
        }
    }
    v
}

pub fn vandermonde_degree(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

fn linear_factor(nx: usize, nt: usize, i: usize, j: usize) -> Polynomial {
    &Polynomial::x_var(nx, nt, i) - &Polynomial::x_var(nx, nt, j)
}

/// Exact quotient `f / (x_i - x_j)`.
///
/// Works down from the largest power of `x_i`: each step moves one term
/// into the quotient and replaces `c x_i^e m` by `c x_i^(e-1) x_j m` in the
/// remainder. A term free of `x_i` left over means the division is not exact.
pub fn divide_by_linear_factor(
    f: &Polynomial,
    i: usize,
    j: usize,
) -> Result<Polynomial, AlgebraError> {
    if i == j || i >= f.nx() || j >= f.nx() {
        return Err(AlgebraError::ShapeMismatch {
            left: (f.nx(), f.nt()),
            right: (i.max(j) + 1, f.nt()),
        });
    }
    let key = |m: &Monomial| (m.x()[i], m.clone());
    let mut rem: std::collections::BTreeMap<(u32, Monomial), BigInt> =
        f.terms().map(|(m, c)| (key(m), c.clone())).collect();
    let mut quotient = Polynomial::zero(f.nx(), f.nt());
    while let Some(((e, m), c)) = rem.pop_last() {
        if e == 0 {
            return Err(AlgebraError::NotDivisible);
        }
        let mut qx = m.x().to_vec();
        qx[i] -= 1;
        let q = m.with_x(qx.clone());
        qx[j] += 1;
        let shifted = m.with_x(qx);
        let slot = rem.entry(key(&shifted)).or_insert_with(BigInt::zero);
        *slot += &c;
        if slot.is_zero() {
            rem.remove(&key(&shifted));
        }
        quotient.add_term(q, c);
    }
    Ok(quotient)
}

/// Exact quotient by the Vandermonde product, one linear factor at a time.
pub fn divide_by_vandermonde(f: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let n = f.nx();
    let mut q = f.clone();
    for i in 0..n {
        for j in i + 1..n {
            q = divide_by_linear_factor(&q, i, j)?;
        }
    }
    Ok(q)
}

/// Series form of [`divide_by_vandermonde`]. The Vandermonde product is
/// homogeneous, so every complete x-degree slice of `f` divides on its own;
/// the quotient is exact up to x-degree `x_cap - deg V`.
pub fn divide_series_by_vandermonde(f: &TruncatedSeries) -> Result<TruncatedSeries, AlgebraError> {
    let d = vandermonde_degree(f.nx());
    let q = divide_by_vandermonde(f.poly())?;
    Ok(TruncatedSeries::new(
        q,
        f.x_cap().saturating_sub(d),
        f.t_cap(),
    ))
}

/// Exact quotient `f / g` by leading-term division in graded-lex order.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let (lm, lc) = match g.leading_term() {
        Some((m, c)) => (m.clone(), c.clone()),
        None => return Err(AlgebraError::DivisionByZero),
    };
    let mut rem = f.clone();
    let mut quotient = Polynomial::zero(f.nx(), f.nt());
    while let Some((m, c)) = rem.leading_term() {
        let qm = m.checked_div(&lm).ok_or(AlgebraError::NotDivisible)?;
        let (qc, r) = c.div_rem(&lc);
        if !r.is_zero() {
            return Err(AlgebraError::NotDivisible);
        }
        let step = Polynomial::from_monomial(qm, qc);
        rem = rem.checked_sub(&step.checked_mul(g)?)?;
        quotient = quotient.checked_add(&step)?;
    }
    Ok(quotient)
}

/// Complete homogeneous symmetric polynomial `h_d` in the x-variables
/// listed in `vars`.
pub fn complete_homogeneous(d: u32, vars: &[usize], nx: usize, nt: usize) -> Polynomial {
    let mut out = Polynomial::zero(nx, nt);
    if d == 0 {
        return Polynomial::one(nx, nt);
    }
    for combo in vars.iter().combinations_with_replacement(d as usize) {
        let mut x = vec![0; nx];
        for &v in combo {
            x[v] += 1;
        }
        out.add_term(Monomial::new(x, vec![0; nt]), BigInt::one());
    }
    out
}
