use crate::algebra::{antisymmetrize, complete_homogeneous, permutations, sign, Polynomial};

use super::{Composition, PartitionError};

/// A chain `λ^l ⊇ ... ⊇ λ^1 ⊇ λ^0 = base` where step `h` adds `T_h`
/// boxes, all inside the first `c_h` positions.
///
/// Everything indexed by `h` is stored in label order: `chain[h-1]` is
/// `λ^h`, `increments[h-1]` is `T_h` and `columns[h-1]` is `c_h`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TExtension {
    pub base: Composition,
    pub chain: Vec<Composition>,
    pub increments: Vec<u32>,
    pub columns: Vec<usize>,
}

impl TExtension {
    /// `λ^h` for `0 <= h <= l`.
    pub fn level(&self, h: usize) -> &Composition {
        if h == 0 {
            &self.base
        } else {
            &self.chain[h - 1]
        }
    }

    /// The largest composition `λ = λ^l`.
    pub fn top(&self) -> &Composition {
        self.chain.last().unwrap_or(&self.base)
    }

    pub fn steps(&self) -> usize {
        self.chain.len()
    }

    /// Checks the defining conditions: containment, sizes and frozen tails.
    pub fn is_valid(&self) -> bool {
        let n = self.base.len();
        self.chain.len() == self.increments.len()
            && self.chain.len() == self.columns.len()
            && (1..=self.steps()).all(|h| {
                let (cur, prev) = (self.level(h), self.level(h - 1));
                cur.len() == n
                    && cur.contains(prev)
                    && cur.size() == prev.size() + self.increments[h - 1]
                    && (self.columns[h - 1]..n).all(|k| cur.0[k] == prev.0[k])
            })
    }
}

/// Converts a list written `(X_l, ..., X_1)` into label order.
pub fn from_paper_order<T: Clone>(v: &[T]) -> Vec<T> {
    v.iter().rev().cloned().collect()
}

fn check_columns(increments: &[u32], columns: &[usize], n: usize) -> Result<(), PartitionError> {
    if increments.len() != columns.len() {
        return Err(PartitionError::LengthMismatch(
            increments.len(),
            columns.len(),
        ));
    }
    let monotone = columns.windows(2).all(|w| w[0] <= w[1]);
    if !monotone || columns.last().is_some_and(|&c| c > n) {
        return Err(PartitionError::BadColumns(columns.to_vec(), n));
    }
    Ok(())
}

/// Every T-extension of `base`, each once, sorted lexicographically on the
/// concatenated chain `λ^1, ..., λ^l`.
pub fn enumerate_extensions(
    base: &Composition,
    increments: &[u32],
    columns: &[usize],
) -> Result<Vec<TExtension>, PartitionError> {
    check_columns(increments, columns, base.len())?;
    let mut chains: Vec<Vec<Composition>> = vec![Vec::new()];
    for (&t, &c) in increments.iter().zip(columns) {
        let mut next = Vec::new();
        for chain in &chains {
            let prev = chain.last().unwrap_or(base);
            for add in weak_compositions(t, c) {
                let mut lam = prev.clone();
                for (slot, a) in lam.0.iter_mut().zip(&add) {
                    *slot += a;
                }
                let mut grown = chain.clone();
                grown.push(lam);
                next.push(grown);
            }
        }
        chains = next;
    }
    chains.sort();
    Ok(chains
        .into_iter()
        .map(|chain| TExtension {
            base: base.clone(),
            chain,
            increments: increments.to_vec(),
            columns: columns.to_vec(),
        })
        .collect())
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// First violation `(i, k)` of the goodness condition, 1-based, with `i`
/// minimal and then `k` minimal.
fn first_violation(e: &TExtension) -> Option<(usize, usize)> {
    (1..=e.steps()).find_map(|h| {
        let (cur, prev) = (e.level(h), e.level(h - 1));
        (2..=e.columns[h - 1])
            .find(|&k| cur.0[k - 1] >= prev.0[k - 2])
            .map(|k| (h, k))
    })
}

/// True iff `λ^h_k < λ^(h-1)_(k-1)` for every step `h` and `2 <= k <= c_h`.
pub fn is_good_extension(e: &TExtension) -> bool {
    first_violation(e).is_none()
}

/// A permutation (0-based one-line notation) paired with a T-extension.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPair {
    pub sigma: Vec<usize>,
    pub extension: TExtension,
    pub sign: i32,
}

impl SignedPair {
    pub fn new(sigma: Vec<usize>, extension: TExtension) -> Self {
        let sign = sign(&sigma);
        SignedPair {
            sigma,
            extension,
            sign,
        }
    }

    /// The exponent vector of `sgn(σ) x^λ∘σ`: entry `p` is `λ_(σ^-1(p))`.
    pub fn top_row_values(&self) -> Vec<u32> {
        let top = self.extension.top();
        let mut v = vec![0; self.sigma.len()];
        for (pos, &target) in self.sigma.iter().enumerate() {
            v[target] = top.0[pos];
        }
        v
    }
}

/// The sign-reversing involution on pairs whose extension is bad.
///
/// Picks the first step `i` with a violation, the first offending position
/// `k`, and the first `j < k` with `λ^i_k >= λ^(i-1)_j`; then swaps
/// positions `j, k` of `σ` and of every `λ^h` with `h >= i`.
pub fn iota(p: &SignedPair) -> Result<SignedPair, PartitionError> {
    let e = &p.extension;
    let (i, k) = first_violation(e).ok_or(PartitionError::GoodExtension)?;
    let (cur, prev) = (e.level(i), e.level(i - 1));
    let j = (1..k)
        .find(|&j| cur.0[k - 1] >= prev.0[j - 1])
        .expect("j = k - 1 always qualifies");
    let mut sigma = p.sigma.clone();
    sigma.swap(j - 1, k - 1);
    let mut ext = e.clone();
    for lam in ext.chain.iter_mut().skip(i - 1) {
        lam.0.swap(j - 1, k - 1);
    }
    Ok(SignedPair::new(sigma, ext))
}

/// Both sides of the alternant multiplication identity, computed separately,
/// together with the checks on the cancelling involution.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    /// `Σ_σ sgn(σ) Π_h h_(T_h)(x_σ1..x_σc_h) x_σ^μ`.
    pub lhs: Polynomial,
    /// Sum of alternants `a_λ` over good extensions.
    pub good_sum: Polynomial,
    /// Sum of alternants over bad extensions; must vanish.
    pub bad_sum: Polynomial,
    pub good_count: usize,
    pub bad_count: usize,
    /// Every good chain consists of partitions.
    pub good_are_partitions: bool,
    /// On every bad pair: iota lands on a bad pair, flips the sign, is an
    /// involution and preserves the exponent vector.
    pub iota_ok: bool,
    pub pairs_checked: usize,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.good_sum
            && self.bad_sum.is_zero()
            && self.good_are_partitions
            && self.iota_ok
    }
}

/// Computes the report for base `mu` (padded to `n` parts, which must be
/// distinct), increments `T_1..T_l` and bounds `c_1 <= ... <= c_l <= n`.
pub fn verify_hmult_lemma(
    mu: &[u32],
    increments: &[u32],
    columns: &[usize],
    n: usize,
) -> Result<LemmaReport, PartitionError> {
    if mu.len() > n {
        return Err(PartitionError::TooManyParts {
            parts: mu.to_vec(),
            n,
        });
    }
    let mut base = mu.to_vec();
    base.resize(n, 0);
    if base.windows(2).any(|w| w[0] <= w[1]) {
        return Err(PartitionError::NotStrict(base));
    }
    let base = Composition(base);
    let exts = enumerate_extensions(&base, increments, columns)?;

    let mut product = Polynomial::x_power(0, &base.0);
    for (&t, &c) in increments.iter().zip(columns) {
        let vars: Vec<usize> = (0..c).collect();
        product = &product * &complete_homogeneous(t, &vars, n, 0);
    }
    let lhs = antisymmetrize(&product);

    let mut good_sum = Polynomial::zero(n, 0);
    let mut bad_sum = Polynomial::zero(n, 0);
    let (mut good_count, mut bad_count, mut pairs_checked) = (0, 0, 0);
    let mut good_are_partitions = true;
    let mut iota_ok = true;
    let perms = permutations(n);
    for e in exts {
        let alt = antisymmetrize(&Polynomial::x_power(0, &e.top().0));
        if is_good_extension(&e) {
            good_count += 1;
            good_are_partitions &= e.chain.iter().all(Composition::is_partition);
            good_sum = &good_sum + &alt;
            continue;
        }
        bad_count += 1;
        bad_sum = &bad_sum + &alt;
        for sigma in &perms {
            pairs_checked += 1;
            let pair = SignedPair::new(sigma.clone(), e.clone());
            let ok = match iota(&pair) {
                Ok(image) => {
                    image.extension.is_valid()
                        && !is_good_extension(&image.extension)
                        && image.sign == -pair.sign
                        && image.top_row_values() == pair.top_row_values()
                        && iota(&image).as_ref() == Ok(&pair)
                }
                Err(_) => false,
            };
            iota_ok &= ok;
        }
    }
    Ok(LemmaReport {
        lhs,
        good_sum,
        bad_sum,
        good_count,
        bad_count,
        good_are_partitions,
        iota_ok,
        pairs_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[u32]) -> Composition {
        Composition(v.to_vec())
    }

    #[test]
    fn zero_increments_give_constant_chain() {
        let exts = enumerate_extensions(&comp(&[2, 1, 0]), &[0, 0], &[1, 3]).unwrap();
        assert_eq!(exts.len(), 1);
        assert!(is_good_extension(&exts[0]));
    }

    #[test]
    fn frozen_tail_forces_single_extension() {
        let exts = enumerate_extensions(&comp(&[1, 0]), &[1], &[1]).unwrap();
        assert_eq!(exts.len(), 1);
        assert_eq!(exts[0].top(), &comp(&[2, 0]));
    }

    #[test]
    fn decreasing_columns_are_rejected() {
        assert!(matches!(
            enumerate_extensions(&comp(&[2, 1]), &[1, 1], &[2, 1]),
            Err(PartitionError::BadColumns(..))
        ));
        assert!(enumerate_extensions(&comp(&[2, 1]), &[1], &[3]).is_err());
    }

    #[test]
    fn iota_refuses_good_extensions() {
        let e = &enumerate_extensions(&comp(&[1, 0]), &[1], &[1]).unwrap()[0];
        let pair = SignedPair::new(vec![0, 1], e.clone());
        assert_eq!(iota(&pair), Err(PartitionError::GoodExtension));
    }

    #[test]
    fn lemma_small_cases() {
        let r = verify_hmult_lemma(&[1, 0], &[1], &[1], 2).unwrap();
        assert!(r.holds());
        let r = verify_hmult_lemma(
            &[3, 1, 0],
            &from_paper_order(&[2, 1]),
            &from_paper_order(&[3, 2]),
            3,
        )
        .unwrap();
        assert!(r.holds());
        assert!(r.bad_count > 0);
    }

    #[test]
    fn repeated_parts_are_rejected() {
        assert!(verify_hmult_lemma(&[1, 1], &[1], &[2], 2).is_err());
    }
}
