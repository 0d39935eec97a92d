use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Monomial, Polynomial, TruncatedSeries};
use crate::partitions::{Partition, StrictPartition};
use crate::tableaux::{enumerate_maximal_mt, enumerate_maximal_smt, enumerate_rt, enumerate_srt};

use super::{pschur, schur, Family, FamilySpec, PolyError};

/// Coefficients `c_λ(t)` of a polynomial in the Schur or P-Schur basis of
/// `n` variables. Coefficients are polynomials in `t_1..t_nt` alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Family,
    pub n: usize,
    pub nt: usize,
    coefficients: BTreeMap<Partition, Polynomial>,
}

impl BasisExpansion {
    pub fn new(basis: Family, n: usize, nt: usize) -> Self {
        BasisExpansion {
            basis,
            n,
            nt,
            coefficients: BTreeMap::new(),
        }
    }

    /// Adds `c · t^exps` to the coefficient of `λ`.
    pub fn add(&mut self, lambda: Partition, exps: &[u32], c: BigInt) {
        let term = Polynomial::from_monomial(Monomial::new(Vec::new(), exps.to_vec()), c);
        let slot = self
            .coefficients
            .entry(lambda)
            .or_insert_with(|| Polynomial::zero(0, self.nt));
        *slot = &*slot + &term;
    }

    fn prune(&mut self) {
        self.coefficients.retain(|_, c| !c.is_zero());
    }

    pub fn coefficients(&self) -> &BTreeMap<Partition, Polynomial> {
        &self.coefficients
    }

    pub fn coefficient(&self, lambda: &Partition) -> Polynomial {
        self.coefficients
            .get(lambda)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(0, self.nt))
    }

    /// Every coefficient has nonnegative integer coefficients.
    pub fn is_positive(&self) -> bool {
        self.coefficients
            .values()
            .all(Polynomial::has_nonnegative_coefficients)
    }

    /// One line per basis element: `lambda : t-polynomial`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (lambda, c) in &self.coefficients {
            let _ = writeln!(s, "{} : {}", lambda, c);
        }
        s
    }

    /// Rebuilds the polynomial `Σ c_λ(t) · basis_λ(x)`.
    pub fn evaluate(&self) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(self.n, self.nt);
        for (lambda, c) in &self.coefficients {
            let b = basis_element(self.basis, lambda, self.n)?;
            out = out.checked_add(&Polynomial::join_blocks(&b, c))?;
        }
        Ok(out)
    }
}

fn basis_element(basis: Family, lambda: &Partition, n: usize) -> Result<Polynomial, PolyError> {
    match basis {
        Family::Schur => Ok(schur(lambda, n)),
        Family::PSchur => {
            let s = StrictPartition::new(lambda.parts().to_vec())
                .map_err(|_| PolyError::NotStrict(lambda.clone()))?;
            Ok(pschur(&s, n))
        }
        other => Err(PolyError::WrongFamily(other)),
    }
}

fn expand(f: &Polynomial, basis: Family) -> Result<BasisExpansion, PolyError> {
    if !f.is_symmetric_in_x() {
        return Err(PolyError::NotSymmetric);
    }
    let n = f.nx();
    let mut out = BasisExpansion::new(basis, n, f.nt());
    let mut cache: HashMap<Partition, Polynomial> = HashMap::new();
    for (tmono, block) in f.group_by_t() {
        let mut rem = block;
        while let Some((m, c)) = rem.leading_term() {
            let exps = m.x().to_vec();
            let c = c.clone();
            let indexable = match basis {
                Family::Schur => exps.windows(2).all(|w| w[0] >= w[1]),
                _ => exps.windows(2).all(|w| w[0] > w[1] || w[1] == 0),
            };
            if !indexable {
                return Err(PolyError::NotExpandable(exps));
            }
            let lambda =
                Partition::new(exps.clone()).map_err(|_| PolyError::NotExpandable(exps))?;
            if !cache.contains_key(&lambda) {
                cache.insert(lambda.clone(), basis_element(basis, &lambda, n)?);
            }
            rem = &rem - &cache[&lambda].scalar_mul(&c);
            out.add(lambda, tmono.t(), c);
        }
    }
    out.prune();
    Ok(out)
}

/// Greedy expansion in Schur polynomials: at each t-monomial, repeatedly
/// subtract `c · s_λ` for the graded-lex leading term `c · x^λ`.
pub fn expand_in_schur(f: &Polynomial) -> Result<BasisExpansion, PolyError> {
    expand(f, Family::Schur)
}

/// Greedy expansion in P-Schur polynomials; fails when a leading exponent is
/// not strict.
pub fn expand_in_pschur(f: &Polynomial) -> Result<BasisExpansion, PolyError> {
    expand(f, Family::PSchur)
}

/// The expansion read off maximal tableaux: the coefficient of `λ` is the
/// sum of `t^{cw}` (resp. `t^{dw}`) over maximal tableaux of weight `λ`.
/// Only `λ` with `|λ| <= x_cap` are kept so the result matches the
/// truncated series.
pub fn expansion_via_maximal(spec: &FamilySpec) -> Result<BasisExpansion, PolyError> {
    let mut out;
    match spec.family {
        Family::J => {
            out = BasisExpansion::new(Family::Schur, spec.n, spec.ell());
            for t in enumerate_maximal_mt(&spec.mu, spec.t_cap) {
                out.add(
                    Partition::new(t.weight())?,
                    &t.column_weight(),
                    BigInt::one(),
                );
            }
        }
        Family::P => {
            out = BasisExpansion::new(Family::PSchur, spec.n, spec.ell());
            for t in enumerate_maximal_smt(&spec.strict_mu()?, spec.t_cap) {
                out.add(
                    Partition::new(t.weight())?,
                    &t.diagonal_weight(),
                    BigInt::one(),
                );
            }
        }
        other => return Err(PolyError::WrongFamily(other)),
    }
    out.coefficients.retain(|l, _| l.size() <= spec.x_cap);
    out.prune();
    Ok(out)
}

/// The expansion read off restricted tableaux: `Σ_{R ∈ RT(λ/μ)} t^{wt(R)}`
/// on `s_λ` for family J, and `Σ_{R ∈ SRT} t^{wt(R)}` on `P_{λ+δ}` for
/// family P.
pub fn expansion_via_restricted(spec: &FamilySpec) -> Result<BasisExpansion, PolyError> {
    let ell = spec.ell();
    let mut out;
    match spec.family {
        Family::J => {
            out = BasisExpansion::new(Family::Schur, spec.n, ell);
            for r in enumerate_rt(&spec.mu, spec.t_cap) {
                out.add(r.outer().clone(), &r.weight(ell), BigInt::one());
            }
        }
        Family::P => {
            let mu = spec.strict_mu()?;
            out = BasisExpansion::new(Family::PSchur, spec.n, ell);
            for r in enumerate_srt(&mu, spec.t_cap) {
                let lambda = r
                    .shifted_outer(mu.len())
                    .ok_or_else(|| PolyError::NotStrict(r.outer().clone()))?;
                out.add(lambda.as_partition().clone(), &r.weight(ell), BigInt::one());
            }
        }
        other => return Err(PolyError::WrongFamily(other)),
    }
    out.coefficients.retain(|l, _| l.size() <= spec.x_cap);
    out.prune();
    Ok(out)
}

/// Sets each `t_j` to 0 or 1. Setting every `t_j = 1` is exact only below
/// the series' x-degree cap.
pub fn specialize_t(f: &TruncatedSeries, values: &[bool]) -> Result<Polynomial, PolyError> {
    if values.len() != f.nt() {
        return Err(PolyError::BadSpecialization {
            expected: f.nt(),
            got: values.len(),
        });
    }
    let vals: Vec<BigInt> = values
        .iter()
        .map(|&v| if v { BigInt::one() } else { BigInt::zero() })
        .collect();
    Ok(f.poly().substitute_t(&vals)?)
}
