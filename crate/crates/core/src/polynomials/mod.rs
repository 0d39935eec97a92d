//! Schur and P-Schur polynomials, the weak symmetric Grothendieck families
//! `𝔍_μ(x, t)` and `𝔓_μ(x, t)` computed by their alternant formulas and by
//! tableau sums, and expansions in the Schur and P-Schur bases.
//!
//! Series are truncated at a total x-degree `x_cap` and total t-degree
//! `t_cap`. The t-variables are `t_1..t_l` with `l = μ_1`; `t_j` weighs the
//! column (or diagonal) labeled `j`.

mod basis;
mod expansion;
mod grothendieck;

pub use basis::{pschur, schur, schur_bialternant};
pub use expansion::{
    expand_in_pschur, expand_in_schur, expansion_via_maximal, expansion_via_restricted,
    specialize_t, BasisExpansion,
};
pub use grothendieck::{
    coefficient_via_hmult, grothendieck_j_algebraic, grothendieck_j_combinatorial,
    grothendieck_p_algebraic, grothendieck_p_combinatorial, grothendieck_p_signed,
    HmultCoefficient,
};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::partitions::{Partition, PartitionError, StrictPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("{0} is not a strict partition")]
    NotStrict(Partition),
    #[error("{mu} has more than {n} parts")]
    TooManyParts { mu: Partition, n: usize },
    #[error("n must be at least 1")]
    NoVariables,
    #[error("polynomial is not symmetric in x")]
    NotSymmetric,
    #[error("remainder has leading exponent {0:?}, which indexes no basis element")]
    NotExpandable(Vec<u32>),
    #[error("signed sum is not divisible by 2^{0}")]
    SignedFactor(usize),
    #[error("expected {expected} t-values, got {got}")]
    BadSpecialization { expected: usize, got: usize },
    #[error("operation needs family {0}")]
    WrongFamily(Family),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Schur,
    PSchur,
    J,
    P,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Schur => "schur",
            Family::PSchur => "pschur",
            Family::J => "J",
            Family::P => "P",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "schur" | "s" => Ok(Family::Schur),
            "pschur" => Ok(Family::PSchur),
            "J" | "j" => Ok(Family::J),
            "P" | "p" => Ok(Family::P),
            _ => Err(format!(
                "unknown family {:?} (expected schur, pschur, J or P)",
                s
            )),
        }
    }
}

/// A validated request for one polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub mu: Partition,
    pub n: usize,
    pub t_cap: u32,
    pub x_cap: u32,
}

impl FamilySpec {
    /// Checks the family constraints and fills in the default
    /// `x_cap = |μ| + t_cap · l · n`.
    pub fn new(
        family: Family,
        mu: Partition,
        n: usize,
        t_cap: u32,
        x_cap: Option<u32>,
    ) -> Result<Self, PolyError> {
        if n == 0 {
            return Err(PolyError::NoVariables);
        }
        let strict = matches!(family, Family::P | Family::PSchur);
        if strict && !mu.is_strict() {
            return Err(PolyError::NotStrict(mu));
        }
        if matches!(family, Family::J | Family::P) && mu.len() > n {
            return Err(PolyError::TooManyParts { mu, n });
        }
        let t_cap = if matches!(family, Family::Schur | Family::PSchur) {
            0
        } else {
            t_cap
        };
        let x_cap = x_cap.unwrap_or(mu.size() + t_cap * mu.largest() * n as u32);
        Ok(FamilySpec {
            family,
            mu,
            n,
            t_cap,
            x_cap,
        })
    }

    /// Number of t-variables, `l = μ_1`.
    pub fn ell(&self) -> usize {
        self.mu.largest() as usize
    }

    pub fn strict_mu(&self) -> Result<StrictPartition, PolyError> {
        StrictPartition::new(self.mu.parts().to_vec())
            .map_err(|_| PolyError::NotStrict(self.mu.clone()))
    }
}

/// Pads (or checks) an exponent vector to length `n`.
pub(crate) fn padded(mut v: Vec<u32>, n: usize) -> Vec<u32> {
    v.resize(n.max(v.len()), 0);
    v
}
