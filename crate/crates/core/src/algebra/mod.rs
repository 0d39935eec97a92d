//! Exact polynomial arithmetic over the integers in two blocks of
//! variables, `x_1..x_n` and `t_1..t_l`.

mod alternant;
mod monomial;
mod polynomial;
mod series;

pub use alternant::{
    antisymmetrize, antisymmetrize_series, complete_homogeneous, coset_representatives, coset_sum,
    coset_sum_series, divide_by_linear_factor, divide_by_vandermonde, divide_exact,
    divide_series_by_vandermonde, permutations, sign, vandermonde, vandermonde_degree,
};
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use series::TruncatedSeries;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable blocks differ: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("series caps differ: {left:?} vs {right:?}")]
    CapMismatch { left: (u32, u32), right: (u32, u32) },
    #[error("not a permutation of {expected} variables: {got:?}")]
    BadPermutation { expected: usize, got: Vec<usize> },
    #[error("coset size {m} exceeds {n} variables")]
    BadCoset { n: usize, m: usize },
    #[error("division is not exact")]
    NotDivisible,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("cannot parse polynomial text: {0}")]
    Parse(String),
}
