use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{antisymmetrize, divide_by_vandermonde, Monomial, Polynomial};
use crate::partitions::{Partition, StrictPartition};
use crate::tableaux::{enumerate_sst, enumerate_ssyt};

use super::{padded, PolyError};

/// `s_λ(x_1..x_n)` as the generating function of SSYT(λ) with entries `<= n`.
pub fn schur(lambda: &Partition, n: usize) -> Polynomial {
    let mut out = Polynomial::zero(n, 0);
    for t in enumerate_ssyt(lambda, n as u32) {
        out.add_term(
            Monomial::new(padded(t.weight(), n), Vec::new()),
            BigInt::one(),
        );
    }
    out
}

/// `s_λ = a_{λ+δ} / a_δ`, the bialternant quotient.
pub fn schur_bialternant(lambda: &Partition, n: usize) -> Result<Polynomial, PolyError> {
    if lambda.len() > n {
        return Ok(Polynomial::zero(n, 0));
    }
    let exps: Vec<u32> = padded(lambda.parts().to_vec(), n)
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (n - 1 - i) as u32)
        .collect();
    Ok(divide_by_vandermonde(&antisymmetrize(
        &Polynomial::x_power(0, &exps),
    ))?)
}

/// `P_λ(x_1..x_n)` as the generating function of unsigned shifted
/// semistandard tableaux of shape `λ` with entries `<= n`.
pub fn pschur(lambda: &StrictPartition, n: usize) -> Polynomial {
    let mut out = Polynomial::zero(n, 0);
    for t in enumerate_sst(lambda, n as u32, false) {
        out.add_term(
            Monomial::new(padded(t.weight(), n), Vec::new()),
            BigInt::one(),
        );
    }
    out
}
