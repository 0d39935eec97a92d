use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{
    antisymmetrize, antisymmetrize_series, complete_homogeneous, coset_sum, coset_sum_series,
    divide_by_vandermonde, divide_series_by_vandermonde, vandermonde_degree, Monomial, Polynomial,
    TruncatedSeries,
};
use crate::partitions::{enumerate_extensions, is_good_extension, Composition};
use crate::tableaux::{enumerate_mt, enumerate_smt};

use super::{padded, Family, FamilySpec, PolyError};

fn require(spec: &FamilySpec, family: Family) -> Result<(), PolyError> {
    if spec.family != family {
        return Err(PolyError::WrongFamily(family));
    }
    Ok(())
}

/// Product over rows `i < rows` of `x_i/(1 - t_l x_i) ... x_i/(1 - t_{l-μ_i+1} x_i)`.
fn geometric_rows(
    spec: &FamilySpec,
    rows: usize,
    x_cap: u32,
) -> Result<TruncatedSeries, PolyError> {
    let (n, ell, t_cap) = (spec.n, spec.ell(), spec.t_cap);
    let mut f = TruncatedSeries::one(n, ell, x_cap, t_cap);
    for i in 0..rows {
        for r in 0..spec.mu.part(i) as usize {
            let g = TruncatedSeries::geometric_factor(n, ell, i, Some(ell - r - 1), x_cap, t_cap);
            f = f.mul(&g)?;
        }
    }
    Ok(f)
}

/// `Π_{i<j, i<m} (x_i + x_j) · Π_{m<=i<j} (x_i - x_j)` in `n` variables.
fn mixed_vandermonde(n: usize, m: usize, nt: usize) -> Polynomial {
    let mut out = Polynomial::one(n, nt);
    for i in 0..n {
        for j in i + 1..n {
            let xj = Polynomial::x_var(n, nt, j);
            let xi = Polynomial::x_var(n, nt, i);
            let factor = if i < m { &xi + &xj } else { &xi - &xj };
            out = &out * &factor;
        }
    }
    out
}

fn staircase_exponents(n: usize) -> Vec<u32> {
    (0..n).map(|i| (n - 1 - i) as u32).collect()
}

/// `𝔍_μ(x, t)` from `V · 𝔍_μ = Σ_σ sgn(σ) σ(Π_i Π_r x_i/(1 - t x_i) · x_i^{n-i})`.
pub fn grothendieck_j_algebraic(spec: &FamilySpec) -> Result<TruncatedSeries, PolyError> {
    require(spec, Family::J)?;
    let n = spec.n;
    let x_cap = spec.x_cap + vandermonde_degree(n);
    let f = geometric_rows(spec, spec.mu.len(), x_cap)?;
    let f = f.mul_poly(&Polynomial::x_power(spec.ell(), &staircase_exponents(n)))?;
    Ok(divide_series_by_vandermonde(&antisymmetrize_series(&f))?)
}

/// `𝔍_μ(x, t) = Σ_{P ∈ MT(μ)} t^{cw(P)} x^{wt(P)}`.
pub fn grothendieck_j_combinatorial(spec: &FamilySpec) -> Result<TruncatedSeries, PolyError> {
    require(spec, Family::J)?;
    let mut poly = Polynomial::zero(spec.n, spec.ell());
    for t in enumerate_mt(&spec.mu, spec.n as u32, spec.t_cap) {
        poly.add_term(
            Monomial::new(padded(t.weight(), spec.n), t.column_weight()),
            BigInt::one(),
        );
    }
    Ok(TruncatedSeries::new(poly, spec.x_cap, spec.t_cap))
}

/// `𝔓_μ(x, t)` from the coset sum over permutations with no descent after
/// position `m`, divided by `V`.
pub fn grothendieck_p_algebraic(spec: &FamilySpec) -> Result<TruncatedSeries, PolyError> {
    require(spec, Family::P)?;
    spec.strict_mu()?;
    let (n, m) = (spec.n, spec.mu.len());
    let x_cap = spec.x_cap + vandermonde_degree(n);
    let f = geometric_rows(spec, m, x_cap)?;
    let f = f.mul_poly(&mixed_vandermonde(n, m, spec.ell()))?;
    Ok(divide_series_by_vandermonde(&coset_sum_series(&f, m)?)?)
}

fn smt_sum(spec: &FamilySpec, signed: bool) -> Result<Polynomial, PolyError> {
    let mu = spec.strict_mu()?;
    let mut poly = Polynomial::zero(spec.n, spec.ell());
    for t in enumerate_smt(&mu, spec.n as u32, spec.t_cap, signed) {
        poly.add_term(
            Monomial::new(padded(t.weight(), spec.n), t.diagonal_weight()),
            BigInt::one(),
        );
    }
    Ok(poly)
}

/// `𝔓_μ(x, t) = Σ_{P ∈ SMT(μ)} t^{dw(P)} x^{wt(P)}` over unsigned tableaux.
pub fn grothendieck_p_combinatorial(spec: &FamilySpec) -> Result<TruncatedSeries, PolyError> {
    require(spec, Family::P)?;
    Ok(TruncatedSeries::new(
        smt_sum(spec, false)?,
        spec.x_cap,
        spec.t_cap,
    ))
}

/// The same sum over signed tableaux, divided by `2^m`. Fails if some
/// coefficient of the signed sum is not a multiple of `2^m`.
pub fn grothendieck_p_signed(spec: &FamilySpec) -> Result<TruncatedSeries, PolyError> {
    require(spec, Family::P)?;
    let m = spec.mu.len();
    let factor = BigInt::from(1u32) << m;
    let signed = smt_sum(spec, true)?;
    let mut out = Polynomial::zero(spec.n, spec.ell());
    for (mono, c) in signed.terms() {
        let (q, r) = c.div_rem(&factor);
        if !r.is_zero() {
            return Err(PolyError::SignedFactor(m));
        }
        out.add_term(mono.clone(), q);
    }
    Ok(TruncatedSeries::new(out, spec.x_cap, spec.t_cap))
}

/// The coefficient of `t^T` computed two ways: from the product of complete
/// homogeneous polynomials `h_{T_j}(x_1..x_{c_j})`, and from the sum over
/// good T-extensions. Both are polynomials in x alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HmultCoefficient {
    pub product_route: Polynomial,
    pub extension_route: Polynomial,
}

impl HmultCoefficient {
    pub fn agree(&self) -> bool {
        self.product_route == self.extension_route
    }
}

/// Coefficient of `t_1^{T_1} ... t_l^{T_l}` for family J or P.
/// `exps` lists `T_1..T_l`.
pub fn coefficient_via_hmult(
    spec: &FamilySpec,
    exps: &[u32],
) -> Result<HmultCoefficient, PolyError> {
    let ell = spec.ell();
    if exps.len() != ell {
        return Err(PolyError::BadSpecialization {
            expected: ell,
            got: exps.len(),
        });
    }
    let n = spec.n;
    let columns = spec.mu.column_heights();
    let mut h = Polynomial::one(n, 0);
    for (&t, &c) in exps.iter().zip(&columns) {
        let vars: Vec<usize> = (0..c).collect();
        h = &h * &complete_homogeneous(t, &vars, n, 0);
    }
    match spec.family {
        Family::J => {
            let base: Vec<u32> = padded(spec.mu.parts().to_vec(), n)
                .iter()
                .zip(staircase_exponents(n))
                .map(|(p, d)| p + d)
                .collect();
            let lhs = antisymmetrize(&(&h * &Polynomial::x_power(0, &base)));
            let mut rhs = Polynomial::zero(n, 0);
            for e in enumerate_extensions(&Composition(base), exps, &columns)? {
                if is_good_extension(&e) {
                    rhs = &rhs + &antisymmetrize(&Polynomial::x_power(0, &e.top().0));
                }
            }
            Ok(HmultCoefficient {
                product_route: divide_by_vandermonde(&lhs)?,
                extension_route: divide_by_vandermonde(&rhs)?,
            })
        }
        Family::P => {
            let mu = spec.strict_mu()?;
            let m = mu.len();
            let mixed = mixed_vandermonde(n, m, 0);
            let x_mu = Polynomial::x_power(0, &padded(mu.parts().to_vec(), n));
            let lhs = coset_sum(&(&(&h * &x_mu) * &mixed), m)?;
            let mut rhs = Polynomial::zero(n, 0);
            for e in enumerate_extensions(&Composition(mu.parts().to_vec()), exps, &columns)? {
                if is_good_extension(&e) {
                    let top = Polynomial::x_power(0, &padded(e.top().0.clone(), n));
                    rhs = &rhs + &coset_sum(&(&top * &mixed), m)?;
                }
            }
            Ok(HmultCoefficient {
                product_route: divide_by_vandermonde(&lhs)?,
                extension_route: divide_by_vandermonde(&rhs)?,
            })
        }
        other => Err(PolyError::WrongFamily(if other == Family::PSchur {
            Family::P
        } else {
            Family::J
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn spec(family: Family, mu: &[u32], n: usize, t_cap: u32) -> FamilySpec {
        FamilySpec::new(family, Partition::new(mu.to_vec()).unwrap(), n, t_cap, None).unwrap()
    }

    #[test]
    fn single_box_one_variable_is_geometric() {
        let s = spec(Family::J, &[1], 1, 3);
        let f = grothendieck_j_algebraic(&s).unwrap();
        // x/(1 - t x) = x + t x^2 + t^2 x^3 + t^3 x^4
        let x = Polynomial::x_var(1, 1, 0);
        let t = Polynomial::t_var(1, 1, 0);
        let mut expected = Polynomial::zero(1, 1);
        for k in 0..=3 {
            expected = &expected + &(&t.pow(k) * &x.pow(k + 1));
        }
        assert_eq!(f.poly(), &expected);
        assert_eq!(grothendieck_j_combinatorial(&s).unwrap().poly(), &expected);
    }

    #[test]
    fn p21_degree_four_slice() {
        let s = spec(Family::P, &[2, 1], 2, 1);
        let f = grothendieck_p_algebraic(&s).unwrap();
        let (x1, x2) = (Polynomial::x_var(2, 2, 0), Polynomial::x_var(2, 2, 1));
        let (t1, t2) = (Polynomial::t_var(2, 2, 0), Polynomial::t_var(2, 2, 1));
        let p31 = &(&(&x1.pow(3) * &x2) + &(&x1.pow(2) * &x2.pow(2)).scalar_mul(&BigInt::from(2)))
            + &(&x1 * &x2.pow(3));
        let expected = &(&t1 + &t2) * &p31;
        assert_eq!(f.poly().x_slice(4), expected);
        assert_eq!(
            f.poly().x_slice(3),
            &(&x1.pow(2) * &x2) + &(&x1 * &x2.pow(2))
        );
    }

    #[test]
    fn algebraic_matches_combinatorial() {
        for (mu, n, t_cap) in [
            (&[1][..], 2, 2),
            (&[2, 1][..], 2, 1),
            (&[2][..], 3, 1),
            (&[2, 2][..], 2, 1),
        ] {
            let s = spec(Family::J, mu, n, t_cap);
            assert_eq!(
                grothendieck_j_algebraic(&s).unwrap(),
                grothendieck_j_combinatorial(&s).unwrap(),
                "J {:?} n={}",
                mu,
                n
            );
        }
        for (mu, n, t_cap) in [
            (&[1][..], 2, 2),
            (&[2, 1][..], 2, 1),
            (&[2][..], 2, 2),
            (&[3, 1][..], 2, 1),
        ] {
            let s = spec(Family::P, mu, n, t_cap);
            let alg = grothendieck_p_algebraic(&s).unwrap();
            assert_eq!(
                alg,
                grothendieck_p_combinatorial(&s).unwrap(),
                "P {:?} n={}",
                mu,
                n
            );
            assert_eq!(
                alg,
                grothendieck_p_signed(&s).unwrap(),
                "signed P {:?} n={}",
                mu,
                n
            );
        }
    }

    #[test]
    fn hmult_routes_agree() {
        let s = spec(Family::J, &[2, 1], 3, 1);
        for exps in [[0, 0], [1, 0], [0, 1], [1, 1], [2, 0]] {
            let c = coefficient_via_hmult(&s, &exps).unwrap();
            assert!(c.agree(), "J {:?}", exps);
            let alg = grothendieck_j_combinatorial(&spec(Family::J, &[2, 1], 3, 2)).unwrap();
            assert_eq!(
                alg.poly().t_coefficient(&exps).unwrap(),
                c.product_route,
                "J {:?}",
                exps
            );
        }
        let s = spec(Family::P, &[2, 1], 2, 1);
        for exps in [[0, 0], [1, 0], [0, 1], [1, 1]] {
            let c = coefficient_via_hmult(&s, &exps).unwrap();
            assert!(c.agree(), "P {:?}", exps);
            let alg = grothendieck_p_algebraic(&spec(Family::P, &[2, 1], 2, 2)).unwrap();
            assert_eq!(
                alg.poly().t_coefficient(&exps).unwrap(),
                c.product_route,
                "P {:?}",
                exps
            );
        }
    }
}
