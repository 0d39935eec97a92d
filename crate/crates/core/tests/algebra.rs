use num_bigint::BigInt;
use proptest::prelude::*;

use grothlab::algebra::{
    antisymmetrize, coset_sum, divide_by_vandermonde, divide_exact, vandermonde, Monomial,
    Polynomial, TruncatedSeries,
};

const NX: usize = 2;
const NT: usize = 1;

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (-4i64..=4, prop::collection::vec(0u32..=3, NX), 0u32..=2),
        0..6,
    )
    .prop_map(|terms| {
        Polynomial::from_terms(
            NX,
            NT,
            terms
                .into_iter()
                .map(|(c, x, t)| (Monomial::new(x, vec![t]), BigInt::from(c))),
        )
        .unwrap()
    })
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

/// Evaluates at integer points, an oracle independent of the term maps.
fn eval(p: &Polynomial, x: &[i64], t: &[i64]) -> BigInt {
    let mut total = BigInt::from(0);
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for (&e, &xv) in m.x().iter().zip(x) {
            v *= BigInt::from(xv).pow(e);
        }
        for (&e, &tv) in m.t().iter().zip(t) {
            v *= BigInt::from(tv).pow(e);
        }
        total += v;
    }
    total
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Polynomial::zero(NX, NT));
        prop_assert_eq!(&a * &Polynomial::one(NX, NT), a.clone());
        prop_assert_eq!(&a + &(-&a), Polynomial::zero(NX, NT));
    }

    #[test]
    fn multiplication_matches_evaluation(a in poly_strategy(), b in poly_strategy(),
                                         x in prop::collection::vec(-3i64..=3, NX), t in -3i64..=3) {
        let prod = &a * &b;
        prop_assert_eq!(eval(&prod, &x, &[t]), eval(&a, &x, &[t]) * eval(&b, &x, &[t]));
    }

    #[test]
    fn exact_division_inverts_multiplication(f in poly_strategy(), g in nonzero_poly()) {
        prop_assert_eq!(divide_exact(&(&f * &g), &g).unwrap(), f);
    }

    #[test]
    fn vandermonde_division_inverts_multiplication(f in poly_strategy()) {
        let v = vandermonde(NX, NT);
        prop_assert_eq!(divide_by_vandermonde(&(&f * &v)).unwrap(), f);
    }

    #[test]
    fn alternants_are_divisible_and_symmetric(f in poly_strategy()) {
        let a = antisymmetrize(&f);
        let q = divide_by_vandermonde(&a).unwrap();
        prop_assert!(q.is_symmetric_in_x());
        prop_assert_eq!(&q * &vandermonde(NX, NT), a);
    }

    #[test]
    fn truncation_is_a_ring_map(a in poly_strategy(), b in poly_strategy(), xc in 0u32..=6, tc in 0u32..=2) {
        let sa = TruncatedSeries::new(a.clone(), xc, tc);
        let sb = TruncatedSeries::new(b.clone(), xc, tc);
        prop_assert_eq!(sa.mul(&sb).unwrap().into_poly(), (&a * &b).truncate(xc, tc));
        prop_assert_eq!(sa.add(&sb).unwrap().into_poly(), (&a + &b).truncate(xc, tc));
    }

    #[test]
    fn text_round_trip(a in poly_strategy(), xc in 0u32..=8, tc in 0u32..=3) {
        let s = TruncatedSeries::new(a, xc, tc);
        prop_assert_eq!(TruncatedSeries::from_text(&s.to_text()).unwrap(), s);
    }
}

#[test]
fn coset_sum_extremes() {
    let f = Polynomial::x_power(0, &[2, 1, 0]);
    assert_eq!(coset_sum(&f, 0).unwrap(), f);
    assert_eq!(coset_sum(&f, 3).unwrap(), antisymmetrize(&f));
    assert_eq!(coset_sum(&f, 2).unwrap(), antisymmetrize(&f));
    assert_eq!(coset_sum(&f, 1).unwrap().len(), 3);
    assert!(coset_sum(&f, 4).is_err());
}

#[test]
fn geometric_factor_expands() {
    let g = TruncatedSeries::geometric_factor(1, 1, 0, Some(0), 4, 2);
    // x/(1 - t x) up to t^2
    assert_eq!(
        g.poly().to_lines(),
        vec!["1  3 | 2", "1  2 | 1", "1  1 | 0"]
    );
}

#[test]
fn vandermonde_rejects_non_alternants() {
    assert!(divide_by_vandermonde(&Polynomial::x_power(0, &[1, 0])).is_err());
}
