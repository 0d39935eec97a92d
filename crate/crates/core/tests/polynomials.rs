use proptest::prelude::*;

use grothlab::partitions::Partition;
use grothlab::polynomials::{
    coefficient_via_hmult, expand_in_pschur, expand_in_schur, expansion_via_maximal,
    expansion_via_restricted, grothendieck_j_algebraic, grothendieck_j_combinatorial,
    grothendieck_p_algebraic, grothendieck_p_combinatorial, grothendieck_p_signed, pschur, schur,
    specialize_t, Family, FamilySpec, PolyError,
};

fn spec(family: Family, mu: &[u32], n: usize, t_cap: u32) -> FamilySpec {
    FamilySpec::new(family, Partition::new(mu.to_vec()).unwrap(), n, t_cap, None).unwrap()
}

/// `(μ, n, t_cap)` with `μ ⊆ (3,2,1)`, `len(μ) <= n <= 3`.
fn j_input() -> impl Strategy<Value = (Vec<u32>, usize, u32)> {
    let shapes: Vec<Vec<u32>> = Partition::new(vec![3, 2, 1])
        .unwrap()
        .subpartitions()
        .into_iter()
        .filter(|p| !p.is_empty())
        .map(|p| p.parts().to_vec())
        .collect();
    (prop::sample::select(shapes), 1usize..=3, 0u32..=2)
        .prop_filter("fits in n variables", |(mu, n, _)| mu.len() <= *n)
}

fn p_input() -> impl Strategy<Value = (Vec<u32>, usize, u32)> {
    j_input().prop_filter("strict", |(mu, _, _)| mu.windows(2).all(|w| w[0] > w[1]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn j_routes_agree((mu, n, t_cap) in j_input()) {
        let s = spec(Family::J, &mu, n, t_cap);
        let f = grothendieck_j_algebraic(&s).unwrap();
        prop_assert_eq!(&f, &grothendieck_j_combinatorial(&s).unwrap());
        prop_assert!(f.poly().is_symmetric_in_x());
        let e = expand_in_schur(f.poly()).unwrap();
        prop_assert!(e.is_positive());
        prop_assert_eq!(&e.evaluate().unwrap(), f.poly());
        prop_assert_eq!(&e, &expansion_via_maximal(&s).unwrap());
        prop_assert_eq!(&e, &expansion_via_restricted(&s).unwrap());
    }

    #[test]
    fn p_routes_agree((mu, n, t_cap) in p_input()) {
        let s = spec(Family::P, &mu, n, t_cap);
        let f = grothendieck_p_algebraic(&s).unwrap();
        prop_assert_eq!(&f, &grothendieck_p_combinatorial(&s).unwrap());
        prop_assert_eq!(&f, &grothendieck_p_signed(&s).unwrap());
        let e = expand_in_pschur(f.poly()).unwrap();
        prop_assert!(e.is_positive());
        prop_assert_eq!(&e.evaluate().unwrap(), f.poly());
        prop_assert_eq!(&e, &expansion_via_maximal(&s).unwrap());
    }

    #[test]
    fn t_zero_gives_the_basis_element((mu, n, t_cap) in j_input()) {
        let s = spec(Family::J, &mu, n, t_cap);
        let f = grothendieck_j_algebraic(&s).unwrap();
        let x = specialize_t(&f, &vec![false; s.ell()]).unwrap();
        prop_assert_eq!(x, schur(&s.mu, n));
        if s.mu.is_strict() {
            let s = spec(Family::P, &mu, n, t_cap);
            let f = grothendieck_p_algebraic(&s).unwrap();
            let x = specialize_t(&f, &vec![false; s.ell()]).unwrap();
            prop_assert_eq!(x, pschur(&s.strict_mu().unwrap(), n));
        }
    }

    /// Setting every t_j = 1 is exact on x-degrees up to |μ| + t_cap:
    /// raising the t-cap does not change those slices.
    #[test]
    fn all_ones_specialization_is_exact_below_the_cap((mu, n, t_cap) in j_input()) {
        let low = spec(Family::J, &mu, n, t_cap);
        let high = FamilySpec::new(Family::J, low.mu.clone(), n, t_cap + 1, Some(low.x_cap)).unwrap();
        let ones = vec![true; low.ell()];
        let a = specialize_t(&grothendieck_j_combinatorial(&low).unwrap(), &ones).unwrap();
        let b = specialize_t(&grothendieck_j_combinatorial(&high).unwrap(), &ones).unwrap();
        let size = low.mu.size();
        for d in size..=size + t_cap {
            prop_assert_eq!(a.x_slice(d), b.x_slice(d));
        }
    }

    #[test]
    fn hmult_routes_agree_with_the_series(
        (mu, n, _) in j_input(),
        exps in prop::collection::vec(0u32..=2, 3),
    ) {
        for family in [Family::J, Family::P] {
            if family == Family::P && !mu.windows(2).all(|w| w[0] > w[1]) {
                continue;
            }
            let s = spec(family, &mu, n, 2);
            let e = &exps[..s.ell()];
            if e.iter().sum::<u32>() > 2 {
                continue;
            }
            let c = coefficient_via_hmult(&s, e).unwrap();
            prop_assert!(c.agree());
            let f = match family {
                Family::J => grothendieck_j_combinatorial(&s).unwrap(),
                _ => grothendieck_p_combinatorial(&s).unwrap(),
            };
            prop_assert_eq!(f.poly().t_coefficient(e).unwrap(), c.product_route);
        }
    }
}

#[test]
fn spec_validation() {
    let mu = Partition::new(vec![2, 2]).unwrap();
    assert!(matches!(
        FamilySpec::new(Family::P, mu.clone(), 2, 1, None),
        Err(PolyError::NotStrict(_))
    ));
    assert!(matches!(
        FamilySpec::new(Family::J, mu.clone(), 1, 1, None),
        Err(PolyError::TooManyParts { .. })
    ));
    assert!(matches!(
        FamilySpec::new(Family::J, mu.clone(), 0, 1, None),
        Err(PolyError::NoVariables)
    ));
    let s = FamilySpec::new(Family::J, mu, 2, 1, None).unwrap();
    assert_eq!(s.x_cap, 4 + 2 * 2);
    assert_eq!(s.ell(), 2);
}

#[test]
fn family_names_parse() {
    for f in [Family::Schur, Family::PSchur, Family::J, Family::P] {
        assert_eq!(f.to_string().parse::<Family>(), Ok(f));
    }
    assert!("Q".parse::<Family>().is_err());
}

#[test]
fn small_j_expansion() {
    // J_(1) in two variables: s_1 + (t1) s_2 + (t1^2) s_3 ...; s_(1,1) never appears.
    let s = spec(Family::J, &[1], 2, 2);
    let e = expand_in_schur(grothendieck_j_algebraic(&s).unwrap().poly()).unwrap();
    assert_eq!(e.to_text(), "(1) : 1\n(2) : t1\n(3) : t1^2\n");
}
