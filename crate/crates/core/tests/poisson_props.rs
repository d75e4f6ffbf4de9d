use proptest::prelude::*;

use principal_trace::poisson::{
    chhp_prediction, collapsing_check, integrate_unit_disc, integrate_unit_square, parse_polynomial,
    poisson_bracket, ExactValue, GaussianRational, PrincipalFunction, QPolynomial2, Region, UniPolynomial,
};

fn rational(height: i64) -> impl Strategy<Value = GaussianRational> {
    (-height..=height, 1..=height).prop_map(|(n, d)| GaussianRational::from_ratio(n, d))
}

fn gaussian(height: i64) -> impl Strategy<Value = GaussianRational> {
    (rational(height), rational(height)).prop_map(|(re, im)| &re + &(&im * &GaussianRational::i()))
}

fn poly() -> impl Strategy<Value = QPolynomial2> {
    prop::collection::vec(((0u32..4, 0u32..4), gaussian(9)), 1..5).prop_map(QPolynomial2::from_terms)
}

fn real_poly() -> impl Strategy<Value = QPolynomial2> {
    prop::collection::vec(((0u32..5, 0u32..5), rational(9)), 1..5).prop_map(QPolynomial2::from_terms)
}

fn uni() -> impl Strategy<Value = UniPolynomial> {
    prop::collection::vec(gaussian(5), 1..5).prop_map(UniPolynomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn bracket_is_antisymmetric(p in poly(), q in poly()) {
        prop_assert!((&poisson_bracket(&p, &q) + &poisson_bracket(&q, &p)).is_zero());
    }

    #[test]
    fn bracket_obeys_leibniz(p in poly(), q in poly(), r in poly()) {
        let lhs = poisson_bracket(&p, &(&q * &r));
        let rhs = &(&poisson_bracket(&p, &q) * &r) + &(&q * &poisson_bracket(&p, &r));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_obeys_jacobi(p in poly(), q in poly(), r in poly()) {
        let sum = &(&poisson_bracket(&p, &poisson_bracket(&q, &r))
            + &poisson_bracket(&q, &poisson_bracket(&r, &p)))
            + &poisson_bracket(&r, &poisson_bracket(&p, &q));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn real_square_integrals_are_real_rationals(p in real_poly(), q in real_poly()) {
        let v = integrate_unit_square(&poisson_bracket(&p, &q));
        prop_assert!(v.is_real());
        let pred = chhp_prediction(&PrincipalFunction::new(-1, Region::UnitSquare), &p, &q);
        prop_assert!(!pred.two_pi_i_trace().has_pi());
        prop_assert_eq!(pred.two_pi_i_trace(), ExactValue::rational(v));
    }

    #[test]
    fn round_trip_through_text(p in poly()) {
        prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn collapsing_always_holds(r1 in uni(), r2 in uni(), s in poly()) {
        prop_assert!(collapsing_check(&r1, &r2, &s));
    }
}

#[test]
fn bracket_with_y_integrates_to_reciprocal() {
    for n in 1..=20u32 {
        let p = QPolynomial2::monomial(n, n - 1, GaussianRational::from(1));
        let v = integrate_unit_square(&poisson_bracket(&p, &QPolynomial2::y()));
        assert_eq!(v, GaussianRational::from_ratio(1, n as i64));
    }
}

#[test]
fn disc_integral_examples() {
    let one = integrate_unit_disc(&QPolynomial2::one());
    assert_eq!(one, ExactValue::pi_multiple(GaussianRational::from(1)));
    assert!(integrate_unit_disc(&parse_polynomial("x").unwrap()).is_zero());
    assert_eq!(
        integrate_unit_disc(&parse_polynomial("x^2").unwrap()).pi_part,
        GaussianRational::from_ratio(1, 4)
    );
}
