//! Property tests for the polynomial rings, quantum numbers, cyclotomic
//! evaluation and the quotient tower.

use std::collections::HashMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use unijones::quotient::{
    reduce_mod_ij, specialize_quotient, tower_project, willetts_member, LevelIdealJ,
};
use unijones::ring::{
    cyclotomic_poly, evaluate_at_root, gauss_binomial, quantum_bracket, CycloContext, LaurentPoly, RootImage,
    VarSet,
};

fn poly_in(vars: VarSet, max_terms: usize, exp: i32) -> impl Strategy<Value = LaurentPoly> {
    let n = vars.len();
    prop::collection::vec((prop::collection::vec(-exp..=exp, n), -9i64..=9), 0..=max_terms)
        .prop_map(move |ts| LaurentPoly::from_terms(&vars, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn knot_poly() -> impl Strategy<Value = LaurentPoly> {
    poly_in(VarSet::knot(), 5, 3)
}

fn xd_poly() -> impl Strategy<Value = LaurentPoly> {
    poly_in(VarSet::xd(), 4, 3)
}

fn dpoly(s: &str) -> LaurentPoly {
    LaurentPoly::parse(&VarSet::single("d"), s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in knot_poly(), b in knot_poly(), c in knot_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(&VarSet::knot()), a.clone());
    }

    #[test]
    fn text_round_trip(a in knot_poly()) {
        prop_assert_eq!(LaurentPoly::parse(&VarSet::knot(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn root_evaluation_is_a_homomorphism(a in xd_poly(), b in xd_poly(), level in 2u32..=5) {
        let ctx = CycloContext::new(level).unwrap();
        let sv = VarSet::single("s");
        let mut asg = HashMap::new();
        asg.insert("x".to_string(), RootImage { zeta: 0, colour: vec![1] });
        asg.insert("d".to_string(), RootImage { zeta: -1, colour: vec![0] });
        let ev = |p: &LaurentPoly| evaluate_at_root(p, &ctx, &sv, &asg).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a).try_mul(&ev(&b)).unwrap());
        prop_assert_eq!(ev(&(&a + &b)), ev(&a).try_add(&ev(&b)).unwrap());
    }

    #[test]
    fn reduction_absorbs_the_generator(a in xd_poly(), b in xd_poly(), level in 1u32..=4) {
        let g = LevelIdealJ::new(level).unwrap();
        let p = &(&a * g.generator()) + &b;
        prop_assert_eq!(reduce_mod_ij(&p, level).unwrap(), reduce_mod_ij(&b, level).unwrap());
        let r = reduce_mod_ij(&b, level).unwrap();
        prop_assert_eq!(reduce_mod_ij(r.representative(), level).unwrap(), r.clone());
        if let (Some(lo), Some(hi)) = (r.representative().min_exp(0), r.representative().max_exp(0)) {
            prop_assert!(lo >= 0 && hi < level as i32);
        }
    }

    #[test]
    fn reduction_is_multiplicative(a in xd_poly(), b in xd_poly(), level in 1u32..=4) {
        let ra = reduce_mod_ij(&a, level).unwrap();
        let rb = reduce_mod_ij(&b, level).unwrap();
        prop_assert_eq!(reduce_mod_ij(&(&a * &b), level).unwrap(), ra.try_mul(&rb).unwrap());
        prop_assert_eq!(reduce_mod_ij(&(&a + &b), level).unwrap(), ra.try_add(&rb).unwrap());
    }

    #[test]
    fn tower_squares_commute(a in xd_poly(), level in 2u32..=4) {
        let c = reduce_mod_ij(&a, level).unwrap();
        let down = tower_project(&c).unwrap();
        for m in 1..level {
            prop_assert_eq!(specialize_quotient(&down, m).unwrap(), specialize_quotient(&c, m).unwrap());
        }
    }
}

#[test]
fn quantum_numbers() {
    let dv = VarSet::single("d");
    let inv = dpoly("d^-1");
    for n in 0..=12 {
        let q = quantum_bracket(n, &dv, "d").unwrap();
        assert_eq!(q.substitute("d", &inv).unwrap(), q);
    }
    assert_eq!(quantum_bracket(3, &dv, "d").unwrap(), dpoly("d^2 + 1 + d^-2"));
    assert!(quantum_bracket(0, &dv, "d").unwrap().is_zero());
    assert_eq!(gauss_binomial(4, 2, &dv, "d").unwrap(), dpoly("d^4 + d^2 + 2 + d^-2 + d^-4"));
    assert!(gauss_binomial(2, 3, &dv, "d").is_err());
    for n in 1..=12i64 {
        for k in 0..=n {
            let g = gauss_binomial(n, k, &dv, "d").unwrap();
            assert_eq!(g, gauss_binomial(n, n - k, &dv, "d").unwrap());
            if 0 < k && k < n {
                let a = gauss_binomial(n - 1, k, &dv, "d").unwrap().shift(0, -(k as i32));
                let b = gauss_binomial(n - 1, k - 1, &dv, "d").unwrap().shift(0, (n - k) as i32);
                assert_eq!(g, &a + &b, "pascal ({n},{k})");
            }
        }
    }
}

#[test]
fn cyclotomic_factorization() {
    let qv = VarSet::single("q");
    assert_eq!(cyclotomic_poly(1, &qv, "q").unwrap().to_string(), "q - 1");
    assert_eq!(cyclotomic_poly(4, &qv, "q").unwrap().to_string(), "q^2 + 1");
    assert_eq!(cyclotomic_poly(6, &qv, "q").unwrap().to_string(), "q^2 - q + 1");
    for m in 1..=30u64 {
        let mut prod = LaurentPoly::one(&qv);
        for e in (1..=m).filter(|e| m % e == 0) {
            prod = &prod * &cyclotomic_poly(e, &qv, "q").unwrap();
        }
        let target = LaurentPoly::parse(&qv, &format!("q^{m} - 1")).unwrap();
        assert_eq!(prod, target, "M = {m}");
    }
}

#[test]
fn willetts_contains_level_generators() {
    for level in 1..=3 {
        let g = LevelIdealJ::new(level).unwrap();
        assert!(willetts_member(g.generator(), level).unwrap());
        let one = LaurentPoly::one(&VarSet::xd());
        assert!(!willetts_member(&one, level).unwrap());
    }
}
