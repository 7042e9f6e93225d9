//! Property tests for the exact-arithmetic layer.

use askey_core::{Poly, RatFun, Scalar, Var};
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| Scalar::ratio(p, q))
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    ((-30i64..=30, 1i64..=9), (-30i64..=30, 1i64..=9))
        .prop_map(|((p, q), (r, s))| &Scalar::ratio(p, q) + &(&Scalar::ratio(r, s) * &Scalar::i()))
}

fn arb_nonzero_scalar() -> impl Strategy<Value = Scalar> {
    arb_scalar().prop_filter("nonzero", |z| !z.is_zero())
}

fn arb_poly(var: Var) -> impl Strategy<Value = Poly> {
    prop::collection::vec(arb_rational(), 0..=6)
        .prop_map(move |coeffs| Poly::from_coeffs(var, coeffs))
}

fn arb_nonzero_poly(var: Var) -> impl Strategy<Value = Poly> {
    arb_poly(var).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_is_associative_and_commutative(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_distributes(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn additive_and_multiplicative_inverses(a in arb_scalar(), b in arb_nonzero_scalar()) {
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&b * &b.inv().unwrap(), Scalar::one());
        prop_assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn scalar_display_round_trips(a in arb_scalar()) {
        let printed = a.to_string();
        let back: Scalar = printed.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn polynomial_multiplication_distributes(
        p in arb_poly(Var::X),
        q in arb_poly(Var::X),
        r in arb_poly(Var::X),
    ) {
        let lhs = p.try_mul(&q.try_add(&r).unwrap()).unwrap();
        let rhs = p.try_mul(&q).unwrap().try_add(&p.try_mul(&r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_degree_adds(p in arb_nonzero_poly(Var::X), q in arb_nonzero_poly(Var::X)) {
        let prod = p.try_mul(&q).unwrap();
        prop_assert_eq!(
            prod.degree(),
            Some(p.degree().unwrap() + q.degree().unwrap())
        );
    }

    #[test]
    fn evaluation_is_a_ring_morphism(
        p in arb_poly(Var::X),
        q in arb_poly(Var::X),
        at in arb_scalar(),
    ) {
        let sum = p.try_add(&q).unwrap();
        let prod = p.try_mul(&q).unwrap();
        prop_assert_eq!(sum.eval(&at), &p.eval(&at) + &q.eval(&at));
        prop_assert_eq!(prod.eval(&at), &p.eval(&at) * &q.eval(&at));
    }

    #[test]
    fn reduction_is_idempotent_and_value_preserving(
        num in arb_poly(Var::S),
        den in arb_nonzero_poly(Var::S),
    ) {
        let f = RatFun::new(num.clone(), den.clone()).unwrap();
        // Idempotent: rebuilding from the reduced parts changes nothing.
        let again = RatFun::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        // Value-preserving at 20 fixed sample points away from poles.
        for p in -10i64..10 {
            let at = Scalar::ratio(2 * p + 1, 2); // odd halves dodge integer roots
            let den_at = den.eval(&at);
            if den_at.is_zero() || f.den().eval(&at).is_zero() {
                continue;
            }
            prop_assert_eq!(
                f.eval(&at).unwrap(),
                num.eval(&at).checked_div(&den_at).unwrap()
            );
        }
    }

    #[test]
    fn ratfun_field_identities(
        a in arb_poly(Var::S),
        b in arb_nonzero_poly(Var::S),
        c in arb_nonzero_poly(Var::S),
    ) {
        let f = RatFun::new(a, b.clone()).unwrap();
        let g = RatFun::new(b, c).unwrap();
        // (f + g) - g = f and (f * g) / g = f for nonzero g.
        prop_assert_eq!(f.try_add(&g).unwrap().try_sub(&g).unwrap(), f.clone());
        if !g.is_zero() {
            prop_assert_eq!(f.try_mul(&g).unwrap().try_div(&g).unwrap(), f);
        }
    }
}
