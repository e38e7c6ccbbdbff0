use num_bigint::BigInt;
use proptest::prelude::*;

use oddnil::oddops::{divided_difference, killed_by_all, odd_symmetrize};
use oddnil::oddsym::{expand_in_elementary, from_elementary};
use oddnil::onh::{operators_equal, OnhElement};
use oddnil::skewpoly::{Monomial, SkewPolynomial};

const A: usize = 3;

fn poly() -> impl Strategy<Value = SkewPolynomial> {
    prop::collection::vec((prop::collection::vec(0usize..3, A), -3i64..=3), 0..5).prop_map(|terms| {
        let mut p = SkewPolynomial::zero(A);
        for (e, c) in terms {
            p.add_term(Monomial::from_exps(&e), BigInt::from(c));
        }
        p
    })
}

fn onh() -> impl Strategy<Value = OnhElement> {
    prop::collection::vec(prop::collection::vec((any::<bool>(), 1usize..A), 0..4), 1..3).prop_map(|words| {
        let mut e = OnhElement::zero(A);
        for w in words {
            let mut t = OnhElement::identity(A);
            for (dot, i) in w {
                let g = if dot { OnhElement::dot(A, i + 1) } else { OnhElement::cross(A, i) };
                t = t.mul(&g);
            }
            e = e.add(&t);
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn twisted_leibniz(p in poly(), q in poly(), i in 1usize..A) {
        let lhs = divided_difference(i, &(&p * &q)).unwrap();
        let rhs = &(&divided_difference(i, &p).unwrap() * &q)
            + &(&p.apply_simple(i).unwrap() * &divided_difference(i, &q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dd_squares_to_zero(p in poly(), i in 1usize..A) {
        let d = divided_difference(i, &p).unwrap();
        prop_assert!(divided_difference(i, &d).unwrap().is_zero());
    }

    #[test]
    fn w0_is_an_involution(p in poly()) {
        prop_assert_eq!(p.apply_w0().apply_w0(), p);
    }

    #[test]
    fn symmetrization_lands_in_kernel(p in poly()) {
        let s = odd_symmetrize(&p);
        prop_assert!(killed_by_all(&s));
        let back = from_elementary(&expand_in_elementary(&s).unwrap(), A);
        prop_assert_eq!(back, s);
    }

    #[test]
    fn onh_associative(x in onh(), y in onh(), z in onh()) {
        prop_assert!(operators_equal(&x.mul(&y).mul(&z), &x.mul(&y.mul(&z))));
    }

    #[test]
    fn automorphisms_respect_products(x in onh(), y in onh()) {
        prop_assert!(operators_equal(&x.mul(&y).sigma(), &x.sigma().mul(&y.sigma())));
        prop_assert!(operators_equal(&x.mul(&y).psi(), &y.psi().mul(&x.psi())));
    }
}
