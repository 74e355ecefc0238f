use std::cmp::Ordering;

use nodal_k3_core::{EpsPoly, EpsRational, Sign, Q};
use num_traits::{One, Zero};
use proptest::prelude::*;

// Exponents up to 3 and small coefficients; at ε = 1/1000, ε′ = ε⁶ every
// dominance step is a factor of at least 1000, so the sign is readable.
fn sparse_poly() -> impl Strategy<Value = EpsPoly> {
    prop::collection::vec((0u32..=3, 0u32..=3, -9i64..=9), 0..6).prop_map(|terms| {
        EpsPoly::from_terms(
            terms
                .into_iter()
                .map(|(i, j, c)| (i, j, Q::from_integer(c.into()))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = EpsPoly> {
    sparse_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = EpsRational> {
    (sparse_poly(), nonzero_poly()).prop_map(|(n, d)| EpsRational::new(n, d).unwrap())
}

fn separated_point() -> (Q, Q) {
    let eps = Q::new(1.into(), 1000.into());
    let epsp = eps.clone() * eps.clone() * eps.clone() * eps.clone() * eps.clone() * eps.clone();
    (eps, epsp)
}

fn sign_of(q: &Q) -> Sign {
    Sign::of(q)
}

proptest! {
    #[test]
    fn sign_is_multiplicative(p in sparse_poly(), q in sparse_poly()) {
        let product = &p * &q;
        prop_assert_eq!(product.sign().as_i8(), p.sign().as_i8() * q.sign().as_i8());
    }

    #[test]
    fn sign_matches_separated_point(p in sparse_poly()) {
        let (eps, epsp) = separated_point();
        prop_assert_eq!(p.sign(), sign_of(&p.instantiate(&eps, &epsp)));
    }

    #[test]
    fn rational_sign_matches_separated_point(x in rational()) {
        let (eps, epsp) = separated_point();
        prop_assert_eq!(x.sign(), sign_of(&x.instantiate(&eps, &epsp).unwrap()));
    }

    #[test]
    fn compare_is_antisymmetric(x in rational(), y in rational()) {
        prop_assert_eq!(x.compare(&y), y.compare(&x).reverse());
        prop_assert_eq!(x.compare(&x), Ordering::Equal);
    }

    #[test]
    fn compare_is_transitive(x in rational(), y in rational(), z in rational()) {
        let mut v = [x, y, z];
        v.sort();
        prop_assert!(v[0] <= v[2]);
        prop_assert!(v[0].compare(&v[1]) != Ordering::Greater);
        prop_assert!(v[1].compare(&v[2]) != Ordering::Greater);
    }

    #[test]
    fn compare_matches_difference_sign(x in rational(), y in rational()) {
        let diff = &x - &y;
        let expected = match diff.sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        };
        prop_assert_eq!(x.compare(&y), expected);
    }

    #[test]
    fn exact_division_round_trips(p in sparse_poly(), q in nonzero_poly()) {
        let product = &p * &q;
        prop_assert_eq!(product.exact_div(&q), Some(p));
    }

    #[test]
    fn reciprocal_inverts(x in rational()) {
        prop_assume!(!x.is_zero());
        let one = &x * &x.recip().unwrap();
        prop_assert_eq!(one.as_poly().and_then(|p| p.as_constant()), Some(Q::one()));
    }

    #[test]
    fn instantiation_is_a_ring_map(p in sparse_poly(), q in sparse_poly(), e in 1i64..50, f in 1i64..50) {
        let eps = Q::new(e.into(), 97.into());
        let epsp = Q::new(f.into(), 101.into());
        let sum = (&p + &q).instantiate(&eps, &epsp);
        let product = (&p * &q).instantiate(&eps, &epsp);
        let (a, b) = (p.instantiate(&eps, &epsp), q.instantiate(&eps, &epsp));
        prop_assert_eq!(sum, &a + &b);
        prop_assert_eq!(product, a * b);
    }
}

#[test]
fn infinitesimal_order() {
    let eps = EpsRational::from_poly(EpsPoly::eps());
    let epsp = EpsRational::from_poly(EpsPoly::epsp());
    let cube = EpsRational::from_poly(EpsPoly::eps().pow(3));
    assert!(EpsRational::zero() < epsp);
    assert!(epsp < cube);
    assert!(cube < eps);
    assert!(eps < EpsRational::from_poly(EpsPoly::one()));
    assert!(EpsPoly::zero().sign() == Sign::Zero && Q::zero().is_zero());
}
