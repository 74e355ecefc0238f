use nodal_k3_core::{Error, SplittingType};
use proptest::prelude::*;

// Straight count of nonzero pairs Hom(O(a_j), O(a_i + twist)) on P¹.
fn oracle_hom(parts: &[i64], twist: i64) -> u64 {
    let mut total = 0;
    for &i in parts {
        for &j in parts {
            total += (i + twist - j + 1).max(0) as u64;
        }
    }
    total
}

#[test]
fn criterion_holds_exhaustively() {
    let mut seen = 0;
    for r in 1..=5 {
        for s in SplittingType::enumerate_zero_sum(r, 4) {
            assert!(s.hom_criterion_agrees().unwrap(), "{s}");
            assert_eq!(s.hom_dim_on_l(-2) == 0, s.parts().iter().all(|&a| a == 0));
            seen += 1;
        }
    }
    assert!(seen > 100);
}

#[test]
fn enumeration_is_complete() {
    // brute force over all tuples, counted as multisets
    let mut expected = std::collections::BTreeSet::new();
    for a in -4i64..=4 {
        for b in -4i64..=4 {
            for c in -4i64..=4 {
                if a + b + c == 0 {
                    let mut v = vec![a, b, c];
                    v.sort_unstable();
                    expected.insert(v);
                }
            }
        }
    }
    assert_eq!(
        SplittingType::enumerate_zero_sum(3, 4).len(),
        expected.len()
    );
}

#[test]
fn rank_two_example() {
    let s = SplittingType::new(vec![2, -2]).unwrap();
    assert_eq!(s.hom_dim_on_l(-2), 3);
    assert!(!s.descends().unwrap());
    let bad = SplittingType::new(vec![1, 0]).unwrap();
    assert_eq!(bad.descends(), Err(Error::NonZeroSum(1)));
}

proptest! {
    #[test]
    fn hom_dim_matches_oracle(parts in prop::collection::vec(-6i64..=6, 1..6), twist in -4i64..=4) {
        let s = SplittingType::new(parts.clone()).unwrap();
        prop_assert_eq!(s.hom_dim_on_l(twist), oracle_hom(&parts, twist));
    }

    #[test]
    fn endomorphisms_are_at_least_r_squared(parts in prop::collection::vec(-6i64..=6, 1..6)) {
        let s = SplittingType::new(parts.clone()).unwrap();
        let r = parts.len() as u64;
        let spread = parts.iter().max().unwrap() - parts.iter().min().unwrap();
        let dim = s.hom_dim_on_l(0);
        prop_assert!(dim >= r);
        prop_assert!(dim >= r * r);
        prop_assert_eq!(dim == r * r, spread <= 1);
    }

    #[test]
    fn order_of_parts_is_irrelevant(mut parts in prop::collection::vec(-6i64..=6, 1..6)) {
        let a = SplittingType::new(parts.clone()).unwrap();
        parts.reverse();
        let b = SplittingType::new(parts).unwrap();
        prop_assert_eq!(a, b);
    }
}
