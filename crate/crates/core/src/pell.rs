//! Spherical classes in the rank-two sublattice spanned by `u` and `t_{-1}`.
//!
//! With Gram matrix `[[-2, r], [r, -2]]`, the class `x·u + y·t_{-1}` is
//! spherical exactly when `x² − r·x·y + y² = 1`.

/// `x² − r·x·y + y²`, widened to avoid overflow on large windows.
fn form(r: i64, x: i64, y: i64) -> i128 {
    let (r, x, y) = (r as i128, x as i128, y as i128);
    x * x - r * x * y + y * y
}

/// All `(x, y)` with `|x|, |y| ≤ bound` and `x² − r·x·y + y² = 1`, sorted
/// lexicographically.
pub fn pell_solutions(r: i64, bound: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            if form(r, x, y) == 1 {
                out.push((x, y));
            }
        }
    }
    out
}

/// Search window used by [`is_minimal_pell_pair`].
pub fn minimality_bound(r: i64) -> i64 {
    50.max(5 * r)
}

/// Whether `u` and `t_{-1}`, i.e. `(1, 0)` and `(0, 1)`, are exactly the
/// nonnegative nonzero solutions of smallest coordinate sum.
pub fn is_minimal_pell_pair(r: i64) -> bool {
    let bound = minimality_bound(r);
    let nonneg: Vec<(i64, i64)> = pell_solutions(r, bound)
        .into_iter()
        .filter(|&(x, y)| x >= 0 && y >= 0 && (x, y) != (0, 0))
        .collect();
    let Some(best) = nonneg.iter().map(|&(x, y)| x + y).min() else {
        return false;
    };
    let mut minimizers: Vec<(i64, i64)> =
        nonneg.into_iter().filter(|&(x, y)| x + y == best).collect();
    minimizers.sort_unstable();
    minimizers == [(0, 1), (1, 0)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_window_for_r3() {
        assert_eq!(pell_solutions(3, 1), vec![(-1, 0), (0, -1), (0, 1), (1, 0)]);
    }

    #[test]
    fn larger_window_contains_next_solutions() {
        let sols = pell_solutions(3, 4);
        assert!(sols.contains(&(1, 3)));
        assert!(sols.contains(&(3, 1)));
    }

    #[test]
    fn unit_vector_always_solves() {
        for r in 1..20 {
            assert!(pell_solutions(r, 1).contains(&(1, 0)));
        }
    }

    #[test]
    fn minimal_pair_examples() {
        assert!(is_minimal_pell_pair(2));
        assert!(is_minimal_pell_pair(3));
        assert!(is_minimal_pell_pair(10));
    }

    #[test]
    fn r2_family_is_consecutive_pairs() {
        for (x, y) in pell_solutions(2, 3) {
            assert_eq!((x - y).abs(), 1);
        }
    }
}
