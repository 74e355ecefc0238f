//! Splitting types of bundles restricted to the exceptional curve `L ≅ P¹`.

use std::fmt;

use crate::error::{Error, Result};

/// `E|_L ≅ ⊕ O_L(a_k)`, parts kept in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplittingType {
    parts: Vec<i64>,
}

impl SplittingType {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptySplitting);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SplittingType { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn degree(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Set for restrictions of bundles with `c1` proportional to `H`.
    pub fn is_zero_sum(&self) -> bool {
        self.degree() == 0
    }

    fn require_zero_sum(&self) -> Result<()> {
        if self.is_zero_sum() {
            Ok(())
        } else {
            Err(Error::NonZeroSum(self.degree()))
        }
    }

    /// `dim Hom_L(⊕ O(a_j), ⊕ O(a_i + twist))`
    pub fn hom_dim_on_l(&self, twist: i64) -> u64 {
        let mut total = 0u64;
        for &target in &self.parts {
            for &source in &self.parts {
                let degree = target + twist - source;
                if degree >= 0 {
                    total += (degree + 1) as u64;
                }
            }
        }
        total
    }

    /// Whether the bundle descends along the contraction, i.e. is trivial on `L`.
    pub fn descends(&self) -> Result<bool> {
        self.require_zero_sum()?;
        Ok(self.parts.iter().all(|&a| a == 0))
    }

    /// Descent agrees with `Hom(E, E(-2) on L) = 0`.
    pub fn hom_criterion_agrees(&self) -> Result<bool> {
        Ok(self.descends()? == (self.hom_dim_on_l(-2) == 0))
    }

    /// All zero-sum splitting types of rank `r` with parts in `[-bound, bound]`.
    pub fn enumerate_zero_sum(r: usize, bound: i64) -> Vec<SplittingType> {
        let mut out = Vec::new();
        let mut parts = Vec::with_capacity(r);
        fill(r, bound, bound, 0, &mut parts, &mut out);
        out
    }
}

// Non-increasing sequences only, so each multiset is produced once.
fn fill(
    r: usize,
    bound: i64,
    cap: i64,
    sum: i64,
    parts: &mut Vec<i64>,
    out: &mut Vec<SplittingType>,
) {
    if parts.len() == r {
        if sum == 0 {
            out.push(SplittingType {
                parts: parts.clone(),
            });
        }
        return;
    }
    for a in (-bound..=cap).rev() {
        parts.push(a);
        fill(r, bound, a, sum + a, parts, out);
        parts.pop();
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(parts: &[i64]) -> SplittingType {
        SplittingType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hom_dim_examples() {
        assert_eq!(st(&[0, 0]).hom_dim_on_l(-2), 0);
        assert_eq!(st(&[2, -2]).hom_dim_on_l(-2), 3);
        assert_eq!(st(&[1, -1]).hom_dim_on_l(-2), 1);
    }

    #[test]
    fn descent_examples() {
        assert!(st(&[0, 0, 0]).descends().unwrap());
        assert!(!st(&[2, -2]).descends().unwrap());
        assert!(!st(&[1, -1]).descends().unwrap());
        assert_eq!(st(&[1, 0]).descends(), Err(Error::NonZeroSum(1)));
    }

    #[test]
    fn parts_are_sorted() {
        assert_eq!(st(&[-2, 2, 0]).parts(), &[2, 0, -2]);
        assert_eq!(SplittingType::new(vec![]), Err(Error::EmptySplitting));
    }

    #[test]
    fn enumeration_counts() {
        // rank 2, |a| <= 2, zero sum: (0,0), (1,-1), (2,-2)
        assert_eq!(SplittingType::enumerate_zero_sum(2, 2).len(), 3);
        assert_eq!(SplittingType::enumerate_zero_sum(1, 4), vec![st(&[0])]);
    }

    #[test]
    fn criterion_small_exhaustive() {
        for r in 1..=4 {
            for s in SplittingType::enumerate_zero_sum(r, 3) {
                assert!(s.hom_criterion_agrees().unwrap(), "{s}");
            }
        }
    }
}
