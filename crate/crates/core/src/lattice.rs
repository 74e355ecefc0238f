//! The Néron–Severi lattice `ZH ⊕ ZL` of the resolved surface and the
//! algebraic Mukai lattice built on it.
//!
//! Divisor classes are stored with doubled coordinates: the pair `(k1, e1)`
//! is the class `(k1·H + e1·L)/2`. When the class group of the nodal surface
//! is larger than its Picard group, the Picard lattice of the resolution is
//! the index-two overlattice generated by `(H + L)/2`; otherwise both
//! coordinates are even.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::{q, qi, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NSLattice {
    h_squared: i64,
    class_group_nontrivial: bool,
}

impl NSLattice {
    pub fn new(h_squared: i64, class_group_nontrivial: bool) -> Result<Self> {
        if h_squared <= 0 || h_squared % 2 != 0 {
            return Err(Error::InvalidHSquared(h_squared));
        }
        // (H + L)/2 has square (H² − 2)/4, which must be even.
        if class_group_nontrivial && h_squared.rem_euclid(8) != 2 {
            return Err(Error::ClassGroupMod8(h_squared));
        }
        Ok(NSLattice {
            h_squared,
            class_group_nontrivial,
        })
    }

    pub fn h_squared(&self) -> i64 {
        self.h_squared
    }

    pub fn class_group_nontrivial(&self) -> bool {
        self.class_group_nontrivial
    }

    pub fn h(&self) -> DivisorClass {
        DivisorClass {
            lattice: *self,
            k1: 2,
            e1: 0,
        }
    }

    pub fn l(&self) -> DivisorClass {
        DivisorClass {
            lattice: *self,
            k1: 0,
            e1: 2,
        }
    }

    pub fn zero_class(&self) -> DivisorClass {
        DivisorClass {
            lattice: *self,
            k1: 0,
            e1: 0,
        }
    }

    /// The class `d·H`.
    pub fn multiple_of_h(&self, d: i64) -> DivisorClass {
        DivisorClass {
            lattice: *self,
            k1: 2 * d,
            e1: 0,
        }
    }

    /// The class `(k1·H + e1·L)/2`, validated against the lattice.
    pub fn divisor(&self, k1: i64, e1: i64) -> Result<DivisorClass> {
        DivisorClass::new(*self, k1, e1)
    }
}

/// The class `(k1·H + e1·L)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    lattice: NSLattice,
    k1: i64,
    e1: i64,
}

impl DivisorClass {
    pub fn new(lattice: NSLattice, k1: i64, e1: i64) -> Result<Self> {
        let invalid = |reason| Error::InvalidDivisor { k1, e1, reason };
        if (k1 - e1).rem_euclid(2) != 0 {
            return Err(invalid("coordinates of different parity"));
        }
        if k1.rem_euclid(2) != 0 && !lattice.class_group_nontrivial {
            return Err(invalid("half-integral class requires Cl(X) != Pic(X)"));
        }
        let class = DivisorClass { lattice, k1, e1 };
        let square = class.self_intersection();
        if !square.is_integer() || square.to_integer().is_odd() {
            return Err(invalid("self-intersection is not an even integer"));
        }
        Ok(class)
    }

    pub fn lattice(&self) -> NSLattice {
        self.lattice
    }

    pub fn k1(&self) -> i64 {
        self.k1
    }

    pub fn e1(&self) -> i64 {
        self.e1
    }

    /// Coefficient of `H` as an exact rational.
    pub fn h_coefficient(&self) -> Q {
        q(self.k1, 2)
    }

    /// Coefficient of `L` as an exact rational.
    pub fn l_coefficient(&self) -> Q {
        q(self.e1, 2)
    }

    pub fn intersect(&self, other: &DivisorClass) -> Result<Q> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        Ok(self.intersect_unchecked(other))
    }

    fn intersect_unchecked(&self, other: &DivisorClass) -> Q {
        let h2 = self.lattice.h_squared;
        q(self.k1 * other.k1 * h2 - 2 * self.e1 * other.e1, 4)
    }

    pub fn self_intersection(&self) -> Q {
        self.intersect_unchecked(self)
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        Ok(DivisorClass {
            lattice: self.lattice,
            k1: self.k1 + other.k1,
            e1: self.e1 + other.e1,
        })
    }

    pub fn times(&self, n: i64) -> DivisorClass {
        DivisorClass {
            lattice: self.lattice,
            k1: self.k1 * n,
            e1: self.e1 * n,
        }
    }

    pub fn negated(&self) -> DivisorClass {
        self.times(-1)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}H + {}L)/2", self.k1, self.e1)
    }
}

/// A Mukai vector `(rank, c1, degree)`.
///
/// Rank and degree are exact rationals so that intermediate combinations such
/// as `u/2 + t/2` can be formed; [`MukaiVector::is_integral`] tells whether the
/// vector lies in the integral Mukai lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MukaiVector {
    rank: Q,
    divisor: DivisorClass,
    degree: Q,
}

impl MukaiVector {
    pub fn new(rank: i64, divisor: DivisorClass, degree: i64) -> Self {
        MukaiVector {
            rank: qi(rank),
            divisor,
            degree: qi(degree),
        }
    }

    pub fn with_rational(rank: Q, divisor: DivisorClass, degree: Q) -> Self {
        MukaiVector {
            rank,
            divisor,
            degree,
        }
    }

    pub fn rank(&self) -> &Q {
        &self.rank
    }

    pub fn divisor(&self) -> &DivisorClass {
        &self.divisor
    }

    pub fn degree(&self) -> &Q {
        &self.degree
    }

    pub fn lattice(&self) -> NSLattice {
        self.divisor.lattice
    }

    pub fn is_integral(&self) -> bool {
        self.rank.is_integer() && self.degree.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.rank.is_zero() && self.divisor.k1 == 0 && self.divisor.e1 == 0 && self.degree.is_zero()
    }

    /// The Mukai pairing `D·D′ − r·a′ − r′·a`.
    pub fn pair(&self, other: &MukaiVector) -> Result<Q> {
        let dd = self.divisor.intersect(&other.divisor)?;
        Ok(dd - &self.rank * &other.degree - &other.rank * &self.degree)
    }

    pub fn square(&self) -> Q {
        let dd = self.divisor.self_intersection();
        dd - qi(2) * &self.rank * &self.degree
    }

    pub fn is_spherical(&self) -> bool {
        self.square() == qi(-2)
    }

    /// Euler characteristic `χ(v, w) = −⟨v, w⟩`.
    pub fn euler_char(&self, other: &MukaiVector) -> Result<Q> {
        Ok(-self.pair(other)?)
    }

    /// Tensoring by `O(L)`: `(r, D, a) ↦ (r, D + rL, a + D·L − r)`.
    pub fn twist_by_l(&self) -> Result<MukaiVector> {
        if !self.rank.is_integer() {
            return Err(Error::NonIntegralTwist);
        }
        let r = self.rank.to_integer();
        let r: i64 = r.try_into().map_err(|_| Error::NonIntegralTwist)?;
        let lattice = self.lattice();
        let shifted = self.divisor.checked_add(&lattice.l().times(r))?;
        let dl = self.divisor.intersect_unchecked(&lattice.l());
        let twisted = MukaiVector {
            rank: self.rank.clone(),
            divisor: DivisorClass::new(lattice, shifted.k1, shifted.e1)?,
            degree: &self.degree + dl - &self.rank,
        };
        if self.is_integral() && !twisted.is_integral() {
            return Err(Error::NonIntegralTwist);
        }
        Ok(twisted)
    }

    pub fn checked_sub(&self, other: &MukaiVector) -> Result<MukaiVector> {
        Ok(MukaiVector {
            rank: &self.rank - &other.rank,
            divisor: self.divisor.checked_add(&other.divisor.negated())?,
            degree: &self.degree - &other.degree,
        })
    }

    pub fn checked_add(&self, other: &MukaiVector) -> Result<MukaiVector> {
        Ok(MukaiVector {
            rank: &self.rank + &other.rank,
            divisor: self.divisor.checked_add(&other.divisor)?,
            degree: &self.degree + &other.degree,
        })
    }

    pub fn negated(&self) -> MukaiVector {
        MukaiVector {
            rank: -self.rank.clone(),
            divisor: self.divisor.negated(),
            degree: -self.degree.clone(),
        }
    }

    fn coordinates(&self) -> [Q; 4] {
        [
            self.rank.clone(),
            q(self.divisor.k1, 2),
            q(self.divisor.e1, 2),
            self.degree.clone(),
        ]
    }

    /// True when one vector is a rational multiple of the other (or either
    /// is zero).
    pub fn is_proportional(&self, other: &MukaiVector) -> bool {
        let a = self.coordinates();
        let b = other.coordinates();
        (0..4).all(|i| (i + 1..4).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
    }

    /// `μ_H = c1·H / rank`, the slope against the pulled-back polarization.
    pub fn h_slope(&self) -> Option<Q> {
        if self.rank.is_zero() {
            return None;
        }
        let h = self.lattice().h();
        Some(self.divisor.intersect_unchecked(&h) / &self.rank)
    }
}

impl fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.rank, self.divisor, self.degree)
    }
}

/// A spherical Mukai vector `u = (r, dH, a)` on a fixed lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProblemInstance {
    lattice: NSLattice,
    r: i64,
    d: i64,
    a: i64,
}

impl ProblemInstance {
    pub fn new(lattice: NSLattice, r: i64, d: i64, a: i64) -> Result<Self> {
        if r <= 0 {
            return Err(Error::NonPositiveRank(r));
        }
        let square = d * d * lattice.h_squared - 2 * r * a;
        if square != -2 {
            return Err(Error::NotSpherical(square));
        }
        let g = r.gcd(&d);
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        Ok(ProblemInstance { lattice, r, d, a })
    }

    /// Every spherical `(r, d, a)` on `lattice` with the given rank and
    /// `|d| ≤ max_abs_d`, in increasing order of `d`.
    pub fn enumerate(lattice: NSLattice, r: i64, max_abs_d: i64) -> Vec<ProblemInstance> {
        (-max_abs_d..=max_abs_d)
            .filter_map(|d| {
                let num = d * d * lattice.h_squared + 2;
                (num % (2 * r) == 0).then(|| ProblemInstance::new(lattice, r, d, num / (2 * r)))
            })
            .filter_map(Result::ok)
            .collect()
    }

    /// All instances with even `H² ≤ max_h2`, `1 ≤ r ≤ max_r` and
    /// `|d| ≤ max_abs_d`, on both lattices where the class group allows it.
    pub fn grid(max_h2: i64, max_r: i64, max_abs_d: i64) -> Vec<ProblemInstance> {
        let mut out = Vec::new();
        for h2 in (2..=max_h2).step_by(2) {
            for nontrivial in [false, true] {
                let Ok(lattice) = NSLattice::new(h2, nontrivial) else {
                    continue;
                };
                for r in 1..=max_r {
                    out.extend(ProblemInstance::enumerate(lattice, r, max_abs_d));
                }
            }
        }
        out
    }

    pub fn lattice(&self) -> NSLattice {
        self.lattice
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn h_squared(&self) -> i64 {
        self.lattice.h_squared
    }

    /// `u = (r, dH, a)`
    pub fn u(&self) -> MukaiVector {
        MukaiVector::new(self.r, self.lattice.multiple_of_h(self.d), self.a)
    }

    /// `v = u ⊗ O(L) = (r, dH + rL, a − r)`
    pub fn v(&self) -> MukaiVector {
        self.u()
            .twist_by_l()
            .expect("twist of an integral vector stays integral")
    }

    /// `t_m = (0, L, m)`, the class of `O_L(m − 1)`.
    pub fn t(&self, m: i64) -> MukaiVector {
        MukaiVector::new(0, self.lattice.l(), m)
    }

    /// `(k1/2)·r`, the rank of a candidate with doubled rank multiplier `k1`.
    pub(crate) fn half_rank(&self, k1: i64) -> Q {
        q(k1 * self.r, 2)
    }
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "H^2={} r={} d={} a={} Cl{}Pic",
            self.lattice.h_squared,
            self.r,
            self.d,
            self.a,
            if self.lattice.class_group_nontrivial {
                "!="
            } else {
                "="
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(h2: i64, cl: bool) -> NSLattice {
        NSLattice::new(h2, cl).unwrap()
    }

    #[test]
    fn intersection_examples() {
        let l18 = lat(18, true);
        assert_eq!(l18.h().intersect(&l18.l()).unwrap(), qi(0));
        assert_eq!(l18.l().intersect(&l18.l()).unwrap(), qi(-2));
        let half = l18.divisor(1, 1).unwrap();
        assert_eq!(half.intersect(&half).unwrap(), qi(4));
    }

    #[test]
    fn mismatched_lattices_are_rejected() {
        let a = lat(18, true).h();
        let b = lat(18, false).h();
        assert_eq!(a.intersect(&b), Err(Error::LatticeMismatch));
        let va = MukaiVector::new(1, a, 0);
        let vb = MukaiVector::new(1, b, 0);
        assert_eq!(va.pair(&vb), Err(Error::LatticeMismatch));
    }

    #[test]
    fn lattice_constructor_gates() {
        assert!(matches!(
            NSLattice::new(0, false),
            Err(Error::InvalidHSquared(0))
        ));
        assert!(matches!(
            NSLattice::new(7, false),
            Err(Error::InvalidHSquared(7))
        ));
        assert!(matches!(
            NSLattice::new(4, true),
            Err(Error::ClassGroupMod8(4))
        ));
        assert!(NSLattice::new(10, true).is_ok());
    }

    #[test]
    fn divisor_parity() {
        let cl = lat(18, true);
        let pic = lat(18, false);
        assert!(cl.divisor(1, 2).is_err());
        assert!(pic.divisor(1, 1).is_err());
        assert!(cl.divisor(1, 1).is_ok());
        assert!(pic.divisor(2, 4).is_ok());
    }

    #[test]
    fn pairing_examples() {
        let inst = ProblemInstance::new(lat(18, true), 2, 1, 5).unwrap();
        let u = inst.u();
        let v = inst.v();
        assert_eq!(u.pair(&inst.t(-1)).unwrap(), qi(2));
        assert_eq!(inst.t(-1).pair(&inst.t(-1)).unwrap(), qi(-2));
        for m in -4..=4 {
            assert_eq!(v.pair(&inst.t(m)).unwrap(), qi(-(2 + m) * 2));
        }
    }

    #[test]
    fn twist_examples() {
        let l = lat(4, false);
        let inst = ProblemInstance::new(l, 3, 1, 1).unwrap();
        let v = inst.u().twist_by_l().unwrap();
        assert_eq!(v.rank(), &qi(3));
        assert_eq!(v.divisor(), &l.divisor(2, 6).unwrap());
        assert_eq!(v.degree(), &qi(-2));

        let o = MukaiVector::new(1, l.zero_class(), 1);
        assert_eq!(o.twist_by_l().unwrap(), MukaiVector::new(1, l.l(), 0));

        let t = MukaiVector::new(0, l.l(), 3);
        assert_eq!(t.twist_by_l().unwrap(), MukaiVector::new(0, l.l(), 1));
    }

    #[test]
    fn euler_characteristics() {
        let inst = ProblemInstance::new(lat(4, false), 3, 1, 1).unwrap();
        let u = inst.u();
        assert_eq!(u.euler_char(&u).unwrap(), qi(2));
        assert_eq!(u.euler_char(&inst.v()).unwrap(), qi(2 - 9));
        let t = inst.t(-1);
        assert_eq!(t.euler_char(&t).unwrap(), qi(2));
    }

    #[test]
    fn instance_validation() {
        let l = lat(4, false);
        assert_eq!(
            ProblemInstance::new(l, 2, 1, 1),
            Err(Error::NotSpherical(0))
        );
        assert_eq!(
            ProblemInstance::new(l, 0, 1, 1),
            Err(Error::NonPositiveRank(0))
        );
        let found = ProblemInstance::enumerate(l, 1, 2);
        let ds: Vec<_> = found.iter().map(|i| (i.d(), i.a())).collect();
        assert_eq!(ds, vec![(-2, 9), (-1, 3), (0, 1), (1, 3), (2, 9)]);
    }

    #[test]
    fn proportionality() {
        let inst = ProblemInstance::new(lat(18, true), 2, 1, 5).unwrap();
        let u = inst.u();
        assert!(u.is_proportional(&u.negated()));
        assert!(!u.is_proportional(&inst.v()));
    }
}
