//! Geometry of the `(s, t)` half plane of stability conditions
//! `σ_(s,t) = (Z_(sH_ε, tH_ε), A_(sH_ε, tH_ε))` along `H_ε = H − εL`.
//!
//! The vertical coordinate `t` never appears on its own: walls are solved for
//! `t²`, and `Im Z` is `t` times a coefficient that does not depend on `t`.
//! Phases are compared pairwise through cross products, never computed.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::asymptotics::{EpsPoly, EpsRational, Sign};
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, MukaiVector, ProblemInstance};
use crate::{q, qi, Q};

/// The polarization path `H_ε = H − εL` attached to an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolarizationPath {
    instance: ProblemInstance,
}

impl PolarizationPath {
    pub fn new(instance: ProblemInstance) -> Self {
        PolarizationPath { instance }
    }

    pub fn instance(&self) -> &ProblemInstance {
        &self.instance
    }

    /// `H²` as a constant polynomial.
    pub fn h_squared(&self) -> EpsPoly {
        EpsPoly::int(self.instance.h_squared())
    }

    /// `H_ε² = H² − 2ε²`
    pub fn h_eps_squared(&self) -> EpsPoly {
        EpsPoly::from_terms([(0, 0, qi(self.instance.h_squared())), (2, 0, qi(-2))])
    }

    /// `D·H_ε = D·H + ε·(e1)` for `D = (k1H + e1L)/2`.
    pub fn dot(&self, divisor: &DivisorClass) -> EpsPoly {
        EpsPoly::from_terms([
            (0, 0, q(divisor.k1() * self.instance.h_squared(), 2)),
            (1, 0, qi(divisor.e1())),
        ])
    }

    /// `s₀ = dH·H_ε / (r H_ε²)`, the abscissa where `Im Z(u)` vanishes.
    pub fn centre_abscissa(&self) -> EpsRational {
        let inst = &self.instance;
        EpsRational::new(
            EpsPoly::int(inst.d() * inst.h_squared()),
            self.h_eps_squared().scale(&qi(inst.r())),
        )
        .expect("H_eps^2 is positive")
    }

    /// The vertical line `b` at `s(ε′) = s₀ − ε′`.
    pub fn default_line(&self) -> VerticalLine {
        let s = &self.centre_abscissa() - &EpsRational::from(EpsPoly::epsp());
        VerticalLine::new(*self, s)
    }

    /// The same construction with `ε` in place of `ε′`, i.e. `s₀ − ε`.
    pub fn eps_shifted_line(&self) -> VerticalLine {
        let s = &self.centre_abscissa() - &EpsRational::from(EpsPoly::eps());
        VerticalLine::new(*self, s)
    }

    pub fn sigma_u(&self) -> SigmaU {
        let inst = &self.instance;
        let r_he2 = self.h_eps_squared().scale(&qi(inst.r()));
        let s = self.centre_abscissa();
        let two_a = EpsRational::new(EpsPoly::int(2 * inst.a()), r_he2).expect("positive");
        let t_squared = &two_a - &(&s * &s);
        SigmaU { s, t_squared }
    }

    pub fn central_charge(&self, v: &MukaiVector, s: &EpsRational) -> CentralCharge {
        VerticalLine::new(*self, s.clone()).central_charge(v)
    }

    /// `H_ε·(c1(v) − rk(v)·s·H_ε)` on `line`, with the positive denominator
    /// cleared. A class passes effectivity when this has sign `≥ 0`.
    pub fn effectivity_defect(&self, v: &MukaiVector, line: &VerticalLine) -> EpsPoly {
        line.im_coeff(v).numerator().clone()
    }

    /// The numerical wall `W(w1, w2)` where `Z(w1)` and `Z(w2)` align.
    pub fn wall_of(&self, w1: &MukaiVector, w2: &MukaiVector) -> Result<NumericalWall> {
        if w1.lattice() != w2.lattice() {
            return Err(Error::LatticeMismatch);
        }
        if w1.is_proportional(w2) {
            return Err(Error::DegenerateWall);
        }
        let he2 = self.h_eps_squared();
        let c1 = self.dot(w1.divisor());
        let c2 = self.dot(w2.divisor());
        let (r1, r2) = (w1.rank(), w2.rank());
        let (a1, a2) = (w1.degree(), w2.degree());
        let alpha = (&c2.scale(r1) - &c1.scale(r2)).scale(&q(1, 2)) * &he2;
        let beta = he2.scale(&(a1 * r2 - a2 * r1));
        let gamma = &c1.scale(a2) - &c2.scale(a1);
        if alpha.is_zero() && beta.is_zero() && gamma.is_zero() {
            return Err(Error::DegenerateWall);
        }
        Ok(NumericalWall { alpha, beta, gamma })
    }

    /// `W_m = W(u, t_m)`
    pub fn wall_m(&self, m: i64) -> NumericalWall {
        self.wall_of(&self.instance.u(), &self.instance.t(m))
            .expect("u and t_m are independent")
    }

    /// Slope of `W_m` at `σ_u` with the positive factor `1/t` removed:
    /// `(r·m·H_ε² − 2ε·d·H²) / (2ε·r·H_ε²)`. `m` may be rational.
    pub fn slope_at_sigma_u(&self, m: &Q) -> EpsRational {
        let inst = &self.instance;
        let he2 = self.h_eps_squared();
        let num = &he2.scale(&(m * qi(inst.r())))
            - &EpsPoly::from_terms([(1, 0, qi(2 * inst.d() * inst.h_squared()))]);
        let den = &EpsPoly::eps().scale(&qi(2 * inst.r())) * &he2;
        EpsRational::new(num, den).expect("2 eps r H_eps^2 is positive")
    }
}

/// A vertical line `{s = abscissa}` in the `(s, t)` half plane.
#[derive(Clone, Debug)]
pub struct VerticalLine {
    path: PolarizationPath,
    abscissa: EpsRational,
    // s·H_ε², reused by every charge on the line
    s_he2: EpsRational,
}

impl VerticalLine {
    pub fn new(path: PolarizationPath, abscissa: EpsRational) -> Self {
        let s_he2 = &abscissa * &EpsRational::from(path.h_eps_squared());
        VerticalLine {
            path,
            abscissa,
            s_he2,
        }
    }

    /// `H_ε·(c1(v) − rk(v)·s·H_ε)`
    pub fn im_coeff(&self, v: &MukaiVector) -> EpsRational {
        let c = EpsRational::from(self.path.dot(v.divisor()));
        &c - &self.s_he2.scale(v.rank())
    }

    pub fn path(&self) -> &PolarizationPath {
        &self.path
    }

    pub fn abscissa(&self) -> &EpsRational {
        &self.abscissa
    }

    pub fn central_charge(&self, v: &MukaiVector) -> CentralCharge {
        let half_rank = v.rank() / qi(2);
        let c = EpsRational::from(self.path.dot(v.divisor()));
        // Re Z = −a + s·(D·H_ε − (r/2)·s·H_ε²) + (r/2)·t²·H_ε²
        let inner = &c - &self.s_he2.scale(&half_rank);
        let re_const =
            &EpsRational::from(EpsPoly::constant(-v.degree().clone())) + &(&self.abscissa * &inner);
        let re_t2 = EpsRational::from(self.path.h_eps_squared().scale(&half_rank));
        let im_coeff = &c - &self.s_he2.scale(v.rank());
        CentralCharge {
            re_const,
            re_t2,
            im_coeff,
        }
    }

    pub fn effectivity_defect(&self, v: &MukaiVector) -> EpsPoly {
        self.path.effectivity_defect(v, self)
    }

    pub fn height_sq(&self, wall: &NumericalWall) -> Result<WallHeight> {
        wall.height_sq(&self.abscissa)
    }
}

/// `Z = (re_const + re_t2·t²) + i·t·im_coeff`
#[derive(Clone, Debug)]
pub struct CentralCharge {
    pub re_const: EpsRational,
    pub re_t2: EpsRational,
    pub im_coeff: EpsRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Ray {
    Upper,
    NegativeReal,
}

impl CentralCharge {
    pub fn re_at(&self, t_squared: &EpsRational) -> EpsRational {
        self.re_const
            .add_unreduced(&self.re_t2.mul_unreduced(t_squared))
    }

    fn ray(&self, re: &EpsRational) -> Result<Ray> {
        match (self.im_coeff.sign(), re.sign()) {
            (Sign::Positive, _) => Ok(Ray::Upper),
            (Sign::Zero, Sign::Negative) => Ok(Ray::NegativeReal),
            (Sign::Zero, Sign::Zero) => Err(Error::ZeroCharge),
            _ => Err(Error::OutsideHeart),
        }
    }

    /// Compares `φ(self)` with `φ(other)` at height `t²`.
    pub fn phase_compare(
        &self,
        other: &CentralCharge,
        t_squared: &EpsRational,
    ) -> Result<Ordering> {
        let re1 = self.re_at(t_squared);
        let re2 = other.re_at(t_squared);
        match (self.ray(&re1)?, other.ray(&re2)?) {
            (Ray::NegativeReal, Ray::NegativeReal) => Ok(Ordering::Equal),
            (Ray::Upper, Ray::NegativeReal) => Ok(Ordering::Less),
            (Ray::NegativeReal, Ray::Upper) => Ok(Ordering::Greater),
            (Ray::Upper, Ray::Upper) => {
                let cross = cross(&re1, &other.im_coeff, &re2, &self.im_coeff);
                Ok(cross.sign().cmp(&Sign::Zero).reverse())
            }
        }
    }

    /// `Re(self)·Im(other) − Re(other)·Im(self)` as `(A, B)` with the cross
    /// product equal to `A + B·t²`. For charges in the upper half plane it is
    /// positive exactly when `φ(self) < φ(other)`.
    pub fn cross_affine(&self, other: &CentralCharge) -> (EpsRational, EpsRational) {
        (
            cross(
                &self.re_const,
                &other.im_coeff,
                &other.re_const,
                &self.im_coeff,
            ),
            cross(&self.re_t2, &other.im_coeff, &other.re_t2, &self.im_coeff),
        )
    }

    /// The `t²` where the phases of `self` and `other` agree on this line,
    /// if the cross product actually depends on `t²`.
    pub fn crossing(&self, other: &CentralCharge) -> Option<EpsRational> {
        let (a, b) = self.cross_affine(other);
        (-a).div(&b).ok()
    }

    /// Phase comparison in the large volume limit `t → ∞`.
    pub fn phase_compare_at_infinity(&self, other: &CentralCharge) -> Result<Ordering> {
        if self.im_coeff.sign() != Sign::Positive || other.im_coeff.sign() != Sign::Positive {
            return Err(Error::OutsideHeart);
        }
        // The leading part of the affine cross product decides.
        let (constant, slope) = self.cross_affine(other);
        let cross = if slope.is_zero() { constant } else { slope };
        Ok(cross.sign().cmp(&Sign::Zero).reverse())
    }
}

/// `a·b − c·d`, unreduced; only its sign is used.
fn cross(a: &EpsRational, b: &EpsRational, c: &EpsRational, d: &EpsRational) -> EpsRational {
    a.mul_unreduced(b).add_unreduced(&(-&c.mul_unreduced(d)))
}

/// The locus `α(s² + t²) + β·s + γ = 0`, stored up to a nonzero scalar.
#[derive(Clone, Debug)]
pub struct NumericalWall {
    pub alpha: EpsPoly,
    pub beta: EpsPoly,
    pub gamma: EpsPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WallHeight {
    Height(EpsRational),
    NoIntersection,
}

impl WallHeight {
    pub fn as_height(&self) -> Option<&EpsRational> {
        match self {
            WallHeight::Height(h) => Some(h),
            WallHeight::NoIntersection => None,
        }
    }
}

impl NumericalWall {
    pub fn new(alpha: EpsPoly, beta: EpsPoly, gamma: EpsPoly) -> Self {
        NumericalWall { alpha, beta, gamma }
    }

    pub fn is_vertical(&self) -> bool {
        self.alpha.is_zero()
    }

    /// The left-hand side `α(s² + t²) + β·s + γ` at a point.
    pub fn evaluate(&self, s: &EpsRational, t_squared: &EpsRational) -> EpsRational {
        let alpha = EpsRational::from(self.alpha.clone());
        let beta = EpsRational::from(self.beta.clone());
        let gamma = EpsRational::from(self.gamma.clone());
        let radial = &(s * s) + t_squared;
        &(&(&alpha * &radial) + &(&beta * s)) + &gamma
    }

    pub fn contains(&self, s: &EpsRational, t_squared: &EpsRational) -> bool {
        self.evaluate(s, t_squared).is_zero()
    }

    /// `t²` where the wall meets the vertical line at `s`.
    pub fn height_sq(&self, s: &EpsRational) -> Result<WallHeight> {
        if self.alpha.sign() == Sign::Zero {
            return Err(Error::VerticalWall);
        }
        // With s = N/D: t² = (−(βN + γD)·D − αN²) / (αD²)
        let (n, d) = (s.numerator(), s.denominator());
        let num = -(&(&self.beta * n + &self.gamma * d) * d) - &(&self.alpha * &(n * n));
        let den = &self.alpha * &(d * d);
        let t2 = EpsRational::new(num, den)?;
        Ok(match t2.sign() {
            Sign::Positive => WallHeight::Height(t2),
            _ => WallHeight::NoIntersection,
        })
    }

    /// Implicit slope `dt/ds` at abscissa `s`, multiplied by `t`.
    pub fn slope_times_t(&self, s: &EpsRational) -> Result<EpsRational> {
        let alpha = EpsRational::from(self.alpha.clone());
        let two_alpha_s = (&alpha * s).scale(&qi(2));
        let num = -(&two_alpha_s + &EpsRational::from(self.beta.clone()));
        num.div(&alpha.scale(&qi(2)))
    }

    fn triple(&self) -> [&EpsPoly; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    /// Projective equality: the coefficient triples are proportional.
    pub fn same_as(&self, other: &NumericalWall) -> bool {
        let a = self.triple();
        let b = other.triple();
        (0..3).all(|i| (i + 1..3).all(|j| (a[i] * b[j] - a[j] * b[i]).is_zero()))
    }

    /// Projective equality up to a positive factor.
    pub fn same_oriented_as(&self, other: &NumericalWall) -> bool {
        if !self.same_as(other) {
            return false;
        }
        self.triple()
            .iter()
            .zip(other.triple())
            .find(|(a, _)| !a.is_zero())
            .map(|(a, b)| a.sign() == b.sign())
            .unwrap_or(false)
    }
}

/// The point `σ_u` where the extended central charge of `u` vanishes.
#[derive(Clone, Debug)]
pub struct SigmaU {
    pub s: EpsRational,
    pub t_squared: EpsRational,
}

/// Limit of the phase as `t → ∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseLimit {
    PositiveRankZero,
    TorsionHalf,
    TorsionOne,
}

pub fn limit_phase_class(v: &MukaiVector) -> Result<PhaseLimit> {
    if v.rank().is_positive() {
        return Ok(PhaseLimit::PositiveRankZero);
    }
    let l = v.lattice().l();
    if v.rank().is_zero() && *v.divisor() == l {
        if v.degree().is_zero() {
            return Ok(PhaseLimit::TorsionHalf);
        }
        if v.degree().is_positive() {
            return Ok(PhaseLimit::TorsionOne);
        }
    }
    Err(Error::UnsupportedShape(v.to_string()))
}

impl PhaseLimit {
    /// The limiting phase as a fraction of π.
    pub fn value(self) -> Q {
        match self {
            PhaseLimit::PositiveRankZero => Q::zero(),
            PhaseLimit::TorsionHalf => q(1, 2),
            PhaseLimit::TorsionOne => Q::one(),
        }
    }
}
