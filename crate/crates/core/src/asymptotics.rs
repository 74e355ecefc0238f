//! Exact polynomials and fractions in two formal infinitesimals `ε` and `ε′`,
//! ordered by `0 < ε′ ≪ ε ≪ 1`.
//!
//! Every positive power of `ε′` is smaller than every positive power of `ε`,
//! so the sign of a nonzero [`EpsPoly`] is the sign of the coefficient of its
//! dominant monomial: fewest powers of `ε′` first, then fewest powers of `ε`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Q;

/// Sign of a quantity under the infinitesimal ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(q: &Q) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_nonnegative(self) -> bool {
        self != Sign::Negative
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        match self.as_i8() * rhs.as_i8() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Negative
    }
}

/// The monomial `ε^eps · ε′^epsp`.
///
/// Field order makes the derived `Ord` the dominance order: the smallest
/// monomial is the asymptotically largest one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub epsp: u32,
    pub eps: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { epsp: 0, eps: 0 };

    pub fn new(eps: u32, epsp: u32) -> Self {
        Monomial { epsp, eps }
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial {
            epsp: self.epsp + other.epsp,
            eps: self.eps + other.eps,
        }
    }

    fn divides(self, other: Monomial) -> bool {
        self.eps <= other.eps && self.epsp <= other.epsp
    }

    fn total_degree(self) -> u32 {
        self.eps + self.epsp
    }
}

/// A polynomial `Σ c_ij ε^i ε′^j` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EpsPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl EpsPoly {
    pub fn zero() -> Self {
        EpsPoly::default()
    }

    pub fn one() -> Self {
        EpsPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        EpsPoly::monomial(c, Monomial::ONE)
    }

    pub fn int(c: i64) -> Self {
        EpsPoly::constant(Q::from_integer(c.into()))
    }

    /// `ε`
    pub fn eps() -> Self {
        EpsPoly::monomial(Q::one(), Monomial::new(1, 0))
    }

    /// `ε′`
    pub fn epsp() -> Self {
        EpsPoly::monomial(Q::one(), Monomial::new(0, 1))
    }

    pub fn monomial(c: Q, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        EpsPoly { terms }
    }

    /// Builds a polynomial from `(eps power, epsp power, coefficient)` triples,
    /// summing repeated monomials.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Q)>,
    {
        let mut p = EpsPoly::zero();
        for (i, j, c) in terms {
            p.add_term(Monomial::new(i, j), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Q::zero);
        // Integer coefficients are the common case; skip the gcd for them.
        if slot.is_integer() && c.is_integer() {
            *slot = Q::from_integer(slot.numer() + c.numer());
        } else {
            *slot += c;
        }
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Q)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, eps: u32, epsp: u32) -> Q {
        self.terms
            .get(&Monomial::new(eps, epsp))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    /// The constant coefficient if the polynomial has no infinitesimal terms.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// The asymptotically dominant term.
    pub fn leading(&self) -> Option<(Monomial, &Q)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    /// Sign for all sufficiently small `0 < ε′ ≪ ε`.
    pub fn sign(&self) -> Sign {
        match self.leading() {
            None => Sign::Zero,
            Some((_, c)) => Sign::of(c),
        }
    }

    pub fn scale(&self, c: &Q) -> EpsPoly {
        if c.is_zero() {
            return EpsPoly::zero();
        }
        EpsPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> EpsPoly {
        let mut acc = EpsPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at concrete values of `ε` and `ε′`.
    pub fn instantiate(&self, eps: &Q, epsp: &Q) -> Q {
        let mut eps_pows: Vec<Q> = vec![Q::one()];
        let mut epsp_pows: Vec<Q> = vec![Q::one()];
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            while eps_pows.len() <= m.eps as usize {
                let next = eps_pows.last().unwrap() * eps;
                eps_pows.push(next);
            }
            while epsp_pows.len() <= m.epsp as usize {
                let next = epsp_pows.last().unwrap() * epsp;
                epsp_pows.push(next);
            }
            total += c * &eps_pows[m.eps as usize] * &epsp_pows[m.epsp as usize];
        }
        total
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Uses lexicographic division with a single divisor, whose
    /// remainder is unique.
    pub fn exact_div(&self, divisor: &EpsPoly) -> Option<EpsPoly> {
        let (lead_m, lead_c) = divisor.terms.iter().next_back()?;
        let (lead_m, lead_c) = (*lead_m, lead_c.clone());
        let mut rem = self.clone();
        let mut quotient = EpsPoly::zero();
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            if !lead_m.divides(m) {
                return None;
            }
            let qm = Monomial {
                epsp: m.epsp - lead_m.epsp,
                eps: m.eps - lead_m.eps,
            };
            let qc = c / &lead_c;
            let step = EpsPoly::monomial(qc.clone(), qm);
            rem = &rem - &(&step * divisor);
            quotient.add_term(qm, qc);
        }
        Some(quotient)
    }
}

impl fmt::Display for EpsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let mag = c.abs();
            let bare = m == &Monomial::ONE;
            if bare || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for (name, power) in [("eps", m.eps), ("eps'", m.epsp)] {
                match power {
                    0 => {}
                    1 => write!(f, "{name}")?,
                    p => write!(f, "{name}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

impl From<Q> for EpsPoly {
    fn from(c: Q) -> Self {
        EpsPoly::constant(c)
    }
}

impl From<i64> for EpsPoly {
    fn from(c: i64) -> Self {
        EpsPoly::int(c)
    }
}

impl<'a> Add<&'a EpsPoly> for &EpsPoly {
    type Output = EpsPoly;

    fn add(self, rhs: &'a EpsPoly) -> EpsPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a EpsPoly> for &EpsPoly {
    type Output = EpsPoly;

    fn sub(self, rhs: &'a EpsPoly) -> EpsPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a EpsPoly> for &EpsPoly {
    type Output = EpsPoly;

    fn mul(self, rhs: &'a EpsPoly) -> EpsPoly {
        let mut out = EpsPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let product = if ca.is_integer() && cb.is_integer() {
                    Q::from_integer(ca.numer() * cb.numer())
                } else {
                    ca * cb
                };
                out.add_term(ma.times(*mb), product);
            }
        }
        out
    }
}

impl Neg for &EpsPoly {
    type Output = EpsPoly;

    fn neg(self) -> EpsPoly {
        EpsPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $method:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(EpsPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for EpsPoly {
    type Output = EpsPoly;

    fn neg(self) -> EpsPoly {
        -&self
    }
}

/// A fraction of [`EpsPoly`]s whose denominator is positive under the
/// infinitesimal ordering.
///
/// No polynomial GCD is taken; constant denominators are folded into the
/// numerator and exact polynomial quotients are taken when they exist.
#[derive(Clone, Debug)]
pub struct EpsRational {
    num: EpsPoly,
    den: EpsPoly,
}

impl EpsRational {
    pub fn new(num: EpsPoly, den: EpsPoly) -> Result<Self> {
        match den.sign() {
            Sign::Zero => Err(Error::ZeroDenominator),
            Sign::Positive => Ok(EpsRational::normalized(num, den)),
            Sign::Negative => Ok(EpsRational::normalized(-num, -den)),
        }
    }

    fn normalized(num: EpsPoly, den: EpsPoly) -> Self {
        if den.is_one() {
            return EpsRational { num, den };
        }
        if let Some(c) = den.as_constant() {
            let inv = c.recip();
            return EpsRational {
                num: num.scale(&inv),
                den: EpsPoly::one(),
            };
        }
        if let Some(q) = num.exact_div(&den) {
            return EpsRational {
                num: q,
                den: EpsPoly::one(),
            };
        }
        EpsRational { num, den }
    }

    pub fn from_poly(p: EpsPoly) -> Self {
        EpsRational {
            num: p,
            den: EpsPoly::one(),
        }
    }

    pub fn zero() -> Self {
        EpsRational::from_poly(EpsPoly::zero())
    }

    pub fn numerator(&self) -> &EpsPoly {
        &self.num
    }

    pub fn denominator(&self) -> &EpsPoly {
        &self.den
    }

    /// The polynomial value when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&EpsPoly> {
        (self.den.as_constant() == Some(Q::one())).then_some(&self.num)
    }

    pub fn sign(&self) -> Sign {
        self.num.sign()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn compare(&self, other: &EpsRational) -> Ordering {
        let lhs = &self.num * &other.den;
        let rhs = &other.num * &self.den;
        match (lhs - rhs).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn recip(&self) -> Result<EpsRational> {
        EpsRational::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &EpsRational) -> Result<EpsRational> {
        EpsRational::new(&self.num * &other.den, &self.den * &other.num)
    }

    /// `self + other` without attempting to cancel the denominator. Cheaper
    /// when only the sign of the result matters.
    pub fn add_unreduced(&self, other: &EpsRational) -> EpsRational {
        if self.den == other.den {
            return EpsRational {
                num: &self.num + &other.num,
                den: self.den.clone(),
            };
        }
        EpsRational {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }

    /// `self · other` without attempting to cancel the denominator.
    pub fn mul_unreduced(&self, other: &EpsRational) -> EpsRational {
        EpsRational {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    pub fn scale(&self, c: &Q) -> EpsRational {
        EpsRational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn instantiate(&self, eps: &Q, epsp: &Q) -> Result<Q> {
        let den = self.den.instantiate(eps, epsp);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.instantiate(eps, epsp) / den)
    }
}

impl PartialEq for EpsRational {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for EpsRational {}

impl PartialOrd for EpsRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EpsRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant() == Some(Q::one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<EpsPoly> for EpsRational {
    fn from(p: EpsPoly) -> Self {
        EpsRational::from_poly(p)
    }
}

impl<'a> Add<&'a EpsRational> for &EpsRational {
    type Output = EpsRational;

    fn add(self, rhs: &'a EpsRational) -> EpsRational {
        if self.den == rhs.den {
            return EpsRational::normalized(&self.num + &rhs.num, self.den.clone());
        }
        EpsRational::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a EpsRational> for &EpsRational {
    type Output = EpsRational;

    fn sub(self, rhs: &'a EpsRational) -> EpsRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a EpsRational> for &EpsRational {
    type Output = EpsRational;

    fn mul(self, rhs: &'a EpsRational) -> EpsRational {
        EpsRational::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &EpsRational {
    type Output = EpsRational;

    fn neg(self) -> EpsRational {
        EpsRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(EpsRational, Add::add, Sub::sub, Mul::mul);

impl Neg for EpsRational {
    type Output = EpsRational;

    fn neg(self) -> EpsRational {
        -&self
    }
}
