//! Candidate destabilizing spherical classes and the classification they feed.
//!
//! Three families are swept:
//! * `ForU`: `u′ = (k1·r/2, (k1·dH + e1·L)/2, m)` against `u` on the line `b`;
//! * `ForT`: `g = e′·t_{-1} + (k1/2)·u` with `e′ = e1/2`, against `t_{-1}`;
//! * `ForV`: `v′` of the same shape as `u′`, against `v = u(L)`.
//!
//! Only `ForV` survivors decide the outcome. The other two sweeps check that
//! `u` and `t_{-1}` stay stable down to `W_{-1}`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::asymptotics::{EpsRational, Sign};
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, MukaiVector, ProblemInstance};
use crate::plane::{
    limit_phase_class, NumericalWall, PhaseLimit, PolarizationPath, VerticalLine, WallHeight,
};
use crate::{q, qi, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CandidateKind {
    ForU,
    ForT,
    ForV,
}

impl CandidateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CandidateKind::ForU => "for_u",
            CandidateKind::ForT => "for_t",
            CandidateKind::ForV => "for_v",
        }
    }
}

/// A candidate class in doubled coordinates; see the module docs for the
/// vector each kind stands for.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Candidate {
    pub kind: CandidateKind,
    pub k1: i64,
    pub e1: i64,
    pub m: Q,
}

impl Candidate {
    /// `u′` with `m` forced by sphericality.
    pub fn for_u(inst: &ProblemInstance, k1: i64, e1: i64) -> Result<Self> {
        Ok(Candidate {
            kind: CandidateKind::ForU,
            k1,
            e1,
            m: m_from_ke(k1, e1, inst)?,
        })
    }

    /// `v′` with `m` forced by sphericality.
    pub fn for_v(inst: &ProblemInstance, k1: i64, e1: i64) -> Result<Self> {
        Ok(Candidate {
            kind: CandidateKind::ForV,
            k1,
            e1,
            m: m_from_ke(k1, e1, inst)?,
        })
    }

    /// `g = (e1/2)·t_{-1} + (k1/2)·u`
    pub fn for_t(inst: &ProblemInstance, k1: i64, e1: i64) -> Self {
        Candidate {
            kind: CandidateKind::ForT,
            k1,
            e1,
            m: q(k1 * inst.a() - e1, 2),
        }
    }

    /// A rank-zero class `(0, (e1/2)L, m)`, where `m` is not forced.
    pub fn rank_zero(kind: CandidateKind, e1: i64, m: i64) -> Self {
        Candidate {
            kind,
            k1: 0,
            e1,
            m: qi(m),
        }
    }

    pub fn k(&self) -> Q {
        q(self.k1, 2)
    }

    pub fn e(&self) -> Q {
        q(self.e1, 2)
    }

    pub fn divisor(&self, inst: &ProblemInstance) -> Result<DivisorClass> {
        inst.lattice().divisor(self.k1 * inst.d(), self.e1)
    }

    /// The Mukai vector, with possibly fractional rank or degree.
    pub fn vector(&self, inst: &ProblemInstance) -> Result<MukaiVector> {
        Ok(MukaiVector::with_rational(
            inst.half_rank(self.k1),
            self.divisor(inst)?,
            self.m.clone(),
        ))
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}, {}, {})",
            self.kind.as_str(),
            self.k1,
            self.e1,
            self.m
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FailureKind {
    Parity,
    Integrality,
    Sphericality,
    EffectivityOfCandidate,
    EffectivityOfComplement,
    PairingSign,
    WallPosition,
    LimitPhaseContradiction,
    RankBound,
    CaseAnalysis,
    TrivialFactor,
}

impl FailureKind {
    pub fn tag(self) -> &'static str {
        match self {
            FailureKind::Parity => "parity",
            FailureKind::Integrality => "integrality",
            FailureKind::Sphericality => "sphericality",
            FailureKind::EffectivityOfCandidate => "effectivity-of-candidate",
            FailureKind::EffectivityOfComplement => "effectivity-of-complement",
            FailureKind::PairingSign => "pairing-sign",
            FailureKind::WallPosition => "wall-position",
            FailureKind::LimitPhaseContradiction => "limit-phase-contradiction",
            FailureKind::RankBound => "rank-bound",
            FailureKind::CaseAnalysis => "case-analysis",
            FailureKind::TrivialFactor => "trivial-factor",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.tag(), self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub passed: bool,
    pub failures: Vec<Failure>,
}

impl Verdict {
    fn from_failures(failures: Vec<Failure>) -> Self {
        Verdict {
            passed: failures.is_empty(),
            failures,
        }
    }

    pub fn has(&self, kind: FailureKind) -> bool {
        self.failures.iter().any(|f| f.kind == kind)
    }

    pub fn failure(&self, kind: FailureKind) -> Option<&Failure> {
        self.failures.iter().find(|f| f.kind == kind)
    }
}

fn fail(kind: FailureKind, detail: impl Into<String>) -> Failure {
    Failure {
        kind,
        detail: detail.into(),
    }
}

/// `m = k·a − (k² + e² − 1)/(k·r)` with `k = k1/2`, `e = e1/2`.
pub fn m_from_ke(k1: i64, e1: i64, inst: &ProblemInstance) -> Result<Q> {
    if k1 == 0 {
        return Err(Error::ZeroK1);
    }
    // Over the common denominator 2·k1·r:
    // m = (k1²·a·r − (k1² + e1² − 4)) / (2·k1·r)
    let (k1, e1) = (k1 as i128, e1 as i128);
    let (a, r) = (inst.a() as i128, inst.r() as i128);
    let num = k1 * k1 * a * r - (k1 * k1 + e1 * e1 - 4);
    Ok(Q::new(num.into(), (2 * k1 * r).into()))
}

/// `v·v′ = −k − 2er + (e² − 1)/k + k·r²`
pub fn vv_prime(k1: i64, e1: i64, r: i64) -> Result<Q> {
    if k1 == 0 {
        return Err(Error::ZeroK1);
    }
    let (k, e, r) = (q(k1, 2), q(e1, 2), qi(r));
    let term = (&e * &e - Q::one()) / &k;
    Ok(-&k - qi(2) * &e * &r + term + &k * &r * &r)
}

/// Per-instance data shared by every candidate check.
struct Context {
    inst: ProblemInstance,
    path: PolarizationPath,
    line: VerticalLine,
    wall_minus_one: NumericalWall,
    w_minus_one: EpsRational,
}

impl Context {
    fn new(inst: ProblemInstance) -> Result<Self> {
        let path = PolarizationPath::new(inst);
        let line = path.default_line();
        let wall_minus_one = path.wall_m(-1);
        let w_minus_one = match line.height_sq(&wall_minus_one)? {
            WallHeight::Height(h) => h,
            WallHeight::NoIntersection => {
                return Err(Error::InvariantBreach(format!(
                    "W_-1 misses the line b for {inst}"
                )))
            }
        };
        Ok(Context {
            inst,
            path,
            line,
            wall_minus_one,
            w_minus_one,
        })
    }

    /// Parity and integrality, the two checks that leave no usable vector.
    fn build(&self, cand: &Candidate) -> std::result::Result<MukaiVector, Failure> {
        let divisor = cand.divisor(&self.inst).map_err(|err| {
            fail(
                FailureKind::Parity,
                format!("({}dH + {}L)/2 is not a class: {err}", cand.k1, cand.e1),
            )
        })?;
        let rank = self.inst.half_rank(cand.k1);
        if !rank.is_integer() {
            return Err(fail(FailureKind::Integrality, format!("rank {rank}")));
        }
        if !cand.m.is_integer() {
            return Err(fail(FailureKind::Integrality, format!("m = {}", cand.m)));
        }
        Ok(MukaiVector::with_rational(rank, divisor, cand.m.clone()))
    }

    fn effectivity(&self, x: &MukaiVector, kind: FailureKind, out: &mut Vec<Failure>) {
        let defect = self.line.effectivity_defect(x);
        if defect.sign() == Sign::Negative {
            out.push(fail(kind, format!("Im coefficient {defect} < 0")));
        }
    }

    /// Strictly above `W_{-1}` on `b`.
    fn wall_above(&self, w1: &MukaiVector, w2: &MukaiVector) -> Option<Failure> {
        let wall = match self.path.wall_of(w1, w2) {
            Ok(w) => w,
            Err(_) => return Some(fail(FailureKind::WallPosition, "W=W_{-1}")),
        };
        if wall.same_as(&self.wall_minus_one) {
            return Some(fail(FailureKind::WallPosition, "W=W_{-1}"));
        }
        match self.line.height_sq(&wall) {
            Err(_) => Some(fail(FailureKind::WallPosition, "vertical wall")),
            Ok(WallHeight::NoIntersection) => {
                Some(fail(FailureKind::WallPosition, "wall misses the line b"))
            }
            Ok(WallHeight::Height(t2)) => match t2.compare(&self.w_minus_one) {
                Ordering::Greater => None,
                Ordering::Equal => Some(fail(FailureKind::WallPosition, "meets b on W_{-1}")),
                Ordering::Less => Some(fail(FailureKind::WallPosition, "below W_{-1} on b")),
            },
        }
    }

    fn check_s(&self, cand: &Candidate) -> Result<Verdict> {
        expect_kind(cand, CandidateKind::ForU)?;
        let up = match self.build(cand) {
            Ok(x) => x,
            Err(f) => return Ok(Verdict::from_failures(vec![f])),
        };
        let u = self.inst.u();
        let mut out = Vec::new();
        if !up.is_spherical() {
            out.push(fail(
                FailureKind::Sphericality,
                format!("u'^2 = {}", up.square()),
            ));
        }
        self.effectivity(&up, FailureKind::EffectivityOfCandidate, &mut out);
        self.effectivity(
            &u.checked_sub(&up)?,
            FailureKind::EffectivityOfComplement,
            &mut out,
        );
        let pairing = u.pair(&up)?;
        if !pairing.is_negative() {
            out.push(fail(FailureKind::PairingSign, format!("uu'={pairing}")));
        }
        if out.is_empty() {
            out.extend(self.wall_above(&u, &up));
        }
        Ok(Verdict::from_failures(out))
    }

    fn check_t(&self, cand: &Candidate) -> Result<Verdict> {
        expect_kind(cand, CandidateKind::ForT)?;
        let g = match self.build(cand) {
            Ok(x) => x,
            Err(f) => return Ok(Verdict::from_failures(vec![f])),
        };
        let t = self.inst.t(-1);
        let mut out = Vec::new();
        if !g.is_spherical() {
            out.push(fail(
                FailureKind::Sphericality,
                format!("g^2 = {}", g.square()),
            ));
        }
        self.effectivity(&g, FailureKind::EffectivityOfCandidate, &mut out);
        self.effectivity(
            &t.checked_sub(&g)?,
            FailureKind::EffectivityOfComplement,
            &mut out,
        );
        if g == self.inst.u() {
            out.push(fail(FailureKind::TrivialFactor, "g = u"));
        } else if g.rank().is_zero() {
            out.push(fail(FailureKind::TrivialFactor, "g has rank zero"));
        }
        if cand.e1 == 1 {
            let k1 = cand.k1;
            let value = k1 * (k1 - self.inst.r());
            if value != 3 {
                out.push(fail(
                    FailureKind::CaseAnalysis,
                    format!("k1(k1 - r) = {value} != 3"),
                ));
            }
        }
        Ok(Verdict::from_failures(out))
    }

    fn check_v(&self, cand: &Candidate) -> Result<Verdict> {
        expect_kind(cand, CandidateKind::ForV)?;
        if cand.k1 == 0 {
            return Err(Error::ZeroK1);
        }
        let vp = match self.build(cand) {
            Ok(x) => x,
            Err(f) => return Ok(Verdict::from_failures(vec![f])),
        };
        let v = self.inst.v();
        let r = self.inst.r();
        let mut out = Vec::new();
        if !vp.is_spherical() {
            out.push(fail(
                FailureKind::Sphericality,
                format!("v'^2 = {}", vp.square()),
            ));
        }
        self.effectivity(&vp, FailureKind::EffectivityOfCandidate, &mut out);
        self.effectivity(
            &v.checked_sub(&vp)?,
            FailureKind::EffectivityOfComplement,
            &mut out,
        );
        let pairing = v.pair(&vp)?;
        let closed = vv_prime(cand.k1, cand.e1, r)?;
        if pairing != closed {
            return Err(Error::InvariantBreach(format!(
                "v.v' = {pairing} but closed form gives {closed} for {cand}"
            )));
        }
        if !pairing.is_negative() {
            out.push(fail(FailureKind::PairingSign, format!("vv'={pairing}")));
        }
        if cand.k1 >= 5 {
            out.push(fail(
                FailureKind::RankBound,
                format!("k = {} >= 5/2", cand.k()),
            ));
        }
        if vp.is_proportional(&v) {
            out.push(fail(FailureKind::WallPosition, "W=W_{-1}"));
            return Ok(Verdict::from_failures(out));
        }
        if cand.k1 > 0 && cand.e1 > 0 {
            if out.is_empty() {
                out.extend(self.case_analysis(cand));
            }
        } else if out.is_empty() {
            out.extend(self.wall_above(&v, &vp));
        }
        Ok(Verdict::from_failures(out))
    }

    /// The remaining cases once `k, e > 0` and `k < 5/2`: only `k = 1/2`
    /// with `r = 2` and `e1 = r ± 1` can define a wall above `W_{-1}`.
    fn case_analysis(&self, cand: &Candidate) -> Option<Failure> {
        let r = self.inst.r();
        let detail = match cand.k1 {
            1 if r == 2 && (cand.e1 == r - 1 || cand.e1 == r + 1) => return None,
            1 => "k = 1/2 needs r = 2 and e1 = r +- 1",
            2 => "k = 1 forces e = r",
            3 => "k = 3/2 admits no integral pairing",
            4 => "k = 2 forces e = r = 3 and vv' = 2",
            _ => "k >= 5/2",
        };
        Some(fail(FailureKind::CaseAnalysis, detail))
    }

    fn exclude_rank_zero(&self, m: i64) -> Result<Verdict> {
        let v = self.inst.v();
        let u = self.inst.u();
        let vp = self.inst.t(m);
        let pairing = v.pair(&vp)?;
        if !pairing.is_negative() {
            return Ok(Verdict::from_failures(vec![fail(
                FailureKind::PairingSign,
                format!("pairing sign: vv'={pairing}"),
            )]));
        }
        let wall = self.path.wall_of(&v, &vp)?;
        if wall.same_as(&self.wall_minus_one) {
            return Ok(Verdict::from_failures(vec![fail(
                FailureKind::WallPosition,
                "W = W_{-1}",
            )]));
        }
        let limit = limit_phase_class(&vp)?;
        let label = match limit {
            PhaseLimit::TorsionHalf => "limit phase 1/2 contradiction chain",
            PhaseLimit::TorsionOne => "limit phase 1 contradiction chain",
            PhaseLimit::PositiveRankZero => unreachable!("rank zero"),
        };
        let lines = [self.line.clone(), self.path.eps_shifted_line()];
        for line in &lines {
            if self.phase_chain(line, &u, &v, &vp)?.is_some() {
                // The chain does not close, so the candidate stands.
                return Ok(Verdict::from_failures(Vec::new()));
            }
        }
        Ok(Verdict::from_failures(vec![fail(
            FailureKind::LimitPhaseContradiction,
            label,
        )]))
    }

    /// Checks the phase facts that make a wall `W(v, v′)` above `W_{-1}`
    /// impossible for `v′ = t_m`, `m ≥ 0`. Returns the first fact that does
    /// not hold, or `None` when the contradiction is established.
    fn phase_chain(
        &self,
        line: &VerticalLine,
        u: &MukaiVector,
        v: &MukaiVector,
        vp: &MukaiVector,
    ) -> Result<Option<String>> {
        let h2 = match line.height_sq(&self.wall_minus_one)? {
            WallHeight::Height(h) => h,
            WallHeight::NoIntersection => return Ok(Some("W_-1 misses the line".into())),
        };
        let h3 = line.height_sq(&self.path.wall_of(u, vp)?)?;
        if let WallHeight::Height(h3) = &h3 {
            if h3.compare(&h2) != Ordering::Less {
                return Ok(Some("W_m is not below W_-1".into()));
            }
        }
        let (zu, zv, zp) = (
            line.central_charge(u),
            line.central_charge(v),
            line.central_charge(vp),
        );
        // Large volume: φ(v′) > φ(v) > φ(u).
        if zp.phase_compare_at_infinity(&zv)? != Ordering::Greater
            || zv.phase_compare_at_infinity(&zu)? != Ordering::Greater
        {
            return Ok(Some("large volume ordering".into()));
        }
        // Each cross product is affine in t², so its sign on the band between
        // W_m (or the axis) and W_-1 is fixed by its slope and its root.
        let floor = h3.as_height().cloned().unwrap_or_else(EpsRational::zero);
        // φ(u) > φ(v) below W_-1: the (u, v) cross product vanishes on W_-1
        // and increases with t².
        let (_, slope_uv) = zu.cross_affine(&zv);
        let on_w_minus_one = zu.crossing(&zv).map(|t2| t2 == h2).unwrap_or(false);
        if slope_uv.sign() != Sign::Positive || !on_w_minus_one {
            return Ok(Some("phi(u) > phi(v) below W_-1".into()));
        }
        // φ(v′) > φ(u) above W_m: the (v′, u) cross product decreases and
        // vanishes no higher than the floor of the band.
        let (const_pu, slope_pu) = zp.cross_affine(&zu);
        let above_root = match zp.crossing(&zu) {
            Some(root) => root <= floor,
            None => const_pu.sign() == Sign::Negative,
        };
        if slope_pu.sign() != Sign::Negative || !above_root {
            return Ok(Some("phi(v') > phi(u) above W_m".into()));
        }
        // So φ(v′) > φ(u) > φ(v) on the band. A wall W(v, v′) above W_-1 would
        // need φ(v) > φ(v′) there. Directly: W(v, v′) does not rise above W_-1.
        if let Some(root) = zp.crossing(&zv) {
            if root > h2 {
                return Ok(Some("W(v, v') above W_-1".into()));
            }
        }
        Ok(None)
    }
}

fn expect_kind(cand: &Candidate, expected: CandidateKind) -> Result<()> {
    if cand.kind == expected {
        Ok(())
    } else {
        Err(Error::WrongKind {
            expected: expected.as_str(),
            found: cand.kind.as_str(),
        })
    }
}

pub fn check_candidate_s(inst: &ProblemInstance, cand: &Candidate) -> Result<Verdict> {
    Context::new(*inst)?.check_s(cand)
}

pub fn check_candidate_t(inst: &ProblemInstance, cand: &Candidate) -> Result<Verdict> {
    Context::new(*inst)?.check_t(cand)
}

pub fn check_candidate_v(inst: &ProblemInstance, cand: &Candidate) -> Result<Verdict> {
    Context::new(*inst)?.check_v(cand)
}

/// Verdict on the rank-zero class `(0, L, m)` as a destabilizer of `v`. The
/// verdict passes only if every exclusion argument breaks down.
pub fn exclude_rank_zero(inst: &ProblemInstance, m: i64) -> Result<Verdict> {
    Context::new(*inst)?.exclude_rank_zero(m)
}

/// Default bounds: `|k1| ≤ 12`, `|e1| ≤ 4r + 4`.
pub fn default_bounds(inst: &ProblemInstance) -> (i64, i64) {
    (12, 4 * inst.r() + 4)
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub instance: ProblemInstance,
    pub bound_k1: i64,
    pub bound_e1: i64,
    /// Passing `ForV` candidates, rank zero included, sorted.
    pub survivors: Vec<(Candidate, Verdict)>,
    /// `(m, verdict)` for `(0, L, m)` with `|m| ≤ bound_k1`.
    pub rank_zero: Vec<(i64, Verdict)>,
    pub u_survivors: Vec<(Candidate, Verdict)>,
    pub t_survivors: Vec<(Candidate, Verdict)>,
    pub examined: usize,
    /// Every `ForV` candidate examined, when an audit was requested.
    pub audit: Vec<(Candidate, Verdict)>,
}

impl SearchReport {
    pub fn survivor_candidates(&self) -> Vec<Candidate> {
        self.survivors.iter().map(|(c, _)| c.clone()).collect()
    }
}

pub fn search_all(inst: &ProblemInstance, bound_k1: i64, bound_e1: i64) -> Result<SearchReport> {
    search(inst, bound_k1, bound_e1, false)
}

/// [`search_all`] keeping the verdict of every `ForV` candidate.
pub fn search_with_audit(
    inst: &ProblemInstance,
    bound_k1: i64,
    bound_e1: i64,
) -> Result<SearchReport> {
    search(inst, bound_k1, bound_e1, true)
}

fn search(inst: &ProblemInstance, bk: i64, be: i64, audit: bool) -> Result<SearchReport> {
    if bk < 1 || be < 1 {
        return Err(Error::InvalidBounds);
    }
    let ctx = Context::new(*inst)?;

    let mut candidates = Vec::new();
    for k1 in -bk..=bk {
        for e1 in -be..=be {
            candidates.push(Candidate::for_t(inst, k1, e1));
            if k1 != 0 {
                candidates.push(Candidate::for_u(inst, k1, e1)?);
                candidates.push(Candidate::for_v(inst, k1, e1)?);
            }
        }
    }
    // Rank-zero u′ = (0, ±L, m); other e1 are never spherical.
    for m in -bk..=bk {
        for e1 in [-2, 2] {
            candidates.push(Candidate::rank_zero(CandidateKind::ForU, e1, m));
        }
    }
    let examined = candidates.len() + (2 * bk as usize + 1);

    let mut checked: Vec<(Candidate, Verdict)> = candidates
        .into_par_iter()
        .map(|c| {
            let verdict = match c.kind {
                CandidateKind::ForU => ctx.check_s(&c),
                CandidateKind::ForT => ctx.check_t(&c),
                CandidateKind::ForV => ctx.check_v(&c),
            }?;
            Ok((c, verdict))
        })
        .collect::<Result<_>>()?;
    checked.sort_by(|a, b| a.0.cmp(&b.0));

    // Of the rank-zero v′ = (0, (e1/2)L, m), only e1 = 2 is spherical and
    // effective; those go through the dedicated exclusion.
    let rank_zero: Vec<(i64, Verdict)> = (-bk..=bk)
        .into_par_iter()
        .map(|m| Ok((m, ctx.exclude_rank_zero(m)?)))
        .collect::<Result<_>>()?;

    let mut survivors = Vec::new();
    let mut u_survivors = Vec::new();
    let mut t_survivors = Vec::new();
    let mut audit_trail = Vec::new();
    for (c, verdict) in checked {
        if c.kind == CandidateKind::ForV && audit {
            audit_trail.push((c.clone(), verdict.clone()));
        }
        if !verdict.passed {
            continue;
        }
        match c.kind {
            CandidateKind::ForU => u_survivors.push((c, verdict)),
            CandidateKind::ForT => t_survivors.push((c, verdict)),
            CandidateKind::ForV => survivors.push((c, verdict)),
        }
    }
    for (m, verdict) in &rank_zero {
        if verdict.passed {
            survivors.push((
                Candidate::rank_zero(CandidateKind::ForV, 2, *m),
                verdict.clone(),
            ));
        }
    }
    survivors.sort_by(|a, b| a.0.cmp(&b.0));

    Ok(SearchReport {
        instance: *inst,
        bound_k1: bk,
        bound_e1: be,
        survivors,
        rank_zero,
        u_survivors,
        t_survivors,
        examined,
        audit: audit_trail,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Empty,
    ReducedPointLocallyFree,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Empty => "empty",
            Outcome::ReducedPointLocallyFree => "reduced_point_locally_free",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub outcome: Outcome,
    pub reason: &'static str,
    /// Surviving `ForV` witnesses at default bounds.
    pub survivors: Vec<Candidate>,
    /// The search the outcome was checked against.
    pub search: SearchReport,
}

/// Closed-form classification, cross-checked against [`search_all`] at the
/// default bounds. A disagreement is reported as [`Error::InvariantBreach`].
pub fn classify(inst: &ProblemInstance) -> Result<Classification> {
    let (outcome, reason) = closed_form(inst);
    let (bk, be) = default_bounds(inst);
    let report = search_all(inst, bk, be)?;
    let found = !report.survivors.is_empty();
    if found != (outcome == Outcome::Empty) {
        return Err(Error::InvariantBreach(format!(
            "closed form says {} but the search found {} survivors for {inst}",
            outcome.as_str(),
            report.survivors.len()
        )));
    }
    Ok(Classification {
        outcome,
        reason,
        survivors: report.survivor_candidates(),
        search: report,
    })
}

/// The outcome without any search.
pub fn closed_form(inst: &ProblemInstance) -> (Outcome, &'static str) {
    if inst.r() == 1 {
        (
            Outcome::ReducedPointLocallyFree,
            "rank one: pullback of O(dH)",
        )
    } else if inst.r() == 2 && inst.lattice().class_group_nontrivial() {
        (Outcome::Empty, "nonexistence: r = 2 and Cl != Pic")
    } else {
        (
            Outcome::ReducedPointLocallyFree,
            "existence: no wall above W_{-1} on b",
        )
    }
}
