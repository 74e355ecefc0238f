use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("H^2 must be a positive even integer, got {0}")]
    InvalidHSquared(i64),
    #[error("a nontrivial class group requires H^2 = 2 (mod 8), got H^2 = {0}")]
    ClassGroupMod8(i64),
    #[error("divisor class ({k1}H + {e1}L)/2 is not in the Neron-Severi lattice: {reason}")]
    InvalidDivisor {
        k1: i64,
        e1: i64,
        reason: &'static str,
    },
    #[error("classes live on different lattices")]
    LatticeMismatch,
    #[error("d^2*H^2 - 2*r*a != -2 (got {0})")]
    NotSpherical(i64),
    #[error("rank must be positive, got {0}")]
    NonPositiveRank(i64),
    #[error("gcd(r, d) = {0} but sphericality forces 1")]
    GcdNotOne(i64),
    #[error("twist leaves the integral Mukai lattice")]
    NonIntegralTwist,
    #[error("denominator vanishes under the infinitesimal ordering")]
    ZeroDenominator,
    #[error("degenerate wall: the defining Mukai vectors are proportional")]
    DegenerateWall,
    #[error("vertical wall: no height function in t")]
    VerticalWall,
    #[error("charge vanishes (sigma_u-like point)")]
    ZeroCharge,
    #[error("charge lies outside the closed upper half plane")]
    OutsideHeart,
    #[error("unsupported Mukai vector shape for limit phase: {0}")]
    UnsupportedShape(String),
    #[error("k1 must be nonzero")]
    ZeroK1,
    #[error("candidate kind {found} passed to the {expected} check")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error("search bounds must be positive")]
    InvalidBounds,
    #[error("splitting type must have at least one part")]
    EmptySplitting,
    #[error("criterion requires c1.L = 0 (splitting parts sum to {0})")]
    NonZeroSum(i64),
    #[error("internal invariant breach: {0}")]
    InvariantBreach(String),
}
