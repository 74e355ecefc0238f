//! Exact lattice arithmetic and symbolic wall-and-chamber analysis for
//! spherical sheaves on general nodal K3 surfaces.
//!
//! The surface data is a rank-two Néron–Severi lattice `ZH ⊕ ZL` (with its
//! index-two overlattice when the class group is larger than the Picard
//! group). Stability conditions are studied along the polarization
//! `H_ε = H − εL` with `ε` and `ε′` kept as formal infinitesimals, so every
//! "for sufficiently small ε" inequality is decided exactly.

pub mod asymptotics;
pub mod destabilizer;
mod error;
pub mod lattice;
pub mod pell;
pub mod plane;
pub mod splitting;

pub use asymptotics::{EpsPoly, EpsRational, Monomial, Sign};
pub use destabilizer::{
    classify, exclude_rank_zero, m_from_ke, search_all, vv_prime, Candidate, CandidateKind,
    Classification, Failure, FailureKind, Outcome, SearchReport, Verdict,
};
pub use error::{Error, Result};
pub use lattice::{DivisorClass, MukaiVector, NSLattice, ProblemInstance};
pub use pell::{is_minimal_pell_pair, pell_solutions};
pub use plane::{
    CentralCharge, NumericalWall, PhaseLimit, PolarizationPath, SigmaU, VerticalLine, WallHeight,
};
pub use splitting::SplittingType;

/// Exact rational scalar used throughout.
pub type Q = num_rational::BigRational;

pub(crate) fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub(crate) fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}
