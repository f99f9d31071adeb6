//! Exact arithmetic for extension bundles on weighted projective lines.
//!
//! Everything here is integer or rational arithmetic over the rank-one grading
//! group `L(p1,p2,p3)`: normal forms and the partial order, Grothendieck-group
//! classes over the canonical tilting basis, rank-two extension bundles with
//! their isomorphism criterion and stability trichotomy, Klein four-group and
//! tau-orbit counting (closed formula, Burnside scan and brute-force partition
//! cross-checked against each other), and the tilting objects whose
//! endomorphism quivers are commutative ladders.

pub mod bundles;
pub mod k0;
pub mod lgroup;
pub mod orbits;
pub mod selftest;
pub mod snf;
pub mod stable;

pub use bundles::{ExtensionBundle, Stability};
pub use lgroup::{LElement, WeightClass, WeightTriple};

/// Largest accepted weight. Keeps every derived quantity (lcm, group index,
/// orbit counts) comfortably inside `i64`.
pub const MAX_WEIGHT: i64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid weight {0}: weights must lie in 2..={max}", max = MAX_WEIGHT)]
    InvalidWeight(i64),
    #[error("tubular weight type")]
    Tubular,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("quotient is infinite: relation matrix is singular")]
    InfiniteQuotient,
    #[error("not an interior point: {0}")]
    InvalidInterior(String),
    #[error("{0} requires weight type (2,p,q)")]
    FirstWeightNotTwo(&'static str),
    #[error("only supported for the t1/t2 ladders")]
    CubNotSupported,
}

pub type Result<T> = std::result::Result<T, Error>;
