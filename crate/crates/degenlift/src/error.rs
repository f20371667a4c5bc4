//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("negative exponent {0} in polynomial power")]
    NegativeExponent(i64),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    #[error("polynomial `{0}` does not divide `{1}` exactly")]
    InexactDivision(String, String),
    #[error("series constant term is not a unit")]
    NotAUnit,
    #[error("series truncation orders are inconsistent: {0}")]
    TruncationMismatch(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("degenerate singularity on edge {0}: repeated root at {1}")]
    DegenerateSingularity(String, String),
    #[error("singular locus incomplete on edge {0}: {1} unresolved root(s)")]
    IncompleteLocus(String, u32),
    #[error("singular point is not an ordinary double point: {0}")]
    NotOrdinary(String),
    #[error("line does not satisfy the pre-log incidence condition: {0}")]
    NotPrelog(String),
    #[error("lift ansatz inapplicable: {0}")]
    AnsatzInapplicable(String),
    #[error("obstructed at lower order {0}")]
    ObstructedAtLowerOrder(u32),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("term of degree {found} in a degree-{expected} form")]
    NonHomogeneous { expected: u32, found: u32 },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
