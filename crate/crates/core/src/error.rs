use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at v = sqrt({q}): denominator vanishes")]
    Pole { q: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty bracket list")]
    EmptyBracket,
    #[error("invalid interval [{a},{b}) for m = {m}")]
    InvalidInterval { a: i64, b: i64, m: usize },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid field modulus: {0}")]
    InvalidModulus(String),
    #[error("size mismatch: {0}")]
    Mismatch(String),
    #[error("unassigned generator {0}")]
    Unassigned(String),
    #[error("invalid foliation data: {0}")]
    Foliation(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("no interior crossing between {0} and {1}")]
    NoCrossing(String, String),
    #[error("chords {0} and {1} do not share a marked interval")]
    NoSharedEndpoint(String, String),
    #[error("invalid surface config: {0}")]
    Config(String),
    #[error("relation set {0} has no oracle assignment")]
    NoAssignment(String),
}

pub type Result<T> = std::result::Result<T, Error>;
