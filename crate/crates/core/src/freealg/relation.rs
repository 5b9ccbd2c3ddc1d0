use super::poly::NCPolynomial;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A labelled identity `lhs = rhs` in the free algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub label: String,
    pub lhs: NCPolynomial,
    pub rhs: NCPolynomial,
}

impl Relation {
    pub fn new(label: impl Into<String>, lhs: NCPolynomial, rhs: NCPolynomial) -> Self {
        Relation { label: label.into(), lhs, rhs }
    }

    /// `lhs − rhs`.
    pub fn residual(&self) -> NCPolynomial {
        self.lhs.sub(&self.rhs)
    }

    /// Holds in the free algebra itself.
    pub fn is_trivial(&self) -> bool {
        self.residual().is_zero()
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.label, self.lhs, self.rhs)
    }
}
