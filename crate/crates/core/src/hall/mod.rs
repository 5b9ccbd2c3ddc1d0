//! The derived Hall algebra at a fixed prime power and evaluation of free
//! algebra expressions into it.

mod algebra;
mod element;
mod eval;

pub use algebra::{braces, HallAlgebra};
pub use element::{HallElement, HallTerm};
pub use eval::{Assignment, IdentityReport, Status};
