//! The free associative algebra over ℚ(v) on shifted generators, with
//! q-brackets and the chord elements `z_{(a,b),n}`.

mod generator;
mod parse;
mod poly;
mod relation;

pub use generator::{Family, Generator, Label};
pub use parse::parse_element;
pub use poly::{qp, qp_pow, zab, NCPolynomial, Word};
pub use relation::Relation;
