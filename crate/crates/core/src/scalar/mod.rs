//! Exact scalars: the field ℚ(v) with `v^2 = q`, and its specialization ℚ(√q).

mod parse;
mod poly;
mod quadratic;
mod ratfunc;

pub use parse::parse_scalar;
pub(crate) use parse::{scalar_expr, Cursor};
pub use poly::Poly;
pub use quadratic::QuadraticScalar;
pub use ratfunc::RationalFunctionV;
