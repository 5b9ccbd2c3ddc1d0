//! Representations of the linearly oriented A_{m−1} quiver over finite fields
//! and the derived-category oracle built on them.

mod complex;
mod derived;
mod field;
mod matrix;
mod rep;

pub use complex::{gl_order, indecomposables, ChainMap, DerivedCategory, HomSpace, ProjComplex};
pub use derived::{dhom_dims, euler_form, euler_form_k0, DerivedObject, Summand};
pub use field::{prime_power, FiniteField, Fq};
pub use matrix::{Echelon, Matrix};
pub use rep::{
    barcode, barcode_from_ranks, ext1_space, hom_space, interval_ext1_dim, interval_hom_dim, inverse, Ext1, Interval,
    QuiverRep, RepMap,
};
