//! Derived Hall algebras of marked disks, computed through the derived
//! category of linearly oriented type A quiver representations over a finite
//! field.

pub mod error;
pub mod freealg;
pub mod hall;
pub mod par;
pub mod presentation;
pub mod repq;
pub mod scalar;
pub mod surface;

pub use error::{Error, Result};
