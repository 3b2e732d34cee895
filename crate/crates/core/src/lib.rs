//! Equivariant Kazhdan-Lusztig, inverse Kazhdan-Lusztig and Z-polynomials
//! of matroids carrying a finite permutation-group action.
//!
//! Two routes are provided: the defining recursions over subset orbits
//! (`equivariant::brute`), and for paving matroids a fast path that starts
//! from the uniform matroid and subtracts one induced correction per orbit
//! of stressed hyperplanes (`equivariant::fast`).

pub mod assets;
pub mod equivariant;
pub mod error;
pub mod groups;
pub mod matroid;
pub mod partitions;
pub mod subset;
pub mod symrep;

pub use error::{Error, Result};
