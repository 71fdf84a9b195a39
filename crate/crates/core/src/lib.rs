//! Exact differential calculi over finite-dimensional Hopf algebras.
//!
//! The crate realizes three differential graded algebras attached to a
//! Hopf algebra `H` (or to a bimodule coalgebra over a bialgebra), the
//! module-comodule compatibility conditions they classify, flat connections
//! and their curvature, and the homology of the resulting complexes compared
//! against independently built cobar complexes.
//!
//! Everything is exact: scalars live in `Q` or a prime field, linear maps
//! are sparse matrices, and all equalities are checked with zero tolerance.

pub mod calculus;
pub mod connections;
pub mod error;
pub mod exact;
pub mod homology;
pub mod hopf;
pub mod modules;
pub mod report;

pub use error::{Error, Result};
