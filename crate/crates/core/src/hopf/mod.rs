//! Hopf algebras by structure constants, their axioms, and built-in examples.

mod algebra;
pub mod builders;
mod group;
mod morphism;

pub use algebra::{Bracketing, Coalgebra, HopfAlgebra};
pub use builders::{build_dual_group_algebra, build_group_algebra, build_sweedler_h4, build_taft, BuiltinAlgebra};
pub use group::Group;
pub use morphism::{BialgebraMorphism, MorphismVariant};
