//! Exact scalars, sparse vectors and matrices, and tensor indexing.

pub mod field;
pub mod matrix;
pub mod sparse;
pub mod tensor;

pub use field::{FieldSpec, Scalar};
pub use matrix::{EchelonBasis, Matrix};
pub use sparse::{Accumulator, SparseVec};
pub use tensor::{map_slot, outer_into, tensor_decode, tensor_encode, Factor, PowerShape};
