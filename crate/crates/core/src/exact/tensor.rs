//! Flat indexing of tensor-product bases.
//!
//! A basis tuple `(i_0, ..., i_{k-1})` of `V_0 ⊗ ... ⊗ V_{k-1}` is stored at
//! `Σ i_j · Π_{l>j} dim_l`, i.e. big-endian lexicographic order. Every module
//! in the crate uses this convention, so concatenating a prefix tuple with a
//! suffix tuple is `prefix * size(suffix) + suffix`.

use super::field::Scalar;
use super::sparse::{Accumulator, SparseVec};
use crate::error::{Error, Result};

pub fn tensor_encode(indices: &[usize], dims: &[usize]) -> Result<usize> {
    if indices.len() != dims.len() {
        return Err(Error::Dimension(format!("index tuple of length {} for {} factors", indices.len(), dims.len())));
    }
    let mut flat = 0usize;
    for (&i, &d) in indices.iter().zip(dims) {
        if i >= d {
            return Err(Error::Dimension(format!("index {i} out of range for factor of dimension {d}")));
        }
        flat = flat * d + i;
    }
    Ok(flat)
}

pub fn tensor_decode(mut flat: usize, dims: &[usize]) -> Result<Vec<usize>> {
    let size: usize = dims.iter().product();
    if flat >= size {
        return Err(Error::Dimension(format!("flat index {flat} out of range for size {size}")));
    }
    let mut out = vec![0; dims.len()];
    for (slot, &d) in dims.iter().enumerate().rev() {
        out[slot] = flat % d;
        flat /= d;
    }
    Ok(out)
}

/// Shape of a tensor power `V^{⊗k}` of a single space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerShape {
    pub dim: usize,
    pub rank: usize,
}

impl PowerShape {
    pub fn new(dim: usize, rank: usize) -> Self {
        PowerShape { dim, rank }
    }

    pub fn size(&self) -> usize {
        self.dim.pow(self.rank as u32)
    }

    pub fn decode(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.rank];
        for slot in (0..self.rank).rev() {
            out[slot] = flat % self.dim;
            flat /= self.dim;
        }
        out
    }

    pub fn encode(&self, indices: &[usize]) -> usize {
        debug_assert_eq!(indices.len(), self.rank);
        indices.iter().fold(0, |acc, &i| acc * self.dim + i)
    }
}

/// One tensor factor in an outer product.
#[derive(Clone, Copy)]
pub enum Factor<'a> {
    Basis(usize),
    Vector(&'a SparseVec),
}

/// Adds `coeff · (f_0 ⊗ ... ⊗ f_{k-1})` into `acc`, flattening with
/// `dims[j]` as the dimension of slot `j`.
pub fn outer_into(acc: &mut Accumulator, coeff: &Scalar, factors: &[Factor<'_>], dims: &[usize]) {
    debug_assert_eq!(factors.len(), dims.len());
    fn go(acc: &mut Accumulator, coeff: &Scalar, factors: &[Factor<'_>], dims: &[usize], flat: usize) {
        let Some((first, rest)) = factors.split_first() else {
            acc.push(flat, coeff.clone());
            return;
        };
        let d = dims[0];
        match first {
            Factor::Basis(i) => go(acc, coeff, rest, &dims[1..], flat * d + i),
            Factor::Vector(v) => {
                for (i, c) in v.iter() {
                    go(acc, &(coeff * c), rest, &dims[1..], flat * d + i);
                }
            }
        }
    }
    if coeff.is_zero() {
        return;
    }
    go(acc, coeff, factors, dims, 0);
}

/// Applies a linear map to one tensor slot. Indices are read as
/// `(prefix * slot_dim + i) * suffix_size + s` and written as
/// `(prefix * out_size + j) * suffix_size + s`, where `image(i)` is a vector
/// in a space of size `out_size`.
pub fn map_slot(
    v: &SparseVec,
    slot_dim: usize,
    suffix_size: usize,
    out_size: usize,
    images: &[SparseVec],
) -> SparseVec {
    let mut acc = Accumulator::new();
    for (flat, c) in v.iter() {
        let s = flat % suffix_size;
        let rest = flat / suffix_size;
        let i = rest % slot_dim;
        let prefix = rest / slot_dim;
        for (j, x) in images[i].iter() {
            acc.push((prefix * out_size + j) * suffix_size + s, c * x);
        }
    }
    acc.finish()
}

/// Iterates the terms of a flat tensor as (coefficient, index tuple).
pub fn tensor_terms<'a>(v: &'a SparseVec, shape: PowerShape) -> impl Iterator<Item = (&'a Scalar, Vec<usize>)> + 'a {
    v.iter().map(move |(i, c)| (c, shape.decode(i)))
}
