use serde::Serialize;

use super::field::{FieldSpec, Scalar};

/// A sparse vector: entries sorted by index, zeros never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn basis(field: FieldSpec, index: usize) -> Self {
        SparseVec { entries: vec![(index, field.one())] }
    }

    pub fn single(index: usize, value: Scalar) -> Self {
        if value.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: vec![(index, value)] }
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Accumulator::new();
        for (i, v) in entries {
            acc.push(i, v);
        }
        acc.finish()
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect(),
        }
    }

    pub fn to_dense(&self, field: FieldSpec, len: usize) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&index, |(i, _)| *i).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn negated(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect() }
    }

    /// `self += c * other`, by a sorted merge.
    pub fn add_scaled(&mut self, other: &SparseVec, c: &Scalar) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => merged.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, w) = b.next().unwrap();
                    merged.push((*j, w * c));
                }
                (Some(_), Some(_)) => {
                    let (i, v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    let s = &v + &(w * c);
                    if !s.is_zero() {
                        merged.push((i, s));
                    }
                }
                (Some(_), None) => merged.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, w) = b.next().unwrap();
                    merged.push((*j, w * c));
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        if let Some((_, v)) = other.entries.first() {
            out.add_scaled(other, &v.field().one());
        }
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        if let Some((_, v)) = other.entries.first() {
            out.add_scaled(other, &-v.field().one());
        }
        out
    }

    /// Applies a linear map given by its values on basis vectors.
    pub fn map_linear<F>(&self, mut image: F) -> SparseVec
    where
        F: FnMut(usize) -> SparseVec,
    {
        let mut acc = Accumulator::new();
        for (i, c) in &self.entries {
            acc.add_scaled(&image(*i), c);
        }
        acc.finish()
    }

    pub fn reindex(&self, mut f: impl FnMut(usize) -> usize) -> SparseVec {
        SparseVec::from_entries(self.entries.iter().map(|(i, v)| (f(*i), v.clone())))
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        SparseVec::from_entries(iter)
    }
}

/// Unordered term collector; `finish` sorts, sums duplicates and drops zeros.
#[derive(Default)]
pub struct Accumulator {
    terms: Vec<(usize, Scalar)>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator { terms: Vec::new() }
    }

    pub fn push(&mut self, index: usize, value: Scalar) {
        if !value.is_zero() {
            self.terms.push((index, value));
        }
    }

    pub fn add_scaled(&mut self, v: &SparseVec, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            self.terms.extend(v.entries.iter().cloned());
        } else {
            self.terms.extend(v.entries.iter().map(|(i, x)| (*i, x * c)));
        }
    }

    pub fn finish(mut self) -> SparseVec {
        self.terms.sort_unstable_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(self.terms.len());
        for (i, v) in self.terms {
            match entries.last_mut() {
                Some((j, w)) if *j == i => *w += &v,
                _ => {
                    if let Some((_, w)) = entries.last() {
                        if w.is_zero() {
                            entries.pop();
                        }
                    }
                    entries.push((i, v));
                }
            }
        }
        if let Some((_, w)) = entries.last() {
            if w.is_zero() {
                entries.pop();
            }
        }
        SparseVec { entries }
    }
}
