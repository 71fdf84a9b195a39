use std::collections::HashMap;

use super::field::{FieldSpec, Scalar};
use super::sparse::{Accumulator, SparseVec};
use crate::error::{Error, Result};

/// A sparse matrix stored by columns. Column `j` is the image of the `j`-th
/// basis vector, so a linear map `V → W` is a `dim W × dim V` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    columns: Vec<SparseVec>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Matrix { field, rows: n, columns: (0..n).map(|i| SparseVec::basis(field, i)).collect() }
    }

    pub fn from_columns(field: FieldSpec, rows: usize, columns: Vec<SparseVec>) -> Result<Self> {
        for (j, c) in columns.iter().enumerate() {
            if let Some(i) = c.max_index() {
                if i >= rows {
                    return Err(Error::Dimension(format!("column {j} has an entry in row {i} of a {rows}-row matrix")));
                }
            }
        }
        Ok(Matrix { field, rows, columns })
    }

    /// Builds from a dense row-major table of integers.
    pub fn from_rows_i64(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let columns =
            (0..ncols).map(|j| SparseVec::from_entries((0..nrows).map(|i| (i, field.from_i64(rows[i][j]))))).collect();
        Matrix { field, rows: nrows, columns }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.columns[col].get(row).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    /// Nonzero entries as (row, col, value).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.columns.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, v)| (i, j, v)))
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        v.map_linear(|j| self.columns[j].clone())
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Matrix) -> Result<Matrix> {
        if rhs.rows != self.cols() {
            return Err(Error::Dimension(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows,
                self.cols(),
                rhs.rows,
                rhs.cols()
            )));
        }
        let columns = rhs
            .columns
            .iter()
            .map(|c| {
                let mut acc = Accumulator::new();
                for (k, x) in c.iter() {
                    acc.add_scaled(&self.columns[k], x);
                }
                acc.finish()
            })
            .collect();
        Ok(Matrix { field: self.field, rows: self.rows, columns })
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        if rhs.rows != self.rows || rhs.cols() != self.cols() {
            return Err(Error::Dimension("matrix shapes differ".into()));
        }
        let columns = self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.sub(b)).collect();
        Ok(Matrix { field: self.field, rows: self.rows, columns })
    }

    pub fn transpose(&self) -> Matrix {
        let mut cols: Vec<Accumulator> = (0..self.rows).map(|_| Accumulator::new()).collect();
        for (i, j, v) in self.entries() {
            cols[i].push(j, v.clone());
        }
        Matrix { field: self.field, rows: self.cols(), columns: cols.into_iter().map(Accumulator::finish).collect() }
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.field);
        for c in &self.columns {
            basis.insert(c.clone());
        }
        basis.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols() - self.rank()
    }

    /// Exact inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.rows;
        if self.cols() != n {
            return None;
        }
        let f = self.field;
        // dense Gauss-Jordan on [A | I], rows of the augmented system
        let mut aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row: Vec<Scalar> = (0..n).map(|j| self.get(i, j)).collect();
                row.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, pivot);
            let inv = aug[col][col].inverse()?;
            for x in aug[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !aug[r][col].is_zero() {
                    let factor = aug[r][col].clone();
                    for k in 0..2 * n {
                        let delta = &factor * &aug[col][k];
                        aug[r][k] = &aug[r][k] - &delta;
                    }
                }
            }
        }
        let columns = (0..n).map(|j| SparseVec::from_entries((0..n).map(|i| (i, aug[i][n + j].clone())))).collect();
        Some(Matrix { field: f, rows: n, columns })
    }
}

/// Incrementally maintained echelon basis of a subspace. Each stored vector
/// has a distinct leading index with coefficient 1; pivots are normalized
/// on insertion to keep rational entries small.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FieldSpec,
    pivots: HashMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new(field: FieldSpec) -> Self {
        EchelonBasis { field, pivots: HashMap::new() }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        while let Some((lead, c)) = v.leading() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = -c;
                    v.add_scaled(p, &c);
                }
                None => {
                    let inv = c.inverse().expect("leading coefficient is nonzero");
                    self.pivots.insert(lead, v.scaled(&inv));
                    return true;
                }
            }
        }
        false
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        while let Some((lead, c)) = v.leading() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = -c;
                    v.add_scaled(p, &c);
                }
                None => return false,
            }
        }
        true
    }

    /// Fully reduced basis (each pivot column cleared in all other vectors),
    /// sorted by pivot. Coordinate subspaces come back as unit vectors.
    pub fn reduced_basis(&self) -> Vec<SparseVec> {
        let mut keys: Vec<usize> = self.pivots.keys().copied().collect();
        keys.sort_unstable();
        let mut rows: Vec<SparseVec> = keys.iter().map(|k| self.pivots[k].clone()).collect();
        for a in (0..rows.len()).rev() {
            let pa = keys[a];
            for b in 0..a {
                if let Some(c) = rows[b].get(pa).cloned() {
                    let pivot_row = rows[a].clone();
                    rows[b].add_scaled(&pivot_row, &-c);
                }
            }
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        let q = FieldSpec::Rationals;
        assert_eq!(Matrix::identity(q, 2).rank(), 2);
        assert_eq!(Matrix::zero(q, 3, 4).rank(), 0);
        assert_eq!(Matrix::zero(q, 3, 4).kernel_dim(), 4);
        let m = Matrix::from_rows_i64(q, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_dim(), 1);
        assert_eq!(Matrix::identity(q, 2).kernel_dim(), 0);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let rows = [vec![1, 1], vec![1, -1]];
        assert_eq!(Matrix::from_rows_i64(FieldSpec::Rationals, &rows).rank(), 2);
        assert_eq!(Matrix::from_rows_i64(FieldSpec::PrimeField(2), &rows).rank(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let q = FieldSpec::Rationals;
        let m = Matrix::from_rows_i64(q, &[vec![2, 1, 0], vec![0, 1, 3], vec![1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), Matrix::identity(q, 3));
        assert!(Matrix::from_rows_i64(q, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn reduced_basis_of_coordinate_subspace() {
        let q = FieldSpec::Rationals;
        let mut b = EchelonBasis::new(q);
        b.insert(SparseVec::from_entries([(1, q.from_i64(2)), (3, q.from_i64(4))]));
        b.insert(SparseVec::from_entries([(3, q.from_i64(5))]));
        assert!(!b.insert(SparseVec::from_entries([(1, q.one())])));
        assert_eq!(b.reduced_basis(), vec![SparseVec::basis(q, 1), SparseVec::basis(q, 3)]);
    }
}
