use crate::error::{Error, Result};
use crate::exact::{map_slot, outer_into, Accumulator, Factor, FieldSpec, Matrix, Scalar, SparseVec};
use crate::report::{Check, Report};

/// A finite-dimensional coalgebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub field: FieldSpec,
    pub dim: usize,
    /// `comul[i]` is `Δ(e_i)` in `C ⊗ C`, flat index `j * dim + k`.
    pub comul: Vec<SparseVec>,
    pub counit: Vec<Scalar>,
}

impl Coalgebra {
    /// Applies `Δ` to slot `slot` of an element of `C^{⊗rank}`.
    pub fn comul_slot(&self, v: &SparseVec, rank: usize, slot: usize) -> SparseVec {
        let suffix = self.dim.pow((rank - 1 - slot) as u32);
        map_slot(v, self.dim, suffix, self.dim * self.dim, &self.comul)
    }

    pub fn counit_of(&self, v: &SparseVec) -> Scalar {
        let mut acc = self.field.zero();
        for (i, c) in v.iter() {
            acc += &(c * &self.counit[i]);
        }
        acc
    }

    pub fn is_grouplike(&self, v: &SparseVec) -> bool {
        let dv = v.map_linear(|i| self.comul[i].clone());
        let mut acc = Accumulator::new();
        outer_into(&mut acc, &self.field.one(), &[Factor::Vector(v), Factor::Vector(v)], &[self.dim, self.dim]);
        dv == acc.finish()
    }

    pub fn verify(&self) -> Report {
        let mut report = Report::new();
        let mut coassoc = Check::new("coassociativity");
        let mut counit = Check::new("counit");
        for i in 0..self.dim {
            let d = &self.comul[i];
            let left = self.comul_slot(d, 2, 0);
            let right = self.comul_slot(d, 2, 1);
            coassoc.record(vec![i], left.sub(&right));
            let mut l = Accumulator::new();
            let mut r = Accumulator::new();
            for (flat, c) in d.iter() {
                let (a, b) = (flat / self.dim, flat % self.dim);
                l.push(b, c * &self.counit[a]);
                r.push(a, c * &self.counit[b]);
            }
            let id = SparseVec::basis(self.field, i);
            counit.record(vec![i, 0], l.finish().sub(&id));
            counit.record(vec![i, 1], r.finish().sub(&id));
        }
        report.push(coassoc);
        report.push(counit);
        report
    }
}

/// A finite-dimensional Hopf algebra given by structure constants on a fixed
/// basis `e_0, ..., e_{dim-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    field: FieldSpec,
    dim: usize,
    names: Vec<String>,
    /// `mul[i * dim + j] = e_i e_j`.
    mul: Vec<SparseVec>,
    unit: SparseVec,
    comul: Vec<SparseVec>,
    counit: Vec<Scalar>,
    antipode: Matrix,
    antipode_inverse: Option<Matrix>,
}

/// Order in which `Δ` is applied when iterating the coproduct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracketing {
    /// `(id ⊗ ... ⊗ Δ) ∘ ... ∘ Δ`
    Right,
    /// `(Δ ⊗ id ⊗ ... ) ∘ ... ∘ Δ`
    Left,
}

impl HopfAlgebra {
    pub fn new(
        field: FieldSpec,
        names: Vec<String>,
        mul: Vec<SparseVec>,
        unit: SparseVec,
        comul: Vec<SparseVec>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self> {
        let dim = names.len();
        let bad = |what: &str| Err(Error::Structure(format!("{what} has the wrong shape for dimension {dim}")));
        if dim == 0 {
            return Err(Error::Structure("dimension must be positive".into()));
        }
        if mul.len() != dim * dim || mul.iter().any(|v| v.max_index().is_some_and(|i| i >= dim)) {
            return bad("multiplication");
        }
        if unit.max_index().is_some_and(|i| i >= dim) {
            return bad("unit");
        }
        if comul.len() != dim || comul.iter().any(|v| v.max_index().is_some_and(|i| i >= dim * dim)) {
            return bad("comultiplication");
        }
        if counit.len() != dim {
            return bad("counit");
        }
        if antipode.rows() != dim || antipode.cols() != dim {
            return bad("antipode");
        }
        let all_scalars = mul
            .iter()
            .chain(comul.iter())
            .chain(std::iter::once(&unit))
            .flat_map(|v| v.iter().map(|(_, c)| c.field()))
            .chain(counit.iter().map(Scalar::field))
            .chain(std::iter::once(antipode.field()));
        if all_scalars.into_iter().any(|f| f != field) {
            return Err(Error::Field(format!("structure constants not all in {field}")));
        }
        let antipode_inverse = antipode.inverse();
        Ok(HopfAlgebra { field, dim, names, mul, unit, comul, counit, antipode, antipode_inverse })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> Option<&Matrix> {
        self.antipode_inverse.as_ref()
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mul[i * self.dim + j]
    }

    /// `Δ(e_i)` in `H ⊗ H`.
    pub fn comul_basis(&self, i: usize) -> &SparseVec {
        &self.comul[i]
    }

    pub fn mul_table(&self) -> &[SparseVec] {
        &self.mul
    }

    pub fn comul_table(&self) -> &[SparseVec] {
        &self.comul
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::basis(self.field, i)
    }

    fn check_len(&self, v: &SparseVec) -> Result<()> {
        match v.max_index() {
            Some(i) if i >= self.dim => {
                Err(Error::Dimension(format!("vector index {i} out of range for dimension {}", self.dim)))
            }
            _ => Ok(()),
        }
    }

    pub fn multiply(&self, u: &SparseVec, v: &SparseVec) -> Result<SparseVec> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.mul_vec(u, v))
    }

    pub fn mul_vec(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                acc.add_scaled(&self.mul[i * self.dim + j], &(a * b));
            }
        }
        acc.finish()
    }

    pub fn comultiply(&self, u: &SparseVec) -> SparseVec {
        u.map_linear(|i| self.comul[i].clone())
    }

    pub fn counit_of(&self, u: &SparseVec) -> Scalar {
        let mut acc = self.field.zero();
        for (i, c) in u.iter() {
            acc += &(c * &self.counit[i]);
        }
        acc
    }

    pub fn apply_antipode(&self, u: &SparseVec) -> SparseVec {
        self.antipode.apply(u)
    }

    /// `Δ^{(n)}(u)` in `H^{⊗(n+1)}`; `n = 0` returns `u`.
    pub fn comultiply_iter(&self, u: &SparseVec, n: usize) -> SparseVec {
        self.comultiply_iter_with(u, n, Bracketing::Right)
    }

    pub fn comultiply_iter_with(&self, u: &SparseVec, n: usize, bracketing: Bracketing) -> SparseVec {
        let slots: Vec<usize> = match bracketing {
            Bracketing::Right => (0..n).collect(),
            Bracketing::Left => vec![0; n],
        };
        self.comultiply_at(u, &slots)
    }

    /// Iterated coproduct where step `t` applies `Δ` to slot `slots[t]` of the
    /// current rank-`(t+1)` tensor.
    pub fn comultiply_at(&self, u: &SparseVec, slots: &[usize]) -> SparseVec {
        let co = self.coalgebra_ref();
        let mut v = u.clone();
        for (t, &slot) in slots.iter().enumerate() {
            assert!(slot <= t, "slot {slot} out of range for rank {}", t + 1);
            v = co.comul_slot(&v, t + 1, slot);
        }
        v
    }

    fn coalgebra_ref(&self) -> CoalgebraRef<'_> {
        CoalgebraRef { dim: self.dim, comul: &self.comul }
    }

    pub fn coalgebra(&self) -> Coalgebra {
        Coalgebra { field: self.field, dim: self.dim, comul: self.comul.clone(), counit: self.counit.clone() }
    }

    /// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd` in `H ⊗ H`.
    pub fn mul_tensor2(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let d = self.dim;
        let mut acc = Accumulator::new();
        for (p, a) in x.iter() {
            for (q, b) in y.iter() {
                let c = a * b;
                outer_into(
                    &mut acc,
                    &c,
                    &[Factor::Vector(&self.mul[(p / d) * d + q / d]), Factor::Vector(&self.mul[(p % d) * d + q % d])],
                    &[d, d],
                );
            }
        }
        acc.finish()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| self.comul[i] == self.comul[i].reindex(|f| (f % d) * d + f / d))
    }

    pub fn antipode_squared_is_identity(&self) -> bool {
        self.antipode.compose(&self.antipode).map(|m| m == Matrix::identity(self.field, self.dim)).unwrap_or(false)
    }

    /// Returns a copy with one antipode entry replaced; used for mutation
    /// testing of the axiom checker.
    pub fn with_antipode_entry(&self, row: usize, col: usize, value: Scalar) -> Result<HopfAlgebra> {
        let mut columns = self.antipode.columns().to_vec();
        let mut entries: Vec<(usize, Scalar)> =
            columns[col].iter().filter(|(i, _)| *i != row).map(|(i, v)| (i, v.clone())).collect();
        entries.push((row, value));
        columns[col] = SparseVec::from_entries(entries);
        let antipode = Matrix::from_columns(self.field, self.dim, columns)?;
        HopfAlgebra::new(
            self.field,
            self.names.clone(),
            self.mul.clone(),
            self.unit.clone(),
            self.comul.clone(),
            self.counit.clone(),
            antipode,
        )
    }

    /// Conjugates every structure tensor by the basis permutation
    /// `e_i ↦ e_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Result<HopfAlgebra> {
        let d = self.dim;
        if perm.len() != d {
            return Err(Error::Dimension("permutation length".into()));
        }
        let mut inv = vec![0; d];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let mut mul = vec![SparseVec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                mul[perm[i] * d + perm[j]] = self.mul_basis(i, j).reindex(|k| perm[k]);
            }
        }
        let comul = (0..d).map(|k| self.comul[inv[k]].reindex(|f| perm[f / d] * d + perm[f % d])).collect();
        let counit = (0..d).map(|k| self.counit[inv[k]].clone()).collect();
        let antipode = Matrix::from_columns(
            self.field,
            d,
            (0..d).map(|k| self.antipode.column(inv[k]).reindex(|r| perm[r])).collect(),
        )?;
        let names = (0..d).map(|k| self.names[inv[k]].clone()).collect();
        HopfAlgebra::new(self.field, names, mul, self.unit.reindex(|k| perm[k]), comul, counit, antipode)
    }

    /// Checks every Hopf algebra axiom on all basis tuples.
    pub fn verify_hopf_axioms(&self) -> Report {
        let d = self.dim;
        let f = self.field;
        let mut report = Report::new();

        let mut assoc = Check::new("associativity");
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for k in 0..d {
                    let left = self.mul_vec(ij, &self.basis(k));
                    let right = self.mul_vec(&self.basis(i), self.mul_basis(j, k));
                    assoc.record(vec![i, j, k], left.sub(&right));
                }
            }
        }
        report.push(assoc);

        let mut unit = Check::new("unit");
        for i in 0..d {
            let e = self.basis(i);
            unit.record(vec![i, 0], self.mul_vec(&self.unit, &e).sub(&e));
            unit.record(vec![i, 1], self.mul_vec(&e, &self.unit).sub(&e));
        }
        report.push(unit);

        let co = self.coalgebra();
        report.extend(co.verify());

        let mut delta_mult = Check::new("comultiplication_multiplicative");
        let mut eps_mult = Check::new("counit_multiplicative");
        for i in 0..d {
            for j in 0..d {
                let lhs = self.comultiply(self.mul_basis(i, j));
                let rhs = self.mul_tensor2(&self.comul[i], &self.comul[j]);
                delta_mult.record(vec![i, j], lhs.sub(&rhs));
                let e = &self.counit_of(self.mul_basis(i, j)) - &(&self.counit[i] * &self.counit[j]);
                eps_mult.record(vec![i, j], SparseVec::single(0, e));
            }
        }
        report.push(delta_mult);
        report.push(eps_mult);

        let mut unital = Check::new("bialgebra_unital");
        let mut one_one = Accumulator::new();
        outer_into(&mut one_one, &f.one(), &[Factor::Vector(&self.unit), Factor::Vector(&self.unit)], &[d, d]);
        unital.record(vec![0], self.comultiply(&self.unit).sub(&one_one.finish()));
        unital.record(vec![1], SparseVec::single(0, &self.counit_of(&self.unit) - &f.one()));
        report.push(unital);

        let mut antipode = Check::new("antipode_convolution");
        for i in 0..d {
            let mut left = Accumulator::new();
            let mut right = Accumulator::new();
            for (flat, c) in self.comul[i].iter() {
                let (a, b) = (flat / d, flat % d);
                left.add_scaled(&self.mul_vec(self.antipode.column(a), &self.basis(b)), c);
                right.add_scaled(&self.mul_vec(&self.basis(a), self.antipode.column(b)), c);
            }
            let target = self.unit.scaled(&self.counit[i]);
            antipode.record(vec![i, 0], left.finish().sub(&target));
            antipode.record(vec![i, 1], right.finish().sub(&target));
        }
        report.push(antipode);

        let mut inverse = Check::new("antipode_inverse");
        match &self.antipode_inverse {
            Some(inv) => {
                let id = Matrix::identity(f, d);
                for (side, m) in [inv.compose(&self.antipode), self.antipode.compose(inv)].into_iter().enumerate() {
                    let m = m.expect("square matrices");
                    for j in 0..d {
                        inverse.record(vec![j, side], m.column(j).sub(id.column(j)));
                    }
                }
            }
            None => inverse = inverse.with_note("antipode is not invertible"),
        }
        report.push(inverse);
        report
    }
}

struct CoalgebraRef<'a> {
    dim: usize,
    comul: &'a [SparseVec],
}

impl CoalgebraRef<'_> {
    fn comul_slot(&self, v: &SparseVec, rank: usize, slot: usize) -> SparseVec {
        let suffix = self.dim.pow((rank - 1 - slot) as u32);
        map_slot(v, self.dim, suffix, self.dim * self.dim, self.comul)
    }
}
