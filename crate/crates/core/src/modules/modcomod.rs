use crate::error::{Error, Result};
use crate::exact::{map_slot, outer_into, Accumulator, Factor, FieldSpec, Scalar, SparseVec};
use crate::hopf::{Coalgebra, HopfAlgebra};
use crate::report::{Check, Report};

/// A vector space `X` with an optional left action of an algebra and an
/// optional left coaction of a coalgebra, both by structure constants.
///
/// The coaction is not required to be coassociative or counital; those are
/// reported by [`ModComod::verify_coaction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModComod {
    field: FieldSpec,
    dim: usize,
    acting_dim: usize,
    coacting_dim: usize,
    /// `action[h * dim + x] = h · x`.
    action: Option<Vec<SparseVec>>,
    /// `coaction[x] = ρ(x)` in `C ⊗ X`, flat index `c * dim + y`.
    coaction: Option<Vec<SparseVec>>,
}

impl ModComod {
    pub fn new(field: FieldSpec, dim: usize, acting_dim: usize, coacting_dim: usize) -> Self {
        ModComod { field, dim, acting_dim, coacting_dim, action: None, coaction: None }
    }

    pub fn with_action(mut self, action: Vec<SparseVec>) -> Result<Self> {
        if action.len() != self.acting_dim * self.dim
            || action.iter().any(|v| v.max_index().is_some_and(|i| i >= self.dim))
        {
            return Err(Error::Dimension("action tensor has the wrong shape".into()));
        }
        self.action = Some(action);
        Ok(self)
    }

    pub fn with_coaction(mut self, coaction: Vec<SparseVec>) -> Result<Self> {
        if coaction.len() != self.dim
            || coaction.iter().any(|v| v.max_index().is_some_and(|i| i >= self.coacting_dim * self.dim))
        {
            return Err(Error::Dimension("coaction tensor has the wrong shape".into()));
        }
        self.coaction = Some(coaction);
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn acting_dim(&self) -> usize {
        self.acting_dim
    }

    pub fn coacting_dim(&self) -> usize {
        self.coacting_dim
    }

    pub fn action(&self) -> Option<&[SparseVec]> {
        self.action.as_deref()
    }

    pub fn coaction(&self) -> Option<&[SparseVec]> {
        self.coaction.as_deref()
    }

    pub fn require_action(&self) -> Result<&[SparseVec]> {
        self.action().ok_or_else(|| Error::Precondition("module has no action".into()))
    }

    pub fn require_coaction(&self) -> Result<&[SparseVec]> {
        self.coaction().ok_or_else(|| Error::Precondition("module has no coaction".into()))
    }

    /// `e_h · e_x`; panics without an action.
    pub fn act_basis(&self, h: usize, x: usize) -> &SparseVec {
        &self.action.as_ref().expect("module has an action")[h * self.dim + x]
    }

    /// `h · v` for vectors `h` in the acting algebra and `v` in `X`.
    pub fn act(&self, h: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, a) in h.iter() {
            for (x, b) in v.iter() {
                acc.add_scaled(self.act_basis(i, x), &(a * b));
            }
        }
        acc.finish()
    }

    pub fn coact_basis(&self, x: usize) -> &SparseVec {
        &self.coaction.as_ref().expect("module has a coaction")[x]
    }

    pub fn coact(&self, v: &SparseVec) -> SparseVec {
        v.map_linear(|x| self.coact_basis(x).clone())
    }

    /// Replaces the coaction (keeping the action); used by the connection
    /// layer and by mutation tests.
    pub fn replace_coaction(&self, coaction: Vec<SparseVec>) -> Result<ModComod> {
        let mut out = self.clone();
        out.coaction = None;
        out.with_coaction(coaction)
    }

    /// Adds `value` to one coaction entry `(x → c ⊗ y)`.
    pub fn mutate_coaction(&self, x: usize, c: usize, y: usize, value: &Scalar) -> Result<ModComod> {
        let mut co = self.require_coaction()?.to_vec();
        co[x].add_scaled(&SparseVec::single(c * self.dim + y, value.clone()), &self.field.one());
        self.replace_coaction(co)
    }

    /// Associativity and unitality of the action against `H`.
    pub fn verify_action(&self, h: &HopfAlgebra) -> Check {
        let mut check = Check::new("module_action");
        if self.action.is_none() {
            return check.with_note("no action");
        }
        let d = h.dim();
        for x in 0..self.dim {
            let ex = SparseVec::basis(self.field, x);
            check.record(vec![x], self.act(h.unit(), &ex).sub(&ex));
            for a in 0..d {
                for b in 0..d {
                    let lhs = self.act(h.mul_basis(a, b), &ex);
                    let rhs = self.act(&h.basis(a), self.act_basis(b, x));
                    check.record(vec![a, b, x], lhs.sub(&rhs));
                }
            }
        }
        check
    }

    /// `(Δ ⊗ id)ρ(x) - (id ⊗ ρ)ρ(x)` in `C ⊗ C ⊗ X`, per basis `x`.
    pub fn coassociativity_defects(&self, c: &Coalgebra) -> Vec<SparseVec> {
        let co = self.coaction.as_ref().expect("module has a coaction");
        let n = self.dim;
        (0..n)
            .map(|x| {
                let rho = &co[x];
                let left = map_slot(rho, c.dim, n, c.dim * c.dim, &c.comul);
                let right = map_slot(rho, n, 1, c.dim * n, co);
                left.sub(&right)
            })
            .collect()
    }

    pub fn coassociativity_check(&self, c: &Coalgebra) -> Check {
        let mut check = Check::new("coassociativity");
        for (x, defect) in self.coassociativity_defects(c).into_iter().enumerate() {
            check.record(vec![x], defect);
        }
        check
    }

    pub fn counitality_check(&self, c: &Coalgebra) -> Check {
        let mut check = Check::new("counitality");
        let n = self.dim;
        for x in 0..n {
            let mut acc = Accumulator::new();
            for (flat, v) in self.coact_basis(x).iter() {
                acc.push(flat % n, v * &c.counit[flat / n]);
            }
            check.record(vec![x], acc.finish().sub(&SparseVec::basis(self.field, x)));
        }
        check
    }

    /// Coassociativity and counitality, reported separately.
    pub fn verify_coaction(&self, c: &Coalgebra) -> Report {
        let mut r = Report::new();
        if self.coaction.is_none() {
            r.push(Check::new("coaction").with_note("no coaction"));
            return r;
        }
        r.push(self.coassociativity_check(c));
        r.push(self.counitality_check(c));
        r
    }

    /// The tensor product `X ⊗ Y` with diagonal action `h(x ⊗ y) = h₁x ⊗ h₂y`
    /// and no coaction.
    pub fn tensor_diagonal(&self, other: &ModComod, h: &HopfAlgebra) -> Result<ModComod> {
        let (a, b) = (self.require_action()?, other.require_action()?);
        let (n, m) = (self.dim, other.dim);
        let d = h.dim();
        let mut action = Vec::with_capacity(d * n * m);
        for i in 0..d {
            for x in 0..n {
                for y in 0..m {
                    let mut acc = Accumulator::new();
                    for (flat, c) in h.comul_basis(i).iter() {
                        let (p, q) = (flat / d, flat % d);
                        outer_into(
                            &mut acc,
                            c,
                            &[Factor::Vector(&a[p * n + x]), Factor::Vector(&b[q * m + y])],
                            &[n, m],
                        );
                    }
                    action.push(acc.finish());
                }
            }
        }
        ModComod::new(self.field, n * m, d, self.coacting_dim).with_action(action)
    }
}
