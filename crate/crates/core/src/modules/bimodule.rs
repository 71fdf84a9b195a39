use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{outer_into, Accumulator, Factor, PowerShape, SparseVec};
use crate::hopf::{BialgebraMorphism, Coalgebra, HopfAlgebra};
use crate::report::{Check, Report};

use super::modcomod::ModComod;

/// A coalgebra `C` that is also a `B`-bimodule with `Δ_C` a bimodule map,
/// together with a group-like `I ∈ C`.
#[derive(Clone, Debug)]
pub struct BimoduleCoalgebra {
    pub bialgebra: Arc<HopfAlgebra>,
    pub coalgebra: Coalgebra,
    /// `left[b * dim_C + c] = b·c`.
    pub left: Vec<SparseVec>,
    /// `right[c * dim_B + b] = c·b`.
    pub right: Vec<SparseVec>,
    pub grouplike: SparseVec,
}

impl BimoduleCoalgebra {
    pub fn new(
        bialgebra: Arc<HopfAlgebra>,
        coalgebra: Coalgebra,
        left: Vec<SparseVec>,
        right: Vec<SparseVec>,
        grouplike: SparseVec,
    ) -> Result<Self> {
        let (db, dc) = (bialgebra.dim(), coalgebra.dim);
        let bad = |t: &[SparseVec]| t.len() != db * dc || t.iter().any(|v| v.max_index().is_some_and(|i| i >= dc));
        if bad(&left) || bad(&right) || grouplike.max_index().is_some_and(|i| i >= dc) {
            return Err(Error::Dimension("bimodule coalgebra tensors have the wrong shape".into()));
        }
        Ok(BimoduleCoalgebra { bialgebra, coalgebra, left, right, grouplike })
    }

    /// `C = B` with multiplication on both sides and `I = 1`.
    pub fn regular(b: &Arc<HopfAlgebra>) -> Self {
        Self::regular_with_grouplike(b, b.unit().clone()).expect("unit is in range")
    }

    /// `C = B` with a chosen group-like `I`.
    pub fn regular_with_grouplike(b: &Arc<HopfAlgebra>, grouplike: SparseVec) -> Result<Self> {
        let table = b.mul_table().to_vec();
        BimoduleCoalgebra::new(b.clone(), b.coalgebra(), table.clone(), table, grouplike)
    }

    pub fn dim_b(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn dim_c(&self) -> usize {
        self.coalgebra.dim
    }

    /// `b · c · b'` for vectors.
    pub fn sandwich(&self, b: &SparseVec, c: &SparseVec, b2: &SparseVec) -> SparseVec {
        let (db, dc) = (self.dim_b(), self.dim_c());
        let mut left = Accumulator::new();
        for (i, x) in b.iter() {
            for (j, y) in c.iter() {
                left.add_scaled(&self.left[i * dc + j], &(x * y));
            }
        }
        let mut out = Accumulator::new();
        for (j, x) in left.finish().iter() {
            for (i, y) in b2.iter() {
                out.add_scaled(&self.right[j * db + i], &(x * y));
            }
        }
        out.finish()
    }

    /// Coalgebra axioms, bimodule axioms, `Δ_C` bimodule map, `Δ(I) = I⊗I`.
    /// `ε(I) ≠ 1` is reported as a note, not a failure.
    pub fn verify(&self) -> Report {
        let b = &self.bialgebra;
        let (db, dc) = (self.dim_b(), self.dim_c());
        let f = b.field();
        let mut report = self.coalgebra.verify();

        let mut bimod = Check::new("bimodule_axioms");
        for c in 0..dc {
            let ec = SparseVec::basis(f, c);
            bimod.record(vec![c], self.sandwich(b.unit(), &ec, b.unit()).sub(&ec));
            for x in 0..db {
                for y in 0..db {
                    let (bx, by) = (b.basis(x), b.basis(y));
                    let l1 = self.sandwich(b.mul_basis(x, y), &ec, b.unit());
                    let l2 = self.sandwich(&bx, &self.left[y * dc + c], b.unit());
                    bimod.record(vec![x, y, c], l1.sub(&l2));
                    let r1 = self.sandwich(b.unit(), &ec, b.mul_basis(x, y));
                    let r2 = self.sandwich(b.unit(), &self.right[c * db + x], &by);
                    bimod.record(vec![c, x, y], r1.sub(&r2));
                    let m1 = self.sandwich(&bx, &self.right[c * db + y], b.unit());
                    let m2 = self.sandwich(b.unit(), &self.left[x * dc + c], &by);
                    bimod.record(vec![x, c, y], m1.sub(&m2));
                }
            }
        }
        report.push(bimod);

        let mut comod = Check::new("comultiplication_bimodule_map");
        for x in 0..db {
            for c in 0..dc {
                for y in 0..db {
                    let lhs = self.coalgebra.comul_slot(
                        &self.sandwich(&b.basis(x), &SparseVec::basis(f, c), &b.basis(y)),
                        1,
                        0,
                    );
                    let mut acc = Accumulator::new();
                    for (bf, bc) in b.comul_basis(x).iter() {
                        for (cf, cc) in self.coalgebra.comul[c].iter() {
                            for (yf, yc) in b.comul_basis(y).iter() {
                                let first =
                                    self.sandwich(&b.basis(bf / db), &SparseVec::basis(f, cf / dc), &b.basis(yf / db));
                                let second =
                                    self.sandwich(&b.basis(bf % db), &SparseVec::basis(f, cf % dc), &b.basis(yf % db));
                                let coeff = &(bc * cc) * yc;
                                outer_into(
                                    &mut acc,
                                    &coeff,
                                    &[Factor::Vector(&first), Factor::Vector(&second)],
                                    &[dc, dc],
                                );
                            }
                        }
                    }
                    comod.record(vec![x, c, y], lhs.sub(&acc.finish()));
                }
            }
        }
        report.push(comod);

        let mut gl = Check::new("grouplike");
        let mut acc = Accumulator::new();
        let i = &self.grouplike;
        outer_into(&mut acc, &f.one(), &[Factor::Vector(i), Factor::Vector(i)], &[dc, dc]);
        gl.record(vec![], self.coalgebra.comul_slot(i, 1, 0).sub(&acc.finish()));
        let eps = self.coalgebra.counit_of(i);
        if !eps.is_one() {
            gl = gl.with_note(format!("ε(I) = {eps}; no condition is imposed on it"));
        }
        report.push(gl);
        report
    }

    /// `α(b₁) c β(b₃) ⊗ b₂` summed over `Δ²(b)` for basis `b`, with `c`
    /// supplied per term; the common kernel of the equivariance condition
    /// and of the last term of the differential.
    pub fn conjugation_legs(
        &self,
        alpha: &BialgebraMorphism,
        beta: &BialgebraMorphism,
        b: usize,
        mut visit: impl FnMut(&crate::exact::Scalar, &SparseVec, &SparseVec, usize),
    ) {
        let h = &self.bialgebra;
        let shape = PowerShape::new(h.dim(), 3);
        for (flat, c) in h.comultiply_iter(&h.basis(b), 2).iter() {
            let l = shape.decode(flat);
            visit(c, alpha.apply_basis(l[0]), beta.apply_basis(l[2]), l[1]);
        }
    }

    /// `B` as a left `C`-comodule, `b ↦ α(b₁) I β(b₃) ⊗ b₂`.
    pub fn b_comodule(&self, alpha: &BialgebraMorphism, beta: &BialgebraMorphism) -> Result<ModComod> {
        let (db, dc) = (self.dim_b(), self.dim_c());
        let coaction = (0..db)
            .map(|b| {
                let mut acc = Accumulator::new();
                self.conjugation_legs(alpha, beta, b, |coeff, a, be, mid| {
                    let c = self.sandwich(a, &self.grouplike, be);
                    outer_into(&mut acc, coeff, &[Factor::Vector(&c), Factor::Basis(mid)], &[dc, db]);
                });
                acc.finish()
            })
            .collect();
        ModComod::new(self.bialgebra.field(), db, db, dc).with_coaction(coaction)
    }

    /// `k` with `b·x = ε(b)x` and `ρ(x) = I ⊗ x`.
    pub fn trivial_modcomod(&self) -> Result<ModComod> {
        let b = &self.bialgebra;
        let action = b.counit().iter().map(|c| SparseVec::single(0, c.clone())).collect();
        ModComod::new(b.field(), 1, self.dim_b(), self.dim_c())
            .with_action(action)?
            .with_coaction(vec![self.grouplike.clone()])
    }
}

/// `ρ(bx) = α(b₁) x₍₋₁₎ β(b₃) ⊗ b₂ x₍₀₎` on all basis pairs.
pub fn check_equivariant(
    x: &ModComod,
    c: &BimoduleCoalgebra,
    alpha: &BialgebraMorphism,
    beta: &BialgebraMorphism,
) -> Result<Check> {
    if x.acting_dim() != c.dim_b() || x.coacting_dim() != c.dim_c() {
        return Err(Error::Dimension("module does not match the bimodule coalgebra".into()));
    }
    x.require_action()?;
    x.require_coaction()?;
    let (n, dc) = (x.dim(), c.dim_c());
    let mut check = Check::new("equivariant");
    for b in 0..c.dim_b() {
        for xi in 0..n {
            let lhs = x.coact(x.act_basis(b, xi));
            let mut acc = Accumulator::new();
            c.conjugation_legs(alpha, beta, b, |coeff, a, be, mid| {
                for (flat, v) in x.coact_basis(xi).iter() {
                    let cc = c.sandwich(a, &SparseVec::basis(c.bialgebra.field(), flat / n), be);
                    outer_into(
                        &mut acc,
                        &(coeff * v),
                        &[Factor::Vector(&cc), Factor::Vector(x.act_basis(mid, flat % n))],
                        &[dc, n],
                    );
                }
            });
            check.record(vec![b, xi], lhs.sub(&acc.finish()));
        }
    }
    Ok(check)
}
