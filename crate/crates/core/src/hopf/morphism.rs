use std::sync::Arc;

use super::algebra::HopfAlgebra;
use crate::error::{Error, Result};
use crate::exact::{outer_into, Accumulator, Factor, Matrix, SparseVec};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismVariant {
    /// A bialgebra map `B → B'`.
    Plain,
    /// A bialgebra map `B → B'^{op,cop}`.
    OpCop,
}

/// A linear map between bialgebras, stored as a `dim target × dim source`
/// matrix whose columns are images of source basis vectors.
#[derive(Clone, Debug)]
pub struct BialgebraMorphism {
    pub source: Arc<HopfAlgebra>,
    pub target: Arc<HopfAlgebra>,
    pub matrix: Matrix,
    pub variant: MorphismVariant,
}

impl BialgebraMorphism {
    pub fn new(
        source: Arc<HopfAlgebra>,
        target: Arc<HopfAlgebra>,
        matrix: Matrix,
        variant: MorphismVariant,
    ) -> Result<Self> {
        if matrix.cols() != source.dim() || matrix.rows() != target.dim() {
            return Err(Error::Dimension(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(BialgebraMorphism { source, target, matrix, variant })
    }

    pub fn identity(h: &Arc<HopfAlgebra>) -> Self {
        BialgebraMorphism {
            source: h.clone(),
            target: h.clone(),
            matrix: Matrix::identity(h.field(), h.dim()),
            variant: MorphismVariant::Plain,
        }
    }

    /// `S: H → H^{op,cop}`.
    pub fn antipode(h: &Arc<HopfAlgebra>) -> Self {
        BialgebraMorphism {
            source: h.clone(),
            target: h.clone(),
            matrix: h.antipode().clone(),
            variant: MorphismVariant::OpCop,
        }
    }

    /// `S⁻¹: H → H^{op,cop}`.
    pub fn antipode_inverse(h: &Arc<HopfAlgebra>) -> Result<Self> {
        let inv = h.antipode_inverse().ok_or(Error::AntipodeNotInvertible)?;
        Ok(BialgebraMorphism {
            source: h.clone(),
            target: h.clone(),
            matrix: inv.clone(),
            variant: MorphismVariant::OpCop,
        })
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(v)
    }

    pub fn apply_basis(&self, i: usize) -> &SparseVec {
        self.matrix.column(i)
    }

    /// Checks multiplicativity, unitality, comultiplicativity and counitality
    /// (twisted by the flip for op-cop morphisms) on all basis pairs.
    pub fn verify(&self) -> Report {
        let (src, dst) = (&self.source, &self.target);
        let f = src.field();
        let d = dst.dim();
        let op = self.variant == MorphismVariant::OpCop;
        let mut report = Report::new();

        let mut mult = Check::new("morphism_multiplicative");
        for a in 0..src.dim() {
            for b in 0..src.dim() {
                let lhs = self.apply(src.mul_basis(a, b));
                let (fa, fb) = (self.apply_basis(a), self.apply_basis(b));
                let rhs = if op { dst.mul_vec(fb, fa) } else { dst.mul_vec(fa, fb) };
                mult.record(vec![a, b], lhs.sub(&rhs));
            }
        }
        report.push(mult);

        let mut unital = Check::new("morphism_unital");
        unital.record(vec![], self.apply(src.unit()).sub(dst.unit()));
        report.push(unital);

        let mut comult = Check::new("morphism_comultiplicative");
        let mut counital = Check::new("morphism_counital");
        for a in 0..src.dim() {
            let lhs = dst.comultiply(self.apply_basis(a));
            let mut rhs = src.comul_basis(a).map_linear(|flat| {
                let (i, j) = (flat / src.dim(), flat % src.dim());
                let mut acc = Accumulator::new();
                outer_into(
                    &mut acc,
                    &f.one(),
                    &[Factor::Vector(self.apply_basis(i)), Factor::Vector(self.apply_basis(j))],
                    &[d, d],
                );
                acc.finish()
            });
            if op {
                rhs = rhs.reindex(|flat| (flat % d) * d + flat / d);
            }
            comult.record(vec![a], lhs.sub(&rhs));
            let e = &dst.counit_of(self.apply_basis(a)) - &src.counit()[a];
            counital.record(vec![a], SparseVec::single(0, e));
        }
        report.push(comult);
        report.push(counital);
        report
    }
}
