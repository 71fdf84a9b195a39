//! Module-comodules over `k[G]` as functors out of the action groupoid
//! `G ⋉ G`: split `X = ⊕ M_g` by the coaction, then read `L_h: M_g → M_{hgh⁻¹}`.

use crate::error::{Error, Result};
use crate::exact::{Accumulator, EchelonBasis, Matrix, SparseVec};
use crate::hopf::{Group, HopfAlgebra};
use crate::report::{Check, Report};

use super::modcomod::ModComod;

/// A functor `G ⋉ G → Vect`: a space per object `g` and, per arrow
/// `h: g → hgh⁻¹`, a matrix `dims[hgh⁻¹] × dims[g]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorData {
    pub dims: Vec<usize>,
    /// `maps[h * |G| + g]`.
    pub maps: Vec<Matrix>,
}

impl FunctorData {
    pub fn map(&self, h: usize, g: usize) -> &Matrix {
        &self.maps[h * self.dims.len() + g]
    }

    /// The module-comodule on `⊕ V_g` (blocks in order of `g`) with
    /// `ρ(v) = g ⊗ v` on `V_g` and `h` acting by `maps(h, g)`.
    pub fn to_modcomod(&self, group: &Group, h: &HopfAlgebra) -> Result<ModComod> {
        let n = group.order();
        if self.dims.len() != n || self.maps.len() != n * n || h.dim() != n {
            return Err(Error::Dimension("functor data does not match the group".into()));
        }
        let offsets: Vec<usize> = self
            .dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        let total: usize = self.dims.iter().sum();
        let mut action = vec![SparseVec::new(); n * total];
        let mut coaction = vec![SparseVec::new(); total];
        for g in 0..n {
            for i in 0..self.dims[g] {
                let x = offsets[g] + i;
                coaction[x] = SparseVec::single(g * total + x, h.field().one());
                for hh in 0..n {
                    let target = group.conjugate(hh, g);
                    let m = self.map(hh, g);
                    if m.rows() != self.dims[target] || m.cols() != self.dims[g] {
                        return Err(Error::Dimension(format!("map ({hh}, {g}) has the wrong shape")));
                    }
                    action[hh * total + x] = m.column(i).reindex(|r| offsets[target] + r);
                }
            }
        }
        ModComod::new(h.field(), total, n, n).with_action(action)?.with_coaction(coaction)
    }
}

#[derive(Clone, Debug)]
pub struct GroupoidDecomposition {
    pub report: Report,
    /// Basis of `M_g` in the coordinates of `X`, fully reduced.
    pub blocks: Vec<Vec<SparseVec>>,
    /// Present when the split succeeded and `L_h(M_g) ⊆ M_{hgh⁻¹}`.
    pub functor: Option<FunctorData>,
}

impl GroupoidDecomposition {
    pub fn passed(&self) -> bool {
        self.report.passed() && self.functor.is_some()
    }

    /// The change of basis whose columns are the block bases in order.
    pub fn basis_matrix(&self, x: &ModComod) -> Result<Matrix> {
        let cols: Vec<SparseVec> = self.blocks.iter().flatten().cloned().collect();
        Matrix::from_columns(x.field(), x.dim(), cols)
    }
}

/// Coordinates of a vector of `span(basis)` against a fully reduced basis:
/// the entries at the pivots.
fn coordinates(basis: &[SparseVec], v: &SparseVec) -> SparseVec {
    SparseVec::from_entries(
        basis.iter().enumerate().filter_map(|(k, b)| b.leading().and_then(|(p, _)| v.get(p).map(|c| (k, c.clone())))),
    )
}

pub fn groupoid_decompose(group: &Group, h: &HopfAlgebra, x: &ModComod) -> Result<GroupoidDecomposition> {
    let n = group.order();
    if h.dim() != n || (0..n).any(|g| h.comul_basis(g) != &SparseVec::basis(h.field(), g * n + g)) {
        return Err(Error::Precondition("not a group algebra".into()));
    }
    if x.acting_dim() != n || x.coacting_dim() != n {
        return Err(Error::Dimension("module is not over this group algebra".into()));
    }
    let coaction = x.require_coaction()?;
    let action = x.require_action()?;
    let (f, m) = (x.field(), x.dim());

    // P_g(e_x) is the g-component of ρ(e_x).
    let mut cols: Vec<Vec<Accumulator>> = (0..n).map(|_| (0..m).map(|_| Accumulator::new()).collect()).collect();
    for (xi, rho) in coaction.iter().enumerate() {
        for (flat, c) in rho.iter() {
            cols[flat / m][xi].push(flat % m, c.clone());
        }
    }
    let projections: Vec<Matrix> = cols
        .into_iter()
        .map(|c| Matrix::from_columns(f, m, c.into_iter().map(Accumulator::finish).collect()))
        .collect::<Result<_>>()?;

    let mut report = Report::new();
    let mut split = Check::new("grading_projections");
    let identity = Matrix::identity(f, m);
    let mut sum = Matrix::zero(f, m, m);
    for p in &projections {
        sum = Matrix::from_columns(f, m, (0..m).map(|j| sum.column(j).add(p.column(j))).collect())?;
    }
    let defect = sum.sub(&identity)?;
    for j in 0..m {
        split.record(vec![j], defect.column(j).clone());
    }
    for a in 0..n {
        for b in 0..n {
            let prod = projections[a].compose(&projections[b])?;
            let expected = if a == b { projections[a].clone() } else { Matrix::zero(f, m, m) };
            let defect = prod.sub(&expected)?;
            for j in 0..m {
                if !defect.column(j).is_zero() {
                    split.record(vec![a, b, j], defect.column(j).clone());
                }
            }
        }
    }
    let split_ok = split.passed;
    report.push(split);

    let blocks: Vec<Vec<SparseVec>> = projections
        .iter()
        .map(|p| {
            let mut e = EchelonBasis::new(f);
            for v in p.columns() {
                e.insert(v.clone());
            }
            e.reduced_basis()
        })
        .collect();
    if !split_ok {
        return Ok(GroupoidDecomposition { report, blocks, functor: None });
    }

    let mut equivariant = Check::new("conjugation_equivariance");
    let mut maps = Vec::with_capacity(n * n);
    for hh in 0..n {
        for g in 0..n {
            let target = group.conjugate(hh, g);
            let mut columns = Vec::with_capacity(blocks[g].len());
            for (i, v) in blocks[g].iter().enumerate() {
                let image = v.map_linear(|y| action[hh * m + y].clone());
                let inside = projections[target].apply(&image);
                equivariant.record(vec![hh, g, i], image.sub(&inside));
                columns.push(coordinates(&blocks[target], &image));
            }
            maps.push(Matrix::from_columns(f, blocks[target].len(), columns)?);
        }
    }
    let ok = equivariant.passed;
    report.push(equivariant);
    let functor = ok.then(|| FunctorData { dims: blocks.iter().map(Vec::len).collect(), maps });
    Ok(GroupoidDecomposition { report, blocks, functor })
}

/// Rebuilds the action and coaction in the original coordinates of `x` from
/// a successful decomposition.
pub fn reassemble(group: &Group, h: &HopfAlgebra, x: &ModComod, dec: &GroupoidDecomposition) -> Result<ModComod> {
    let functor =
        dec.functor.as_ref().ok_or_else(|| Error::Precondition("decomposition did not produce a functor".into()))?;
    let block = functor.to_modcomod(group, h)?;
    let p = dec.basis_matrix(x)?;
    let p_inv = p.inverse().ok_or_else(|| Error::Structure("block bases do not span".into()))?;
    let (n, m) = (group.order(), x.dim());
    let mut action = Vec::with_capacity(n * m);
    for hh in 0..n {
        for xi in 0..m {
            let w = p_inv.column(xi).map_linear(|b| block.act_basis(hh, b).clone());
            action.push(p.apply(&w));
        }
    }
    let coaction = (0..m)
        .map(|xi| {
            let w = p_inv.column(xi).map_linear(|b| block.coact_basis(b).clone());
            w.map_linear(|flat| p.column(flat % m).reindex(|y| (flat / m) * m + y))
        })
        .collect();
    ModComod::new(x.field(), m, n, n).with_action(action)?.with_coaction(coaction)
}
