//! Chain complexes, exact homology dimensions, and the two-sided cobar
//! complex `B(k, C, X)` computing `Cotor_C(k, X)`.

use serde::Serialize;

use crate::calculus::{Calculus, CalculusKind};
use crate::connections::{coefficient_complex, connection_from_coaction};
use crate::error::{Error, Result};
use crate::exact::{Accumulator, FieldSpec, Matrix, SparseVec};
use crate::hopf::Coalgebra;
use crate::modules::{coadjoint_comodule, coadjoint_comodule_yd, ModComod};
use crate::report::{Check, Report};

/// Spaces `0..=top` and differentials `d_n: n → n + 1` for `n < top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    field: FieldSpec,
    dims: Vec<usize>,
    differentials: Vec<Matrix>,
}

impl ChainComplex {
    /// Checks shapes and `d_{n+1} d_n = 0`.
    pub fn new(field: FieldSpec, dims: Vec<usize>, differentials: Vec<Matrix>) -> Result<Self> {
        if differentials.len() + 1 != dims.len() {
            return Err(Error::Dimension("a complex needs one differential per degree below the top".into()));
        }
        for (n, d) in differentials.iter().enumerate() {
            if d.cols() != dims[n] || d.rows() != dims[n + 1] || d.field() != field {
                return Err(Error::Dimension(format!("d_{n} has the wrong shape or field")));
            }
        }
        for n in 1..differentials.len() {
            if !differentials[n].compose(&differentials[n - 1])?.is_zero() {
                return Err(Error::Structure(format!("d_{n} d_{} ≠ 0", n - 1)));
            }
        }
        Ok(ChainComplex { field, dims, differentials })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn differential(&self, n: usize) -> Option<&Matrix> {
        self.differentials.get(n)
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    /// `(n, dim H_n)`.
    pub entries: Vec<(usize, usize)>,
}

impl HomologyTable {
    pub fn dims(&self) -> Vec<usize> {
        self.entries.iter().map(|&(_, d)| d).collect()
    }
}

/// `dim H_n = dim ker d_n - rank d_{n-1}` for `n ≤ max_degree - 1`.
pub fn homology_dims(cx: &ChainComplex, max_degree: usize) -> Result<HomologyTable> {
    if max_degree > cx.top_degree() {
        return Err(Error::DegreeOutOfRange { degree: max_degree, max: cx.top_degree() });
    }
    let ranks: Vec<usize> = cx.differentials[..max_degree].iter().map(Matrix::rank).collect();
    let entries = (0..max_degree)
        .map(|n| {
            let kernel = cx.dims[n] - ranks[n];
            let image = if n == 0 { 0 } else { ranks[n - 1] };
            (n, kernel - image)
        })
        .collect();
    Ok(HomologyTable { entries })
}

/// `B(k, C, X)`: degree `n` is `C^{⊗n} ⊗ X` and
/// `d = -(I ⊗ ·) + Σⱼ (-1)^{j-1} Δ on slot j + (-1)ⁿ (id ⊗ ρ_X)`,
/// with `k` a comodule through the group-like `I`.
pub fn cobar_complex(c: &Coalgebra, grouplike: &SparseVec, x: &ModComod, max_degree: usize) -> Result<ChainComplex> {
    let coaction = x.require_coaction()?;
    if x.coacting_dim() != c.dim {
        return Err(Error::Dimension("comodule is not over this coalgebra".into()));
    }
    if !x.coassociativity_check(c).passed {
        return Err(Error::Precondition("coaction is not coassociative".into()));
    }
    if !c.is_grouplike(grouplike) {
        return Err(Error::Precondition("I is not group-like".into()));
    }
    let (dc, dx) = (c.dim, x.dim());
    let f = c.field;
    let dims: Vec<usize> = (0..=max_degree).map(|n| dc.pow(n as u32) * dx).collect();
    let mut differentials = Vec::with_capacity(max_degree);
    for n in 0..max_degree {
        let size = dims[n];
        let sign = |k: usize| if k % 2 == 0 { f.one() } else { -f.one() };
        let cols = (0..size)
            .map(|t| {
                let mut acc = Accumulator::new();
                for (i, v) in grouplike.iter() {
                    acc.push(i * size + t, -v.clone());
                }
                for j in 1..=n {
                    let suffix = dc.pow((n - j) as u32) * dx;
                    let (rest, tail) = (t / suffix, t % suffix);
                    let (prefix, cj) = (rest / dc, rest % dc);
                    let sg = sign(j - 1);
                    for (k, v) in c.comul[cj].iter() {
                        acc.push((prefix * dc * dc + k) * suffix + tail, &sg * v);
                    }
                }
                let (prefix, xi) = (t / dx, t % dx);
                let sg = sign(n);
                for (k, v) in coaction[xi].iter() {
                    acc.push(prefix * dc * dx + k, &sg * v);
                }
                acc.finish()
            })
            .collect();
        differentials.push(Matrix::from_columns(f, dims[n + 1], cols)?);
    }
    ChainComplex::new(f, dims, differentials)
}

/// The complex of a calculus itself (degrees `0..=max`).
pub fn calculus_complex(calc: &Calculus) -> Result<ChainComplex> {
    ChainComplex::new(calc.field(), calc.degree_dims().to_vec(), calc.differentials().to_vec())
}

#[derive(Clone, Debug)]
pub struct CotorComparison {
    pub report: Report,
    pub calculus_side: HomologyTable,
    pub cobar_side: HomologyTable,
}

/// Calculus-side complex (the calculus itself when `x` is `None`, else the
/// coefficient complex of `∇ = ρ - I ⊗ ·`) against the cobar complex built
/// from the coalgebra, `I`, and a comodule constructed without the calculus.
pub fn compare_cotor(calc: &Calculus, x: Option<&ModComod>) -> Result<CotorComparison> {
    let max = calc.max_degree();
    let (coalgebra, grouplike) = match calc.kind() {
        CalculusKind::K(h) | CalculusKind::Khat(h) => (h.coalgebra(), h.unit().clone()),
        CalculusKind::General { coalgebra, .. } => (coalgebra.coalgebra.clone(), coalgebra.grouplike.clone()),
    };
    let (calc_cx, cobar_cx) = match x {
        None => {
            let coefficients = match calc.kind() {
                CalculusKind::K(h) => coadjoint_comodule(h)?,
                CalculusKind::Khat(h) => coadjoint_comodule_yd(h)?,
                CalculusKind::General { coalgebra, alpha, beta } => coalgebra.b_comodule(alpha, beta)?,
            };
            (calculus_complex(calc)?, cobar_complex(&coalgebra, &grouplike, &coefficients, max)?)
        }
        Some(x) => {
            let conn = connection_from_coaction(calc, x)?;
            (coefficient_complex(calc, &conn)?, cobar_complex(&coalgebra, &grouplike, x, max)?)
        }
    };
    let calculus_side = homology_dims(&calc_cx, max)?;
    let cobar_side = homology_dims(&cobar_cx, max)?;

    let mut report = Report::new();
    let mut dims = Check::new("homology_dimensions");
    for (&(n, a), &(_, b)) in calculus_side.entries.iter().zip(&cobar_side.entries) {
        if a != b {
            dims.fail(vec![n], format!("H_{n}: calculus {a}, cobar {b}"));
        }
    }
    report.push(dims);
    let mut chain = Check::new("chain_level");
    if calc_cx.dims() != cobar_cx.dims() {
        chain.fail(vec![], "degree dimensions differ");
    } else {
        for (n, (a, b)) in calc_cx.differentials().iter().zip(cobar_cx.differentials()).enumerate() {
            for col in 0..a.cols() {
                chain.record(vec![n, col], a.column(col).sub(b.column(col)));
            }
        }
    }
    report.push(chain);
    Ok(CotorComparison { report, calculus_side, cobar_side })
}
