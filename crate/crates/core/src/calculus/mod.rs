//! The differential graded algebras `K*(H)`, `K̂*(H)` and `K*_(α,β)(C, B)`.
//!
//! Degree `n` is `C^{⊗n} ⊗ B` (with `C = B = H` for the first two), stored
//! big-endian with the `B` slot last. The product only touches the last slot
//! of the left factor:
//! `(c¹…cⁿ ⊗ b)(v) = c¹…cⁿ ⊗ b·v`, where `b` acts on degree `m` by
//! `b(c¹…cᵐ ⊗ b') = α(b₁)c¹β(b₂ₘ₊₁) ⊗ … ⊗ α(bₘ)cᵐβ(bₘ₊₂) ⊗ bₘ₊₁b'`.
//! The action tables are built recursively through
//! `b(c ⊗ ω) = α(b₁)cβ(b₃) ⊗ b₂ω`, which is the same thing by coassociativity.

mod verify;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{outer_into, Accumulator, Factor, FieldSpec, Matrix, PowerShape, Scalar, SparseVec};
use crate::hopf::{BialgebraMorphism, HopfAlgebra, MorphismVariant};
use crate::modules::BimoduleCoalgebra;

pub use verify::{specialization_check, verify_dga, Specialization};

#[derive(Clone, Debug)]
pub enum CalculusKind {
    /// Sandwich legs through `S⁻¹`.
    K(Arc<HopfAlgebra>),
    /// Sandwich legs through `S`; no invertibility needed.
    Khat(Arc<HopfAlgebra>),
    General {
        coalgebra: Arc<BimoduleCoalgebra>,
        alpha: BialgebraMorphism,
        beta: BialgebraMorphism,
    },
}

impl CalculusKind {
    pub fn label(&self) -> &'static str {
        match self {
            CalculusKind::K(_) => "k",
            CalculusKind::Khat(_) => "khat",
            CalculusKind::General { .. } => "general",
        }
    }

    /// The algebra acting in degree zero.
    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        match self {
            CalculusKind::K(h) | CalculusKind::Khat(h) => h,
            CalculusKind::General { coalgebra, .. } => &coalgebra.bialgebra,
        }
    }
}

/// Which Sweedler legs sandwich a slot when building the left action.
/// Only the standard attachment yields a calculus; the other exists so the
/// Leibniz check can be shown to catch a mis-indexed leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum LegAttachment {
    Standard,
    #[cfg_attr(not(test), allow(dead_code))]
    Misattached,
}

/// The structure constants the engine needs, independent of which of the
/// three constructions produced them.
#[derive(Clone, Debug)]
struct Structure {
    field: FieldSpec,
    dim_c: usize,
    dim_b: usize,
    comul_c: Vec<SparseVec>,
    grouplike: SparseVec,
    mul_b: Vec<SparseVec>,
    unit_b: SparseVec,
    /// `Δ²(b)` as `(coefficient, [b₁, b₂, b₃])`.
    legs: Vec<Vec<(Scalar, [usize; 3])>>,
    /// `sandwich[(l * dim_b + r) * dim_c + c] = α(l) c β(r)`.
    sandwich: Vec<SparseVec>,
    /// `coad[b] = α(b₁) I β(b₃) ⊗ b₂` in `C ⊗ B`.
    coad: Vec<SparseVec>,
}

fn second_legs(h: &HopfAlgebra) -> Vec<Vec<(Scalar, [usize; 3])>> {
    let shape = PowerShape::new(h.dim(), 3);
    (0..h.dim())
        .map(|b| {
            h.comultiply_iter(&h.basis(b), 2)
                .iter()
                .map(|(flat, c)| {
                    let l = shape.decode(flat);
                    (c.clone(), [l[0], l[1], l[2]])
                })
                .collect()
        })
        .collect()
}

impl Structure {
    fn hopf(h: &HopfAlgebra, twist: &Matrix) -> Structure {
        let d = h.dim();
        let legs = second_legs(h);
        let mut sandwich = Vec::with_capacity(d * d * d);
        for l in 0..d {
            for r in 0..d {
                for c in 0..d {
                    sandwich.push(h.mul_vec(h.mul_basis(l, c), twist.column(r)));
                }
            }
        }
        let coad = legs
            .iter()
            .map(|terms| {
                let mut acc = Accumulator::new();
                for (c, l) in terms {
                    let left = h.mul_vec(&h.basis(l[0]), twist.column(l[2]));
                    outer_into(&mut acc, c, &[Factor::Vector(&left), Factor::Basis(l[1])], &[d, d]);
                }
                acc.finish()
            })
            .collect();
        Structure {
            field: h.field(),
            dim_c: d,
            dim_b: d,
            comul_c: h.comul_table().to_vec(),
            grouplike: h.unit().clone(),
            mul_b: h.mul_table().to_vec(),
            unit_b: h.unit().clone(),
            legs,
            sandwich,
            coad,
        }
    }

    fn general(c: &BimoduleCoalgebra, alpha: &BialgebraMorphism, beta: &BialgebraMorphism) -> Structure {
        let b = &c.bialgebra;
        let (db, dc) = (b.dim(), c.dim_c());
        let f = b.field();
        let mut sandwich = Vec::with_capacity(db * db * dc);
        for l in 0..db {
            for r in 0..db {
                for x in 0..dc {
                    sandwich.push(c.sandwich(alpha.apply_basis(l), &SparseVec::basis(f, x), beta.apply_basis(r)));
                }
            }
        }
        let coad = (0..db)
            .map(|bi| {
                let mut acc = Accumulator::new();
                c.conjugation_legs(alpha, beta, bi, |coeff, a, be, mid| {
                    let v = c.sandwich(a, &c.grouplike, be);
                    outer_into(&mut acc, coeff, &[Factor::Vector(&v), Factor::Basis(mid)], &[dc, db]);
                });
                acc.finish()
            })
            .collect();
        Structure {
            field: f,
            dim_c: dc,
            dim_b: db,
            comul_c: c.coalgebra.comul.clone(),
            grouplike: c.grouplike.clone(),
            mul_b: b.mul_table().to_vec(),
            unit_b: b.unit().clone(),
            legs: second_legs(b),
            sandwich,
            coad,
        }
    }
}

/// A calculus materialized through degree `max_degree`: spaces `0..=max`,
/// differentials `d_0..d_{max-1}`, and products with degree sum `≤ max`.
#[derive(Clone, Debug)]
pub struct Calculus {
    kind: CalculusKind,
    s: Structure,
    max_degree: usize,
    dims: Vec<usize>,
    differentials: Vec<Matrix>,
    /// `left[m][b * dim(m) + t] = b · e_t` for `e_t` in degree `m`.
    left: Vec<Vec<SparseVec>>,
}

fn failures(report: &crate::report::Report) -> String {
    report.failures().map(|c| c.name.as_str()).collect::<Vec<_>>().join(", ")
}

pub fn build_calculus(kind: CalculusKind, max_degree: usize) -> Result<Calculus> {
    Calculus::build(kind, max_degree)
}

impl Calculus {
    pub fn build(kind: CalculusKind, max_degree: usize) -> Result<Calculus> {
        Self::build_with(kind, max_degree, LegAttachment::Standard)
    }

    pub(crate) fn build_with(kind: CalculusKind, max_degree: usize, attach: LegAttachment) -> Result<Calculus> {
        if max_degree == 0 {
            return Err(Error::Precondition("max_degree must be at least 1".into()));
        }
        let s = match &kind {
            CalculusKind::K(h) => {
                let inv = h.antipode_inverse().ok_or(Error::AntipodeNotInvertible)?;
                check_verified("Hopf algebra", &h.verify_hopf_axioms())?;
                Structure::hopf(h, inv)
            }
            CalculusKind::Khat(h) => {
                check_verified("Hopf algebra", &h.verify_hopf_axioms())?;
                Structure::hopf(h, h.antipode())
            }
            CalculusKind::General { coalgebra, alpha, beta } => {
                let b = &coalgebra.bialgebra;
                if alpha.variant != MorphismVariant::Plain || beta.variant != MorphismVariant::OpCop {
                    return Err(Error::Precondition("α must map B → B and β must map B → B^{op,cop}".into()));
                }
                if alpha.source.as_ref() != b.as_ref()
                    || alpha.target.as_ref() != b.as_ref()
                    || beta.source.as_ref() != b.as_ref()
                    || beta.target.as_ref() != b.as_ref()
                {
                    return Err(Error::Precondition("α and β must be endomorphisms of B".into()));
                }
                check_verified("bimodule coalgebra", &coalgebra.verify())?;
                check_verified("α", &alpha.verify())?;
                check_verified("β", &beta.verify())?;
                Structure::general(coalgebra, alpha, beta)
            }
        };
        let dims: Vec<usize> = (0..=max_degree).map(|n| s.dim_c.pow(n as u32) * s.dim_b).collect();
        let left = build_left_tables(&s, max_degree, attach);
        let mut calc = Calculus { kind, s, max_degree, dims, differentials: Vec::new(), left };
        calc.differentials = (0..max_degree).map(|n| calc.build_differential(n)).collect::<Result<_>>()?;
        Ok(calc)
    }

    pub fn kind(&self) -> &CalculusKind {
        &self.kind
    }

    pub fn field(&self) -> FieldSpec {
        self.s.field
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim_c(&self) -> usize {
        self.s.dim_c
    }

    pub fn dim_b(&self) -> usize {
        self.s.dim_b
    }

    pub fn degree_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn degree_dim(&self, n: usize) -> Result<usize> {
        self.dims.get(n).copied().ok_or(Error::DegreeOutOfRange { degree: n, max: self.max_degree })
    }

    /// The group-like `I ∈ C` (the unit for `K` and `K̂`).
    pub fn grouplike(&self) -> &SparseVec {
        &self.s.grouplike
    }

    pub fn unit(&self) -> &SparseVec {
        &self.s.unit_b
    }

    /// `coad[b] = α(b₁) I β(b₃) ⊗ b₂`, the last term of `d` on degree zero.
    pub fn coadjoint(&self, b: usize) -> &SparseVec {
        &self.s.coad[b]
    }

    pub fn comul_c(&self) -> &[SparseVec] {
        &self.s.comul_c
    }

    /// `d_n`: degree `n` → degree `n + 1`, for `n < max_degree`.
    pub fn differential(&self, n: usize) -> Result<&Matrix> {
        self.differentials.get(n).ok_or(Error::DegreeOutOfRange { degree: n, max: self.max_degree })
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    pub fn differential_apply(&self, n: usize, t: &SparseVec) -> Result<SparseVec> {
        let d = self.differential(n)?;
        check_range(t, self.dims[n])?;
        Ok(d.apply(t))
    }

    /// `b · e_t` for basis `b ∈ B` and basis `e_t` of degree `m`.
    pub fn left_action_basis(&self, m: usize, b: usize, t: usize) -> &SparseVec {
        &self.left[m][b * self.dims[m] + t]
    }

    pub fn left_action(&self, m: usize, b: &SparseVec, v: &SparseVec) -> Result<SparseVec> {
        if m > self.max_degree {
            return Err(Error::DegreeOutOfRange { degree: m, max: self.max_degree });
        }
        let mut acc = Accumulator::new();
        for (bi, x) in b.iter() {
            for (t, y) in v.iter() {
                acc.add_scaled(self.left_action_basis(m, bi, t), &(x * y));
            }
        }
        Ok(acc.finish())
    }

    /// Product of basis elements `e_u` (degree `n`) and `e_v` (degree `m`).
    pub fn product_basis(&self, n: usize, u: usize, m: usize, v: usize) -> SparseVec {
        debug_assert!(u < self.dims[n] && v < self.dims[m]);
        let db = self.s.dim_b;
        let (prefix, b) = (u / db, u % db);
        let size = self.dims[m];
        self.left_action_basis(m, b, v).reindex(|k| prefix * size + k)
    }

    pub fn product_apply(&self, n: usize, u: &SparseVec, m: usize, v: &SparseVec) -> Result<SparseVec> {
        if n + m > self.max_degree {
            return Err(Error::DegreeOutOfRange { degree: n + m, max: self.max_degree });
        }
        check_range(u, self.dims[n])?;
        check_range(v, self.dims[m])?;
        let mut acc = Accumulator::new();
        for (i, x) in u.iter() {
            for (j, y) in v.iter() {
                acc.add_scaled(&self.product_basis(n, i, m, j), &(x * y));
            }
        }
        Ok(acc.finish())
    }

    /// Column `t` of `d_n`:
    /// `-(I ⊗ t) + Σⱼ (-1)^{j-1} Δ on cʲ + (-1)ⁿ (c¹…cⁿ ⊗ α(b₁)Iβ(b₃) ⊗ b₂)`.
    pub(crate) fn differential_column(&self, n: usize, t: usize) -> SparseVec {
        let s = &self.s;
        let (dc, db) = (s.dim_c, s.dim_b);
        let size = self.dims[n];
        let sign = |k: usize| {
            if k % 2 == 0 {
                s.field.one()
            } else {
                -s.field.one()
            }
        };
        let mut acc = Accumulator::new();
        for (i, c) in s.grouplike.iter() {
            acc.push(i * size + t, -c.clone());
        }
        for j in 1..=n {
            let suffix = dc.pow((n - j) as u32) * db;
            let (rest, tail) = (t / suffix, t % suffix);
            let (prefix, cj) = (rest / dc, rest % dc);
            let sg = sign(j - 1);
            for (k, c) in s.comul_c[cj].iter() {
                acc.push((prefix * dc * dc + k) * suffix + tail, &sg * c);
            }
        }
        let (prefix, b) = (t / db, t % db);
        let sg = sign(n);
        for (k, c) in s.coad[b].iter() {
            acc.push(prefix * dc * db + k, &sg * c);
        }
        acc.finish()
    }

    fn build_differential(&self, n: usize) -> Result<Matrix> {
        let cols = (0..self.dims[n]).map(|t| self.differential_column(n, t)).collect();
        Matrix::from_columns(self.s.field, self.dims[n + 1], cols)
    }
}

fn check_verified(what: &str, report: &crate::report::Report) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} fails: {}", failures(report))))
    }
}

fn check_range(v: &SparseVec, dim: usize) -> Result<()> {
    match v.max_index() {
        Some(i) if i >= dim => Err(Error::Dimension(format!("index {i} out of range for a space of dimension {dim}"))),
        _ => Ok(()),
    }
}

fn build_left_tables(s: &Structure, max_degree: usize, attach: LegAttachment) -> Vec<Vec<SparseVec>> {
    let (dc, db) = (s.dim_c, s.dim_b);
    let mut tables: Vec<Vec<SparseVec>> = vec![s.mul_b.clone()];
    let mut prev_size = db;
    for _ in 1..=max_degree {
        let prev = tables.last().expect("degree zero table");
        let size = dc * prev_size;
        let mut table = Vec::with_capacity(db * size);
        for b in 0..db {
            for t in 0..size {
                let (c, w) = (t / prev_size, t % prev_size);
                let mut acc = Accumulator::new();
                for (coeff, l) in &s.legs[b] {
                    let (outer, inner) = match attach {
                        LegAttachment::Standard => ((l[0], l[2]), l[1]),
                        LegAttachment::Misattached => ((l[0], l[1]), l[2]),
                    };
                    let sand = &s.sandwich[(outer.0 * db + outer.1) * dc + c];
                    let rest = &prev[inner * prev_size + w];
                    outer_into(&mut acc, coeff, &[Factor::Vector(sand), Factor::Vector(rest)], &[dc, prev_size]);
                }
                table.push(acc.finish());
            }
        }
        tables.push(table);
        prev_size = size;
    }
    tables
}
