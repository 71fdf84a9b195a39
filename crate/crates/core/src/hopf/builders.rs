use std::sync::Arc;

use super::algebra::HopfAlgebra;
use super::group::Group;
use crate::error::{Error, Result};
use crate::exact::{outer_into, Accumulator, Factor, FieldSpec, Matrix, Scalar, SparseVec};

/// `k[G]`: `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn build_group_algebra(group: &Group, field: FieldSpec) -> Result<HopfAlgebra> {
    let n = group.order();
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(SparseVec::basis(field, group.mul(a, b)));
        }
    }
    let comul = (0..n).map(|g| SparseVec::basis(field, g * n + g)).collect();
    let counit = vec![field.one(); n];
    let antipode = Matrix::from_columns(field, n, (0..n).map(|g| SparseVec::basis(field, group.inverse(g))).collect())?;
    HopfAlgebra::new(
        field,
        group.names().to_vec(),
        mul,
        SparseVec::basis(field, group.identity()),
        comul,
        counit,
        antipode,
    )
}

/// `k^G`: basis `δ_g`, pointwise product, `Δ(δ_g) = Σ_{ab=g} δ_a ⊗ δ_b`.
pub fn build_dual_group_algebra(group: &Group, field: FieldSpec) -> Result<HopfAlgebra> {
    let n = group.order();
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(if a == b { SparseVec::basis(field, a) } else { SparseVec::new() });
        }
    }
    let unit = SparseVec::from_entries((0..n).map(|g| (g, field.one())));
    let mut comul: Vec<Accumulator> = (0..n).map(|_| Accumulator::new()).collect();
    for a in 0..n {
        for b in 0..n {
            comul[group.mul(a, b)].push(a * n + b, field.one());
        }
    }
    let counit = (0..n).map(|g| if g == group.identity() { field.one() } else { field.zero() }).collect();
    let antipode = Matrix::from_columns(field, n, (0..n).map(|g| SparseVec::basis(field, group.inverse(g))).collect())?;
    let names = group.names().iter().map(|g| format!("d[{g}]")).collect();
    HopfAlgebra::new(field, names, mul, unit, comul.into_iter().map(Accumulator::finish).collect(), counit, antipode)
}

/// Sweedler's four-dimensional algebra on the basis `{1, g, x, gx}` with
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δ(x) = x ⊗ 1 + g ⊗ x`, `S(x) = -gx`.
pub fn build_sweedler_h4(field: FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::Precondition("Sweedler's algebra needs characteristic different from 2".into()));
    }
    let v = |entries: &[(usize, i64)]| SparseVec::from_entries(entries.iter().map(|&(i, c)| (i, field.from_i64(c))));
    let (one, g, x, gx) = (0, 1, 2, 3);
    #[rustfmt::skip]
    let mul = vec![
        // 1 · _
        v(&[(one, 1)]), v(&[(g, 1)]), v(&[(x, 1)]), v(&[(gx, 1)]),
        // g · _
        v(&[(g, 1)]), v(&[(one, 1)]), v(&[(gx, 1)]), v(&[(x, 1)]),
        // x · _
        v(&[(x, 1)]), v(&[(gx, -1)]), v(&[]), v(&[]),
        // gx · _
        v(&[(gx, 1)]), v(&[(x, -1)]), v(&[]), v(&[]),
    ];
    let t = |a: usize, b: usize| a * 4 + b;
    let comul = vec![
        v(&[(t(one, one), 1)]),
        v(&[(t(g, g), 1)]),
        v(&[(t(x, one), 1), (t(g, x), 1)]),
        v(&[(t(gx, g), 1), (t(one, gx), 1)]),
    ];
    let counit = vec![field.one(), field.one(), field.zero(), field.zero()];
    let antipode = Matrix::from_columns(field, 4, vec![v(&[(one, 1)]), v(&[(g, 1)]), v(&[(gx, -1)]), v(&[(x, 1)])])?;
    HopfAlgebra::new(
        field,
        ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        mul,
        v(&[(one, 1)]),
        comul,
        counit,
        antipode,
    )
}

/// Taft algebra `T_n(q)` on the basis `g^a x^b` (flat index `b * n + a`),
/// with `g^n = 1`, `x^n = 0`, `xg = q gx`, `Δ(x) = x ⊗ 1 + g ⊗ x`.
pub fn build_taft(n: usize, q: &Scalar, field: FieldSpec) -> Result<HopfAlgebra> {
    if n < 2 || !field.is_primitive_root_of_unity(q, n) {
        return Err(Error::Precondition(format!("{q} is not a primitive {n}-th root of unity in {field}")));
    }
    let dim = n * n;
    let idx = |a: usize, b: usize| b * n + a;
    let mut mul = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        let (a, b) = (i % n, i / n);
        for j in 0..dim {
            let (c, d) = (j % n, j / n);
            // x^b g^c = q^{bc} g^c x^b
            mul.push(if b + d < n {
                SparseVec::single(idx((a + c) % n, b + d), q.pow((b * c) as u64))
            } else {
                SparseVec::new()
            });
        }
    }
    let mul2 = |u: &SparseVec, w: &SparseVec| -> SparseVec {
        let mut acc = Accumulator::new();
        for (p, s) in u.iter() {
            for (r, t) in w.iter() {
                outer_into(
                    &mut acc,
                    &(s * t),
                    &[Factor::Vector(&mul[(p / dim) * dim + r / dim]), Factor::Vector(&mul[(p % dim) * dim + r % dim])],
                    &[dim, dim],
                );
            }
        }
        acc.finish()
    };
    let mul1 = |u: &SparseVec, w: &SparseVec| -> SparseVec {
        let mut acc = Accumulator::new();
        for (p, s) in u.iter() {
            for (r, t) in w.iter() {
                acc.add_scaled(&mul[p * dim + r], &(s * t));
            }
        }
        acc.finish()
    };
    let one = SparseVec::basis(field, idx(0, 0));
    let x = SparseVec::basis(field, idx(0, 1));
    let g_inv = SparseVec::basis(field, idx(n - 1, 0));
    let delta_g = SparseVec::basis(field, idx(1, 0) * dim + idx(1, 0));
    let delta_x = SparseVec::from_entries([
        (idx(0, 1) * dim + idx(0, 0), field.one()),
        (idx(1, 0) * dim + idx(0, 1), field.one()),
    ]);
    let s_x = mul1(&g_inv, &x).negated();
    let mut comul = Vec::with_capacity(dim);
    let mut antipode_cols = Vec::with_capacity(dim);
    let mut counit = Vec::with_capacity(dim);
    for i in 0..dim {
        let (a, b) = (i % n, i / n);
        let mut d = SparseVec::basis(field, idx(0, 0) * dim + idx(0, 0));
        let mut s = one.clone();
        for _ in 0..a {
            d = mul2(&d, &delta_g);
            s = mul1(&g_inv, &s);
        }
        for _ in 0..b {
            d = mul2(&d, &delta_x);
            // S is an anti-homomorphism: S(g^a x^b) = S(x)^b S(g)^a
            s = mul1(&s_x, &s);
        }
        comul.push(d);
        antipode_cols.push(s);
        counit.push(if b == 0 { field.one() } else { field.zero() });
    }
    let names = (0..dim)
        .map(|i| {
            let (a, b) = (i % n, i / n);
            let gp = match a {
                0 => String::new(),
                1 => "g".into(),
                _ => format!("g^{a}"),
            };
            let xp = match b {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{b}"),
            };
            if a == 0 && b == 0 {
                "1".into()
            } else {
                format!("{gp}{xp}")
            }
        })
        .collect();
    HopfAlgebra::new(field, names, mul, one, comul, counit, Matrix::from_columns(field, dim, antipode_cols)?)
}

/// A built-in algebra together with the one-dimensional data (characters
/// and group-likes) used to generate module corpora.
#[derive(Clone, Debug)]
pub struct BuiltinAlgebra {
    pub name: String,
    pub hopf: Arc<HopfAlgebra>,
    /// Algebra maps `H → k`, as dense covectors.
    pub characters: Vec<Vec<Scalar>>,
    pub grouplikes: Vec<SparseVec>,
    /// Present for group algebras `k[G]`.
    pub group: Option<Group>,
}

impl BuiltinAlgebra {
    pub fn group_algebra(name: impl Into<String>, group: &Group, field: FieldSpec) -> Result<Self> {
        let hopf = build_group_algebra(group, field)?;
        let characters = group.characters(field);
        let grouplikes = (0..group.order()).map(|g| SparseVec::basis(field, g)).collect();
        Ok(BuiltinAlgebra {
            name: name.into(),
            hopf: Arc::new(hopf),
            characters,
            grouplikes,
            group: Some(group.clone()),
        })
    }

    pub fn dual_group_algebra(name: impl Into<String>, group: &Group, field: FieldSpec) -> Result<Self> {
        let hopf = build_dual_group_algebra(group, field)?;
        let n = group.order();
        let characters =
            (0..n).map(|g| (0..n).map(|h| if g == h { field.one() } else { field.zero() }).collect()).collect();
        let grouplikes = group.characters(field).iter().map(|chi| SparseVec::from_dense(chi)).collect();
        Ok(BuiltinAlgebra { name: name.into(), hopf: Arc::new(hopf), characters, grouplikes, group: None })
    }

    pub fn sweedler(field: FieldSpec) -> Result<Self> {
        let hopf = build_sweedler_h4(field)?;
        let f = |v: [i64; 4]| v.iter().map(|&c| field.from_i64(c)).collect::<Vec<_>>();
        Ok(BuiltinAlgebra {
            name: "sweedler".into(),
            hopf: Arc::new(hopf),
            characters: vec![f([1, 1, 0, 0]), f([1, -1, 0, 0])],
            grouplikes: vec![SparseVec::basis(field, 0), SparseVec::basis(field, 1)],
            group: None,
        })
    }

    pub fn taft(n: usize, q: &Scalar, field: FieldSpec) -> Result<Self> {
        let hopf = build_taft(n, q, field)?;
        let dim = n * n;
        let characters = field
            .roots_of_unity(n)
            .into_iter()
            .map(|w| (0..dim).map(|i| if i / n == 0 { w.pow((i % n) as u64) } else { field.zero() }).collect())
            .collect();
        let grouplikes = (0..n).map(|a| SparseVec::basis(field, a)).collect();
        Ok(BuiltinAlgebra { name: format!("taft:{n}:{q}"), hopf: Arc::new(hopf), characters, grouplikes, group: None })
    }

    /// Resolves `group:<Zn|S3>`, `dualgroup:<Zn|S3>`, `sweedler`, `taft:n:q`.
    pub fn by_name(name: &str, field: FieldSpec) -> Result<Self> {
        let mut parts = name.split(':');
        let head = parts.next().unwrap_or_default();
        match head {
            "group" => {
                let g = parts.next().ok_or_else(|| Error::Parse("group: needs a group name".into()))?;
                BuiltinAlgebra::group_algebra(name, &Group::by_name(g)?, field)
            }
            "dualgroup" => {
                let g = parts.next().ok_or_else(|| Error::Parse("dualgroup: needs a group name".into()))?;
                BuiltinAlgebra::dual_group_algebra(name, &Group::by_name(g)?, field)
            }
            "sweedler" => BuiltinAlgebra::sweedler(field),
            "taft" => {
                let n: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad taft name {name:?}")))?;
                let q =
                    field.parse_scalar(parts.next().ok_or_else(|| Error::Parse(format!("bad taft name {name:?}")))?)?;
                BuiltinAlgebra::taft(n, &q, field)
            }
            _ => Err(Error::Parse(format!("unknown built-in algebra {name:?}"))),
        }
    }

    pub fn is_group_algebra(&self) -> bool {
        self.group.is_some()
    }
}
