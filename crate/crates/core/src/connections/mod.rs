//! Connections `∇: X → K¹ ⊗_B X ≅ C ⊗ X`, their curvature, the extended
//! differential `∇̂` on `K* ⊗_B X ≅ C^{⊗*} ⊗ X`, and tensor products.

pub mod corpus;

use crate::calculus::{Calculus, CalculusKind};
use crate::error::{Error, Result};
use crate::exact::{map_slot, Accumulator, Matrix, SparseVec};
use crate::homology::ChainComplex;
use crate::modules::{Bimodule, ModComod, Twist};
use crate::report::{Check, Report};

/// `(c¹ ⊗ … ⊗ cⁿ ⊗ b) ⊗ x ↦ c¹ ⊗ … ⊗ cⁿ ⊗ bx`, from `Kⁿ ⊗ X` (flat index
/// `t * dim X + x`) to `C^{⊗n} ⊗ X`. Every passage between the two pictures
/// goes through here.
pub fn identify(calc: &Calculus, x: &ModComod, v: &SparseVec) -> SparseVec {
    let (db, dx) = (calc.dim_b(), x.dim());
    let mut acc = Accumulator::new();
    for (flat, c) in v.iter() {
        let (t, xi) = (flat / dx, flat % dx);
        let (prefix, b) = (t / db, t % db);
        for (y, a) in x.act_basis(b, xi).iter() {
            acc.push(prefix * dx + y, c * a);
        }
    }
    acc.finish()
}

/// `c¹ ⊗ … ⊗ cⁿ ↦ c¹ ⊗ … ⊗ cⁿ ⊗ 1` in `Kⁿ`.
fn with_unit(calc: &Calculus, prefix: usize) -> SparseVec {
    let db = calc.dim_b();
    calc.unit().reindex(|u| prefix * db + u)
}

/// `ω ⊗ x` for `ω ∈ Kⁿ` and basis `x`.
fn tensor_x(v: &SparseVec, dx: usize, x: usize) -> SparseVec {
    v.reindex(|t| t * dx + x)
}

#[derive(Clone, Debug)]
pub struct Connection<'a> {
    pub calculus: &'a Calculus,
    pub module: ModComod,
    /// `nabla[x]` in `C ⊗ X`, flat index `c * dim X + y`.
    pub nabla: Vec<SparseVec>,
}

impl<'a> Connection<'a> {
    pub fn new(calculus: &'a Calculus, module: ModComod, nabla: Vec<SparseVec>) -> Result<Self> {
        module.require_action()?;
        if module.acting_dim() != calculus.dim_b() || module.coacting_dim() != calculus.dim_c() {
            return Err(Error::Dimension("module does not match the calculus".into()));
        }
        let bound = calculus.dim_c() * module.dim();
        if nabla.len() != module.dim() || nabla.iter().any(|v| v.max_index().is_some_and(|i| i >= bound)) {
            return Err(Error::Dimension("connection tensor has the wrong shape".into()));
        }
        Ok(Connection { calculus, module, nabla })
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        v.map_linear(|x| self.nabla[x].clone())
    }

    fn grouplike_times(&self, x: usize) -> SparseVec {
        tensor_x(self.calculus.grouplike(), self.module.dim(), x)
    }

    /// The extended differential `∇̂ₙ: C^{⊗n} ⊗ X → C^{⊗n+1} ⊗ X`,
    /// `∇̂(ω ⊗ x) = ι(dω ⊗ x) + (-1)ⁿ ι(ω ∇x)`.
    pub fn extended(&self, n: usize) -> Result<Matrix> {
        let calc = self.calculus;
        if n + 1 > calc.max_degree() {
            return Err(Error::DegreeOutOfRange { degree: n + 1, max: calc.max_degree() });
        }
        let (dc, dx) = (calc.dim_c(), self.module.dim());
        let d = calc.differential(n)?;
        let sign = if n % 2 == 0 { calc.field().one() } else { -calc.field().one() };
        let size = dc.pow(n as u32) * dx;
        let cols = (0..size)
            .map(|col| {
                let (prefix, x) = (col / dx, col % dx);
                let omega = with_unit(calc, prefix);
                let mut total = identify(calc, &self.module, &tensor_x(&d.apply(&omega), dx, x));
                let mut acc = Accumulator::new();
                for (flat, c) in self.nabla[x].iter() {
                    let (ci, y) = (flat / dx, flat % dx);
                    let prod = calc.product_apply(n, &omega, 1, &with_unit(calc, ci)).expect("degree in range");
                    acc.add_scaled(&tensor_x(&prod, dx, y), c);
                }
                total.add_scaled(&identify(calc, &self.module, &acc.finish()), &sign);
                total
            })
            .collect();
        Matrix::from_columns(calc.field(), dc * size, cols)
    }
}

/// `∇(x) = ρ(x) - I ⊗ x`; the coaction need not be coassociative.
pub fn connection_from_coaction<'a>(calc: &'a Calculus, x: &ModComod) -> Result<Connection<'a>> {
    let rho = x.require_coaction()?;
    let nabla = (0..x.dim()).map(|i| rho[i].sub(&tensor_x(calc.grouplike(), x.dim(), i))).collect();
    Connection::new(calc, x.clone(), nabla)
}

/// `ρ(x) = ∇(x) + I ⊗ x`.
pub fn coaction_from_connection(conn: &Connection<'_>) -> Result<ModComod> {
    let rho = (0..conn.module.dim()).map(|i| conn.nabla[i].add(&conn.grouplike_times(i))).collect();
    conn.module.replace_coaction(rho)
}

/// `∇(hx) - h∇(x) - ι(dh ⊗ x)` on all basis pairs, with `h` acting on
/// `K¹ ⊗_B X` through the calculus. Also reports the module axioms.
pub fn check_connection(conn: &Connection<'_>) -> Report {
    let calc = conn.calculus;
    let x = &conn.module;
    let dx = x.dim();
    let mut report = Report::new();
    report.push(x.verify_action(calc.kind().algebra()));
    let d0 = calc.differential(0).expect("max_degree ≥ 1");
    let f = calc.field();
    let mut check = Check::new("connection");
    for h in 0..calc.dim_b() {
        let eh = SparseVec::basis(f, h);
        for xi in 0..dx {
            let lhs = conn.apply(x.act_basis(h, xi));
            let mut acc = Accumulator::new();
            for (flat, c) in conn.nabla[xi].iter() {
                let (ci, y) = (flat / dx, flat % dx);
                let moved = calc.left_action(1, &eh, &with_unit(calc, ci)).expect("degree 1");
                acc.add_scaled(&tensor_x(&moved, dx, y), c);
            }
            let h_nabla = identify(calc, x, &acc.finish());
            let dh = identify(calc, x, &tensor_x(d0.column(h), dx, xi));
            check.record(vec![h, xi], lhs.sub(&h_nabla).sub(&dh));
        }
    }
    report.push(check);
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curvature {
    /// `(Δ_C ⊗ id)ρ(x) - (id ⊗ ρ)ρ(x)` per basis `x`, in `C ⊗ C ⊗ X`.
    pub formula: Vec<SparseVec>,
    /// `∇̂₁(∇x)` per basis `x`.
    pub extension: Vec<SparseVec>,
}

impl Curvature {
    pub fn agrees(&self) -> bool {
        self.formula == self.extension
    }

    pub fn is_zero(&self) -> bool {
        self.formula.iter().all(SparseVec::is_zero)
    }
}

/// Needs a calculus materialized to degree 2.
pub fn curvature(conn: &Connection<'_>) -> Result<Curvature> {
    let calc = conn.calculus;
    let (dc, dx) = (calc.dim_c(), conn.module.dim());
    let rho: Vec<SparseVec> = (0..dx).map(|i| conn.nabla[i].add(&conn.grouplike_times(i))).collect();
    let formula = rho
        .iter()
        .map(|r| map_slot(r, dc, dx, dc * dc, calc.comul_c()).sub(&map_slot(r, dx, 1, dc * dx, &rho)))
        .collect();
    let ext = conn.extended(1)?;
    let extension = conn.nabla.iter().map(|v| ext.apply(v)).collect();
    Ok(Curvature { formula, extension })
}

pub fn is_flat(conn: &Connection<'_>) -> Result<bool> {
    Ok(curvature(conn)?.is_zero())
}

/// `K* ⊗_B X ≅ C^{⊗*} ⊗ X` with differential `∇̂`, through the calculus's
/// top degree.
pub fn coefficient_complex(calc: &Calculus, conn: &Connection<'_>) -> Result<ChainComplex> {
    if !is_flat(conn)? {
        return Err(Error::Precondition("connection is not flat".into()));
    }
    let max = calc.max_degree();
    let dx = conn.module.dim();
    let dims = (0..=max).map(|n| calc.dim_c().pow(n as u32) * dx).collect();
    let differentials = (0..max).map(|n| conn.extended(n)).collect::<Result<_>>()?;
    ChainComplex::new(calc.field(), dims, differentials)
}

/// `∇(x ⊗ x') = ∇_X(x) ⊗ x' + (σ ⊗ id)(x ⊗ ∇_{X'}(x'))` with the perturbed
/// switch `σ(x ⊗ h) = x₍₋₁₎h ⊗ x₍₀₎ + h ⊗ x` (Sweedler legs of `∇_X`), on
/// `X ⊗ X'` with the diagonal action. `a` must be flat over `K̂(H)`, `b` flat
/// over `K(H)`; the result lives over `b`'s calculus.
pub fn tensor_connection<'a>(a: &Connection<'_>, b: &Connection<'a>) -> Result<Connection<'a>> {
    let (ka, kb) = (a.calculus.kind(), b.calculus.kind());
    let (CalculusKind::Khat(ha), CalculusKind::K(hb)) = (ka, kb) else {
        return Err(Error::Precondition("expected a K̂ connection and a K connection".into()));
    };
    if ha.as_ref() != hb.as_ref() {
        return Err(Error::Precondition("connections are over different algebras".into()));
    }
    if !is_flat(a)? || !is_flat(b)? {
        return Err(Error::Precondition("tensor product needs flat connections".into()));
    }
    let h = hb.as_ref();
    let (n, m) = (a.module.dim(), b.module.dim());
    let module = a.module.tensor_diagonal(&b.module, h)?;
    let enc = |c: usize, x: usize, y: usize| (c * n + x) * m + y;
    let nabla = (0..n * m)
        .map(|k| {
            let (x, y) = (k / m, k % m);
            let mut acc = Accumulator::new();
            for (flat, c) in a.nabla[x].iter() {
                acc.push(enc(flat / n, flat % n, y), c.clone());
            }
            for (flat, c) in b.nabla[y].iter() {
                let (hh, y2) = (flat / m, flat % m);
                acc.push(enc(hh, x, y2), c.clone());
                for (f2, c2) in a.nabla[x].iter() {
                    let (cx, x2) = (f2 / n, f2 % n);
                    for (p, c3) in h.mul_basis(cx, hh).iter() {
                        acc.push(enc(p, x2, y2), &(c * c2) * c3);
                    }
                }
            }
            acc.finish()
        })
        .collect();
    Connection::new(b.calculus, module, nabla)
}

#[derive(Clone, Debug)]
pub enum DgModuleCheck {
    /// The property is only claimed for cocommutative `H`.
    Inapplicable(String),
    Checked(Report),
}

impl DgModuleCheck {
    pub fn passed(&self) -> Option<bool> {
        match self {
            DgModuleCheck::Inapplicable(_) => None,
            DgModuleCheck::Checked(r) => Some(r.passed()),
        }
    }
}

/// `∇̂(h·c) = h·∇̂(c)` on `C^{⊗n} ⊗ X` with the sandwich action (`X` in the
/// last slot) for `n < max_degree`. Witnesses `[n, h, c]`.
pub fn check_dg_module_structure(conn: &Connection<'_>) -> Result<DgModuleCheck> {
    let calc = conn.calculus;
    let (h, twist) = match calc.kind() {
        CalculusKind::K(h) => (h, Twist::AntipodeInverse),
        CalculusKind::Khat(h) => (h, Twist::Antipode),
        CalculusKind::General { .. } => {
            return Ok(DgModuleCheck::Inapplicable("defined for K and K̂ only".into()));
        }
    };
    if !h.is_cocommutative() {
        return Ok(DgModuleCheck::Inapplicable("H is not cocommutative".into()));
    }
    let cx = coefficient_complex(calc, conn)?;
    let regular = Bimodule::regular(h);
    let last = Bimodule::left_module(&conn.module)?;
    let spaces: Vec<Bimodule> = (0..=calc.max_degree())
        .map(|n| {
            let mut factors = vec![regular.clone(); n];
            factors.push(last.clone());
            Bimodule::oslash(h, &factors, twist)
        })
        .collect::<Result<_>>()?;
    let mut check = Check::new("dg_module");
    for (n, d) in cx.differentials().iter().enumerate() {
        let (src, dst) = (&spaces[n], &spaces[n + 1]);
        for hi in 0..h.dim() {
            for c in 0..src.dim {
                let lhs = d.apply(&src.left[hi * src.dim + c]);
                let rhs = d.column(c).map_linear(|t| dst.left[hi * dst.dim + t].clone());
                check.record(vec![n, hi, c], lhs.sub(&rhs));
            }
        }
    }
    let mut report = Report::new();
    report.push(check);
    Ok(DgModuleCheck::Checked(report))
}
