use std::sync::Arc;

use super::{Calculus, CalculusKind};
use crate::error::Result;
use crate::exact::{Accumulator, SparseVec};
use crate::hopf::{BialgebraMorphism, HopfAlgebra};
use crate::modules::BimoduleCoalgebra;
use crate::report::{Check, Report, Witness};

fn times(calc: &Calculus, n: usize, u: &SparseVec, m: usize, v: usize) -> SparseVec {
    let mut acc = Accumulator::new();
    for (t, c) in u.iter() {
        acc.add_scaled(&calc.product_basis(n, t, m, v), c);
    }
    acc.finish()
}

fn times_left(calc: &Calculus, n: usize, u: usize, m: usize, v: &SparseVec) -> SparseVec {
    let mut acc = Accumulator::new();
    for (t, c) in v.iter() {
        acc.add_scaled(&calc.product_basis(n, u, m, t), c);
    }
    acc.finish()
}

/// Witness conventions: `d_squared` `[n, column]`; `leibniz` `[n, u, m, v]`;
/// `associativity` `[n1, u, n2, v, n3, w]`; `unit` `[side, n, t]`;
/// `factorization` `[n, t]`.
pub fn verify_dga(calc: &Calculus) -> Report {
    let max = calc.max_degree();
    let dims = calc.degree_dims();
    let d = calc.differentials();
    let mut report = Report::new();

    let mut dd = Check::new("d_squared");
    for n in 0..max.saturating_sub(1) {
        let comp = d[n + 1].compose(&d[n]).expect("composable");
        for (col, v) in comp.columns().iter().enumerate() {
            dd.record(vec![n, col], v.clone());
        }
    }
    report.push(dd);

    let mut leibniz = Check::new("leibniz");
    for total in 0..max {
        for n in 0..=total {
            let m = total - n;
            let sign = if n % 2 == 0 { calc.field().one() } else { -calc.field().one() };
            for u in 0..dims[n] {
                let du = d[n].column(u);
                for v in 0..dims[m] {
                    let lhs = d[total].apply(&calc.product_basis(n, u, m, v));
                    let mut rhs = times(calc, n + 1, du, m, v);
                    rhs.add_scaled(&times_left(calc, n, u, m + 1, d[m].column(v)), &sign);
                    leibniz.record(vec![n, u, m, v], lhs.sub(&rhs));
                }
            }
        }
    }
    report.push(leibniz);

    let mut assoc = Check::new("associativity");
    for total in 0..=max {
        for n1 in 0..=total {
            for n2 in 0..=total - n1 {
                let n3 = total - n1 - n2;
                for u in 0..dims[n1] {
                    for v in 0..dims[n2] {
                        let uv = calc.product_basis(n1, u, n2, v);
                        for w in 0..dims[n3] {
                            let lhs = times(calc, n1 + n2, &uv, n3, w);
                            let vw = calc.product_basis(n2, v, n3, w);
                            let rhs = times_left(calc, n1, u, n2 + n3, &vw);
                            assoc.record(vec![n1, u, n2, v, n3, w], lhs.sub(&rhs));
                        }
                    }
                }
            }
        }
    }
    report.push(assoc);

    let mut unit = Check::new("unit");
    let one = calc.unit();
    for (n, &dim) in dims.iter().enumerate() {
        for t in 0..dim {
            let e = SparseVec::basis(calc.field(), t);
            unit.record(vec![0, n, t], times(calc, 0, one, n, t).sub(&e));
            unit.record(vec![1, n, t], times_left(calc, n, t, 0, one).sub(&e));
        }
    }
    report.push(unit);

    report.push(factorization_check(calc));
    report
}

/// Every basis tensor `c¹ ⊗ … ⊗ cⁿ ⊗ b` equals `(c¹ ⊗ 1)⋯(cⁿ ⊗ 1) b`.
fn factorization_check(calc: &Calculus) -> Check {
    let (dc, db) = (calc.dim_c(), calc.dim_b());
    let f = calc.field();
    let one = calc.unit();
    let generator = |c: usize| one.reindex(|u| c * db + u);
    let mut check = Check::new("factorization");
    for n in 0..=calc.max_degree() {
        for t in 0..calc.degree_dims()[n] {
            let mut cs = Vec::with_capacity(n);
            let mut rest = t / db;
            for _ in 0..n {
                cs.push(rest % dc);
                rest /= dc;
            }
            cs.reverse();
            let mut acc = one.clone();
            for (k, &c) in cs.iter().enumerate() {
                acc = calc.product_apply(k, &acc, 1, &generator(c)).expect("in range");
            }
            let full = calc.product_apply(n, &acc, 0, &SparseVec::basis(f, t % db)).expect("in range");
            check.record(vec![n, t], full.sub(&SparseVec::basis(f, t)));
        }
    }
    check
}

/// Differences between two calculi on the same spaces. Witness conventions:
/// `[0, n, column]` for `d_n`, `[1, m, b, t]` for the degree-`m` left action.
fn compare(name: &str, a: &Calculus, b: &Calculus) -> Check {
    let mut check = Check::new(name);
    if a.degree_dims() != b.degree_dims() {
        check.fail(vec![], "degree dimensions differ");
        return check;
    }
    for (n, (x, y)) in a.differentials().iter().zip(b.differentials()).enumerate() {
        for col in 0..x.cols() {
            check.record(vec![0, n, col], x.column(col).sub(y.column(col)));
        }
    }
    for m in 0..=a.max_degree() {
        for bi in 0..a.dim_b() {
            for t in 0..a.degree_dims()[m] {
                check.record(vec![1, m, bi, t], a.left_action_basis(m, bi, t).sub(b.left_action_basis(m, bi, t)));
            }
        }
    }
    check
}

#[derive(Clone, Debug)]
pub struct Specialization {
    pub report: Report,
    /// First place where `K(H)` and `K̂(H)` differ, in the witness
    /// convention of the comparison checks; `None` when they coincide.
    pub k_khat_difference: Option<Witness>,
}

/// `K*_(id,S)(H, H)` against `K̂*(H)`, and `K*_(id,S⁻¹)(H, H)` against
/// `K*(H)`, as exact matrix families under the identity basis map.
pub fn specialization_check(h: &Arc<HopfAlgebra>, max_degree: usize) -> Result<Specialization> {
    let c = Arc::new(BimoduleCoalgebra::regular(h));
    let mut report = Report::new();
    let khat = Calculus::build(CalculusKind::Khat(h.clone()), max_degree)?;
    let gen_s = Calculus::build(
        CalculusKind::General {
            coalgebra: c.clone(),
            alpha: BialgebraMorphism::identity(h),
            beta: BialgebraMorphism::antipode(h),
        },
        max_degree,
    )?;
    report.push(compare("general_s_equals_khat", &gen_s, &khat));

    let mut k_khat_difference = None;
    if h.antipode_inverse().is_some() {
        let k = Calculus::build(CalculusKind::K(h.clone()), max_degree)?;
        let gen_sinv = Calculus::build(
            CalculusKind::General {
                coalgebra: c,
                alpha: BialgebraMorphism::identity(h),
                beta: BialgebraMorphism::antipode_inverse(h)?,
            },
            max_degree,
        )?;
        report.push(compare("general_sinv_equals_k", &gen_sinv, &k));
        let diff = compare("k_vs_khat", &k, &khat);
        k_khat_difference = diff.witnesses.into_iter().min_by(|a, b| a.basis.cmp(&b.basis));
    } else {
        report.push(Check::new("general_sinv_equals_k").with_note("antipode not invertible; K is undefined"));
    }
    Ok(Specialization { report, k_khat_difference })
}
