mod common;

use std::sync::Arc;

use common::{builtin, q, standard_builtins};
use hopfcalc::calculus::{specialization_check, verify_dga, Calculus, CalculusKind};
use hopfcalc::exact::SparseVec;
use hopfcalc::hopf::BialgebraMorphism;
use hopfcalc::modules::BimoduleCoalgebra;
use hopfcalc::Error;
use proptest::prelude::*;

fn v(entries: &[(usize, i64)]) -> SparseVec {
    SparseVec::from_entries(entries.iter().map(|&(i, c)| (i, q().from_i64(c))))
}

fn kinds(b: &hopfcalc::hopf::BuiltinAlgebra) -> Vec<CalculusKind> {
    let h = &b.hopf;
    let mut out = vec![CalculusKind::K(h.clone()), CalculusKind::Khat(h.clone())];
    // The regular bimodule coalgebra through a non-unit group-like when there is one.
    let grouplike = b.grouplikes.last().cloned().unwrap();
    out.push(CalculusKind::General {
        coalgebra: Arc::new(BimoduleCoalgebra::regular_with_grouplike(h, grouplike).unwrap()),
        alpha: BialgebraMorphism::identity(h),
        beta: BialgebraMorphism::antipode(h),
    });
    out
}

#[test]
fn degree_dimensions() {
    let h4 = builtin("sweedler", q());
    let calc = Calculus::build(CalculusKind::K(h4.hopf.clone()), 3).unwrap();
    assert_eq!(calc.degree_dims(), &[4, 16, 64, 256]);
    let z3 = builtin("group:Z3", q());
    let calc = Calculus::build(CalculusKind::Khat(z3.hopf.clone()), 2).unwrap();
    assert_eq!(calc.degree_dims(), &[3, 9, 27]);
    assert!(matches!(calc.degree_dim(3), Err(Error::DegreeOutOfRange { .. })));
}

#[test]
fn unit_is_closed_and_group_likes_are_closed_for_group_algebras() {
    for b in standard_builtins() {
        let calc = Calculus::build(CalculusKind::K(b.hopf.clone()), 1).unwrap();
        assert!(calc.differential_apply(0, calc.unit()).unwrap().is_zero(), "{}", b.name);
    }
    let s3 = builtin("group:S3", q());
    let calc = Calculus::build(CalculusKind::K(s3.hopf.clone()), 1).unwrap();
    for g in 0..6 {
        assert!(calc.differential(0).unwrap().column(g).is_zero());
    }
}

#[test]
fn sweedler_differential_of_x() {
    // Basis 1, g, x, gx; degree one is indexed c * 4 + b.
    let h4 = builtin("sweedler", q());
    let k = Calculus::build(CalculusKind::K(h4.hopf.clone()), 1).unwrap();
    // x⊗1 + g⊗x + x⊗g - 1⊗x
    assert_eq!(k.differential(0).unwrap().column(2), &v(&[(2, -1), (6, 1), (8, 1), (9, 1)]));
    let khat = Calculus::build(CalculusKind::Khat(h4.hopf.clone()), 1).unwrap();
    // x⊗1 + g⊗x - x⊗g - 1⊗x
    assert_eq!(khat.differential(0).unwrap().column(2), &v(&[(2, -1), (6, 1), (8, 1), (9, -1)]));
}

#[test]
fn products_respect_degree_bound() {
    let z2 = builtin("group:Z2", q());
    let calc = Calculus::build(CalculusKind::K(z2.hopf.clone()), 2).unwrap();
    let one_form = SparseVec::basis(q(), 3);
    assert!(calc.product_apply(1, &one_form, 1, &one_form).is_ok());
    assert!(matches!(
        calc.product_apply(2, &SparseVec::basis(q(), 0), 1, &one_form),
        Err(Error::DegreeOutOfRange { .. })
    ));
}

#[test]
fn building_rejects_bad_input() {
    let z2 = builtin("group:Z2", q());
    assert!(Calculus::build(CalculusKind::K(z2.hopf.clone()), 0).is_err());
    let broken = Arc::new(z2.hopf.with_antipode_entry(0, 1, q().one()).unwrap());
    assert!(Calculus::build(CalculusKind::Khat(broken), 2).is_err());
    // β must be an anti-morphism.
    let h = &z2.hopf;
    let general = CalculusKind::General {
        coalgebra: Arc::new(BimoduleCoalgebra::regular(h)),
        alpha: BialgebraMorphism::identity(h),
        beta: BialgebraMorphism::identity(h),
    };
    assert!(Calculus::build(general, 2).is_err());
}

#[test]
fn dga_axioms_through_degree_two() {
    for b in standard_builtins() {
        for kind in kinds(&b) {
            let label = kind.label();
            let calc = Calculus::build(kind, 2).unwrap();
            let report = verify_dga(&calc);
            let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
            assert!(report.passed(), "{} {label}: {failed:?}", b.name);
        }
    }
}

#[test]
fn dga_axioms_through_degree_three_for_small_algebras() {
    for name in ["group:Z2", "dualgroup:Z2", "sweedler"] {
        let b = builtin(name, q());
        for kind in kinds(&b) {
            let label = kind.label();
            let report = verify_dga(&Calculus::build(kind, 3).unwrap());
            assert!(report.passed(), "{name} {label}");
        }
    }
}

#[test]
fn specializations_match_and_h4_differs_in_degree_one() {
    for b in standard_builtins() {
        let spec = specialization_check(&b.hopf, 2).unwrap();
        assert!(spec.report.passed(), "{}", b.name);
        assert_eq!(spec.k_khat_difference.is_some(), !b.hopf.antipode_squared_is_identity(), "{}", b.name);
    }
    let h4 = builtin("sweedler", q());
    let spec = specialization_check(&h4.hopf, 2).unwrap();
    let w = spec.k_khat_difference.unwrap();
    // d_0(x) already differs: a degree-one form.
    assert_eq!(w.basis, vec![0, 0, 2]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Leibniz on random (non-basis) forms of degrees one and one.
    #[test]
    fn leibniz_on_random_forms(a in proptest::collection::vec(-3i64..=3, 16), c in proptest::collection::vec(-3i64..=3, 16)) {
        let h4 = builtin("sweedler", q());
        let calc = Calculus::build(CalculusKind::K(h4.hopf.clone()), 3).unwrap();
        let u = SparseVec::from_dense(&a.iter().map(|&x| q().from_i64(x)).collect::<Vec<_>>());
        let w = SparseVec::from_dense(&c.iter().map(|&x| q().from_i64(x)).collect::<Vec<_>>());
        let lhs = calc.differential_apply(2, &calc.product_apply(1, &u, 1, &w).unwrap()).unwrap();
        let du = calc.differential_apply(1, &u).unwrap();
        let dw = calc.differential_apply(1, &w).unwrap();
        let rhs = calc.product_apply(2, &du, 1, &w).unwrap().sub(&calc.product_apply(1, &u, 2, &dw).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
