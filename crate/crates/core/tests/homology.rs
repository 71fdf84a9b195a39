mod common;

use std::sync::Arc;

use common::{builtin, q, standard_builtins};
use hopfcalc::calculus::{Calculus, CalculusKind};
use hopfcalc::connections::corpus::corpus;
use hopfcalc::connections::{check_connection, connection_from_coaction, is_flat};
use hopfcalc::exact::{FieldSpec, Matrix, SparseVec};
use hopfcalc::homology::*;
use hopfcalc::hopf::{BialgebraMorphism, HopfAlgebra};
use hopfcalc::modules::*;
use proptest::prelude::*;

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn k_homology(name: &str, field: FieldSpec, x: Option<fn(&HopfAlgebra) -> ModComod>, max: usize) -> Vec<usize> {
    let b = builtin(name, field);
    let calc = Calculus::build(CalculusKind::K(b.hopf.clone()), max).unwrap();
    let module = x.map(|f| f(&b.hopf));
    let cmp = compare_cotor(&calc, module.as_ref()).unwrap();
    assert!(cmp.report.passed(), "{name}");
    cmp.calculus_side.dims()
}

fn trivial(h: &HopfAlgebra) -> ModComod {
    trivial_modcomod(h).unwrap()
}

#[test]
fn cobar_dimensions() {
    let z2 = builtin("group:Z2", q());
    let x = trivial_modcomod(&z2.hopf).unwrap();
    let cx = cobar_complex(&z2.hopf.coalgebra(), z2.hopf.unit(), &x, 3).unwrap();
    assert_eq!(cx.dims(), &[1, 2, 4, 8]);
}

#[test]
fn desk_scale_values() {
    assert_eq!(k_homology("group:Z2", q(), None, 3), vec![2, 0, 0]);
    assert_eq!(k_homology("dualgroup:Z2", q(), None, 3), vec![2, 0, 0]);
    assert_eq!(k_homology("dualgroup:Z2", fp(2), Some(trivial), 3), vec![1, 1, 1]);
}

#[test]
fn trivial_coefficients_give_group_cohomology() {
    // Cotor over k^G with trivial coefficients is H*(G; k).
    assert_eq!(k_homology("dualgroup:Z2", q(), Some(trivial), 4), vec![1, 0, 0, 0]);
    assert_eq!(k_homology("dualgroup:Z3", fp(3), Some(trivial), 4), vec![1, 1, 1, 1]);
    assert_eq!(k_homology("dualgroup:S3", q(), Some(trivial), 4), vec![1, 0, 0, 0]);
    assert_eq!(k_homology("dualgroup:S3", fp(2), Some(trivial), 4), vec![1, 1, 1, 1]);
    assert_eq!(k_homology("dualgroup:S3", fp(3), Some(trivial), 4), vec![1, 0, 0, 1]);
    // Over k[G] the coalgebra is cosemisimple.
    assert_eq!(k_homology("group:S3", fp(3), Some(trivial), 4), vec![1, 0, 0, 0]);
}

#[test]
fn cotor_matches_for_every_flat_corpus_module() {
    for b in standard_builtins() {
        let h = &b.hopf;
        let kinds = [
            CalculusKind::K(h.clone()),
            CalculusKind::Khat(h.clone()),
            CalculusKind::General {
                coalgebra: Arc::new(BimoduleCoalgebra::regular(h)),
                alpha: BialgebraMorphism::identity(h),
                beta: BialgebraMorphism::antipode(h),
            },
        ];
        for kind in kinds {
            let label = kind.label();
            let calc = Calculus::build(kind, 3).unwrap();
            let cmp = compare_cotor(&calc, None).unwrap();
            assert!(cmp.report.passed(), "{} {label}", b.name);
            let mut checked = 0;
            for e in corpus(&b, 20).unwrap() {
                let conn = connection_from_coaction(&calc, &e.module).unwrap();
                if !(check_connection(&conn).passed() && is_flat(&conn).unwrap()) {
                    continue;
                }
                let cmp = compare_cotor(&calc, Some(&e.module)).unwrap();
                assert!(cmp.report.passed(), "{} {label} {}", b.name, e.label);
                checked += 1;
            }
            assert!(checked > 0, "{} {label}", b.name);
        }
    }
}

#[test]
fn general_specialization_has_the_same_homology_as_k() {
    let h4 = builtin("sweedler", q());
    let h = &h4.hopf;
    // (δ, σ) = (ε, g) is AYD for Sweedler's algebra.
    let x = one_dim_modcomod(h, &h4.characters[0], &h4.grouplikes[1]).unwrap();
    assert!(check_ayd(h, &x).unwrap().passed);
    let general = Calculus::build(
        CalculusKind::General {
            coalgebra: Arc::new(BimoduleCoalgebra::regular(h)),
            alpha: BialgebraMorphism::identity(h),
            beta: BialgebraMorphism::antipode_inverse(h).unwrap(),
        },
        3,
    )
    .unwrap();
    let k = Calculus::build(CalculusKind::K(h.clone()), 3).unwrap();
    let a = compare_cotor(&general, Some(&x)).unwrap();
    let b = compare_cotor(&k, Some(&x)).unwrap();
    assert!(a.report.passed() && b.report.passed());
    assert_eq!(a.calculus_side, b.calculus_side);
}

#[test]
fn complexes_are_validated() {
    let z2 = builtin("group:Z2", q());
    let d0 = Matrix::from_columns(q(), 1, vec![SparseVec::basis(q(), 0)]).unwrap();
    let d1 = Matrix::from_columns(q(), 1, vec![SparseVec::basis(q(), 0)]).unwrap();
    assert!(ChainComplex::new(q(), vec![1, 1, 1], vec![d0.clone(), d1]).is_err());
    assert!(ChainComplex::new(q(), vec![1, 2], vec![d0.clone()]).is_err());
    let cx = ChainComplex::new(q(), vec![1, 1], vec![d0]).unwrap();
    assert_eq!(homology_dims(&cx, 1).unwrap().dims(), vec![0]);
    assert!(homology_dims(&cx, 2).is_err());

    let x = trivial_modcomod(&z2.hopf).unwrap();
    let broken = x.mutate_coaction(0, 1, 0, &q().one()).unwrap();
    assert!(cobar_complex(&z2.hopf.coalgebra(), z2.hopf.unit(), &broken, 2).is_err());
    let not_grouplike = SparseVec::basis(q(), 0).add(&SparseVec::basis(q(), 1));
    assert!(cobar_complex(&z2.hopf.coalgebra(), &not_grouplike, &x, 2).is_err());
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn homology_is_basis_independent(pick in 0usize..24, khat in any::<bool>()) {
        let h4 = builtin("sweedler", q());
        let perm = &permutations(4)[pick];
        let permuted = Arc::new(h4.hopf.permuted(perm).unwrap());
        let kind = |h: Arc<HopfAlgebra>| if khat { CalculusKind::Khat(h) } else { CalculusKind::K(h) };
        let a = compare_cotor(&Calculus::build(kind(h4.hopf.clone()), 3).unwrap(), None).unwrap();
        let b = compare_cotor(&Calculus::build(kind(permuted), 3).unwrap(), None).unwrap();
        prop_assert!(a.report.passed() && b.report.passed());
        prop_assert_eq!(a.calculus_side, b.calculus_side);
    }
}
