mod common;

use std::sync::Arc;

use common::{builtin, f7, q, s3_functor_data, standard_builtins};
use hopfcalc::connections::corpus::corpus;
use hopfcalc::exact::{Matrix, Scalar, SparseVec};
use hopfcalc::hopf::{BialgebraMorphism, Group, HopfAlgebra};
use hopfcalc::modules::*;
use proptest::prelude::*;

fn conjugation_module(group: &Group, h: &HopfAlgebra) -> ModComod {
    let n = group.order();
    let f = h.field();
    let action = (0..n * n).map(|k| SparseVec::basis(f, group.conjugate(k / n, k % n))).collect();
    let coaction = (0..n).map(|g| SparseVec::basis(f, g * n + g)).collect();
    ModComod::new(f, n, n, n).with_action(action).unwrap().with_coaction(coaction).unwrap()
}

/// `X` transported along an invertible `T`: `h ↦ T L_h T⁻¹`, `ρ ↦ (id ⊗ T)ρT⁻¹`.
fn transport(x: &ModComod, t: &Matrix) -> ModComod {
    let t_inv = t.inverse().unwrap();
    let (n, d) = (x.dim(), x.acting_dim());
    let action =
        (0..d * n).map(|k| t.apply(&t_inv.column(k % n).map_linear(|y| x.act_basis(k / n, y).clone()))).collect();
    let coaction = (0..n)
        .map(|xi| {
            let rho = t_inv.column(xi).map_linear(|y| x.coact_basis(y).clone());
            rho.map_linear(|flat| t.column(flat % n).reindex(|z| (flat / n) * n + z))
        })
        .collect();
    ModComod::new(x.field(), n, d, x.coacting_dim()).with_action(action).unwrap().with_coaction(coaction).unwrap()
}

#[test]
fn trivial_module_conditions() {
    // (ε, 1) is always YD and stable; it is AYD exactly when h₁S⁻¹(h₂) = ε(h).
    for b in standard_builtins() {
        let h = b.hopf.as_ref();
        let x = trivial_modcomod(h).unwrap();
        let involutive = h.antipode_squared_is_identity();
        assert_eq!(check_ayd(h, &x).unwrap().passed, involutive, "{}", b.name);
        assert!(check_yd(h, &x).unwrap().passed, "{}", b.name);
        assert!(check_stable(h, &x).unwrap(), "{}", b.name);
        assert_eq!(check_action_comodule_map(h, &x).unwrap().passed(), involutive, "{}", b.name);
    }
}

#[test]
fn ayd_and_yd_coincide_when_antipode_is_involutive() {
    for b in standard_builtins().into_iter().filter(|b| b.hopf.antipode_squared_is_identity()) {
        let h = b.hopf.as_ref();
        for e in corpus(&b, 60).unwrap() {
            let (a, y) = (check_ayd(h, &e.module).unwrap(), check_yd(h, &e.module).unwrap());
            assert_eq!(a.passed, y.passed, "{} {}", b.name, e.label);
            assert_eq!(a.witnesses, y.witnesses, "{} {}", b.name, e.label);
        }
    }
}

#[test]
fn sweedler_has_an_ayd_module_that_is_not_yd() {
    let b = builtin("sweedler", q());
    let h = b.hopf.as_ref();
    assert!(!h.antipode_squared_is_identity());
    let witness = corpus(&b, 0)
        .unwrap()
        .into_iter()
        .find(|e| check_ayd(h, &e.module).unwrap().passed && !check_yd(h, &e.module).unwrap().passed)
        .expect("an AYD, non-YD module");
    let yd = check_yd(h, &witness.module).unwrap();
    assert!(yd.first_witness().is_some());
}

#[test]
fn comodule_map_half_matches_ayd() {
    for b in standard_builtins() {
        let h = b.hopf.as_ref();
        for e in corpus(&b, 60).unwrap() {
            let l = check_action_comodule_map(h, &e.module).unwrap();
            let a = check_ayd(h, &e.module).unwrap();
            assert_eq!(l.passed(), a.passed, "{} {}", b.name, e.label);
            assert_eq!(l.comodule_map.witnesses, a.witnesses, "{} {}", b.name, e.label);
            assert!(l.action_axioms.passed, "{} {}", b.name, e.label);
        }
    }
}

#[test]
fn equivariance_specializes_to_ayd_and_yd() {
    for b in standard_builtins() {
        let h = &b.hopf;
        let c = BimoduleCoalgebra::regular(h);
        let id = BialgebraMorphism::identity(h);
        let s = BialgebraMorphism::antipode(h);
        let s_inv = BialgebraMorphism::antipode_inverse(h).unwrap();
        for e in corpus(&b, 20).unwrap() {
            let ayd = check_ayd(h, &e.module).unwrap();
            let eq_inv = check_equivariant(&e.module, &c, &id, &s_inv).unwrap();
            assert_eq!(ayd.witnesses, eq_inv.witnesses, "{} {}", b.name, e.label);
            let yd = check_yd(h, &e.module).unwrap();
            let eq_s = check_equivariant(&e.module, &c, &id, &s).unwrap();
            assert_eq!(yd.witnesses, eq_s.witnesses, "{} {}", b.name, e.label);
        }
    }
}

#[test]
fn trivial_module_with_grouplike_coaction_is_equivariant() {
    for b in standard_builtins() {
        let h = &b.hopf;
        for g in &b.grouplikes {
            let c = BimoduleCoalgebra::regular_with_grouplike(h, g.clone()).unwrap();
            assert!(c.verify().passed(), "{}", b.name);
            let x = c.trivial_modcomod().unwrap();
            let check =
                check_equivariant(&x, &c, &BialgebraMorphism::identity(h), &BialgebraMorphism::antipode(h)).unwrap();
            if h.is_commutative() || h.is_cocommutative() && g == h.unit() {
                assert!(check.passed, "{}", b.name);
            }
        }
    }
}

#[test]
fn zero_grouplike_is_flagged_not_rejected() {
    let h = Arc::new(builtin("group:Z2", q()).hopf.as_ref().clone());
    let c = BimoduleCoalgebra::regular_with_grouplike(&h, SparseVec::new()).unwrap();
    let report = c.verify();
    assert!(report.passed());
    assert!(report.get("grouplike").unwrap().note.as_deref().unwrap().contains("ε(I)"));
}

#[test]
fn coadjoint_examples() {
    // k[G]: conjugation collapses, ρ(g) = 1 ⊗ g.
    let s3 = builtin("group:S3", q());
    let h = s3.hopf.as_ref();
    let x = coadjoint_comodule(h).unwrap();
    let e = s3.group.as_ref().unwrap().identity();
    for g in 0..6 {
        assert_eq!(x.coact_basis(g), &SparseVec::basis(q(), e * 6 + g));
    }
    // k^{Z/2}: trivial coaction as well.
    let dual = builtin("dualgroup:Z2", q());
    let x = coadjoint_comodule(&dual.hopf).unwrap();
    for i in 0..2 {
        assert_eq!(x.coact_basis(i), &dual.hopf.unit().reindex(|u| u * 2 + i));
    }
    // H4: coassociative and counital, AYD; the S-twisted one is YD.
    let h4 = builtin("sweedler", q());
    let h = h4.hopf.as_ref();
    let x = coadjoint_comodule(h).unwrap();
    assert!(x.verify_coaction(&h.coalgebra()).passed());
    assert!(check_ayd(h, &x).unwrap().passed);
    let y = coadjoint_comodule_yd(h).unwrap();
    assert!(y.verify_coaction(&h.coalgebra()).passed());
    assert!(check_yd(h, &y).unwrap().passed);
    assert_ne!(x.coaction(), y.coaction());
}

#[test]
fn stability_examples() {
    let z2 = builtin("group:Z2", q());
    let regular = regular_modcomod(&z2.hopf).unwrap();
    assert!(!check_stable(&z2.hopf, &regular).unwrap());
    let h4 = builtin("sweedler", q());
    // δ(g) = -1, σ = g: g·x = -x, so x₍₋₁₎x₍₀₎ = -x.
    let x = one_dim_modcomod(&h4.hopf, &h4.characters[1], &h4.grouplikes[1]).unwrap();
    assert!(!check_stable(&h4.hopf, &x).unwrap());
    let x = one_dim_modcomod(&h4.hopf, &h4.characters[1], &h4.grouplikes[0]).unwrap();
    assert!(check_stable(&h4.hopf, &x).unwrap());
}

#[test]
fn one_dim_rejects_bad_data() {
    let h4 = builtin("sweedler", q());
    let h = h4.hopf.as_ref();
    let not_character: Vec<Scalar> = [1, 1, 1, 0].iter().map(|&c| q().from_i64(c)).collect();
    assert!(one_dim_modcomod(h, &not_character, h.unit()).is_err());
    let not_grouplike = SparseVec::basis(q(), 2);
    assert!(one_dim_modcomod(h, &h4.characters[0], &not_grouplike).is_err());
}

#[test]
fn cyclic_one_dim_modules_are_all_ayd() {
    let b = builtin("group:Z3", f7());
    assert_eq!(b.characters.len(), 3);
    for delta in &b.characters {
        for sigma in &b.grouplikes {
            let x = one_dim_modcomod(&b.hopf, delta, sigma).unwrap();
            assert!(check_ayd(&b.hopf, &x).unwrap().passed);
        }
    }
}

#[test]
fn oslash_examples() {
    let z2 = builtin("group:Z2", q());
    let h = z2.hopf.as_ref();
    let r = Bimodule::regular(h);
    let g = h.basis(1);
    for a in 0..2 {
        for b in 0..2 {
            let t = SparseVec::basis(q(), a * 2 + b);
            // g a g⁻¹ ⊗ g b
            let expected = SparseVec::basis(q(), a * 2 + (1 + b) % 2);
            assert_eq!(oslash_action(h, &[r.clone(), r.clone()], &g, &t).unwrap(), expected);
        }
    }
    let h4 = builtin("sweedler", q());
    let h = h4.hopf.as_ref();
    let x = regular_modcomod(h).unwrap();
    let single = [Bimodule::left_module(&x).unwrap()];
    for i in 0..4 {
        for t in 0..4 {
            let v = oslash_action(h, &single, &h.basis(i), &SparseVec::basis(q(), t)).unwrap();
            assert_eq!(&v, x.act_basis(i, t));
        }
    }
    let three = [Bimodule::regular(h), Bimodule::regular(h), Bimodule::regular(h)];
    for t in 0..64 {
        let e = SparseVec::basis(q(), t);
        assert_eq!(oslash_action(h, &three, h.unit(), &e).unwrap(), e);
    }
}

fn left_matrix(b: &Bimodule, h: usize) -> Matrix {
    Matrix::from_columns(q(), b.dim, (0..b.dim).map(|t| b.left[h * b.dim + t].clone()).collect()).unwrap()
}

#[test]
fn sandwich_bracketings_differ_for_noncocommutative_algebras() {
    // Sweedler: the two bracketings give different action tensors on H⊗H⊗H.
    let h4 = builtin("sweedler", q());
    let h = h4.hopf.as_ref();
    let r = Bimodule::regular(h);
    let tw = Twist::AntipodeInverse;
    let left =
        Bimodule::oslash(h, &[Bimodule::oslash(h, &[r.clone(), r.clone()], tw).unwrap(), r.clone()], tw).unwrap();
    let right =
        Bimodule::oslash(h, &[r.clone(), Bimodule::oslash(h, &[r.clone(), r.clone()], tw).unwrap()], tw).unwrap();
    let x = 2;
    let differing = (0..64).find(|&t| left.left[x * 64 + t] != right.left[x * 64 + t]);
    assert!(differing.is_some());

    // k^{S3}: one-dimensional bimodules with left character a and right
    // character a' act through a·b·a'⁻¹·c·b'⁻¹ versus a·b·c·b'⁻¹·a'⁻¹, which
    // are different characters, so the modules are not isomorphic.
    let dual = builtin("dualgroup:S3", q());
    let h = dual.hopf.as_ref();
    let chars = &dual.characters;
    let one_dim = |l: usize, r: usize| Bimodule {
        dim: 1,
        left: (0..6).map(|k| SparseVec::single(0, chars[l][k].clone())).collect(),
        right: Some((0..6).map(|k| SparseVec::single(0, chars[r][k].clone())).collect()),
    };
    let mut witness = None;
    'search: for (a, ar, b, br, c) in [(1, 2, 0, 1, 3), (1, 0, 2, 0, 0), (0, 1, 2, 0, 0), (3, 4, 1, 2, 0)] {
        let (xa, xb, xc) = (one_dim(a, ar), one_dim(b, br), one_dim(c, c));
        let l = Bimodule::oslash(h, &[Bimodule::oslash(h, &[xa.clone(), xb.clone()], tw).unwrap(), xc.clone()], tw)
            .unwrap();
        let r = Bimodule::oslash(h, &[xa, Bimodule::oslash(h, &[xb, xc], tw).unwrap()], tw).unwrap();
        for g in 0..6 {
            if left_matrix(&l, g) != left_matrix(&r, g) {
                witness = Some(g);
                break 'search;
            }
        }
    }
    assert!(witness.is_some(), "one-dimensional modules with different characters");
}

#[test]
fn groupoid_trivial_module_is_one_block() {
    let s3 = builtin("group:S3", q());
    let g = s3.group.as_ref().unwrap();
    let x = trivial_modcomod(&s3.hopf).unwrap();
    let dec = groupoid_decompose(g, &s3.hopf, &x).unwrap();
    assert!(dec.passed());
    let dims = &dec.functor.as_ref().unwrap().dims;
    assert_eq!(dims.iter().sum::<usize>(), 1);
    assert_eq!(dims[g.identity()], 1);
}

#[test]
fn groupoid_conjugation_module_has_line_blocks() {
    let s3 = builtin("group:S3", q());
    let g = s3.group.as_ref().unwrap();
    let x = conjugation_module(g, &s3.hopf);
    assert!(check_ayd(&s3.hopf, &x).unwrap().passed);
    let dec = groupoid_decompose(g, &s3.hopf, &x).unwrap();
    let functor = dec.functor.as_ref().unwrap();
    for k in 0..6 {
        assert_eq!(dec.blocks[k], vec![SparseVec::basis(q(), k)]);
        for hh in 0..6 {
            assert_eq!(functor.map(hh, k), &Matrix::identity(q(), 1));
        }
    }
}

#[test]
fn groupoid_functor_round_trip() {
    let s3 = builtin("group:S3", q());
    let g = s3.group.as_ref().unwrap();
    let functor = s3_functor_data(g, q());
    let x = functor.to_modcomod(g, &s3.hopf).unwrap();
    assert!(x.verify_action(&s3.hopf).passed);
    assert!(x.verify_coaction(&s3.hopf.coalgebra()).passed());
    assert!(check_ayd(&s3.hopf, &x).unwrap().passed);
    let dec = groupoid_decompose(g, &s3.hopf, &x).unwrap();
    assert_eq!(dec.functor.as_ref(), Some(&functor));
    assert_eq!(reassemble(g, &s3.hopf, &x, &dec).unwrap(), x);

    // In scrambled coordinates the decomposition still reassembles exactly.
    let t = Matrix::from_rows_i64(
        q(),
        &[vec![1, 2, 0, 0, 1], vec![0, 1, 1, 0, 0], vec![0, 0, 1, 3, 0], vec![1, 0, 0, 1, 0], vec![0, 0, 2, 0, 1]],
    );
    let y = transport(&x, &t);
    assert!(check_ayd(&s3.hopf, &y).unwrap().passed);
    let dec = groupoid_decompose(g, &s3.hopf, &y).unwrap();
    assert!(dec.passed());
    assert_eq!(dec.functor.as_ref().unwrap().dims, functor.dims);
    assert_eq!(reassemble(g, &s3.hopf, &y, &dec).unwrap(), y);
}

#[test]
fn swapped_grading_fails_with_witness() {
    let z2 = builtin("group:Z2", q());
    let g = z2.group.as_ref().unwrap();
    let f = q();
    // M_e = span(e0), M_g = span(e1), and g swaps them.
    let action = vec![SparseVec::basis(f, 0), SparseVec::basis(f, 1), SparseVec::basis(f, 1), SparseVec::basis(f, 0)];
    let coaction = vec![SparseVec::basis(f, 0), SparseVec::basis(f, 2 + 1)];
    let x = ModComod::new(f, 2, 2, 2).with_action(action).unwrap().with_coaction(coaction).unwrap();
    assert!(!check_ayd(&z2.hopf, &x).unwrap().passed);
    let dec = groupoid_decompose(g, &z2.hopf, &x).unwrap();
    assert!(dec.functor.is_none());
    let check = dec.report.get("conjugation_equivariance").unwrap();
    assert!(!check.passed && check.first_witness().is_some());
}

#[test]
fn groupoid_decomposition_characterizes_ayd_over_s3() {
    let s3 = builtin("group:S3", q());
    let g = s3.group.as_ref().unwrap();
    let h = s3.hopf.as_ref();
    let mut entries = corpus(&s3, 60).unwrap();
    entries.push(hopfcalc::connections::corpus::CorpusEntry {
        label: "conjugation".into(),
        module: conjugation_module(g, h),
    });
    let mut seen_ayd = 0;
    for e in entries {
        if !e.module.verify_coaction(&h.coalgebra()).passed() {
            continue;
        }
        let ayd = check_ayd(h, &e.module).unwrap().passed;
        let dec = groupoid_decompose(g, h, &e.module).unwrap();
        assert_eq!(ayd, dec.passed(), "{}", e.label);
        if ayd {
            seen_ayd += 1;
            assert_eq!(reassemble(g, h, &e.module, &dec).unwrap(), e.module, "{}", e.label);
        }
    }
    assert!(seen_ayd >= 3);
}

#[test]
fn decomposition_needs_a_group_algebra() {
    let h4 = builtin("sweedler", q());
    let x = trivial_modcomod(&h4.hopf).unwrap();
    let z4 = Group::cyclic(4).unwrap();
    assert!(groupoid_decompose(&z4, &h4.hopf, &x).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// A mutated coaction entry is seen by coassociativity or counitality
    /// unless the perturbation happens to preserve both.
    #[test]
    fn coaction_checks_are_exact(x in 0usize..4, c in 0usize..4, y in 0usize..4, v in -3i64..=3) {
        let h4 = builtin("sweedler", q());
        let h = h4.hopf.as_ref();
        let base = coadjoint_comodule(h).unwrap();
        let m = base.mutate_coaction(x, c, y, &q().from_i64(v)).unwrap();
        let report = m.verify_coaction(&h.coalgebra());
        if v == 0 {
            prop_assert!(report.passed());
        }
        let defects = m.coassociativity_defects(&h.coalgebra());
        prop_assert_eq!(report.get("coassociativity").unwrap().passed, defects.iter().all(SparseVec::is_zero));
    }
}
