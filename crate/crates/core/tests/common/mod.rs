#![allow(dead_code)]

use hopfcalc::exact::{FieldSpec, Matrix, SparseVec};
use hopfcalc::hopf::{BuiltinAlgebra, Group};
use hopfcalc::modules::FunctorData;

pub fn q() -> FieldSpec {
    FieldSpec::Rationals
}

pub fn f7() -> FieldSpec {
    FieldSpec::prime(7).unwrap()
}

pub fn builtin(name: &str, field: FieldSpec) -> BuiltinAlgebra {
    BuiltinAlgebra::by_name(name, field).unwrap()
}

/// The algebras every calculus-level property is exercised on.
pub fn standard_builtins() -> Vec<BuiltinAlgebra> {
    vec![
        builtin("group:Z2", q()),
        builtin("group:Z3", q()),
        builtin("group:S3", q()),
        builtin("dualgroup:Z2", q()),
        builtin("sweedler", q()),
        builtin("taft:3:2", f7()),
    ]
}

fn standard_rep(field: FieldSpec) -> Vec<Matrix> {
    // S3 on {v ∈ k³ : Σv = 0} with basis e0 - e1, e1 - e2, in the element
    // order of `Group::symmetric3`.
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    perms
        .iter()
        .map(|p| {
            let image = |v: [i64; 3]| {
                let mut w = [0i64; 3];
                for i in 0..3 {
                    w[p[i]] += v[i];
                }
                SparseVec::from_entries([(0, field.from_i64(w[0])), (1, field.from_i64(-w[2]))])
            };
            Matrix::from_columns(field, 2, vec![image([1, -1, 0]), image([0, 1, -1])]).unwrap()
        })
        .collect()
}

/// Conjugation-groupoid data for S3: the standard representation over the
/// identity, the sign line over each transposition, nothing over 3-cycles.
pub fn s3_functor_data(g: &Group, field: FieldSpec) -> FunctorData {
    assert_eq!(g.order(), 6);
    let rep = standard_rep(field);
    let sign: [i64; 6] = [1, -1, -1, -1, 1, 1];
    let dims: Vec<usize> = vec![2, 1, 1, 1, 0, 0];
    let mut maps = Vec::new();
    for h in 0..6 {
        for k in 0..6 {
            maps.push(match dims[k] {
                0 => Matrix::zero(field, dims[g.conjugate(h, k)], 0),
                2 => rep[h].clone(),
                _ => Matrix::from_columns(field, 1, vec![SparseVec::single(0, field.from_i64(sign[h]))]).unwrap(),
            });
        }
    }
    FunctorData { dims, maps }
}
