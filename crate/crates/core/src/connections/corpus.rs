//! The finite adversarial supply of module-comodules used to exercise the
//! correspondence theorems: trivial, every one-dimensional `(δ, σ)`, both
//! coadjoint coactions, the regular one, and single-entry coaction mutations.

use crate::error::Result;
use crate::hopf::BuiltinAlgebra;
use crate::modules::{
    coadjoint_comodule, coadjoint_comodule_yd, one_dim_modcomod, regular_modcomod, trivial_modcomod, ModComod,
};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: String,
    pub module: ModComod,
}

pub fn base_corpus(b: &BuiltinAlgebra) -> Result<Vec<CorpusEntry>> {
    let h = b.hopf.as_ref();
    let mut out = vec![CorpusEntry { label: "trivial".into(), module: trivial_modcomod(h)? }];
    for (i, delta) in b.characters.iter().enumerate() {
        for (j, sigma) in b.grouplikes.iter().enumerate() {
            out.push(CorpusEntry {
                label: format!("one_dim(δ{i},σ{j})"), module: one_dim_modcomod(h, delta, sigma)?
            });
        }
    }
    if h.antipode_inverse().is_some() {
        out.push(CorpusEntry { label: "coadjoint".into(), module: coadjoint_comodule(h)? });
    }
    out.push(CorpusEntry { label: "coadjoint_s".into(), module: coadjoint_comodule_yd(h)? });
    out.push(CorpusEntry { label: "regular".into(), module: regular_modcomod(h)? });
    Ok(out)
}

/// `count` deterministic single-entry perturbations, cycling through the
/// base entries and striding through coaction positions.
pub fn mutations(base: &[CorpusEntry], count: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let entry = &base[k % base.len()];
        let m = &entry.module;
        let (n, c) = (m.dim(), m.coacting_dim());
        let pos = (k * 7919 + 13) % (n * c * n);
        let (x, ci, y) = (pos / (c * n), (pos / n) % c, pos % n);
        let value = m.field().from_i64(if k % 2 == 0 { 1 } else { -2 });
        out.push(CorpusEntry {
            label: format!("{}+mut({x},{ci},{y})", entry.label),
            module: m.mutate_coaction(x, ci, y, &value)?,
        });
    }
    Ok(out)
}

pub fn corpus(b: &BuiltinAlgebra, mutation_count: usize) -> Result<Vec<CorpusEntry>> {
    let mut all = base_corpus(b)?;
    let extra = mutations(&all, mutation_count)?;
    all.extend(extra);
    Ok(all)
}
