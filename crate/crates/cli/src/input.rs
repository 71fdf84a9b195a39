//! JSON input formats and name resolution for algebras and modules.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use hopfcalc::exact::{FieldSpec, Matrix, Scalar, SparseVec};
use hopfcalc::hopf::{BuiltinAlgebra, Group, HopfAlgebra};
use hopfcalc::modules::{
    coadjoint_comodule, coadjoint_comodule_yd, one_dim_modcomod, regular_modcomod, trivial_modcomod, ModComod,
};
use serde::Deserialize;

use crate::CliError;

/// Hand-authored inputs stay small; this keeps tensor powers bounded.
pub const MAX_DIM: usize = 64;

/// An exact literal: `"p/q"`, `"-3"`, or a bare JSON integer.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn parse(&self, field: FieldSpec) -> Result<Scalar, CliError> {
        Ok(match self {
            Literal::Int(n) => field.from_i64(*n),
            Literal::Text(s) => field.parse_scalar(s)?,
        })
    }
}

/// Sparse structure constants; every index list is followed by its scalar.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSpecFile {
    pub field: String,
    pub dim: usize,
    #[serde(default)]
    pub basis: Option<Vec<String>>,
    /// `e_i e_j = Σ c e_k` as `[i, j, k, c]`.
    pub mul: Vec<(usize, usize, usize, Literal)>,
    /// `1 = Σ c e_k` as `[k, c]`.
    pub unit: Vec<(usize, Literal)>,
    /// `Δ(e_i) = Σ c e_j ⊗ e_k` as `[i, j, k, c]`.
    pub comul: Vec<(usize, usize, usize, Literal)>,
    /// `ε(e_i) = c` as `[i, c]`.
    pub counit: Vec<(usize, Literal)>,
    /// `S(e_i) = Σ c e_j` as `[i, j, c]`.
    pub antipode: Vec<(usize, usize, Literal)>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OneDimSpec {
    /// Values of the character on the basis.
    pub delta: Vec<Literal>,
    /// The group-like as `[k, c]` pairs.
    pub sigma: Vec<(usize, Literal)>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpecFile {
    /// A built-in algebra name; alternative to `hopf`.
    #[serde(default)]
    pub builtin: Option<String>,
    /// Field for `builtin`.
    #[serde(default)]
    pub field: Option<String>,
    /// Path to a Hopf algebra file, relative to this file.
    #[serde(default)]
    pub hopf: Option<PathBuf>,
    #[serde(default)]
    pub dim: Option<usize>,
    /// `e_h · x_i = Σ c x_j` as `[h, i, j, c]`.
    #[serde(default)]
    pub action: Vec<(usize, usize, usize, Literal)>,
    /// `ρ(x_i) = Σ c e_k ⊗ x_j` as `[i, k, j, c]`.
    #[serde(default)]
    pub coaction: Vec<(usize, usize, usize, Literal)>,
    #[serde(default)]
    pub one_dim: Option<OneDimSpec>,
}

/// A resolved algebra with whatever named data it came with.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub label: String,
    pub hopf: Arc<HopfAlgebra>,
    pub builtin: Option<BuiltinAlgebra>,
}

pub fn parse_field(text: &str) -> Result<FieldSpec, CliError> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t.strip_prefix('F').or_else(|| t.strip_prefix('f')).unwrap_or(t);
    let p: u64 = digits.parse().map_err(|_| CliError::Usage(format!("unknown field {text:?}; use Q or Fp")))?;
    Ok(FieldSpec::prime(p)?)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn check_index(i: usize, bound: usize, what: &str) -> Result<(), CliError> {
    if i >= bound {
        return Err(CliError::Usage(format!("{what} index {i} out of range (< {bound})")));
    }
    Ok(())
}

impl HopfSpecFile {
    /// Builds the algebra; axioms are checked by the caller.
    pub fn build(&self) -> Result<HopfAlgebra, CliError> {
        let field = parse_field(&self.field)?;
        let n = self.dim;
        if n == 0 || n > MAX_DIM {
            return Err(CliError::Usage(format!("dimension must be in 1..={MAX_DIM}")));
        }
        let names = match &self.basis {
            Some(b) if b.len() == n => b.clone(),
            Some(_) => return Err(CliError::Usage("basis names do not match dim".into())),
            None => (0..n).map(|i| format!("e{i}")).collect(),
        };
        let mut mul = vec![Vec::new(); n * n];
        for (i, j, k, c) in &self.mul {
            for idx in [i, j, k] {
                check_index(*idx, n, "mul")?;
            }
            mul[i * n + j].push((*k, c.parse(field)?));
        }
        let mut unit = Vec::new();
        for (k, c) in &self.unit {
            check_index(*k, n, "unit")?;
            unit.push((*k, c.parse(field)?));
        }
        let mut comul = vec![Vec::new(); n];
        for (i, j, k, c) in &self.comul {
            for idx in [i, j, k] {
                check_index(*idx, n, "comul")?;
            }
            comul[*i].push((j * n + k, c.parse(field)?));
        }
        let mut counit = vec![field.zero(); n];
        for (i, c) in &self.counit {
            check_index(*i, n, "counit")?;
            counit[*i] = &counit[*i] + &c.parse(field)?;
        }
        let mut antipode = vec![Vec::new(); n];
        for (i, j, c) in &self.antipode {
            check_index(*i, n, "antipode")?;
            check_index(*j, n, "antipode")?;
            antipode[*i].push((*j, c.parse(field)?));
        }
        let vecs = |rows: Vec<Vec<(usize, Scalar)>>| rows.into_iter().map(SparseVec::from_entries).collect::<Vec<_>>();
        let antipode = Matrix::from_columns(field, n, vecs(antipode))?;
        Ok(HopfAlgebra::new(field, names, vecs(mul), SparseVec::from_entries(unit), vecs(comul), counit, antipode)?)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CayleyFile {
    table: Vec<Vec<usize>>,
    #[serde(default)]
    names: Option<Vec<String>>,
}

/// `group:<Zn|S3|cayley.json>`, `dualgroup:…`, `sweedler`, `taft:n:q`.
pub fn resolve_builtin(name: &str, field: FieldSpec) -> Result<BuiltinAlgebra, CliError> {
    for (prefix, dual) in [("group:", false), ("dualgroup:", true)] {
        if let Some(rest) = name.strip_prefix(prefix) {
            let path = Path::new(rest);
            if rest.ends_with(".json") || path.is_file() {
                let cayley: CayleyFile = read_json(path)?;
                if cayley.table.len() > MAX_DIM {
                    return Err(CliError::Usage(format!("group order must be at most {MAX_DIM}")));
                }
                let group = Group::from_cayley(cayley.table, cayley.names)?;
                return Ok(if dual {
                    BuiltinAlgebra::dual_group_algebra(name, &group, field)?
                } else {
                    BuiltinAlgebra::group_algebra(name, &group, field)?
                });
            }
        }
    }
    let b = BuiltinAlgebra::by_name(name, field)?;
    if b.hopf.dim() > MAX_DIM {
        return Err(CliError::Usage(format!("dimension must be at most {MAX_DIM}")));
    }
    Ok(b)
}

/// Algebra named on the command line, if any.
pub fn algebra_from_args(builtin: Option<&str>, hopf: Option<&Path>, field: &str) -> Result<Option<Algebra>, CliError> {
    match (builtin, hopf) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --builtin or --hopf, not both".into())),
        (Some(name), None) => {
            let b = resolve_builtin(name, parse_field(field)?)?;
            Ok(Some(Algebra { label: b.name.clone(), hopf: b.hopf.clone(), builtin: Some(b) }))
        }
        (None, Some(path)) => {
            let spec: HopfSpecFile = read_json(path)?;
            let h = spec.build()?;
            let failures: Vec<String> = h.verify_hopf_axioms().failures().map(|c| c.name.clone()).collect();
            if !failures.is_empty() {
                return Err(CliError::Usage(format!(
                    "{} is not a Hopf algebra; failing axioms: {}",
                    path.display(),
                    failures.join(", ")
                )));
            }
            Ok(Some(Algebra { label: path.display().to_string(), hopf: Arc::new(h), builtin: None }))
        }
        (None, None) => Ok(None),
    }
}

pub fn require(algebra: Option<Algebra>) -> Result<Algebra, CliError> {
    algebra.ok_or_else(|| CliError::Usage("no algebra given; use --builtin or --hopf".into()))
}

fn same_algebra(a: &Algebra, b: &Algebra) -> Result<(), CliError> {
    if a.hopf.as_ref() != b.hopf.as_ref() {
        return Err(CliError::Usage(format!("module is over {}, not {}", b.label, a.label)));
    }
    Ok(())
}

/// A module given by keyword (`trivial`, `coadjoint`, `coadjoint_s`,
/// `regular`, `one_dim:i:j` over a built-in's characters and group-likes)
/// or by a module file. Returns the module and the algebra it lives over.
pub fn resolve_module(spec: &str, context: Option<Algebra>) -> Result<(ModComod, Algebra), CliError> {
    let keyword = |algebra: Algebra| -> Result<(ModComod, Algebra), CliError> {
        let h = algebra.hopf.as_ref();
        let module = match spec {
            "trivial" => trivial_modcomod(h)?,
            "coadjoint" => coadjoint_comodule(h)?,
            "coadjoint_s" => coadjoint_comodule_yd(h)?,
            "regular" => regular_modcomod(h)?,
            _ => {
                let mut parts = spec.split(':').skip(1);
                let (i, j) = match (
                    parts.next().and_then(|s| s.parse::<usize>().ok()),
                    parts.next().and_then(|s| s.parse::<usize>().ok()),
                ) {
                    (Some(i), Some(j)) => (i, j),
                    _ => return Err(CliError::Usage(format!("bad module keyword {spec:?}"))),
                };
                let b = algebra
                    .builtin
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("one_dim:i:j needs a built-in algebra".into()))?;
                let delta = b.characters.get(i).ok_or_else(|| CliError::Usage(format!("no character {i}")))?;
                let sigma = b.grouplikes.get(j).ok_or_else(|| CliError::Usage(format!("no group-like {j}")))?;
                one_dim_modcomod(h, delta, sigma)?
            }
        };
        Ok((module, algebra))
    };
    if matches!(spec, "trivial" | "coadjoint" | "coadjoint_s" | "regular") || spec.starts_with("one_dim:") {
        return keyword(require(context)?);
    }
    let path = Path::new(spec);
    if !path.is_file() {
        return Err(CliError::Usage(format!("module file {spec:?} not found")));
    }
    let file: ModuleSpecFile = read_json(path)?;
    let own = match (&file.builtin, &file.hopf) {
        (Some(name), None) => {
            let field = file.field.as_deref().unwrap_or("Q");
            algebra_from_args(Some(name), None, field)?
        }
        (None, Some(rel)) => {
            let full = path.parent().map(|p| p.join(rel)).unwrap_or_else(|| rel.clone());
            algebra_from_args(None, Some(&full), "Q")?
        }
        (None, None) => None,
        (Some(_), Some(_)) => return Err(CliError::Usage("module file names both builtin and hopf".into())),
    };
    let algebra = match (context, own) {
        (Some(a), Some(b)) => {
            same_algebra(&a, &b)?;
            a
        }
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => return Err(CliError::Usage("module file names no algebra; use --builtin or --hopf".into())),
    };
    let module = file.build(&algebra)?;
    Ok((module, algebra))
}

impl ModuleSpecFile {
    fn build(&self, algebra: &Algebra) -> Result<ModComod, CliError> {
        let h = algebra.hopf.as_ref();
        let field = h.field();
        if let Some(od) = &self.one_dim {
            if self.dim.is_some() || !self.action.is_empty() || !self.coaction.is_empty() {
                return Err(CliError::Usage("one_dim excludes dim/action/coaction".into()));
            }
            if od.delta.len() != h.dim() {
                return Err(CliError::Usage("delta must have one value per basis element".into()));
            }
            let delta = od.delta.iter().map(|l| l.parse(field)).collect::<Result<Vec<_>, _>>()?;
            let mut sigma = Vec::new();
            for (k, c) in &od.sigma {
                check_index(*k, h.dim(), "sigma")?;
                sigma.push((*k, c.parse(field)?));
            }
            return Ok(one_dim_modcomod(h, &delta, &SparseVec::from_entries(sigma))?);
        }
        let n = self.dim.ok_or_else(|| CliError::Usage("module file needs dim or one_dim".into()))?;
        if n == 0 || n > MAX_DIM {
            return Err(CliError::Usage(format!("module dimension must be in 1..={MAX_DIM}")));
        }
        let d = h.dim();
        let mut action = vec![Vec::new(); d * n];
        for (hh, i, j, c) in &self.action {
            check_index(*hh, d, "action")?;
            check_index(*i, n, "action")?;
            check_index(*j, n, "action")?;
            action[hh * n + i].push((*j, c.parse(field)?));
        }
        let mut coaction = vec![Vec::new(); n];
        for (i, k, j, c) in &self.coaction {
            check_index(*i, n, "coaction")?;
            check_index(*k, d, "coaction")?;
            check_index(*j, n, "coaction")?;
            coaction[*i].push((k * n + j, c.parse(field)?));
        }
        let to_vecs = |rows: Vec<Vec<(usize, Scalar)>>| rows.into_iter().map(SparseVec::from_entries).collect();
        Ok(ModComod::new(field, n, d, d).with_action(to_vecs(action))?.with_coaction(to_vecs(coaction))?)
    }
}
