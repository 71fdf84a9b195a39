//! Module-comodule compatibility conditions over a Hopf algebra `H`, the
//! sandwich bimodule action, and the standard supply of test modules.

use crate::error::{Error, Result};
use crate::exact::{outer_into, Accumulator, Factor, Matrix, PowerShape, Scalar, SparseVec};
use crate::hopf::HopfAlgebra;
use crate::report::Check;

use super::modcomod::ModComod;

/// Which antipode power sandwiches the outer Sweedler legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// `S⁻¹`: anti-Yetter-Drinfeld pattern.
    AntipodeInverse,
    /// `S`: Yetter-Drinfeld pattern.
    Antipode,
}

impl Twist {
    pub fn matrix(self, h: &HopfAlgebra) -> Result<&Matrix> {
        match self {
            Twist::AntipodeInverse => h.antipode_inverse().ok_or(Error::AntipodeNotInvertible),
            Twist::Antipode => Ok(h.antipode()),
        }
    }
}

fn require_modcomod<'a>(x: &'a ModComod, h: &HopfAlgebra) -> Result<(&'a [SparseVec], &'a [SparseVec])> {
    if x.acting_dim() != h.dim() || x.coacting_dim() != h.dim() {
        return Err(Error::Dimension("module is not over this Hopf algebra".into()));
    }
    Ok((x.require_action()?, x.require_coaction()?))
}

/// `h₁ x₍₋₁₎ T(h₃) ⊗ h₂ x₍₀₎` for basis `h`, `x`, with `T` the twist.
fn twisted_rhs(h: &HopfAlgebra, x: &ModComod, hi: usize, xi: usize, twist: &Matrix) -> SparseVec {
    let d = h.dim();
    let n = x.dim();
    let shape = PowerShape::new(d, 3);
    let legs = h.comultiply_iter(&h.basis(hi), 2);
    let mut acc = Accumulator::new();
    for (flat, c) in legs.iter() {
        let l = shape.decode(flat);
        for (cflat, c2) in x.coact_basis(xi).iter() {
            let (i, y) = (cflat / n, cflat % n);
            let left = h.mul_vec(h.mul_basis(l[0], i), twist.column(l[2]));
            outer_into(&mut acc, &(c * c2), &[Factor::Vector(&left), Factor::Vector(x.act_basis(l[1], y))], &[d, n]);
        }
    }
    acc.finish()
}

fn twisted_check(name: &str, h: &HopfAlgebra, x: &ModComod, twist: &Matrix) -> Result<Check> {
    require_modcomod(x, h)?;
    let mut check = Check::new(name);
    for hi in 0..h.dim() {
        for xi in 0..x.dim() {
            let lhs = x.coact(x.act_basis(hi, xi));
            check.record(vec![hi, xi], lhs.sub(&twisted_rhs(h, x, hi, xi, twist)));
        }
    }
    Ok(check)
}

/// The anti-Yetter-Drinfeld condition
/// `ρ(hx) = h₁ x₍₋₁₎ S⁻¹(h₃) ⊗ h₂ x₍₀₎` on all basis pairs.
pub fn check_ayd(h: &HopfAlgebra, x: &ModComod) -> Result<Check> {
    let inv = h.antipode_inverse().ok_or(Error::AntipodeNotInvertible)?;
    twisted_check("ayd", h, x, inv)
}

/// The Yetter-Drinfeld condition `ρ(hx) = h₁ x₍₋₁₎ S(h₃) ⊗ h₂ x₍₀₎`.
pub fn check_yd(h: &HopfAlgebra, x: &ModComod) -> Result<Check> {
    twisted_check("yd", h, x, h.antipode())
}

/// Defects of `x₍₋₁₎ x₍₀₎ = x`.
pub fn stability_check(h: &HopfAlgebra, x: &ModComod) -> Result<Check> {
    require_modcomod(x, h)?;
    let n = x.dim();
    let mut check = Check::new("stable");
    for xi in 0..n {
        let mut acc = Accumulator::new();
        for (flat, c) in x.coact_basis(xi).iter() {
            acc.add_scaled(x.act_basis(flat / n, flat % n), c);
        }
        check.record(vec![xi], acc.finish().sub(&SparseVec::basis(x.field(), xi)));
    }
    Ok(check)
}

pub fn check_stable(h: &HopfAlgebra, x: &ModComod) -> Result<bool> {
    Ok(stability_check(h, x)?.passed)
}

/// A vector space with a left `H`-action and, optionally, a right one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub dim: usize,
    /// `left[h * dim + x]`.
    pub left: Vec<SparseVec>,
    /// `right[x * dim_H + h]`.
    pub right: Option<Vec<SparseVec>>,
}

impl Bimodule {
    /// `H` over itself by left and right multiplication.
    pub fn regular(h: &HopfAlgebra) -> Self {
        let d = h.dim();
        let left = (0..d * d).map(|k| h.mul_basis(k / d, k % d).clone()).collect();
        let right = (0..d * d).map(|k| h.mul_basis(k / d, k % d).clone()).collect();
        Bimodule { dim: d, left, right: Some(right) }
    }

    /// A left module with no right action; only valid in the last slot of
    /// a sandwich product.
    pub fn left_module(x: &ModComod) -> Result<Self> {
        Ok(Bimodule { dim: x.dim(), left: x.require_action()?.to_vec(), right: None })
    }

    /// `X_0 ⊘ ... ⊘ X_n` with the sandwich left action and the right action
    /// of the last factor.
    pub fn oslash(h: &HopfAlgebra, factors: &[Bimodule], twist: Twist) -> Result<Bimodule> {
        let dims: Vec<usize> = factors.iter().map(|f| f.dim).collect();
        let size: usize = dims.iter().product();
        let d = h.dim();
        let mut left = Vec::with_capacity(d * size);
        for hi in 0..d {
            let hv = h.basis(hi);
            for t in 0..size {
                left.push(oslash_action_with(h, factors, &hv, &SparseVec::basis(h.field(), t), twist)?);
            }
        }
        let last = factors.last().ok_or_else(|| Error::Precondition("empty sandwich".into()))?;
        let right = match &last.right {
            Some(r) => {
                let prefix = size / last.dim;
                let mut out = Vec::with_capacity(size * d);
                for t in 0..size {
                    let (p, x) = (t / last.dim, t % last.dim);
                    for hi in 0..d {
                        out.push(r[x * d + hi].reindex(|y| p * last.dim + y));
                    }
                }
                let _ = prefix;
                Some(out)
            }
            None => None,
        };
        Ok(Bimodule { dim: size, left, right })
    }

    fn left_vec(&self, hv: &SparseVec, x: usize) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, c) in hv.iter() {
            acc.add_scaled(&self.left[i * self.dim + x], c);
        }
        acc.finish()
    }

    fn right_vec(&self, x: &SparseVec, hv: &SparseVec, d: usize) -> Result<SparseVec> {
        let right = self
            .right
            .as_ref()
            .ok_or_else(|| Error::Precondition("inner sandwich factor needs a right action".into()))?;
        let mut acc = Accumulator::new();
        for (xi, a) in x.iter() {
            for (i, b) in hv.iter() {
                acc.add_scaled(&right[xi * d + i], &(a * b));
            }
        }
        Ok(acc.finish())
    }
}

/// `h(x⁰ ⊗ ... ⊗ xⁿ) = h₁x⁰S⁻¹(h₂ₙ₊₁) ⊗ ... ⊗ hₙxⁿ⁻¹S⁻¹(hₙ₊₂) ⊗ hₙ₊₁xⁿ`.
pub fn oslash_action(h: &HopfAlgebra, factors: &[Bimodule], hv: &SparseVec, t: &SparseVec) -> Result<SparseVec> {
    oslash_action_with(h, factors, hv, t, Twist::AntipodeInverse)
}

pub fn oslash_action_with(
    h: &HopfAlgebra,
    factors: &[Bimodule],
    hv: &SparseVec,
    t: &SparseVec,
    twist: Twist,
) -> Result<SparseVec> {
    let tw = twist.matrix(h)?;
    let Some(n) = factors.len().checked_sub(1) else {
        return Err(Error::Precondition("empty sandwich".into()));
    };
    let d = h.dim();
    let dims: Vec<usize> = factors.iter().map(|f| f.dim).collect();
    let legs_shape = PowerShape::new(d, 2 * n + 1);
    let legs = h.comultiply_iter(hv, 2 * n);
    let mut acc = Accumulator::new();
    for (tflat, tc) in t.iter() {
        let xs = crate::exact::tensor_decode(tflat, &dims)?;
        for (lflat, lc) in legs.iter() {
            let l = legs_shape.decode(lflat);
            let mut slots = Vec::with_capacity(n + 1);
            for k in 0..n {
                let inner = factors[k].left_vec(&h.basis(l[k]), xs[k]);
                slots.push(factors[k].right_vec(&inner, tw.column(l[2 * n - k]), d)?);
            }
            slots.push(factors[n].left_vec(&h.basis(l[n]), xs[n]));
            let fs: Vec<Factor<'_>> = slots.iter().map(Factor::Vector).collect();
            outer_into(&mut acc, &(tc * lc), &fs, &dims);
        }
    }
    Ok(acc.finish())
}

/// The two halves of the module-map characterization of the AYD condition.
#[derive(Clone, Debug)]
pub struct ActionComoduleMap {
    /// The sandwich action on `H ⊗ X` is associative and unital.
    pub action_axioms: Check,
    /// `ρ: X → H ⊗ X` intertwines the action on `X` with the sandwich action.
    pub comodule_map: Check,
}

impl ActionComoduleMap {
    pub fn passed(&self) -> bool {
        self.comodule_map.passed
    }
}

pub fn check_action_comodule_map(h: &HopfAlgebra, x: &ModComod) -> Result<ActionComoduleMap> {
    require_modcomod(x, h)?;
    let factors = [Bimodule::regular(h), Bimodule::left_module(x)?];
    let hx = Bimodule::oslash(h, &factors, Twist::AntipodeInverse)?;
    let d = h.dim();
    let size = hx.dim;
    let mut axioms = Check::new("sandwich_action");
    for t in 0..size {
        let e = SparseVec::basis(h.field(), t);
        axioms.record(vec![t], hx.left_vec(h.unit(), t).sub(&e));
        for a in 0..d {
            for b in 0..d {
                let lhs = hx.left_vec(h.mul_basis(a, b), t);
                let inner = &hx.left[b * size + t];
                let rhs = inner.map_linear(|s| hx.left[a * size + s].clone());
                axioms.record(vec![a, b, t], lhs.sub(&rhs));
            }
        }
    }
    let mut map = Check::new("comodule_map");
    for hi in 0..d {
        for xi in 0..x.dim() {
            let lhs = x.coact(x.act_basis(hi, xi));
            let rhs = x.coact_basis(xi).map_linear(|s| hx.left[hi * size + s].clone());
            map.record(vec![hi, xi], lhs.sub(&rhs));
        }
    }
    Ok(ActionComoduleMap { action_axioms: axioms, comodule_map: map })
}

/// `H` with left multiplication and coaction `h ↦ h₁ T(h₃) ⊗ h₂`.
fn coadjoint_with(h: &HopfAlgebra, twist: &Matrix) -> Result<ModComod> {
    let d = h.dim();
    let shape = PowerShape::new(d, 3);
    let coaction = (0..d)
        .map(|i| {
            let mut acc = Accumulator::new();
            for (flat, c) in h.comultiply_iter(&h.basis(i), 2).iter() {
                let l = shape.decode(flat);
                let left = h.mul_vec(&h.basis(l[0]), twist.column(l[2]));
                outer_into(&mut acc, c, &[Factor::Vector(&left), Factor::Basis(l[1])], &[d, d]);
            }
            acc.finish()
        })
        .collect();
    let action = (0..d * d).map(|k| h.mul_basis(k / d, k % d).clone()).collect();
    ModComod::new(h.field(), d, d, d).with_action(action)?.with_coaction(coaction)
}

/// The coadjoint corepresentation `ρ(h) = h₁S⁻¹(h₃) ⊗ h₂`, with `H`
/// acting on itself by left multiplication.
pub fn coadjoint_comodule(h: &HopfAlgebra) -> Result<ModComod> {
    let inv = h.antipode_inverse().ok_or(Error::AntipodeNotInvertible)?;
    coadjoint_with(h, inv)
}

/// The `S`-twisted coadjoint coaction `ρ(h) = h₁S(h₃) ⊗ h₂`.
pub fn coadjoint_comodule_yd(h: &HopfAlgebra) -> Result<ModComod> {
    coadjoint_with(h, h.antipode())
}

/// `H` with left multiplication and `ρ = Δ`.
pub fn regular_modcomod(h: &HopfAlgebra) -> Result<ModComod> {
    let d = h.dim();
    let action = (0..d * d).map(|k| h.mul_basis(k / d, k % d).clone()).collect();
    ModComod::new(h.field(), d, d, d).with_action(action)?.with_coaction(h.comul_table().to_vec())
}

/// One-dimensional `X = k` with `h·x = δ(h)x` and `ρ(x) = σ ⊗ x`.
pub fn one_dim_modcomod(h: &HopfAlgebra, delta: &[Scalar], sigma: &SparseVec) -> Result<ModComod> {
    let d = h.dim();
    let f = h.field();
    if delta.len() != d {
        return Err(Error::Dimension("character has the wrong length".into()));
    }
    let eval = |v: &SparseVec| -> Scalar {
        let mut acc = f.zero();
        for (i, c) in v.iter() {
            acc += &(c * &delta[i]);
        }
        acc
    };
    if !eval(h.unit()).is_one() {
        return Err(Error::Precondition("δ(1) ≠ 1, not a character".into()));
    }
    for a in 0..d {
        for b in 0..d {
            if eval(h.mul_basis(a, b)) != &delta[a] * &delta[b] {
                return Err(Error::Precondition(format!("δ is not multiplicative at ({a}, {b})")));
            }
        }
    }
    if !h.coalgebra().is_grouplike(sigma) || !h.counit_of(sigma).is_one() {
        return Err(Error::Precondition("σ is not group-like".into()));
    }
    let action = delta.iter().map(|c| SparseVec::single(0, c.clone())).collect();
    ModComod::new(f, 1, d, d).with_action(action)?.with_coaction(vec![sigma.clone()])
}

/// The trivial module-comodule `k` with `h·x = ε(h)x`, `ρ(x) = 1 ⊗ x`.
pub fn trivial_modcomod(h: &HopfAlgebra) -> Result<ModComod> {
    one_dim_modcomod(h, h.counit(), h.unit())
}
