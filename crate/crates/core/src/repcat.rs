//! The explicit module calculus over formal colors: the maps Y±, Z±, the
//! dualities w/b/d, the ladder operators X, X_l, X_r, X_lr, the multiplicity
//! bases Y^{2k}/Z^{2k}, and the tetrahedron/theta contractions that serve as
//! an independent oracle for the J polynomials.
//!
//! A formal color is an invertible monomial in t1, t2, t3 standing for ξ^α;
//! integer shifts α+k become ξ-multiples of the monomial.  Weights α+2(r'-i)
//! enter only through quantum brackets or K-eigenvalues, both of which stay
//! monomial, so no log-variable is ever needed.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomic::{CycNum, Params};
use crate::laurent::{LPoly, Mono, Var};
use crate::qcalc::{qbinom, qbracket, IndexTriple};

/// Formal color ξ^α as an invertible monomial.
pub type Color = Mono;

#[derive(Clone, Debug, PartialEq)]
pub enum ModuleLabel {
    /// The r-dimensional module V_α with basis v_0..v_{2r'}.
    Typ(Color),
    /// Its linear dual with the dual basis.
    DualTyp(Color),
    /// The 2-dimensional module v.
    Fund,
    DualFund,
}

impl ModuleLabel {
    pub fn dim(&self, p: &Params) -> usize {
        match self {
            ModuleLabel::Typ(_) | ModuleLabel::DualTyp(_) => p.r() as usize,
            ModuleLabel::Fund | ModuleLabel::DualFund => 2,
        }
    }
}

pub type Word = Vec<ModuleLabel>;

fn word_dim(p: &Params, w: &Word) -> usize {
    w.iter().map(|l| l.dim(p)).product()
}

/// A morphism between tensor words, stored as a dense cod×dom matrix of
/// Laurent polynomials (row-major, first tensor factor most significant).
#[derive(Clone, Debug)]
pub struct ModMap {
    pub dom: Word,
    pub cod: Word,
    m: Vec<LPoly>,
}

#[derive(Clone, Debug)]
pub enum RepError {
    WordMismatch(String),
    NotScalar(String),
    NotDivisible(String),
}

impl core::fmt::Display for RepError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RepError::WordMismatch(s) => write!(f, "tensor word mismatch: {}", s),
            RepError::NotScalar(s) => write!(f, "endomorphism is not scalar: {}", s),
            RepError::NotDivisible(s) => write!(f, "modified-dimension division failed: {}", s),
        }
    }
}

impl ModMap {
    pub fn zeros(p: &Params, dom: Word, cod: Word) -> ModMap {
        let n = word_dim(p, &dom) * word_dim(p, &cod);
        ModMap { dom, cod, m: vec![LPoly::zero(); n] }
    }

    pub fn identity(p: &Params, w: Word) -> ModMap {
        let d = word_dim(p, &w);
        let mut out = ModMap::zeros(p, w.clone(), w);
        for i in 0..d {
            out.m[i * d + i] = LPoly::one(p);
        }
        out
    }

    pub fn dom_dim(&self, p: &Params) -> usize {
        word_dim(p, &self.dom)
    }

    pub fn cod_dim(&self, p: &Params) -> usize {
        word_dim(p, &self.cod)
    }

    pub fn at(&self, p: &Params, row: usize, col: usize) -> &LPoly {
        &self.m[row * self.dom_dim(p) + col]
    }

    pub fn set(&mut self, p: &Params, row: usize, col: usize, v: LPoly) {
        let d = self.dom_dim(p);
        self.m[row * d + col] = v;
    }

    pub fn add_to(&mut self, p: &Params, row: usize, col: usize, v: &LPoly) {
        let d = self.dom_dim(p);
        self.m[row * d + col] = self.m[row * d + col].add(p, v);
    }

    /// self ∘ other (other acts first).
    pub fn compose(&self, p: &Params, other: &ModMap) -> Result<ModMap, RepError> {
        if self.dom != other.cod {
            return Err(RepError::WordMismatch(format!(
                "compose: {:?} vs {:?}",
                self.dom, other.cod
            )));
        }
        let k = self.dom_dim(p);
        let rows = self.cod_dim(p);
        let cols = other.dom_dim(p);
        let mut out = ModMap::zeros(p, other.dom.clone(), self.cod.clone());
        for r in 0..rows {
            for x in 0..k {
                let a = &self.m[r * k + x];
                if a.is_zero() {
                    continue;
                }
                for c in 0..cols {
                    let b = &other.m[x * cols + c];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(p, b);
                    out.add_to(p, r, c, &prod);
                }
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, p: &Params, other: &ModMap) -> ModMap {
        let mut dom = self.dom.clone();
        dom.extend(other.dom.iter().cloned());
        let mut cod = self.cod.clone();
        cod.extend(other.cod.iter().cloned());
        let (sd, od) = (self.dom_dim(p), other.dom_dim(p));
        let (sc, oc) = (self.cod_dim(p), other.cod_dim(p));
        let mut out = ModMap::zeros(p, dom, cod);
        for r1 in 0..sc {
            for c1 in 0..sd {
                let a = &self.m[r1 * sd + c1];
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..oc {
                    for c2 in 0..od {
                        let b = &other.m[r2 * od + c2];
                        if b.is_zero() {
                            continue;
                        }
                        out.set(p, r1 * oc + r2, c1 * od + c2, a.mul(p, b));
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, p: &Params, c: &CycNum) -> ModMap {
        ModMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            m: self.m.iter().map(|e| e.scale(p, c)).collect(),
        }
    }

    pub fn scale_poly(&self, p: &Params, f: &LPoly) -> ModMap {
        ModMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            m: self.m.iter().map(|e| e.mul(p, f)).collect(),
        }
    }

    pub fn add(&self, p: &Params, other: &ModMap) -> Result<ModMap, RepError> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(RepError::WordMismatch(String::from("add")));
        }
        Ok(ModMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            m: self.m.iter().zip(&other.m).map(|(a, b)| a.add(p, b)).collect(),
        })
    }

    pub fn sub(&self, p: &Params, other: &ModMap) -> Result<ModMap, RepError> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(RepError::WordMismatch(String::from("sub")));
        }
        Ok(ModMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            m: self.m.iter().zip(&other.m).map(|(a, b)| a.sub(p, b)).collect(),
        })
    }

    /// Matrix equality on identical words.
    pub fn matrix_eq(&self, other: &ModMap) -> bool {
        self.dom == other.dom && self.cod == other.cod && self.m == other.m
    }

    pub fn is_zero_map(&self) -> bool {
        self.m.iter().all(|e| e.is_zero())
    }

    /// For a square map, extract λ with self = λ·Id.
    pub fn as_scalar(&self, p: &Params) -> Result<LPoly, RepError> {
        let d = self.dom_dim(p);
        if d != self.cod_dim(p) {
            return Err(RepError::NotScalar(String::from("non-square")));
        }
        let lambda = self.m[0].clone();
        for r in 0..d {
            for c in 0..d {
                let e = &self.m[r * d + c];
                if r == c {
                    if *e != lambda {
                        return Err(RepError::NotScalar(format!("diag ({},{})", r, c)));
                    }
                } else if !e.is_zero() {
                    return Err(RepError::NotScalar(format!("off-diag ({},{})", r, c)));
                }
            }
        }
        Ok(lambda)
    }
}

fn typ(c: &Color) -> ModuleLabel {
    ModuleLabel::Typ(c.clone())
}

fn up(p: &Params, c: &Color) -> Color {
    c.xi_shift(p, 1)
}

fn down(p: &Params, c: &Color) -> Color {
    c.xi_shift(p, -1)
}

/// {α + k} for a color monomial.
fn br(p: &Params, c: &Color, k: i64) -> LPoly {
    qbracket(p, &c.xi_shift(p, k))
}

/// ξ^{α + k} as a polynomial.
fn xi_col(p: &Params, c: &Color, k: i64) -> LPoly {
    c.xi_shift(p, k).to_poly(p)
}

// ----- module actions ------------------------------------------------------

/// F: v_i ↦ v_{i+1}, F v_{2r'} = 0.
pub fn action_f(p: &Params, alpha: &Color) -> ModMap {
    let r = p.r() as usize;
    let w = vec![typ(alpha)];
    let mut out = ModMap::zeros(p, w.clone(), w);
    for i in 0..r - 1 {
        out.set(p, i + 1, i, LPoly::one(p));
    }
    out
}

/// E: v_i ↦ [i][i-α]/[1]^2 v_{i-1}.
pub fn action_e(p: &Params, alpha: &Color) -> ModMap {
    let r = p.r() as usize;
    let w = vec![typ(alpha)];
    let mut out = ModMap::zeros(p, w.clone(), w);
    let inv11 = p
        .invert(&p.mul(&p.qint(1), &p.qint(1)))
        .expect("[1] is invertible");
    for i in 1..r {
        // [i - α] = {ξ^i α^{-1}}
        let b = qbracket(p, &alpha.inv(p).xi_shift(p, i as i64));
        let coef = b.scale(p, &p.mul(&p.qint(i as i64), &inv11));
        out.set(p, i - 1, i, coef);
    }
    out
}

/// K: v_i ↦ ξ^{α + 2(r'-i)} v_i.
pub fn action_k(p: &Params, alpha: &Color) -> ModMap {
    let r = p.r() as usize;
    let rp = p.rp() as i64;
    let w = vec![typ(alpha)];
    let mut out = ModMap::zeros(p, w.clone(), w);
    for i in 0..r {
        out.set(p, i, i, xi_col(p, alpha, 2 * (rp - i as i64)));
    }
    out
}

// ----- dualities ------------------------------------------------------------

/// w_α: V_α → V_{-α}^*, v_i ↦ -ξ^{i^2-1-iα} v*_{2r'-i}.
pub fn w_map(p: &Params, alpha: &Color) -> ModMap {
    let r = p.r() as usize;
    let dual = alpha.inv(p);
    let mut out = ModMap::zeros(p, vec![typ(alpha)], vec![ModuleLabel::DualTyp(dual)]);
    for i in 0..r {
        let ii = i as i64;
        let coef = xi_col(p, &alpha.pow(p, -(ii as i32)), ii * ii - 1).neg(p);
        out.set(p, r - 1 - i, i, coef);
    }
    out
}

/// Inverse of w_α.
pub fn w_map_inv(p: &Params, alpha: &Color) -> ModMap {
    let r = p.r() as usize;
    let dual = alpha.inv(p);
    let mut out = ModMap::zeros(p, vec![ModuleLabel::DualTyp(dual)], vec![typ(alpha)]);
    for i in 0..r {
        let ii = i as i64;
        let coef = xi_col(p, &alpha.pow(p, ii as i32), -(ii * ii) + 1).neg(p);
        out.set(p, i, r - 1 - i, coef);
    }
    out
}

/// w_v: v → v^*, v_0 ↦ -ξ v_1^*, v_1 ↦ v_0^*.
pub fn w_fund(p: &Params) -> ModMap {
    let mut out = ModMap::zeros(p, vec![ModuleLabel::Fund], vec![ModuleLabel::DualFund]);
    out.set(p, 1, 0, LPoly::constant(p.neg(&p.xi_pow(1))));
    out.set(p, 0, 1, LPoly::one(p));
    out
}

pub fn w_fund_inv(p: &Params) -> ModMap {
    let mut out = ModMap::zeros(p, vec![ModuleLabel::DualFund], vec![ModuleLabel::Fund]);
    out.set(p, 0, 1, LPoly::constant(p.neg(&p.xi_pow(-1))));
    out.set(p, 1, 0, LPoly::one(p));
    out
}

/// d_V: V^* ⊗ V → 1, f ⊗ w ↦ f(w).
pub fn d_std(p: &Params, label: &ModuleLabel) -> ModMap {
    let dual = dual_label(p, label);
    let d = label.dim(p);
    let mut out = ModMap::zeros(p, vec![dual, label.clone()], vec![]);
    for i in 0..d {
        out.set(p, 0, i * d + i, LPoly::one(p));
    }
    out
}

/// b_V: 1 → V ⊗ V^*, 1 ↦ Σ v_j ⊗ v_j^*.
pub fn b_std(p: &Params, label: &ModuleLabel) -> ModMap {
    let dual = dual_label(p, label);
    let d = label.dim(p);
    let mut out = ModMap::zeros(p, vec![], vec![label.clone(), dual]);
    for i in 0..d {
        out.set(p, i * d + i, 0, LPoly::one(p));
    }
    out
}

/// d'_V: V ⊗ V^* → 1, v ⊗ f ↦ f(K^{1-r} v).
pub fn d_prime(p: &Params, label: &ModuleLabel) -> ModMap {
    let dual = dual_label(p, label);
    let d = label.dim(p);
    let mut out = ModMap::zeros(p, vec![label.clone(), dual], vec![]);
    for i in 0..d {
        out.set(p, 0, i * d + i, k_power_eigen(p, label, i, -(2 * p.rp() as i64)));
    }
    out
}

/// b'_V: 1 → V^* ⊗ V, 1 ↦ Σ v_j^* ⊗ K^{r-1} v_j.
pub fn b_prime(p: &Params, label: &ModuleLabel) -> ModMap {
    let dual = dual_label(p, label);
    let d = label.dim(p);
    let mut out = ModMap::zeros(p, vec![], vec![dual, label.clone()]);
    for i in 0..d {
        out.set(p, i * d + i, 0, k_power_eigen(p, label, i, 2 * p.rp() as i64));
    }
    out
}

fn dual_label(p: &Params, label: &ModuleLabel) -> ModuleLabel {
    let _ = p;
    match label {
        ModuleLabel::Typ(c) => ModuleLabel::DualTyp(c.clone()),
        ModuleLabel::DualTyp(c) => ModuleLabel::Typ(c.clone()),
        ModuleLabel::Fund => ModuleLabel::DualFund,
        ModuleLabel::DualFund => ModuleLabel::Fund,
    }
}

/// Eigenvalue of K^e on basis vector i of the label.
fn k_power_eigen(p: &Params, label: &ModuleLabel, i: usize, e: i64) -> LPoly {
    let rp = p.rp() as i64;
    match label {
        ModuleLabel::Typ(c) => {
            // weight α + 2(r'-i)
            let m = c.pow(p, e as i32).xi_shift(p, e * 2 * (rp - i as i64));
            m.to_poly(p)
        }
        ModuleLabel::Fund => {
            // weights +1, -1
            let wt = if i == 0 { 1 } else { -1 };
            LPoly::constant(p.xi_pow(e * wt))
        }
        _ => panic!("K acts on modules, not duals, in this calculus"),
    }
}

/// d^α = d_{V_α} ∘ (w_{-α} ⊗ Id): V_{-α} ⊗ V_α → 1.
/// Closed form d^α(v_i ⊗ v_{2r'-i}) = -ξ^{iα + i^2 - 1}.
pub fn d_pair(p: &Params, alpha: &Color) -> ModMap {
    let r = p.r() as usize;
    let mut out = ModMap::zeros(p, vec![typ(&alpha.inv(p)), typ(alpha)], vec![]);
    for i in 0..r {
        let ii = i as i64;
        let coef = xi_col(p, &alpha.pow(p, ii as i32), ii * ii - 1).neg(p);
        out.set(p, 0, i * r + (r - 1 - i), coef);
    }
    out
}

/// b^α = (Id ⊗ w_{-α}^{-1}) ∘ b_{V_α}: 1 → V_α ⊗ V_{-α}.
/// Closed form b^α(1) = Σ_i -ξ^{-iα + 1 - i^2} v_{2r'-i} ⊗ v_i.
pub fn b_pair(p: &Params, alpha: &Color) -> ModMap {
    let r = p.r() as usize;
    let mut out = ModMap::zeros(p, vec![], vec![typ(alpha), typ(&alpha.inv(p))]);
    for i in 0..r {
        let ii = i as i64;
        let coef = xi_col(p, &alpha.pow(p, -(ii as i32)), 1 - ii * ii).neg(p);
        out.set(p, (r - 1 - i) * r + i, 0, coef);
    }
    out
}

/// d^v: v ⊗ v → 1 with d^v(v_0 ⊗ v_1) = -ξ, d^v(v_1 ⊗ v_0) = 1.
pub fn d_fund(p: &Params) -> ModMap {
    let mut out = ModMap::zeros(p, vec![ModuleLabel::Fund, ModuleLabel::Fund], vec![]);
    out.set(p, 0, 1, LPoly::constant(p.neg(&p.xi_pow(1))));
    out.set(p, 0, 2, LPoly::one(p));
    out
}

/// b^v: 1 → v ⊗ v with b^v(1) = v_0 ⊗ v_1 - ξ^{-1} v_1 ⊗ v_0.
pub fn b_fund(p: &Params) -> ModMap {
    let mut out = ModMap::zeros(p, vec![], vec![ModuleLabel::Fund, ModuleLabel::Fund]);
    out.set(p, 1, 0, LPoly::one(p));
    out.set(p, 2, 0, LPoly::constant(p.neg(&p.xi_pow(-1))));
    out
}

// ----- the Y/Z basis morphisms for v ⊗ V words -----------------------------

/// Y⁻_{α+1, v, α}: V_{α+1} → v ⊗ V_α,
/// v_0 ↦ v_0 ⊗ v_0, v_i ↦ ξ^{-i} v_0 ⊗ v_i + ([i]/[1]) v_1 ⊗ v_{i-1}.
/// The balanced coefficient [i]/[1] is forced by F-equivariance
/// (c_{i+1} = ξ^{-i} + ξ c_i from ΔF, with c_0 = 0).
pub fn y_minus_vl(p: &Params, alpha: &Color) -> ModMap {
    let r = p.r() as usize;
    let inv1 = p.invert(&p.qint(1)).expect("[1] invertible");
    let mut out =
        ModMap::zeros(p, vec![typ(&up(p, alpha))], vec![ModuleLabel::Fund, typ(alpha)]);
    for i in 0..r {
        let ii = i as i64;
        out.set(p, i, i, LPoly::constant(p.xi_pow(-ii)));
        if i >= 1 {
            out.set(p, r + (i - 1), i, LPoly::constant(p.mul(&p.qint(ii), &inv1)));
        }
    }
    out
}

/// Y⁺_{α, v, α+1}: V_α → v ⊗ V_{α+1},
/// v_i ↦ -ξ^{α-i-1} [1] v_0 ⊗ v_{i+1} + ξ^{-1} [α-i] v_1 ⊗ v_i.
pub fn y_plus_vl(p: &Params, alpha: &Color) -> ModMap {
    let r = p.r() as usize;
    let mut out =
        ModMap::zeros(p, vec![typ(alpha)], vec![ModuleLabel::Fund, typ(&up(p, alpha))]);
    for i in 0..r {
        let ii = i as i64;
        if i + 1 < r {
            let coef = xi_col(p, alpha, -ii - 1).scale(p, &p.neg(&p.qint(1)));
            out.set(p, i + 1, i, coef);
        }
        let coef2 = br(p, &alpha.pow(p, 1).xi_shift(p, -ii), 0).scale(p, &p.xi_pow(-1));
        out.set(p, r + i, i, coef2);
    }
    out
}

/// Y⁺_{α, α+1, v}: V_α → V_{α+1} ⊗ v,
/// v_i ↦ -ξ^{i} [α-i] v_i ⊗ v_1 - ξ^{-1} [1] v_{i+1} ⊗ v_0.
pub fn y_plus_vr(p: &Params, alpha: &Color) -> ModMap {
    let r = p.r() as usize;
    let mut out =
        ModMap::zeros(p, vec![typ(alpha)], vec![typ(&up(p, alpha)), ModuleLabel::Fund]);
    for i in 0..r {
        let ii = i as i64;
        let coef = br(p, &alpha.xi_shift(p, -ii), 0)
            .scale(p, &p.neg(&p.xi_pow(ii)));
        out.set(p, 2 * i + 1, i, coef);
        if i + 1 < r {
            let coef2 = LPoly::constant(p.neg(&p.mul(&p.xi_pow(-1), &p.qint(1))));
            out.set(p, 2 * (i + 1), i, coef2);
        }
    }
    out
}

/// Y⁻_{α+1, α, v}: V_{α+1} → V_α ⊗ v, built from Y⁻_{-α, v, -α-1} by
/// bending with b^α and d^{α+1}.
pub fn y_minus_vr(p: &Params, alpha: &Color) -> ModMap {
    let a1 = up(p, alpha);
    let u = y_minus_vl(p, &down(p, &alpha.inv(p)));
    let id_a = ModMap::identity(p, vec![typ(alpha)]);
    let id_a1 = ModMap::identity(p, vec![typ(&a1)]);
    let id_v = ModMap::identity(p, vec![ModuleLabel::Fund]);
    let stage1 = b_pair(p, alpha).tensor(p, &id_a1);
    let stage2 = id_a.tensor(p, &u).tensor(p, &id_a1);
    let stage3 = id_a.tensor(p, &id_v).tensor(p, &d_pair(p, &a1));
    stage3
        .compose(p, &stage2)
        .and_then(|m| m.compose(p, &stage1))
        .expect("y_minus_vr composition is well-typed")
}

// Z-maps: contractions of the Y family with d^v.

/// Z⁻_{α, v, α+1}: v ⊗ V_{α+1} → V_α.
pub fn z_minus_vl(p: &Params, alpha: &Color) -> ModMap {
    let id_v = ModMap::identity(p, vec![ModuleLabel::Fund]);
    let id_a = ModMap::identity(p, vec![typ(alpha)]);
    d_fund(p)
        .tensor(p, &id_a)
        .compose(p, &id_v.tensor(p, &y_minus_vl(p, alpha)))
        .expect("z_minus_vl composition is well-typed")
}

/// Z⁺_{α+1, v, α}: v ⊗ V_α → V_{α+1}.
pub fn z_plus_vl(p: &Params, alpha: &Color) -> ModMap {
    let id_v = ModMap::identity(p, vec![ModuleLabel::Fund]);
    let id_a1 = ModMap::identity(p, vec![typ(&up(p, alpha))]);
    d_fund(p)
        .tensor(p, &id_a1)
        .compose(p, &id_v.tensor(p, &y_plus_vl(p, alpha)))
        .expect("z_plus_vl composition is well-typed")
}

/// Z⁻_{α, α+1, v}: V_{α+1} ⊗ v → V_α.
pub fn z_minus_vr(p: &Params, alpha: &Color) -> ModMap {
    let id_v = ModMap::identity(p, vec![ModuleLabel::Fund]);
    let id_a = ModMap::identity(p, vec![typ(alpha)]);
    id_a.tensor(p, &d_fund(p))
        .compose(p, &y_minus_vr(p, alpha).tensor(p, &id_v))
        .expect("z_minus_vr composition is well-typed")
}

/// Z⁺_{α+1, α, v}: V_α ⊗ v → V_{α+1}.
pub fn z_plus_vr(p: &Params, alpha: &Color) -> ModMap {
    let id_v = ModMap::identity(p, vec![ModuleLabel::Fund]);
    let id_a1 = ModMap::identity(p, vec![typ(&up(p, alpha))]);
    id_a1
        .tensor(p, &d_fund(p))
        .compose(p, &y_plus_vr(p, alpha).tensor(p, &id_v))
        .expect("z_plus_vr composition is well-typed")
}

// ----- the ladder operators -------------------------------------------------

/// Closed form of X: V_α ⊗ V_β → V_{α+1} ⊗ V_{β+1},
/// v_i ⊗ v_j ↦ ξ^{β+i-j-1} [α-i] v_i ⊗ v_{j+1} + ξ^{-1} [β-j] v_{i+1} ⊗ v_j.
pub fn x_closed(p: &Params, alpha: &Color, beta: &Color) -> ModMap {
    let r = p.r() as usize;
    let dom = vec![typ(alpha), typ(beta)];
    let cod = vec![typ(&up(p, alpha)), typ(&up(p, beta))];
    let mut out = ModMap::zeros(p, dom, cod);
    for i in 0..r {
        for j in 0..r {
            let col = i * r + j;
            let (ii, jj) = (i as i64, j as i64);
            if j + 1 < r {
                let coef = xi_col(p, beta, ii - jj - 1).mul(p, &br(p, &alpha.xi_shift(p, -ii), 0));
                out.add_to(p, i * r + (j + 1), col, &coef);
            }
            if i + 1 < r {
                let coef = br(p, &beta.xi_shift(p, -jj), 0).scale(p, &p.xi_pow(-1));
                out.add_to(p, (i + 1) * r + j, col, &coef);
            }
        }
    }
    out
}

/// Definitional form of X: (1/[1]) (Id ⊗ d^v ⊗ Id)(Y⁺_{α,α+1,v} ⊗ Y⁺_{β,v,β+1}).
pub fn x_composite(p: &Params, alpha: &Color, beta: &Color) -> ModMap {
    let id_a1 = ModMap::identity(p, vec![typ(&up(p, alpha))]);
    let id_b1 = ModMap::identity(p, vec![typ(&up(p, beta))]);
    let contract = id_a1.tensor(p, &d_fund(p)).tensor(p, &id_b1);
    let pair = y_plus_vr(p, alpha).tensor(p, &y_plus_vl(p, beta));
    let inv1 = p.invert(&p.qint(1)).expect("[1] invertible");
    contract
        .compose(p, &pair)
        .expect("x_composite composition is well-typed")
        .scale(p, &inv1)
}

/// X_l: V_α ⊗ V_β → V_{α-1} ⊗ V_{β+1}.
pub fn xl(p: &Params, alpha: &Color, beta: &Color) -> ModMap {
    let id_l = ModMap::identity(p, vec![typ(&down(p, alpha))]);
    let id_r = ModMap::identity(p, vec![typ(&up(p, beta))]);
    let contract = id_l.tensor(p, &d_fund(p)).tensor(p, &id_r);
    let pair = y_minus_vr(p, &down(p, alpha)).tensor(p, &y_plus_vl(p, beta));
    contract.compose(p, &pair).expect("xl composition is well-typed")
}

/// X_r: V_α ⊗ V_β → V_{α+1} ⊗ V_{β-1}.
pub fn xr(p: &Params, alpha: &Color, beta: &Color) -> ModMap {
    let id_l = ModMap::identity(p, vec![typ(&up(p, alpha))]);
    let id_r = ModMap::identity(p, vec![typ(&down(p, beta))]);
    let contract = id_l.tensor(p, &d_fund(p)).tensor(p, &id_r);
    let pair = y_plus_vr(p, alpha).tensor(p, &y_minus_vl(p, &down(p, beta)));
    contract.compose(p, &pair).expect("xr composition is well-typed")
}

/// X_lr: V_α ⊗ V_β → V_{α-1} ⊗ V_{β-1}.
pub fn xlr(p: &Params, alpha: &Color, beta: &Color) -> ModMap {
    let id_l = ModMap::identity(p, vec![typ(&down(p, alpha))]);
    let id_r = ModMap::identity(p, vec![typ(&down(p, beta))]);
    let contract = id_l.tensor(p, &d_fund(p)).tensor(p, &id_r);
    let pair = y_minus_vr(p, &down(p, alpha)).tensor(p, &y_minus_vl(p, &down(p, beta)));
    contract.compose(p, &pair).expect("xlr composition is well-typed")
}

// ----- multiplicity bases ----------------------------------------------------

/// Y^{-2r'}_{a,b,c}: V_a → V_b ⊗ V_c (b+c-a = -2r'),
/// v_n ↦ (ΔF)^n (v_0 ⊗ v_0) = Σ_k ξ^{(n-k)(k - b - 2r')} [n over k] v_k ⊗ v_{n-k}.
pub fn y_base(p: &Params, bottom: &Color, left: &Color, right: &Color) -> ModMap {
    let r = p.r() as usize;
    let rp = p.rp() as i64;
    let dom = vec![typ(bottom)];
    let cod = vec![typ(left), typ(right)];
    let mut out = ModMap::zeros(p, dom, cod);
    for n in 0..r {
        let nn = n as i64;
        for k in 0..=n {
            let kk = k as i64;
            let binom = qbinom(p, nn, kk).expect("quantum binomial in range");
            // (ΔF)^n: the K^{k-n} factor acts on the left tensor slot.
            let coef = xi_col(p, &left.pow(p, (kk - nn) as i32), (nn - kk) * (kk - 2 * rp))
                .scale(p, &binom);
            out.add_to(p, k * r + (n - k), n, &coef);
        }
    }
    out
}

/// Y^{2k}_{a,b,c} = X^{∘(r'+k)} ∘ Y^{-2r'}_{a, b-n, c-n}: V_a → V_b ⊗ V_c.
pub fn y2k(p: &Params, k: i64, bottom: &Color, left: &Color, right: &Color) -> ModMap {
    let n = p.rp() as i64 + k;
    assert!((0..=2 * p.rp() as i64).contains(&n), "height 2k out of range");
    let mut acc = y_base(p, bottom, &left.xi_shift(p, -n), &right.xi_shift(p, -n));
    for j in 0..n {
        let x = x_closed(p, &left.xi_shift(p, j - n), &right.xi_shift(p, j - n));
        acc = x.compose(p, &acc).expect("y2k ladder composition is well-typed");
    }
    acc
}

/// Z^{2k}_{a,b,c}: V_b ⊗ V_c → V_a (a-b-c = 2k), via (Id ⊗ d^c)(Y^{2k}_{b,a,-c} ⊗ Id).
pub fn z2k(p: &Params, k: i64, top: &Color, src_l: &Color, src_r: &Color) -> ModMap {
    let id_top = ModMap::identity(p, vec![typ(top)]);
    let id_r = ModMap::identity(p, vec![typ(src_r)]);
    let y = y2k(p, k, src_l, top, &src_r.inv(p));
    id_top
        .tensor(p, &d_pair(p, src_r))
        .compose(p, &y.tensor(p, &id_r))
        .expect("z2k composition is well-typed")
}

/// The equivalent second definition (d^{-b} ⊗ Id)(Id ⊗ Y^{2k}_{c,-b,a}).
pub fn z2k_alt(p: &Params, k: i64, top: &Color, src_l: &Color, src_r: &Color) -> ModMap {
    let id_l = ModMap::identity(p, vec![typ(src_l)]);
    let id_top = ModMap::identity(p, vec![typ(top)]);
    let y = y2k(p, k, src_r, &src_l.inv(p), top);
    d_pair(p, &src_l.inv(p))
        .tensor(p, &id_top)
        .compose(p, &id_l.tensor(p, &y))
        .expect("z2k_alt composition is well-typed")
}

/// The cyclic rotation R: Hom(V_a, V_b ⊗ V_c) → Hom(V_{-b}, V_c ⊗ V_{-a}),
/// f ↦ (d^b ⊗ Id ⊗ Id)(Id ⊗ f ⊗ Id)(Id ⊗ b^a).
pub fn rotate(p: &Params, f: &ModMap, bottom: &Color, left: &Color) -> ModMap {
    let id_nb = ModMap::identity(p, vec![typ(&left.inv(p))]);
    let id_na = ModMap::identity(p, vec![typ(&bottom.inv(p))]);
    let right_word: Word = f.cod[1..].to_vec();
    let id_rest = ModMap::identity(p, right_word);
    let stage1 = id_nb.tensor(p, &b_pair(p, bottom));
    let stage2 = id_nb.tensor(p, f).tensor(p, &id_na);
    let stage3 = d_pair(p, left).tensor(p, &id_rest).tensor(p, &id_na);
    stage3
        .compose(p, &stage2)
        .and_then(|m| m.compose(p, &stage1))
        .expect("rotation composition is well-typed")
}

// ----- graph contractions -----------------------------------------------------

/// Π_{m=1}^{2r'} {α + m}: the inverse modified dimension of V_α.
pub fn inv_mod_dim(p: &Params, alpha: &Color) -> LPoly {
    let mut acc = LPoly::one(p);
    for m in 1..=2 * p.rp() as i64 {
        acc = acc.mul(p, &br(p, alpha, m));
    }
    acc
}

/// Which edge of the tetrahedron to cut open (for the independence check).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutEdge {
    Alpha,
    Beta,
    Gamma,
}

/// F' of the tetrahedron graph of the 6j definition, as a Laurent polynomial
/// in t1, t2, t3 (standing for ξ^α, ξ^β, ξ^γ).
///
/// The graph is cut along the requested edge; the resulting endomorphism is
/// asserted scalar and multiplied by the modified dimension, whose
/// denominator must cancel exactly.
pub fn tetrahedron_oracle_cut(
    p: &Params,
    t: &IndexTriple,
    cut: CutEdge,
) -> Result<LPoly, RepError> {
    // Cutting β or γ evaluates the cyclically rotated labelling, which is the
    // same graph cut along a different edge.
    let (i, j, k, va, vb, vc) = match cut {
        CutEdge::Alpha => (t.i1, t.i2, t.i3, Var::T1, Var::T2, Var::T3),
        CutEdge::Beta => (t.i2, t.i3, t.i1, Var::T2, Var::T3, Var::T1),
        CutEdge::Gamma => (t.i3, t.i1, t.i2, Var::T3, Var::T1, Var::T2),
    };
    let l = -(i + j + k);
    let alpha = Mono::var(p, va);
    let beta = Mono::var(p, vb);
    let gamma = Mono::var(p, vc);
    // -δ = γ - β + 2i, -ε = α - γ + 2j, φ = α - β - 2k
    let neg_delta = gamma.mul(p, &beta.inv(p)).xi_shift(p, 2 * i);
    let neg_eps = alpha.mul(p, &gamma.inv(p)).xi_shift(p, 2 * j);
    let phi = alpha.mul(p, &beta.inv(p)).xi_shift(p, -2 * k);

    let id_ne = ModMap::identity(p, vec![typ(&neg_eps)]);
    let id_b = ModMap::identity(p, vec![typ(&beta)]);

    let stage1 = y2k(p, j, &alpha, &neg_eps, &gamma);
    let stage2 = id_ne.tensor(p, &y2k(p, i, &gamma, &neg_delta, &beta));
    let stage3 = z2k(p, l, &phi, &neg_eps, &neg_delta).tensor(p, &id_b);
    let stage4 = z2k(p, k, &alpha, &phi, &beta);
    let total = stage4
        .compose(p, &stage3)
        .and_then(|m| m.compose(p, &stage2))
        .and_then(|m| m.compose(p, &stage1))
        .expect("tetrahedron contraction is well-typed");
    let lambda = total.as_scalar(p)?;
    let poly = lambda
        .divide_exact(p, &inv_mod_dim(p, &alpha))
        .ok_or_else(|| RepError::NotDivisible(format!("tetrahedron {}", t.key())))?;
    Ok(poly)
}

/// F' of the tetrahedron, cut along the α edge.
pub fn tetrahedron_oracle(p: &Params, t: &IndexTriple) -> Result<LPoly, RepError> {
    tetrahedron_oracle_cut(p, t, CutEdge::Alpha)
}

/// F' of the Θ-graph with vertex heights (2k, -2k); expected to be the
/// constant 1 for every k.
pub fn theta_oracle(p: &Params, k: i64) -> Result<LPoly, RepError> {
    let x = Mono::var(p, Var::T1);
    let b = Mono::var(p, Var::T2);
    let c = x.mul(p, &b.inv(p)).xi_shift(p, 2 * k);
    let m = z2k(p, -k, &x, &b, &c)
        .compose(p, &y2k(p, k, &x, &b, &c))
        .expect("theta contraction is well-typed");
    let lambda = m.as_scalar(p)?;
    lambda
        .divide_exact(p, &inv_mod_dim(p, &x))
        .ok_or_else(|| RepError::NotDivisible(format!("theta k={}", k)))
}
