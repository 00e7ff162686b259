//! G-colorings, states, heights and the state sum, over three coefficient
//! rings: exact Q(ξ), the perturbation ring of fractions in X, and complex
//! intervals.
//!
//! A coloring assigns an r-th-root representative g to every edge class in
//! its reference orientation; the colors themselves are the r-th powers.
//! States pick g·ξ^{2n} per class; their height 1-chain is integer-linear in
//! the exponents, so the enumeration works on small integer vectors and only
//! touches ring elements for the per-state weight.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cyclotomic::{CycNum, Params};
use crate::interval::CInterval;
use crate::laurent::{LPoly, Var, NVARS};
use crate::qcalc::{bar_reduce, dpoly, IndexTriple};
use crate::sixj::JTable;
use crate::statesum::homology::HomologyPresentation;
use crate::statesum::Complex;

/// Which coefficient ring the state sum runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingMode {
    Exact,
    Perturbed,
    Numeric,
}

/// An r-th-root representative g = base · X^xexp.
#[derive(Clone, Debug, PartialEq)]
pub struct ColorVal {
    pub base: CycNum,
    pub xexp: i64,
}

impl ColorVal {
    pub fn exact(base: CycNum) -> ColorVal {
        ColorVal { base, xexp: 0 }
    }
}

/// A G-coloring in root-representative form, one value per edge class.
#[derive(Clone, Debug)]
pub struct GColoring {
    pub mode: RingMode,
    pub g: Vec<ColorVal>,
}

#[derive(Clone, Debug)]
pub enum StateSumError {
    InvalidColoring(String),
    NotAdmissible(usize),
    Ring(String),
}

impl core::fmt::Display for StateSumError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            StateSumError::InvalidColoring(s) => write!(f, "invalid coloring: {}", s),
            StateSumError::NotAdmissible(e) => {
                write!(f, "coloring not admissible at edge class {}", e)
            }
            StateSumError::Ring(s) => write!(f, "ring error: {}", s),
        }
    }
}

/// Formal fraction over Laurent polynomials in X; the computation ring for
/// perturbed colorings.  Equality is cross-multiplication.
#[derive(Clone, Debug)]
pub struct XFrac {
    pub num: LPoly,
    pub den: LPoly,
}

impl XFrac {
    pub fn from_poly(p: &Params, n: LPoly) -> XFrac {
        XFrac { num: n, den: LPoly::one(p) }
    }

    pub fn eq(&self, p: &Params, other: &XFrac) -> bool {
        self.num.mul(p, &other.den) == other.num.mul(p, &self.den)
    }

    /// Substitute X ↦ X^2 in numerator and denominator.
    pub fn stretch_x(&self, p: &Params) -> XFrac {
        let mut s = crate::laurent::Subst::identity();
        s.set(Var::X, crate::laurent::Mono::var(p, Var::X).pow(p, 2));
        XFrac { num: self.num.substitute(p, &s), den: self.den.substitute(p, &s) }
    }

    /// If the fraction is a constant of Q(ξ) (X cancels), return it.
    pub fn as_x_free(&self, p: &Params) -> Option<CycNum> {
        if self.num.is_zero() {
            return Some(p.zero());
        }
        // candidate from the leading X-terms
        let lead = |f: &LPoly| -> (i32, CycNum) {
            let mut best: Option<(i32, CycNum)> = None;
            for (e, c) in f.terms() {
                let d = e[Var::X.idx()];
                match &best {
                    Some((bd, _)) if *bd >= d => {}
                    _ => best = Some((d, c.clone())),
                }
            }
            best.unwrap()
        };
        let (dn, cn) = lead(&self.num);
        let (dd, cd) = lead(&self.den);
        if dn != dd {
            return None;
        }
        let c = p.mul(&cn, &p.invert(&cd).ok()?);
        if self.num == self.den.scale(p, &c) {
            Some(c)
        } else {
            None
        }
    }

    /// Evaluate at X = x0 (exactly).
    pub fn eval_x(&self, p: &Params, x0: &CycNum) -> Result<CycNum, StateSumError> {
        let mut pt: [Option<CycNum>; NVARS] = Default::default();
        pt[Var::X.idx()] = Some(x0.clone());
        let n = self.num.eval(p, &pt).map_err(|e| StateSumError::Ring(format!("{}", e)))?;
        let d = self.den.eval(p, &pt).map_err(|e| StateSumError::Ring(format!("{}", e)))?;
        let dinv = p.invert(&d).map_err(|_| {
            StateSumError::Ring(String::from("denominator vanishes at the evaluation point"))
        })?;
        Ok(p.mul(&n, &dinv))
    }
}

/// Ring abstraction for the state-sum fold.
pub trait WeightRing: Sized {
    type El: Clone + core::fmt::Debug;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn inv(&self, a: &Self::El) -> Option<Self::El>;
    fn pow(&self, a: &Self::El, e: i64) -> Option<Self::El>;
    fn from_cyc(&self, c: &CycNum) -> Self::El;
    /// The state value g · ξ^{2n}.
    fn phi(&self, g: &ColorVal, n: i64) -> Self::El;
    fn scale_rat(&self, a: &Self::El, q: &BigRational) -> Self::El;

    /// The table n ↦ D(g ξ^{2n})^{-1}.  Rings of fractions override this to
    /// put the whole table over one denominator, so the fold's additions
    /// never multiply denominators.
    fn d_inverses(&self, d: &LPoly, g: &ColorVal, rp: i64) -> Option<Vec<Self::El>> {
        let mut out = Vec::with_capacity((2 * rp + 1) as usize);
        for n in -rp..=rp {
            let y = self.phi(g, n);
            let val = eval_poly3(self, d, [&y, &self.one(), &self.one()])?;
            out.push(self.inv(&val)?);
        }
        Some(out)
    }
}

pub struct ExactRing<'a> {
    pub p: &'a Params,
}

impl WeightRing for ExactRing<'_> {
    type El = CycNum;

    fn zero(&self) -> CycNum {
        self.p.zero()
    }

    fn one(&self) -> CycNum {
        self.p.one()
    }

    fn add(&self, a: &CycNum, b: &CycNum) -> CycNum {
        self.p.add(a, b)
    }

    fn mul(&self, a: &CycNum, b: &CycNum) -> CycNum {
        self.p.mul(a, b)
    }

    fn inv(&self, a: &CycNum) -> Option<CycNum> {
        self.p.invert(a).ok()
    }

    fn pow(&self, a: &CycNum, e: i64) -> Option<CycNum> {
        self.p.pow(a, e).ok()
    }

    fn from_cyc(&self, c: &CycNum) -> CycNum {
        c.clone()
    }

    fn phi(&self, g: &ColorVal, n: i64) -> CycNum {
        debug_assert_eq!(g.xexp, 0, "exact ring cannot carry X");
        self.p.mul(&g.base, &self.p.xi_pow(2 * n))
    }

    fn scale_rat(&self, a: &CycNum, q: &BigRational) -> CycNum {
        self.p.mul(a, &self.p.from_rational(q.clone()))
    }
}

pub struct PerturbedRing<'a> {
    pub p: &'a Params,
}

impl PerturbedRing<'_> {
    fn mono(&self, c: &CycNum, xe: i64) -> LPoly {
        let p = self.p;
        let mut m = crate::laurent::Mono::var(p, Var::X).pow(p, xe as i32);
        m.coeff = p.mul(&m.coeff, c);
        m.to_poly(p)
    }
}

impl WeightRing for PerturbedRing<'_> {
    type El = XFrac;

    fn zero(&self) -> XFrac {
        XFrac { num: LPoly::zero(), den: LPoly::one(self.p) }
    }

    fn one(&self) -> XFrac {
        XFrac::from_poly(self.p, LPoly::one(self.p))
    }

    fn add(&self, a: &XFrac, b: &XFrac) -> XFrac {
        let p = self.p;
        if a.den == b.den {
            return XFrac { num: a.num.add(p, &b.num), den: a.den.clone() };
        }
        XFrac {
            num: a.num.mul(p, &b.den).add(p, &b.num.mul(p, &a.den)),
            den: a.den.mul(p, &b.den),
        }
    }

    fn mul(&self, a: &XFrac, b: &XFrac) -> XFrac {
        let p = self.p;
        XFrac { num: a.num.mul(p, &b.num), den: a.den.mul(p, &b.den) }
    }

    fn inv(&self, a: &XFrac) -> Option<XFrac> {
        if a.num.is_zero() {
            return None;
        }
        Some(XFrac { num: a.den.clone(), den: a.num.clone() })
    }

    fn pow(&self, a: &XFrac, e: i64) -> Option<XFrac> {
        let mut base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        Some(acc)
    }

    fn from_cyc(&self, c: &CycNum) -> XFrac {
        XFrac::from_poly(self.p, LPoly::constant(c.clone()))
    }

    fn phi(&self, g: &ColorVal, n: i64) -> XFrac {
        let c = self.p.mul(&g.base, &self.p.xi_pow(2 * n));
        XFrac::from_poly(self.p, self.mono(&c, g.xexp))
    }

    fn scale_rat(&self, a: &XFrac, q: &BigRational) -> XFrac {
        XFrac {
            num: a.num.scale(self.p, &self.p.from_rational(q.clone())),
            den: a.den.clone(),
        }
    }

    /// Cofactor form: every entry shares the denominator Π_n D(g ξ^{2n}),
    /// with numerator Π_{n' ≠ n} D(g ξ^{2n'}).
    fn d_inverses(&self, d: &LPoly, g: &ColorVal, rp: i64) -> Option<Vec<XFrac>> {
        let p = self.p;
        let mut vals: Vec<LPoly> = Vec::new();
        for n in -rp..=rp {
            let y = self.phi(g, n);
            let v = eval_poly3(self, d, [&y, &self.one(), &self.one()])?;
            // denominators of monomial evaluations are themselves monomials
            let dm = v.den.as_mono()?;
            vals.push(v.num.mul_mono(p, &dm.inv(p)));
        }
        let mut den = LPoly::one(p);
        for v in &vals {
            if v.is_zero() {
                return None;
            }
            den = den.mul(p, v);
        }
        let k = vals.len();
        let mut out = Vec::with_capacity(k);
        for i in 0..k {
            let mut cof = LPoly::one(p);
            for (j, v) in vals.iter().enumerate() {
                if j != i {
                    cof = cof.mul(p, v);
                }
            }
            out.push(XFrac { num: cof, den: den.clone() });
        }
        Some(out)
    }
}

pub struct NumericRing<'a> {
    pub p: &'a Params,
    pub precision: u32,
    /// cached enclosures of ξ^k for k = 0..2r-1
    xi_pows: Vec<CInterval>,
}

impl<'a> NumericRing<'a> {
    pub fn new(p: &'a Params, precision: u32) -> NumericRing<'a> {
        let root = CInterval::root_of_unity(p.m() as i64, p.r() as i64, precision);
        let n = 2 * p.r() as usize;
        let mut xi_pows = Vec::with_capacity(n);
        let mut cur = CInterval::exact_one();
        for _ in 0..n {
            xi_pows.push(cur.clone());
            cur = cur.mul(&root);
        }
        NumericRing { p, precision, xi_pows }
    }
}

impl WeightRing for NumericRing<'_> {
    type El = CInterval;

    fn zero(&self) -> CInterval {
        CInterval::zero()
    }

    fn one(&self) -> CInterval {
        CInterval::exact_one()
    }

    fn add(&self, a: &CInterval, b: &CInterval) -> CInterval {
        a.add(b)
    }

    fn mul(&self, a: &CInterval, b: &CInterval) -> CInterval {
        a.mul(b)
    }

    fn inv(&self, a: &CInterval) -> Option<CInterval> {
        a.recip()
    }

    fn pow(&self, a: &CInterval, e: i64) -> Option<CInterval> {
        let mut base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Some(acc)
    }

    fn from_cyc(&self, c: &CycNum) -> CInterval {
        let mut acc = CInterval::zero();
        for (k, v) in c.coeffs().iter().enumerate() {
            if num_traits::Zero::is_zero(v) {
                continue;
            }
            let cv = CInterval::from_rational(v.clone());
            acc = acc.add(&cv.mul(&self.xi_pows[k]));
        }
        acc
    }

    fn phi(&self, g: &ColorVal, n: i64) -> CInterval {
        debug_assert_eq!(g.xexp, 0, "numeric ring cannot carry X");
        self.from_cyc(&self.p.mul(&g.base, &self.p.xi_pow(2 * n)))
    }

    fn scale_rat(&self, a: &CInterval, q: &BigRational) -> CInterval {
        a.mul(&CInterval::from_rational(q.clone()))
    }
}

/// Evaluate a Laurent polynomial in q1, q2, q3 at ring values.
fn eval_poly3<R: WeightRing>(ring: &R, poly: &LPoly, y: [&R::El; 3]) -> Option<R::El> {
    let mut acc = ring.zero();
    for (e, c) in poly.terms() {
        let mut t = ring.from_cyc(c);
        for (slot, v) in [Var::Q1, Var::Q2, Var::Q3].iter().enumerate() {
            let d = e[v.idx()];
            if d != 0 {
                t = ring.mul(&t, &ring.pow(y[slot], d as i64)?);
            }
        }
        acc = ring.add(&acc, &t);
    }
    Some(acc)
}

/// Per-tetrahedron slot data for one vertex ordering (w1..w4).
#[derive(Clone, Copy, Debug)]
struct TetSlots {
    /// per height slot m: (face class, out sign) of the face opposite w_m
    faces: [(usize, i32); 4],
    /// per color slot j: (edge class, plug sign) of the edge w_{j} w_4
    qs: [(usize, i32); 3],
}

fn tet_slots(cx: &Complex, tet: usize, order: [u8; 4]) -> TetSlots {
    let mut faces = [(0usize, 0i32); 4];
    for m in 0..4 {
        let f = order[m];
        faces[m] = (cx.fclass[4 * tet + f as usize], cx.out_sign(tet, f));
    }
    let mut qs = [(0usize, 0i32); 3];
    for j in 0..3 {
        // f_j is dual to the edge w_j w_4, oriented by the arc from the face
        // of w_{j+1} to the face of w_{j+2} (indices mod 3)
        let e = super::edge_index(order[j], order[3]);
        let from = order[(j + 1) % 3];
        let to = order[(j + 2) % 3];
        let (cls, cls_sign) = cx.eclass[6 * tet + e];
        let _ = cls_sign; // walks are class-level; sign is in the wedge data
        let plug = cx.wedge_sign(tet, e, from, to);
        qs[j] = (cls, plug);
    }
    TetSlots { faces, qs }
}

/// The weight J(φ, x) of one tetrahedron in a given state, for an explicit
/// vertex ordering (identity by default).  Exposed for the vertex-order
/// independence checks.
pub fn vertex_weight_exact(
    p: &Params,
    cx: &Complex,
    jt: &JTable,
    coloring: &GColoring,
    exps: &[i64],
    heights: &[i64],
    tet: usize,
    order: [u8; 4],
) -> Option<CycNum> {
    let ring = ExactRing { p };
    let slots = tet_slots(cx, tet, order);
    let mut sum = 0i64;
    let mut hs = [0i64; 4];
    for m in 0..4 {
        let (fc, s) = slots.faces[m];
        hs[m] = s as i64 * heights[fc];
        sum += hs[m];
    }
    if sum != 0 {
        return Some(p.zero());
    }
    let t = IndexTriple::new(hs[0], hs[1], hs[2]);
    let mut ys: Vec<CycNum> = Vec::with_capacity(3);
    for j in 0..3 {
        let (ec, plug) = slots.qs[j];
        let v = ring.phi(&coloring.g[ec], exps[ec]);
        ys.push(ring.pow(&v, plug as i64)?);
    }
    eval_poly3(&ring, jt.get(&t), [&ys[0], &ys[1], &ys[2]])
}

/// Everything the fold needs, precomputed once per (complex, coloring).
struct Prepared<R: WeightRing> {
    /// per face class: t0 with δg = ξ^{2 t0}, and the ∂2 row
    t0: Vec<i64>,
    rows: Vec<Vec<(usize, i32)>>,
    slots: Vec<TetSlots>,
    /// per edge class ∉ link and exponent n: D(φ)^{-1}
    dinv: Vec<Option<Vec<R::El>>>,
}

fn prepare<R: WeightRing>(
    p: &Params,
    cx: &Complex,
    ring: &R,
    coloring: &GColoring,
) -> Result<Prepared<R>, StateSumError> {
    if coloring.g.len() != cx.n_eclasses {
        return Err(StateSumError::InvalidColoring(format!(
            "{} colors for {} edge classes",
            coloring.g.len(),
            cx.n_eclasses
        )));
    }
    let r = p.r() as i64;
    // δg must be an r-th root of unity on every face class
    let mut t0 = vec![0i64; cx.n_fclasses];
    let mut rows: Vec<Vec<(usize, i32)>> = vec![Vec::new(); cx.n_fclasses];
    for (ec, row) in cx.d2.iter().enumerate() {
        for &(fc, s) in row {
            rows[fc].push((ec, s));
        }
    }
    for fc in 0..cx.n_fclasses {
        let mut prod = p.one();
        let mut xsum = 0i64;
        for &(ec, s) in &rows[fc] {
            let g = &coloring.g[ec];
            let f = p.pow(&g.base, s as i64).map_err(|_| {
                StateSumError::InvalidColoring(format!("zero color on edge class {}", ec))
            })?;
            prod = p.mul(&prod, &f);
            xsum += g.xexp * s as i64;
        }
        if xsum != 0 {
            return Err(StateSumError::InvalidColoring(format!(
                "X-part of the coloring is not a 2-cycle at face class {}",
                fc
            )));
        }
        let mut found = None;
        for tcand in 0..r {
            if prod == p.xi_pow(2 * tcand) {
                found = Some(bar_reduce(p, tcand));
                break;
            }
        }
        match found {
            Some(tv) => t0[fc] = tv,
            None => {
                return Err(StateSumError::InvalidColoring(format!(
                    "coloring coboundary at face class {} is not an r-th root of unity",
                    fc
                )))
            }
        }
    }
    // admissibility: {g^r} must be invertible (always true when X appears)
    for (ec, g) in coloring.g.iter().enumerate() {
        if g.xexp == 0 {
            let g2r = p.pow(&g.base, 2 * r).map_err(|_| StateSumError::NotAdmissible(ec))?;
            if g2r == p.one() {
                return Err(StateSumError::NotAdmissible(ec));
            }
        }
    }
    // D(g ξ^{2n})^{-1} tables for undotted faces of P
    let d = dpoly(p);
    let rp = p.rp() as i64;
    let mut dinv: Vec<Option<Vec<R::El>>> = Vec::with_capacity(cx.n_eclasses);
    for ec in 0..cx.n_eclasses {
        if cx.link_eclasses.binary_search(&ec).is_ok() {
            dinv.push(None);
            continue;
        }
        let tab = ring
            .d_inverses(&d, &coloring.g[ec], rp)
            .ok_or(StateSumError::NotAdmissible(ec))?;
        dinv.push(Some(tab));
    }
    let slots: Vec<TetSlots> = (0..cx.tets).map(|t| tet_slots(cx, t, [0, 1, 2, 3])).collect();
    Ok(Prepared { t0, rows, slots, dinv })
}

/// The outcome of a state sum: values per h1-class (keyed by homology
/// coordinates) and the ungraded total.
#[derive(Clone, Debug)]
pub struct SumResult<El> {
    pub per_class: BTreeMap<Vec<BigInt>, El>,
    pub total: El,
    pub states: u64,
    pub contributing: u64,
}

fn run_sum<R: WeightRing>(
    p: &Params,
    cx: &Complex,
    hom: &HomologyPresentation,
    jt: &JTable,
    ring: &R,
    coloring: &GColoring,
) -> Result<SumResult<R::El>, StateSumError> {
    let prep = prepare(p, cx, ring, coloring)?;
    let rp = p.rp() as i64;
    let ne = cx.n_eclasses;
    let mut exps = vec![-rp; ne];
    let mut per_class: BTreeMap<Vec<BigInt>, R::El> = BTreeMap::new();
    let mut total = ring.zero();
    let mut states: u64 = 0;
    let mut contributing: u64 = 0;
    // per-tet memo of evaluated vertex weights
    let mut memo: Vec<BTreeMap<(i64, i64, i64, i64, i64, i64), Option<R::El>>> =
        vec![BTreeMap::new(); cx.tets];
    let mut heights = vec![0i64; cx.n_fclasses];
    'outer: loop {
        states += 1;
        // heights per face class
        for fc in 0..cx.n_fclasses {
            let mut acc = prep.t0[fc];
            for &(ec, s) in &prep.rows[fc] {
                acc += s as i64 * exps[ec];
            }
            heights[fc] = bar_reduce(p, acc);
        }
        // the per-tet cycle condition, then the weight
        let mut weight: Option<R::El> = None;
        let mut zero_state = false;
        for (tet, slots) in prep.slots.iter().enumerate() {
            let mut hs = [0i64; 4];
            let mut sum = 0i64;
            for m in 0..4 {
                let (fc, s) = slots.faces[m];
                hs[m] = s as i64 * heights[fc];
                sum += hs[m];
            }
            if sum != 0 {
                zero_state = true;
                break;
            }
            let key = (
                hs[0],
                hs[1],
                hs[2],
                exps[slots.qs[0].0] * slots.qs[0].1 as i64,
                exps[slots.qs[1].0] * slots.qs[1].1 as i64,
                exps[slots.qs[2].0] * slots.qs[2].1 as i64,
            );
            let entry = memo[tet].entry(key).or_insert_with(|| {
                let t = IndexTriple::new(hs[0], hs[1], hs[2]);
                let mut ys: Vec<R::El> = Vec::with_capacity(3);
                for j in 0..3 {
                    let (ec, plug) = slots.qs[j];
                    let v = ring.phi(&coloring.g[ec], exps[ec]);
                    match ring.pow(&v, plug as i64) {
                        Some(w) => ys.push(w),
                        None => return None,
                    }
                }
                eval_poly3(ring, jt.get(&t), [&ys[0], &ys[1], &ys[2]])
            });
            let w = match entry {
                Some(w) => w.clone(),
                None => return Err(StateSumError::Ring(String::from("weight evaluation failed"))),
            };
            weight = Some(match weight {
                None => w,
                Some(acc) => ring.mul(&acc, &w),
            });
        }
        if !zero_state {
            let mut w = weight.unwrap_or_else(|| ring.one());
            for (ec, tab) in prep.dinv.iter().enumerate() {
                if let Some(tab) = tab {
                    w = ring.mul(&w, &tab[(exps[ec] + rp) as usize]);
                }
            }
            let class = hom
                .class_of(&heights)
                .map_err(|e| StateSumError::Ring(format!("height chain: {}", e)))?;
            contributing += 1;
            total = ring.add(&total, &w);
            match per_class.remove(&class) {
                Some(prev) => {
                    per_class.insert(class, ring.add(&prev, &w));
                }
                None => {
                    per_class.insert(class, w);
                }
            }
        }
        // odometer
        for k in 0..=ne {
            if k == ne {
                break 'outer;
            }
            if exps[k] < rp {
                exps[k] += 1;
                break;
            }
            exps[k] = -rp;
        }
    }
    // prefactor r^{-2N}
    let r = BigInt::from(p.r());
    let mut denom = BigInt::one();
    for _ in 0..2 * cx.n_vclasses {
        denom = denom * &r;
    }
    let scale = BigRational::new(BigInt::one(), denom);
    total = ring.scale_rat(&total, &scale);
    for v in per_class.values_mut() {
        *v = ring.scale_rat(v, &scale);
    }
    Ok(SumResult { per_class, total, states, contributing })
}

pub fn state_sum_exact(
    p: &Params,
    cx: &Complex,
    hom: &HomologyPresentation,
    jt: &JTable,
    coloring: &GColoring,
) -> Result<SumResult<CycNum>, StateSumError> {
    let ring = ExactRing { p };
    run_sum(p, cx, hom, jt, &ring, coloring)
}

pub fn state_sum_perturbed(
    p: &Params,
    cx: &Complex,
    hom: &HomologyPresentation,
    jt: &JTable,
    coloring: &GColoring,
) -> Result<SumResult<XFrac>, StateSumError> {
    let ring = PerturbedRing { p };
    run_sum(p, cx, hom, jt, &ring, coloring)
}

pub fn state_sum_numeric(
    p: &Params,
    cx: &Complex,
    hom: &HomologyPresentation,
    jt: &JTable,
    coloring: &GColoring,
    precision: u32,
) -> Result<SumResult<CInterval>, StateSumError> {
    let ring = NumericRing::new(p, precision);
    run_sum(p, cx, hom, jt, &ring, coloring)
}

/// Multiply the coloring by the coboundary of the 3-chain that assigns y to
/// one ball and 1 elsewhere; the value on edge class E changes by
/// y^{∂3[E, ball]}.  The class in H2 is unchanged.
pub fn shift_by_coboundary(
    p: &Params,
    cx: &Complex,
    coloring: &GColoring,
    ball: usize,
    y: &CycNum,
) -> GColoring {
    let mut out = coloring.clone();
    for &(ec, s) in &cx.d3[ball] {
        let f = p.pow(y, s as i64).expect("coboundary shift by a unit");
        out.g[ec].base = p.mul(&out.g[ec].base, &f);
    }
    out
}

/// Make a coloring admissible over Q(ξ) by the bad-ball elimination walk:
/// repeatedly multiply by a coboundary concentrated on a bad ball, choosing
/// the rational multiplier from a fixed sequence.
pub fn make_admissible(
    p: &Params,
    cx: &Complex,
    coloring: &GColoring,
) -> Result<GColoring, StateSumError> {
    let r = p.r() as i64;
    let is_bad_edge = |g: &ColorVal| -> bool {
        g.xexp == 0 && p.pow(&g.base, 2 * r).map(|v| v == p.one()).unwrap_or(true)
    };
    let mut cur = coloring.clone();
    for _round in 0..cx.n_vclasses + 1 {
        // a ball is bad when some incident face value is non-admissible
        let mut bad_ball = None;
        for ball in 0..cx.n_vclasses {
            if cx.d3[ball].iter().any(|&(ec, _)| is_bad_edge(&cur.g[ec])) {
                bad_ball = Some(ball);
                break;
            }
        }
        let Some(ball) = bad_ball else {
            return Ok(cur);
        };
        let mut fixed = false;
        for cand in [2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29] {
            let y = p.from_i64(cand);
            let shifted = shift_by_coboundary(p, cx, &cur, ball, &y);
            if !cx.d3[ball].iter().any(|&(ec, _)| is_bad_edge(&shifted.g[ec])) {
                cur = shifted;
                fixed = true;
                break;
            }
        }
        if !fixed {
            return Err(StateSumError::InvalidColoring(String::from(
                "no admissible multiplier found for a bad ball",
            )));
        }
    }
    Err(StateSumError::InvalidColoring(String::from(
        "bad-ball elimination did not terminate",
    )))
}

/// Perturb a coloring into the ring R' by multiplying with the coboundary of
/// the 3-chain ball b ↦ X^{r·3^b}; every edge class picks up a nonzero X
/// power, so the result is admissible in R'.
pub fn perturb_coloring(p: &Params, cx: &Complex, coloring: &GColoring) -> GColoring {
    let _ = p;
    let mut out = coloring.clone();
    out.mode = RingMode::Perturbed;
    for ball in 0..cx.n_vclasses {
        // distinct positive weights per ball keep every edge exponent nonzero
        let weight = ball as i64 + 1;
        for &(ec, s) in &cx.d3[ball] {
            out.g[ec].xexp += s as i64 * weight;
        }
    }
    out
}

/// A generic admissible exact coloring in the trivial H2-class: the
/// coboundary of the 3-chain assigning the b-th prime to ball b.
pub fn generic_coboundary_coloring(p: &Params, cx: &Complex) -> GColoring {
    const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let mut g = vec![ColorVal::exact(p.one()); cx.n_eclasses];
    for ball in 0..cx.n_vclasses {
        let c = PRIMES[ball % PRIMES.len()];
        for &(ec, s) in &cx.d3[ball] {
            let f = p
                .pow(&p.from_i64(c), s as i64)
                .expect("prime powers are invertible");
            g[ec].base = p.mul(&g[ec].base, &f);
        }
    }
    GColoring { mode: RingMode::Exact, g }
}
