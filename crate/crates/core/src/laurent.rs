//! Sparse multivariate Laurent polynomials over Q(ξ), plus a formal fraction
//! field used to check identities that divide by D.
//!
//! The variable universe is fixed: q0..q3 for the 6j identities, t1..t3 for
//! the module-calculus oracle, and X for the perturbation ring.  Exponent
//! vectors are dense over this universe; a term map keyed by exponent vector
//! with no stored zero coefficients is the canonical form, so equality is
//! coefficientwise.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::cyclotomic::{CycError, CycNum, Params};

pub const NVARS: usize = 8;

/// One of the eight known variables, in the fixed display/term order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Var(pub u8);

impl Var {
    pub const Q0: Var = Var(0);
    pub const Q1: Var = Var(1);
    pub const Q2: Var = Var(2);
    pub const Q3: Var = Var(3);
    pub const T1: Var = Var(4);
    pub const T2: Var = Var(5);
    pub const T3: Var = Var(6);
    pub const X: Var = Var(7);

    pub fn name(self) -> &'static str {
        ["q0", "q1", "q2", "q3", "t1", "t2", "t3", "X"][self.0 as usize]
    }

    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

pub type Exp = [i32; NVARS];

const ZERO_EXP: Exp = [0; NVARS];

/// Exponent vectors compared lexicographically in the fixed variable order.
fn exp_add(a: &Exp, b: &Exp) -> Exp {
    let mut out = *a;
    for k in 0..NVARS {
        out[k] += b[k];
    }
    out
}

fn exp_neg(a: &Exp) -> Exp {
    let mut out = *a;
    for v in out.iter_mut() {
        *v = -*v;
    }
    out
}

fn exp_scale(a: &Exp, s: i32) -> Exp {
    let mut out = *a;
    for v in out.iter_mut() {
        *v *= s;
    }
    out
}

/// An invertible monomial: nonzero coefficient times a product of variable
/// powers.  The only legal substitution/evaluation images.
#[derive(Clone, Debug, PartialEq)]
pub struct Mono {
    pub coeff: CycNum,
    pub exp: Exp,
}

impl Mono {
    pub fn var(p: &Params, v: Var) -> Mono {
        let mut exp = ZERO_EXP;
        exp[v.idx()] = 1;
        Mono { coeff: p.one(), exp }
    }

    pub fn one(p: &Params) -> Mono {
        Mono { coeff: p.one(), exp: ZERO_EXP }
    }

    pub fn xi(p: &Params, k: i64) -> Mono {
        Mono { coeff: p.xi_pow(k), exp: ZERO_EXP }
    }

    pub fn mul(&self, p: &Params, other: &Mono) -> Mono {
        Mono { coeff: p.mul(&self.coeff, &other.coeff), exp: exp_add(&self.exp, &other.exp) }
    }

    pub fn inv(&self, p: &Params) -> Mono {
        Mono {
            coeff: p.invert(&self.coeff).expect("monomial coefficient must be a unit"),
            exp: exp_neg(&self.exp),
        }
    }

    pub fn pow(&self, p: &Params, e: i32) -> Mono {
        Mono {
            coeff: p.pow(&self.coeff, e as i64).expect("monomial coefficient must be a unit"),
            exp: exp_scale(&self.exp, e),
        }
    }

    /// Multiply by ξ^k.
    pub fn xi_shift(&self, p: &Params, k: i64) -> Mono {
        Mono { coeff: p.mul(&self.coeff, &p.xi_pow(k)), exp: self.exp }
    }

    /// Replace every variable by its image under the map.
    pub fn substituted(&self, p: &Params, map: &Subst) -> Mono {
        let mut out = Mono { coeff: self.coeff.clone(), exp: ZERO_EXP };
        for k in 0..NVARS {
            let e = self.exp[k];
            if e == 0 {
                continue;
            }
            match &map.images[k] {
                None => out.exp[k] += e,
                Some(img) => out = out.mul(p, &img.pow(p, e)),
            }
        }
        out
    }

    pub fn to_poly(&self, _p: &Params) -> LPoly {
        let mut t = BTreeMap::new();
        if !self.coeff.is_zero() {
            t.insert(self.exp, self.coeff.clone());
        }
        LPoly { terms: t }
    }
}

/// Variable → monomial substitution map; `None` leaves a variable fixed.
#[derive(Clone, Debug, Default)]
pub struct Subst {
    pub images: [Option<Mono>; NVARS],
}

impl Subst {
    pub fn identity() -> Subst {
        Subst::default()
    }

    pub fn set(&mut self, v: Var, img: Mono) -> &mut Subst {
        self.images[v.idx()] = Some(img);
        self
    }

    /// The map "apply `self`, then `outer`": images of `outer` rewritten
    /// through `self`.
    pub fn then_outer(&self, p: &Params, outer: &Subst) -> Subst {
        let mut out = Subst::identity();
        for k in 0..NVARS {
            let img = match &outer.images[k] {
                Some(m) => m.substituted(p, self),
                None => match &self.images[k] {
                    Some(m) => m.clone(),
                    None => continue,
                },
            };
            out.images[k] = Some(img);
        }
        out
    }
}

/// Sparse Laurent polynomial in the fixed variable universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPoly {
    terms: BTreeMap<Exp, CycNum>,
}

impl LPoly {
    pub fn zero() -> LPoly {
        LPoly { terms: BTreeMap::new() }
    }

    pub fn one(p: &Params) -> LPoly {
        LPoly::constant(p.one())
    }

    pub fn constant(c: CycNum) -> LPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ZERO_EXP, c);
        }
        LPoly { terms }
    }

    pub fn var(p: &Params, v: Var) -> LPoly {
        Mono::var(p, v).to_poly(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &CycNum)> {
        self.terms.iter()
    }

    /// The polynomial as a monomial, if it has exactly one term.
    pub fn as_mono(&self) -> Option<Mono> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Mono { coeff: c.clone(), exp: *e })
    }

    pub fn as_constant(&self) -> Option<CycNum> {
        if self.terms.is_empty() {
            return None; // caller decides how to treat zero
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if *e == ZERO_EXP {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn add_term(&mut self, p: &Params, exp: Exp, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let s = p.add(v, c);
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn add(&self, p: &Params, other: &LPoly) -> LPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(p, *e, c);
        }
        out
    }

    pub fn sub(&self, p: &Params, other: &LPoly) -> LPoly {
        self.add(p, &other.neg(p))
    }

    pub fn neg(&self, p: &Params) -> LPoly {
        LPoly { terms: self.terms.iter().map(|(e, c)| (*e, p.neg(c))).collect() }
    }

    pub fn mul(&self, p: &Params, other: &LPoly) -> LPoly {
        let mut out = LPoly::zero();
        if self.terms.is_empty() || other.terms.is_empty() {
            return out;
        }
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        for (e1, c1) in &small.terms {
            for (e2, c2) in &large.terms {
                out.add_term(p, exp_add(e1, e2), &p.mul(c1, c2));
            }
        }
        out
    }

    pub fn mul_mono(&self, p: &Params, m: &Mono) -> LPoly {
        LPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (exp_add(e, &m.exp), p.mul(c, &m.coeff)))
                .collect(),
        }
    }

    pub fn scale(&self, p: &Params, c: &CycNum) -> LPoly {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly { terms: self.terms.iter().map(|(e, v)| (*e, p.mul(v, c))).collect() }
    }

    /// The bar involution: conjugate every coefficient and invert every
    /// variable.
    pub fn bar(&self, p: &Params) -> LPoly {
        LPoly { terms: self.terms.iter().map(|(e, c)| (exp_neg(e), p.bar(c))).collect() }
    }

    /// Ring homomorphism replacing variables by invertible monomials.
    pub fn substitute(&self, p: &Params, map: &Subst) -> LPoly {
        let mut out = LPoly::zero();
        for (e, c) in &self.terms {
            let m = Mono { coeff: c.clone(), exp: *e }.substituted(p, map);
            out.add_term(p, m.exp, &m.coeff);
        }
        out
    }

    /// Full evaluation at invertible field values (every used variable must
    /// be assigned).
    pub fn eval(&self, p: &Params, point: &[Option<CycNum>; NVARS]) -> Result<CycNum, CycError> {
        let mut acc = p.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for k in 0..NVARS {
                if e[k] == 0 {
                    continue;
                }
                let v = point[k]
                    .as_ref()
                    .unwrap_or_else(|| panic!("eval point missing variable {}", Var(k as u8).name()));
                t = p.mul(&t, &p.pow(v, e[k] as i64)?);
            }
            acc = p.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Exponent of `v` spanned by the support, as (min, max); None when zero.
    fn span(&self, v: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first[v];
        let mut hi = first[v];
        for e in it {
            lo = lo.min(e[v]);
            hi = hi.max(e[v]);
        }
        Some((lo, hi))
    }

    fn min_exps(&self) -> Exp {
        let mut out = ZERO_EXP;
        for v in 0..NVARS {
            if let Some((lo, _)) = self.span(v) {
                out[v] = lo;
            }
        }
        out
    }

    /// Exact division: returns q with q·b = a, or None when not divisible.
    pub fn divide_exact(&self, p: &Params, b: &LPoly) -> Option<LPoly> {
        assert!(!b.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(LPoly::zero());
        }
        if let Some(m) = b.as_mono() {
            return Some(self.mul_mono(p, &m.inv(p)));
        }
        // Shift both to ordinary polynomials; quotient picks up the
        // difference of monomial shifts.
        let sa = self.min_exps();
        let sb = b.min_exps();
        let a0 = self.mul_mono(p, &Mono { coeff: p.one(), exp: exp_neg(&sa) });
        let b0 = b.mul_mono(p, &Mono { coeff: p.one(), exp: exp_neg(&sb) });
        let q0 = poly_div_exact(p, &a0, &b0)?;
        let mut shift = ZERO_EXP;
        for k in 0..NVARS {
            shift[k] = sa[k] - sb[k];
        }
        Some(q0.mul_mono(p, &Mono { coeff: p.one(), exp: shift }))
    }

    /// Canonical text form: terms sorted descending lexicographically,
    /// coefficients in the cyclotomic canonical form.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let _ = write!(out, "({})", c.to_text());
            for k in 0..NVARS {
                if e[k] == 0 {
                    continue;
                }
                let _ = write!(out, " {}", Var(k as u8).name());
                if e[k] != 1 {
                    let _ = write!(out, "^{}", e[k]);
                }
            }
        }
        out
    }

    /// Variables actually occurring.
    pub fn vars(&self) -> Vec<Var> {
        let mut present = [false; NVARS];
        for e in self.terms.keys() {
            for k in 0..NVARS {
                if e[k] != 0 {
                    present[k] = true;
                }
            }
        }
        (0..NVARS as u8).filter(|k| present[*k as usize]).map(Var).collect()
    }
}

/// Exact division of true (nonnegative-exponent) polynomials, recursing on
/// the first variable that appears with varying exponent in the divisor.
fn poly_div_exact(p: &Params, a: &LPoly, b: &LPoly) -> Option<LPoly> {
    if a.is_zero() {
        return Some(LPoly::zero());
    }
    if let Some(m) = b.as_mono() {
        // Divisibility of every term by the monomial (nonneg world: check).
        let mut out = LPoly::zero();
        let inv = m.inv(p);
        for (e, c) in &a.terms {
            let ne = exp_add(e, &inv.exp);
            if ne.iter().any(|&x| x < 0) {
                return None;
            }
            out.add_term(p, ne, &p.mul(c, &inv.coeff));
        }
        return Some(out);
    }
    // Pivot: first variable where b has a positive span.
    let mut pivot = None;
    for v in 0..NVARS {
        if let Some((lo, hi)) = b.span(v) {
            if lo != hi {
                pivot = Some(v);
                break;
            }
        }
    }
    let v = pivot.expect("non-monomial polynomial must have a varying variable");
    let db = b.span(v).unwrap().1;
    let bl = coeff_of(b, v, db);
    let mut rem = a.clone();
    let mut quot = LPoly::zero();
    loop {
        if rem.is_zero() {
            return Some(quot);
        }
        let da = rem.span(v).unwrap().1;
        if da < db {
            return None;
        }
        let al = coeff_of(&rem, v, da);
        let qc = poly_div_exact(p, &al, &bl)?;
        let mut shift = ZERO_EXP;
        shift[v] = da - db;
        let qterm = qc.mul_mono(p, &Mono { coeff: p.one(), exp: shift });
        rem = rem.sub(p, &qterm.mul(p, b));
        quot = quot.add(p, &qterm);
        // Leading v-degree strictly decreased, or remainder vanished.
        if let Some((_, hi)) = rem.span(v) {
            if hi >= da {
                return None;
            }
        }
    }
}

/// Coefficient of v^d as a polynomial with the v-exponent zeroed.
fn coeff_of(a: &LPoly, v: usize, d: i32) -> LPoly {
    let mut out = LPoly::zero();
    for (e, c) in &a.terms {
        if e[v] == d {
            let mut ne = *e;
            ne[v] = 0;
            out.terms.insert(ne, c.clone());
        }
    }
    out
}

/// Formal quotient of Laurent polynomials; equality is cross-multiplication,
/// no gcd normalisation anywhere.
#[derive(Clone, Debug)]
pub struct RFunc {
    pub num: LPoly,
    pub den: LPoly,
}

impl RFunc {
    pub fn from_poly(n: LPoly, p: &Params) -> RFunc {
        RFunc { num: n, den: LPoly::one(p) }
    }

    pub fn new(num: LPoly, den: LPoly) -> RFunc {
        assert!(!den.is_zero(), "zero denominator");
        RFunc { num, den }
    }

    pub fn zero(p: &Params) -> RFunc {
        RFunc { num: LPoly::zero(), den: LPoly::one(p) }
    }

    pub fn add(&self, p: &Params, other: &RFunc) -> RFunc {
        RFunc {
            num: self.num.mul(p, &other.den).add(p, &other.num.mul(p, &self.den)),
            den: self.den.mul(p, &other.den),
        }
    }

    pub fn sub(&self, p: &Params, other: &RFunc) -> RFunc {
        RFunc {
            num: self.num.mul(p, &other.den).sub(p, &other.num.mul(p, &self.den)),
            den: self.den.mul(p, &other.den),
        }
    }

    pub fn mul(&self, p: &Params, other: &RFunc) -> RFunc {
        RFunc { num: self.num.mul(p, &other.num), den: self.den.mul(p, &other.den) }
    }

    pub fn eq(&self, p: &Params, other: &RFunc) -> bool {
        self.num.mul(p, &other.den) == other.num.mul(p, &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn params() -> Params {
        Params::new(1)
    }

    fn rand_poly(p: &Params, rng: &mut SplitMix64, nvars: usize, nterms: usize) -> LPoly {
        let mut out = LPoly::zero();
        for _ in 0..nterms {
            let mut e = ZERO_EXP;
            for k in 0..nvars {
                e[k + 1] = rng.range_i64(-2, 2) as i32;
            }
            let c = p.mul_i64(&p.xi_pow(rng.range_i64(0, 5)), rng.range_i64(-4, 4));
            out.add_term(p, e, &c);
        }
        out
    }

    #[test]
    fn bar_examples() {
        let p = params();
        // bar(q1 + ξ q2^{-1}) = q1^{-1} + ξ^{-1} q2
        let q1 = LPoly::var(&p, Var::Q1);
        let mut q2inv = Mono::var(&p, Var::Q2).inv(&p);
        q2inv.coeff = p.xi_pow(1);
        let a = q1.add(&p, &q2inv.to_poly(&p));
        let b = a.bar(&p);
        let mut expect = Mono::var(&p, Var::Q1).inv(&p).to_poly(&p);
        let mut q2 = Mono::var(&p, Var::Q2);
        q2.coeff = p.xi_pow(-1);
        expect = expect.add(&p, &q2.to_poly(&p));
        assert_eq!(b, expect);
    }

    #[test]
    fn bar_is_involutive() {
        let p = params();
        let mut rng = SplitMix64::new(3);
        for _ in 0..200 {
            let a = rand_poly(&p, &mut rng, 3, 5);
            assert_eq!(a.bar(&p).bar(&p), a);
        }
    }

    #[test]
    fn difference_of_squares() {
        let p = params();
        let q1 = Mono::var(&p, Var::Q1);
        let a = q1.to_poly(&p).sub(&p, &q1.inv(&p).to_poly(&p));
        let b = q1.to_poly(&p).add(&p, &q1.inv(&p).to_poly(&p));
        let prod = a.mul(&p, &b);
        let expect = q1.pow(&p, 2).to_poly(&p).sub(&p, &q1.pow(&p, -2).to_poly(&p));
        assert_eq!(prod, expect);
    }

    #[test]
    fn substitution_examples() {
        let p = params();
        // q1 ↦ q1^{-1} on q1^2 gives q1^{-2}
        let mut s = Subst::identity();
        s.set(Var::Q1, Mono::var(&p, Var::Q1).inv(&p));
        let sq = Mono::var(&p, Var::Q1).pow(&p, 2).to_poly(&p);
        assert_eq!(sq.substitute(&p, &s), Mono::var(&p, Var::Q1).pow(&p, -2).to_poly(&p));
        // identity map is the identity
        let id = Subst::identity();
        assert_eq!(sq.substitute(&p, &id), sq);
        // q2 ↦ q0 ξ^2 q1^{-1} on (q2 - q2^{-1})
        let img = Mono::var(&p, Var::Q0)
            .mul(&p, &Mono::var(&p, Var::Q1).inv(&p))
            .xi_shift(&p, 2);
        let mut s2 = Subst::identity();
        s2.set(Var::Q2, img.clone());
        let a = Mono::var(&p, Var::Q2).to_poly(&p).sub(&p, &Mono::var(&p, Var::Q2).inv(&p).to_poly(&p));
        let got = a.substitute(&p, &s2);
        let expect = img.to_poly(&p).sub(&p, &img.inv(&p).to_poly(&p));
        assert_eq!(got, expect);
    }

    #[test]
    fn substitute_respects_multiplication() {
        let p = params();
        let mut rng = SplitMix64::new(9);
        for _ in 0..500 {
            let a = rand_poly(&p, &mut rng, 3, 4);
            let b = rand_poly(&p, &mut rng, 3, 4);
            let mut s = Subst::identity();
            s.set(
                Var::Q1,
                Mono::var(&p, Var::Q2).pow(&p, rng.range_i64(-1, 1) as i32 * 2 + 1).xi_shift(&p, rng.range_i64(0, 3)),
            );
            s.set(Var::Q3, Mono::var(&p, Var::Q3).inv(&p));
            assert_eq!(
                a.mul(&p, &b).substitute(&p, &s),
                a.substitute(&p, &s).mul(&p, &b.substitute(&p, &s))
            );
        }
    }

    #[test]
    fn eval_compose_with_substitution() {
        let p = params();
        let mut rng = SplitMix64::new(13);
        for _ in 0..200 {
            let a = rand_poly(&p, &mut rng, 2, 4);
            let mut s = Subst::identity();
            s.set(Var::Q1, Mono::var(&p, Var::Q2).xi_shift(&p, 2));
            let mut pt: [Option<CycNum>; NVARS] = Default::default();
            let v1 = p.xi_pow(rng.range_i64(0, 5));
            let v2 = p.add(&p.one(), &p.xi_pow(rng.range_i64(1, 4)));
            if v2.is_zero() {
                continue;
            }
            pt[Var::Q1.idx()] = Some(v1);
            pt[Var::Q2.idx()] = Some(v2.clone());
            // eval(subst(a)) where q1 ↦ q2 ξ^2 equals eval at composed point
            let lhs = a.substitute(&p, &s).eval(&p, &pt).unwrap();
            let mut pt2 = pt.clone();
            pt2[Var::Q1.idx()] = Some(p.mul(&v2, &p.xi_pow(2)));
            let rhs = a.eval(&p, &pt2).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn eval_examples() {
        let p = params();
        let q1 = Mono::var(&p, Var::Q1);
        let a = q1.to_poly(&p).sub(&p, &q1.inv(&p).to_poly(&p));
        let mut pt: [Option<CycNum>; NVARS] = Default::default();
        pt[Var::Q1.idx()] = Some(p.one());
        assert!(a.eval(&p, &pt).unwrap().is_zero());
        // (q1 q2) at q1 = ξ, q2 = ξ^{-1} → 1
        let prod = q1.mul(&p, &Mono::var(&p, Var::Q2)).to_poly(&p);
        let mut pt2: [Option<CycNum>; NVARS] = Default::default();
        pt2[Var::Q1.idx()] = Some(p.xi_pow(1));
        pt2[Var::Q2.idx()] = Some(p.xi_pow(-1));
        assert_eq!(prod.eval(&p, &pt2).unwrap(), p.one());
    }

    #[test]
    fn divide_exact_cases() {
        let p = params();
        let q1 = Mono::var(&p, Var::Q1);
        let q2 = Mono::var(&p, Var::Q2);
        // (q1^2 - q1^{-2}) / (q1 - q1^{-1}) = q1 + q1^{-1}
        let a = q1.pow(&p, 2).to_poly(&p).sub(&p, &q1.pow(&p, -2).to_poly(&p));
        let b = q1.to_poly(&p).sub(&p, &q1.inv(&p).to_poly(&p));
        let q = a.divide_exact(&p, &b).unwrap();
        assert_eq!(q, q1.to_poly(&p).add(&p, &q1.inv(&p).to_poly(&p)));
        // non-divisible case fails gracefully
        let c = q2.to_poly(&p).sub(&p, &q2.inv(&p).to_poly(&p));
        assert!(b.divide_exact(&p, &c).is_none());
        // a / a = 1 on random nonzero polys
        let mut rng = SplitMix64::new(21);
        for _ in 0..50 {
            let a = rand_poly(&p, &mut rng, 3, 4);
            if a.is_zero() {
                continue;
            }
            assert_eq!(a.divide_exact(&p, &a).unwrap(), LPoly::one(&p));
            let prod = a.mul(&p, &c);
            assert_eq!(prod.divide_exact(&p, &c).unwrap(), a);
        }
    }

    #[test]
    fn rfunc_field_behaviour() {
        let p = params();
        let mut rng = SplitMix64::new(33);
        let a = rand_poly(&p, &mut rng, 2, 3);
        let b = {
            let mut b = rand_poly(&p, &mut rng, 2, 3);
            if b.is_zero() {
                b = LPoly::one(&p);
            }
            b
        };
        let f = RFunc::new(a.clone(), b.clone());
        let g = RFunc::new(a.neg(&p), b.clone());
        assert!(f.add(&p, &g).eq(&p, &RFunc::zero(&p)));
        // embedding of polynomials
        let fp = RFunc::from_poly(a.clone(), &p);
        assert!(fp.eq(&p, &RFunc::new(a.mul(&p, &b), b.clone())));
        // 1/den * den = 1
        let inv = RFunc::new(LPoly::one(&p), b.clone());
        let emb = RFunc::from_poly(b.clone(), &p);
        assert!(inv.mul(&p, &emb).eq(&p, &RFunc::from_poly(LPoly::one(&p), &p)));
    }

    #[test]
    fn rfunc_equality_is_equivalence() {
        let p = params();
        let mut rng = SplitMix64::new(55);
        for _ in 0..100 {
            let n = rand_poly(&p, &mut rng, 2, 3);
            let d1 = rand_poly(&p, &mut rng, 2, 2).add(&p, &LPoly::one(&p));
            let d2 = rand_poly(&p, &mut rng, 1, 2).add(&p, &LPoly::one(&p));
            if d1.is_zero() || d2.is_zero() {
                continue;
            }
            let f = RFunc::new(n.mul(&p, &d2), d1.mul(&p, &d2));
            let g = RFunc::new(n.clone(), d1.clone());
            let h = RFunc::new(n.mul(&p, &d1), d1.mul(&p, &d1));
            assert!(f.eq(&p, &f));
            assert!(f.eq(&p, &g) && g.eq(&p, &f));
            assert!(g.eq(&p, &h) && f.eq(&p, &h));
        }
    }

    #[test]
    fn canonical_text() {
        let p = params();
        let q1 = Mono::var(&p, Var::Q1);
        let a = q1.pow(&p, 2).to_poly(&p).sub(&p, &q1.pow(&p, -2).to_poly(&p));
        assert_eq!(a.to_text(), "(1) q1^2 + (-1) q1^-2");
        assert_eq!(LPoly::zero().to_text(), "0");
    }
}
