//! The three-variable Laurent polynomials J_{i1,i2,i3}.
//!
//! Two explicit sum-of-products formulas cover the index cones i1,i3 ≤ s and
//! i2,i3 ≥ s (s = i1+i2+i3); the rest of H_{r'} is reached by pulling back
//! through the tetrahedral symmetry relations, and everything outside H_{r'}
//! is zero.  All intermediate arithmetic happens in Q(ξ); the final
//! polynomial is asserted to have coefficients in Z[ξ].

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cyclotomic::{CycError, CycNum, Params};
use crate::laurent::{LPoly, Mono, Subst, Var};
use crate::qcalc::{fshift, qbinom, qfact, qmultinom, IndexTriple};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SixjError {
    /// The triple does not satisfy the precondition of the requested case.
    Precondition(String),
    /// No element of the symmetry orbit is directly computable.
    NoComputableOrbit(IndexTriple),
    /// A final polynomial failed the Z[ξ] integrality assertion.
    NotIntegral(IndexTriple),
    Cyc(CycError),
}

impl From<CycError> for SixjError {
    fn from(e: CycError) -> SixjError {
        SixjError::Cyc(e)
    }
}

impl core::fmt::Display for SixjError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SixjError::Precondition(s) => write!(f, "precondition violated: {}", s),
            SixjError::NoComputableOrbit(t) => {
                write!(f, "no computable orbit element for {}", t.key())
            }
            SixjError::NotIntegral(t) => write!(f, "non-integral coefficients for {}", t.key()),
            SixjError::Cyc(e) => write!(f, "{}", e),
        }
    }
}

/// A J polynomial together with the triple it belongs to.
#[derive(Clone, Debug, PartialEq)]
pub struct JPoly {
    pub triple: IndexTriple,
    pub poly: LPoly,
}

pub fn case1_applicable(p: &Params, t: &IndexTriple) -> bool {
    t.in_h(p) && t.i2 + t.i3 >= 0 && t.i1 + t.i2 >= 0
}

pub fn case2_applicable(p: &Params, t: &IndexTriple) -> bool {
    t.in_h(p) && t.i1 + t.i3 <= 0 && t.i1 + t.i2 <= 0
}

fn q(p: &Params, v: Var) -> Mono {
    Mono::var(p, v)
}

fn qq(p: &Params, a: Var, b: Var, k: i64) -> Mono {
    // a · b^{-1} · ξ^k
    q(p, a).mul(p, &q(p, b).inv(p)).xi_shift(p, k)
}

/// Equation (1): valid when i1, i3 ≤ i1+i2+i3.
pub fn j_case1(p: &Params, t: &IndexTriple) -> Result<LPoly, SixjError> {
    if !case1_applicable(p, t) {
        return Err(SixjError::Precondition(t.key()));
    }
    let rp = p.rp() as i64;
    let (i1, i2, i3) = (t.i1, t.i2, t.i3);
    let n_cap = rp - i1 - i2 - i3;
    let pre = LPoly::constant(qmultinom(p, t)?)
        .mul(p, &fshift(p, i2 + i3, &q(p, Var::Q1).xi_shift(p, -i3 - rp)))
        .mul(p, &fshift(p, i1 + i2, &q(p, Var::Q3).xi_shift(p, -i2 - rp)));
    let mut sum = LPoly::zero();
    for n in 0..=n_cap {
        let mut term = LPoly::constant(qbinom(p, n_cap, n)?);
        term = term.mul(p, &fshift(p, n_cap - n, &qq(p, Var::Q2, Var::Q1, i3 + rp + 1)));
        term = term.mul(p, &fshift(p, n_cap - n, &qq(p, Var::Q2, Var::Q3, i3 + i2 - i1 - rp)));
        term = term.mul(p, &fshift(p, n, &qq(p, Var::Q1, Var::Q2, -2 * i3 - n_cap)));
        term = term.mul(p, &fshift(p, n, &qq(p, Var::Q3, Var::Q2, i1 + rp + 1)));
        term = term.mul(p, &fshift(p, rp - i2, &q(p, Var::Q2).xi_shift(p, -i1 - rp - n)));
        sum = sum.add(p, &term);
    }
    Ok(pre.mul(p, &sum))
}

/// Equation (2): valid when i2, i3 ≥ i1+i2+i3.
pub fn j_case2(p: &Params, t: &IndexTriple) -> Result<LPoly, SixjError> {
    if !case2_applicable(p, t) {
        return Err(SixjError::Precondition(t.key()));
    }
    let rp = p.rp() as i64;
    let (i1, i2, i3) = (t.i1, t.i2, t.i3);
    let n_cap = rp + i1 + i2 + i3;
    let pre = fshift(p, rp + i2 - n_cap, &qq(p, Var::Q3, Var::Q1, n_cap - 2 * i2 + 1));
    let mut sum = LPoly::zero();
    for n in 0..=n_cap {
        let mut term = LPoly::constant(qbinom(p, n_cap, n)?);
        term = term.mul(p, &fshift(p, n, &q(p, Var::Q2).xi_shift(p, -i1 + rp + 1)));
        term = term.mul(p, &fshift(p, n_cap - n, &q(p, Var::Q2).xi_shift(p, -i1 - i2 + n + 1)));
        term = term.mul(p, &fshift(p, rp + i3, &qq(p, Var::Q1, Var::Q2, n_cap - n - 2 * i3 + 1)));
        term = term.mul(p, &fshift(p, rp + i1, &qq(p, Var::Q2, Var::Q3, n - 2 * i1 + 1)));
        sum = sum.add(p, &term);
    }
    // The leading division by [N]! must cancel against the sum; a failed
    // integrality assertion on the final polynomial flags the bug.
    let inv_fact = p.invert(&qfact(p, n_cap))?;
    Ok(pre.mul(p, &sum).scale(p, &inv_fact))
}

/// First symmetry generator: (i1,i2,i3) ↦ (i2,i1,i3) with arguments
/// (q1,q2,q3) ↦ (q̄2, q̄1, q̄3).
fn gen_swap(p: &Params, t: &IndexTriple) -> (IndexTriple, Subst) {
    let mut s = Subst::identity();
    s.set(Var::Q1, q(p, Var::Q2).inv(p));
    s.set(Var::Q2, q(p, Var::Q1).inv(p));
    s.set(Var::Q3, q(p, Var::Q3).inv(p));
    (IndexTriple::new(t.i2, t.i1, t.i3), s)
}

/// Second symmetry generator: (i1,i2,i3) ↦ (i2,i3,i4) with arguments
/// (q1,q2,q3) ↦ (q1 q̄2 ξ^{-2 i3}, q1 q̄3 ξ^{2 i2}, q1), indices read from
/// the source triple.
fn gen_rotate(p: &Params, t: &IndexTriple) -> (IndexTriple, Subst) {
    let mut s = Subst::identity();
    s.set(Var::Q1, qq(p, Var::Q1, Var::Q2, -2 * t.i3));
    s.set(Var::Q2, qq(p, Var::Q1, Var::Q3, 2 * t.i2));
    s.set(Var::Q3, q(p, Var::Q1));
    (IndexTriple::new(t.i2, t.i3, t.i4()), s)
}

fn assert_integral(t: &IndexTriple, poly: LPoly) -> Result<LPoly, SixjError> {
    for (_, c) in poly.terms() {
        if !c.is_integral() {
            return Err(SixjError::NotIntegral(*t));
        }
    }
    Ok(poly)
}

/// J_{i1,i2,i3} for an arbitrary integer triple: zero outside H_{r'},
/// otherwise computed at the first directly-computable orbit element found
/// by breadth-first search over the two symmetry generators and pulled back
/// through the accumulated argument substitution.
pub fn j_symbol(p: &Params, t: &IndexTriple) -> Result<JPoly, SixjError> {
    if !t.in_h(p) {
        return Ok(JPoly { triple: *t, poly: LPoly::zero() });
    }
    let mut seen: BTreeSet<(i64, i64, i64)> = BTreeSet::new();
    let mut queue: VecDeque<(IndexTriple, Subst)> = VecDeque::new();
    seen.insert((t.i1, t.i2, t.i3));
    queue.push_back((*t, Subst::identity()));
    while let Some((u, s)) = queue.pop_front() {
        let base = if case1_applicable(p, &u) {
            Some(j_case1(p, &u)?)
        } else if case2_applicable(p, &u) {
            Some(j_case2(p, &u)?)
        } else {
            None
        };
        if let Some(b) = base {
            let poly = b.substitute(p, &s);
            return Ok(JPoly { triple: *t, poly: assert_integral(t, poly)? });
        }
        for gen in [gen_swap, gen_rotate] {
            let (v, sg) = gen(p, &u);
            if seen.insert((v.i1, v.i2, v.i3)) {
                queue.push_back((v, s.then_outer(p, &sg)));
            }
        }
    }
    Err(SixjError::NoComputableOrbit(*t))
}

/// Closed product form on the stratum i+j+k = r'.
pub fn boundary_low(p: &Params, t: &IndexTriple) -> Result<LPoly, SixjError> {
    let rp = p.rp() as i64;
    if t.sum() != rp || !t.in_h(p) {
        return Err(SixjError::Precondition(t.key()));
    }
    let (i, j, k) = (t.i1, t.i2, t.i3);
    let out = LPoly::constant(qmultinom(p, t)?)
        .mul(p, &fshift(p, rp - i, &q(p, Var::Q1).xi_shift(p, -rp - k)))
        .mul(p, &fshift(p, rp - j, &q(p, Var::Q2).xi_shift(p, -rp - i)))
        .mul(p, &fshift(p, rp - k, &q(p, Var::Q3).xi_shift(p, -rp - j)));
    assert_integral(t, out)
}

/// Closed product form on the stratum i+j+k = -r', in terms of the colors
/// δ = β-γ-2i, ε = γ-α-2j, φ = α-β-2k.
pub fn boundary_high(p: &Params, t: &IndexTriple) -> Result<LPoly, SixjError> {
    let rp = p.rp() as i64;
    if t.sum() != -rp || !t.in_h(p) {
        return Err(SixjError::Precondition(t.key()));
    }
    let (i, j, k) = (t.i1, t.i2, t.i3);
    let out = fshift(p, rp + i, &qq(p, Var::Q2, Var::Q3, -2 * i + 1))
        .mul(p, &fshift(p, rp + j, &qq(p, Var::Q3, Var::Q1, -2 * j + 1)))
        .mul(p, &fshift(p, rp + k, &qq(p, Var::Q1, Var::Q2, -2 * k + 1)));
    assert_integral(t, out)
}

/// Precomputed table of all J polynomials for one r'.  Immutable after
/// construction, so shared references across worker threads are safe.
#[derive(Clone, Debug)]
pub struct JTable {
    map: BTreeMap<(i64, i64, i64), LPoly>,
    zero: LPoly,
}

impl JTable {
    pub fn build(p: &Params) -> Result<JTable, SixjError> {
        let mut map = BTreeMap::new();
        for t in crate::qcalc::hset_enumerate(p) {
            let jp = j_symbol(p, &t)?;
            map.insert((t.i1, t.i2, t.i3), jp.poly);
        }
        Ok(JTable { map, zero: LPoly::zero() })
    }

    /// The polynomial for any integer triple (zero off H_{r'}).
    pub fn get(&self, t: &IndexTriple) -> &LPoly {
        self.map.get(&(t.i1, t.i2, t.i3)).unwrap_or(&self.zero)
    }

    pub fn triples(&self) -> impl Iterator<Item = IndexTriple> + '_ {
        self.map.keys().map(|(a, b, c)| IndexTriple::new(*a, *b, *c))
    }

    /// Replace one entry; negative tests use this to confirm the identity
    /// checkers actually detect corrupted tables.
    #[doc(hidden)]
    pub fn override_for_tests(&mut self, t: IndexTriple, poly: LPoly) {
        self.map.insert((t.i1, t.i2, t.i3), poly);
    }
}

/// The 24 tetrahedral symmetries as (triple-map, substitution) pairs,
/// generated by breadth-first composition of the two generators.
pub fn symmetry_orbit(p: &Params, t: &IndexTriple) -> Vec<(IndexTriple, Subst)> {
    let mut out: Vec<(IndexTriple, Subst)> = Vec::new();
    let mut seen: BTreeSet<(i64, i64, i64)> = BTreeSet::new();
    let mut queue: VecDeque<(IndexTriple, Subst)> = VecDeque::new();
    queue.push_back((*t, Subst::identity()));
    seen.insert((t.i1, t.i2, t.i3));
    while let Some((u, s)) = queue.pop_front() {
        out.push((u, s.clone()));
        for gen in [gen_swap, gen_rotate] {
            let (v, sg) = gen(p, &u);
            if seen.insert((v.i1, v.i2, v.i3)) {
                queue.push_back((v, s.then_outer(p, &sg)));
            }
        }
    }
    out
}
