//! Quantum integers, factorials, binomials, the shifted factorial products
//! {X}{ξX}···, the triple multinomial, the polynomial D, and the index set
//! H_{r'}.

use alloc::string::String;
use alloc::vec::Vec;

use crate::cyclotomic::{CycError, CycNum, Params};
use crate::laurent::{LPoly, Mono, Var};

/// An integer triple (i1, i2, i3); the fourth index is i4 = -(i1+i2+i3).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct IndexTriple {
    pub i1: i64,
    pub i2: i64,
    pub i3: i64,
}

impl IndexTriple {
    pub fn new(i1: i64, i2: i64, i3: i64) -> IndexTriple {
        IndexTriple { i1, i2, i3 }
    }

    pub fn sum(&self) -> i64 {
        self.i1 + self.i2 + self.i3
    }

    pub fn i4(&self) -> i64 {
        -self.sum()
    }

    /// Membership in H_{r'}: -r' ≤ i1, i2, i3, i1+i2+i3 ≤ r'.
    pub fn in_h(&self, p: &Params) -> bool {
        let rp = p.rp() as i64;
        let ok = |x: i64| -rp <= x && x <= rp;
        ok(self.i1) && ok(self.i2) && ok(self.i3) && ok(self.sum())
    }

    pub fn key(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(s, "({},{},{})", self.i1, self.i2, self.i3);
        s
    }
}

/// {X} = X - X^{-1} for an invertible monomial X.
pub fn qbracket(p: &Params, x: &Mono) -> LPoly {
    x.to_poly(p).sub(p, &x.inv(p).to_poly(p))
}

/// Reject non-monomial input, per the contract of the bracket.
pub fn qbracket_checked(p: &Params, x: &LPoly) -> Result<LPoly, CycError> {
    match x.as_mono() {
        Some(m) => Ok(qbracket(p, &m)),
        None => Err(CycError::Parse(String::from("qbracket needs an invertible monomial"))),
    }
}

/// Fn(N, X) = Π_{i=0}^{N-1} {ξ^i X}; the empty product is 1.
pub fn fshift(p: &Params, n: i64, x: &Mono) -> LPoly {
    assert!(n >= 0, "fshift needs a nonnegative length");
    let mut acc = LPoly::one(p);
    for i in 0..n {
        acc = acc.mul(p, &qbracket(p, &x.xi_shift(p, i)));
    }
    acc
}

/// [n] = ξ^n - ξ^{-n}.
pub fn qint(p: &Params, n: i64) -> CycNum {
    p.qint(n)
}

/// [n]! = [1][2]···[n].
pub fn qfact(p: &Params, n: i64) -> CycNum {
    assert!(n >= 0, "factorial of a negative integer");
    let mut acc = p.one();
    for k in 1..=n {
        acc = p.mul(&acc, &p.qint(k));
    }
    acc
}

/// Quantum binomial [N over n], computed in Q(ξ) and asserted integral.
pub fn qbinom(p: &Params, nn: i64, n: i64) -> Result<CycNum, CycError> {
    if !(0 <= n && n <= nn) {
        return Err(CycError::Parse(String::from("binomial out of range")));
    }
    let den = p.mul(&qfact(p, n), &qfact(p, nn - n));
    let v = p.mul(&qfact(p, nn), &p.invert(&den)?);
    if !v.is_integral() {
        return Err(CycError::NotIntegral);
    }
    Ok(v)
}

/// [i1, i2, i3] = [2r']! / ([r'-i1]! [r'-i2]! [r'-i3]!); lives in Q(ξ),
/// integrality is not assumed.
pub fn qmultinom(p: &Params, t: &IndexTriple) -> Result<CycNum, CycError> {
    let rp = p.rp() as i64;
    for x in [t.i1, t.i2, t.i3] {
        if !(0..=2 * rp).contains(&(rp - x)) {
            return Err(CycError::Parse(String::from("multinomial index out of range")));
        }
    }
    let den = p.mul(
        &p.mul(&qfact(p, rp - t.i1), &qfact(p, rp - t.i2)),
        &qfact(p, rp - t.i3),
    );
    Ok(p.mul(&qfact(p, 2 * rp), &p.invert(&den)?))
}

/// D(v) = Fn(2r', vξ), the formal inverse of the modified dimension, as a
/// Laurent polynomial in the chosen variable.
pub fn dpoly_in(p: &Params, v: Var) -> LPoly {
    fshift(p, 2 * p.rp() as i64, &Mono::var(p, v).xi_shift(p, 1))
}

pub fn dpoly(p: &Params) -> LPoly {
    dpoly_in(p, Var::Q1)
}

/// All of H_{r'}, in lexicographic order.
pub fn hset_enumerate(p: &Params) -> Vec<IndexTriple> {
    let rp = p.rp() as i64;
    let mut out = Vec::new();
    for i1 in -rp..=rp {
        for i2 in -rp..=rp {
            for i3 in -rp..=rp {
                let t = IndexTriple::new(i1, i2, i3);
                if t.in_h(p) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Cardinality formula (1/3) r (2r^2 + 1).
pub fn hset_card(p: &Params) -> i64 {
    let r = p.r() as i64;
    r * (2 * r * r + 1) / 3
}

/// The representative of x modulo r inside {-r', ..., r'}.
pub fn bar_reduce(p: &Params, x: i64) -> i64 {
    let r = p.r() as i64;
    let rp = p.rp() as i64;
    let mut v = x.rem_euclid(r);
    if v > rp {
        v -= r;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Subst;

    #[test]
    fn qbracket_examples() {
        let p = Params::new(1);
        let q1 = Mono::var(&p, Var::Q1);
        let b = qbracket(&p, &q1);
        assert_eq!(b.to_text(), "(1) q1 + (-1) q1^-1");
        // {1} = 0
        assert!(qbracket(&p, &Mono::one(&p)).is_zero());
        // {ξ} at r'=1 is the constant 2ξ - 1
        let bxi = qbracket(&p, &Mono::xi(&p, 1));
        assert_eq!(bxi.as_constant().unwrap().to_text(), "-1 + 2*x");
        // non-monomials are rejected
        let not_mono = q1.to_poly(&p).add(&p, &LPoly::one(&p));
        assert!(qbracket_checked(&p, &not_mono).is_err());
    }

    #[test]
    fn fshift_basics() {
        let p = Params::new(1);
        let q1 = Mono::var(&p, Var::Q1);
        assert_eq!(fshift(&p, 0, &q1), LPoly::one(&p));
        // Fn(2, q1 ξ) = -(q1^2 + 1 + q1^{-2}) = D at r' = 1
        let d = fshift(&p, 2, &q1.xi_shift(&p, 1));
        assert_eq!(d, dpoly(&p));
        let mut expect = LPoly::constant(p.from_i64(-1));
        expect = expect.sub(&p, &q1.pow(&p, 2).to_poly(&p));
        expect = expect.sub(&p, &q1.pow(&p, -2).to_poly(&p));
        assert_eq!(d, expect);
    }

    #[test]
    fn fshift_r_closed_form() {
        // Fn(r, X) = (-1)^{r'} (X^r - X^{-r})
        for rp in 1..=4 {
            let p = Params::new(rp);
            let r = p.r() as i64;
            let q1 = Mono::var(&p, Var::Q1);
            let got = fshift(&p, r, &q1);
            let sign = if rp % 2 == 0 { 1 } else { -1 };
            let expect = q1
                .pow(&p, r as i32)
                .to_poly(&p)
                .sub(&p, &q1.pow(&p, -(r as i32)).to_poly(&p))
                .scale(&p, &p.from_i64(sign));
            assert_eq!(got, expect, "rp={}", rp);
        }
    }

    #[test]
    fn fshift_bar_sign() {
        // bar(Fn(k, X)) = (-1)^k Fn(k, X): every factor {ξ^i X} is negated
        // by the involution that inverts both ξ and the variable.
        let p = Params::new(2);
        let q1 = Mono::var(&p, Var::Q1);
        for k in 0..=4 {
            let f = fshift(&p, k, &q1);
            let rhs = f.scale(&p, &p.from_i64(if k % 2 == 0 { 1 } else { -1 }));
            assert_eq!(f.bar(&p), rhs);
        }
    }

    #[test]
    fn fshift_concatenation() {
        // Fn(N, X) · Fn(M, ξ^N X) = Fn(N+M, X)
        for rp in 1..=2 {
            let p = Params::new(rp);
            let q1 = Mono::var(&p, Var::Q1);
            for n in 0..=2 * rp as i64 {
                for m in 0..=2 * rp as i64 {
                    let lhs = fshift(&p, n, &q1).mul(&p, &fshift(&p, m, &q1.xi_shift(&p, n)));
                    assert_eq!(lhs, fshift(&p, n + m, &q1));
                }
            }
        }
    }

    #[test]
    fn factorial_anchor() {
        // [2r']! = (-1)^{r'} r
        for rp in 1..=4 {
            let p = Params::new(rp);
            let sign = if rp % 2 == 0 { 1 } else { -1 };
            assert_eq!(qfact(&p, 2 * rp as i64), p.from_i64(sign * p.r() as i64), "rp={}", rp);
        }
    }

    #[test]
    fn binom_examples() {
        let p = Params::new(1);
        // [2 over 1] = [2]/[1] = ξ + ξ^{-1} = 1 at r' = 1
        assert_eq!(qbinom(&p, 2, 1).unwrap(), p.one());
        for rp in 1..=3 {
            let p = Params::new(rp);
            for n in 0..=2 * rp as i64 {
                assert_eq!(qbinom(&p, n, 0).unwrap(), p.one());
                assert_eq!(qbinom(&p, n, n).unwrap(), p.one());
            }
        }
        assert!(qbinom(&p, 1, 2).is_err());
    }

    #[test]
    fn multinom_examples() {
        let p = Params::new(1);
        assert_eq!(qmultinom(&p, &IndexTriple::new(1, 0, 0)).unwrap(), p.one());
        assert_eq!(qmultinom(&p, &IndexTriple::new(-1, 1, 1)).unwrap(), p.one());
        // (0,0,0): [2]!/[1]!^3 exact vs numeric cross-check
        let v = qmultinom(&p, &IndexTriple::new(0, 0, 0)).unwrap();
        let exact = p.to_complex(&v, 96);
        // [2]! = -3, [1] = i√3 ⇒ value = -3/(i√3)^3 = -3/(-3i√3) = 1/(i√3) = -i/√3
        let expect_im = -1.0 / 3f64.sqrt();
        assert!(exact.re.contains_f64_approx(0.0, 1e-12));
        assert!(exact.im.contains_f64_approx(expect_im, 1e-12));
        assert!(qmultinom(&p, &IndexTriple::new(2, 0, 0)).is_err());
    }

    #[test]
    fn dpoly_properties() {
        for rp in 1..=3 {
            let p = Params::new(rp);
            let d = dpoly(&p);
            // D(q1) equals the closed form (-1)^{r'} (q1^r - q1^{-r})/(q1 - q1^{-1})
            let q1 = Mono::var(&p, Var::Q1);
            let r = p.r() as i64;
            let sign = if rp % 2 == 0 { 1 } else { -1 };
            let num = q1
                .pow(&p, r as i32)
                .to_poly(&p)
                .sub(&p, &q1.pow(&p, -(r as i32)).to_poly(&p))
                .scale(&p, &p.from_i64(sign));
            let den = q1.to_poly(&p).sub(&p, &q1.inv(&p).to_poly(&p));
            assert_eq!(num.divide_exact(&p, &den).unwrap(), d);
            // D is bar/inversion symmetric: D(q1) = D(q1^{-1}) with conjugated coefficients
            assert_eq!(d.bar(&p), d);
            // At q1 = ±1 the closed form is a removable 0/0; the product
            // form evaluates to (-1)^{r'} r.  At the other roots of unity
            // ξ^{2n} (n ≢ 0 mod r) the numerator q^r - q^{-r} vanishes
            // alone, so D is exactly zero there.
            if rp <= 2 {
                let mut pt: [Option<CycNum>; crate::laurent::NVARS] = Default::default();
                for v in [p.one(), p.neg(&p.one())] {
                    pt[Var::Q1.idx()] = Some(v);
                    assert_eq!(d.eval(&p, &pt).unwrap(), p.from_i64(sign * r));
                }
                for n in 1..r {
                    pt[Var::Q1.idx()] = Some(p.xi_pow(2 * n));
                    assert!(d.eval(&p, &pt).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn dpoly_eval_at_one() {
        let p = Params::new(1);
        let mut pt: [Option<CycNum>; crate::laurent::NVARS] = Default::default();
        pt[Var::Q1.idx()] = Some(p.one());
        assert_eq!(dpoly(&p).eval(&p, &pt).unwrap(), p.from_i64(-3));
    }

    #[test]
    fn hset_cardinalities() {
        // (1/3) r (2r^2 + 1) for r = 3, 5, 7, 9, 11
        for (rp, expect) in [(1u32, 19i64), (2, 85), (3, 231), (4, 489), (5, 891)] {
            let p = Params::new(rp);
            let hs = hset_enumerate(&p);
            assert_eq!(hs.len() as i64, expect);
            assert_eq!(hset_card(&p), expect);
            for t in &hs {
                assert!(t.in_h(&p));
            }
        }
    }

    #[test]
    fn bar_reduce_examples() {
        let p = Params::new(1);
        assert_eq!(bar_reduce(&p, 3), 0);
        assert_eq!(bar_reduce(&p, 2), -1);
        for x in -9..=9 {
            let v = bar_reduce(&p, x);
            assert!((-1..=1).contains(&v));
            assert_eq!((x - v).rem_euclid(3), 0);
            assert_eq!(bar_reduce(&p, -x), -v);
        }
    }

    #[test]
    fn shifted_bracket_negation() {
        // [x ± r] = -[x], both for integers and symbolically {Xξ^r} = -{X}
        let p = Params::new(2);
        let r = p.r() as i64;
        for x in -6..=6 {
            assert_eq!(p.qint(x + r), p.neg(&p.qint(x)));
            assert_eq!(p.qint(x - r), p.neg(&p.qint(x)));
        }
        let t = Mono::var(&p, Var::T1);
        assert_eq!(qbracket(&p, &t.xi_shift(&p, r)), qbracket(&p, &t).neg(&p));
    }

    #[test]
    fn two_term_bracket_identity() {
        // {x+z}{y+z} - {x}{y} = {x+y+z}{z} with formal monomials
        let p = Params::new(1);
        let tx = Mono::var(&p, Var::T1);
        let ty = Mono::var(&p, Var::T2);
        let tz = Mono::var(&p, Var::T3);
        let lhs = qbracket(&p, &tx.mul(&p, &tz))
            .mul(&p, &qbracket(&p, &ty.mul(&p, &tz)))
            .sub(&p, &qbracket(&p, &tx).mul(&p, &qbracket(&p, &ty)));
        let rhs = qbracket(&p, &tx.mul(&p, &ty).mul(&p, &tz)).mul(&p, &qbracket(&p, &tz));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symbolic_subst_composes() {
        // sanity for the orbit machinery: composing substitutions matches
        // substituting the composition
        let p = Params::new(1);
        let q1 = Mono::var(&p, Var::Q1);
        let q2 = Mono::var(&p, Var::Q2);
        let a = qbracket(&p, &q1).mul(&p, &qbracket(&p, &q2.pow(&p, 2)));
        let mut s1 = Subst::identity();
        s1.set(Var::Q1, q2.xi_shift(&p, 1));
        let mut s2 = Subst::identity();
        s2.set(Var::Q2, q1.inv(&p));
        let composed = s1.then_outer(&p, &s2);
        assert_eq!(
            a.substitute(&p, &s2).substitute(&p, &s1),
            a.substitute(&p, &composed)
        );
    }
}
