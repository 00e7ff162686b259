//! Exact arithmetic in Z[ξ] and Q(ξ) for ξ a primitive 2r-th root of unity,
//! r = 2r' + 1 odd.
//!
//! Elements are coefficient vectors in the power basis 1, ξ, ..., ξ^{d-1}
//! reduced modulo the 2r-th cyclotomic polynomial Φ_{2r}, so the zero test is
//! canonical and every downstream equality check is exact.  The optional
//! parameter m (coprime to 2r) selects the numeric embedding ξ = e^{imπ/r};
//! it does not affect the abstract algebra.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::interval::{CInterval, RInterval};

/// Fixed data for one choice of r' (and embedding exponent m).
#[derive(Clone, Debug)]
pub struct Params {
    rp: u32,
    r: u32,
    m: u32,
    /// Degree of Φ_{2r} = rank of Q(ξ) over Q.
    deg: usize,
    /// Monic Φ_{2r} as integer coefficients, ascending, length deg + 1.
    phi: Vec<BigInt>,
    /// Canonical forms of ξ^k for k = 0 .. 2r-1.
    xi_pows: Vec<Vec<BigRational>>,
}

/// An element of Q(ξ): coefficients of 1, ξ, ..., ξ^{deg-1}.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub struct CycNum {
    pub(crate) c: Vec<BigRational>,
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Multiply integer polynomials (ascending coefficients).
fn ipoly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials; panics if not divisible
/// (only used on cyclotomic factors, where divisibility is guaranteed).
fn ipoly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    assert!(!lead.is_zero());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let coef = &rem[k + dd] / &lead;
        debug_assert_eq!(&coef * &lead, rem[k + dd]);
        quot[k] = coef.clone();
        if coef.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            let v = &rem[k + j] - &coef * d;
            rem[k + j] = v;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Φ_n by the recursive division Φ_n(x) = (x^n - 1) / Π_{d|n, d<n} Φ_d(x).
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)];
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::from(1);
    let mut den = vec![BigInt::one()];
    for d in 1..n {
        if n % d == 0 {
            den = ipoly_mul(&den, &cyclotomic_poly(d));
        }
    }
    ipoly_div_exact(&num, &den)
}

impl Params {
    /// Construct parameters for r' ≥ 1 with the default embedding m = 1.
    pub fn new(rp: u32) -> Params {
        Params::with_embedding(rp, 1)
    }

    /// Construct parameters with an explicit embedding exponent m,
    /// gcd(m, 2r) = 1.
    pub fn with_embedding(rp: u32, m: u32) -> Params {
        assert!(rp >= 1, "r' must be positive");
        let r = 2 * rp + 1;
        let n = 2 * r;
        assert!(num_integer::gcd(m as u64, n as u64) == 1, "m must be coprime to 2r");
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        let mut p = Params { rp, r, m, deg, phi, xi_pows: Vec::new() };
        // Seed ξ^k for k < deg, then extend by the reduction ξ^deg = -(lower terms).
        let mut pows: Vec<Vec<BigRational>> = Vec::with_capacity(n as usize);
        for k in 0..deg.min(n as usize) {
            let mut v = vec![BigRational::zero(); deg];
            v[k] = BigRational::one();
            pows.push(v);
        }
        while pows.len() < n as usize {
            let prev = pows.last().unwrap().clone();
            pows.push(p.shift_up(&prev));
        }
        p.xi_pows = pows;
        p
    }

    fn shift_up(&self, v: &[BigRational]) -> Vec<BigRational> {
        // Multiply by ξ and reduce: ξ^deg = -phi[deg-1]ξ^{deg-1} - ... - phi[0].
        let mut out = vec![BigRational::zero(); self.deg];
        for k in 0..self.deg - 1 {
            out[k + 1] = v[k].clone();
        }
        let top = v[self.deg - 1].clone();
        if !top.is_zero() {
            for k in 0..self.deg {
                let adj = &top * BigRational::from_integer(self.phi[k].clone());
                out[k] -= adj;
            }
        }
        out
    }

    pub fn rp(&self) -> u32 {
        self.rp
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn zero(&self) -> CycNum {
        CycNum { c: vec![BigRational::zero(); self.deg] }
    }

    pub fn one(&self) -> CycNum {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> CycNum {
        let mut c = vec![BigRational::zero(); self.deg];
        c[0] = big(n);
        CycNum { c }
    }

    pub fn from_rational(&self, q: BigRational) -> CycNum {
        let mut c = vec![BigRational::zero(); self.deg];
        c[0] = q;
        CycNum { c }
    }

    /// Canonical form of ξ^k for any integer k.
    pub fn xi_pow(&self, k: i64) -> CycNum {
        let n = 2 * self.r as i64;
        let k = k.rem_euclid(n) as usize;
        CycNum { c: self.xi_pows[k].clone() }
    }

    pub fn add(&self, a: &CycNum, b: &CycNum) -> CycNum {
        let c = a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect();
        CycNum { c }
    }

    pub fn sub(&self, a: &CycNum, b: &CycNum) -> CycNum {
        let c = a.c.iter().zip(&b.c).map(|(x, y)| x - y).collect();
        CycNum { c }
    }

    pub fn neg(&self, a: &CycNum) -> CycNum {
        CycNum { c: a.c.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, a: &CycNum, b: &CycNum) -> CycNum {
        let mut conv = vec![BigRational::zero(); 2 * self.deg - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                conv[i + j] += x * y;
            }
        }
        // Fold powers ≥ deg down using the precomputed ξ^k forms.
        let mut out: Vec<BigRational> = conv[..self.deg].to_vec();
        for k in self.deg..2 * self.deg - 1 {
            if conv[k].is_zero() {
                continue;
            }
            let red = &self.xi_pows[k];
            for j in 0..self.deg {
                if !red[j].is_zero() {
                    out[j] += &conv[k] * &red[j];
                }
            }
        }
        CycNum { c: out }
    }

    pub fn mul_i64(&self, a: &CycNum, n: i64) -> CycNum {
        let f = big(n);
        CycNum { c: a.c.iter().map(|x| x * &f).collect() }
    }

    /// Multiplicative inverse in Q(ξ) via the extended Euclid algorithm over
    /// Q[x] modulo Φ_{2r}.
    pub fn invert(&self, a: &CycNum) -> Result<CycNum, CycError> {
        if a.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        // Extended gcd of a (as poly) and phi over Q[x]; gcd is a nonzero
        // constant since phi is irreducible.
        let mut r0: Vec<BigRational> =
            self.phi.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let mut r1: Vec<BigRational> = a.c.clone();
        trim(&mut r1);
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, rem) = qpoly_divmod(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 = gcd (degree 0), s0 satisfies s0 * a ≡ r0 (mod phi).
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be irreducible over Q");
        let scale = r0[0].recip();
        let mut c = vec![BigRational::zero(); self.deg];
        for (k, v) in s0.iter().enumerate() {
            let v = v * &scale;
            if k < self.deg {
                c[k] += v;
            } else {
                for j in 0..self.deg {
                    c[j] += &v * &self.xi_pows[k][j];
                }
            }
        }
        Ok(CycNum { c })
    }

    /// The bar involution ξ ↦ ξ^{-1}.
    pub fn bar(&self, a: &CycNum) -> CycNum {
        let n = 2 * self.r as i64;
        let mut out = self.zero();
        for (k, v) in a.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let img = &self.xi_pows[(n as usize - k) % n as usize];
            for j in 0..self.deg {
                if !img[j].is_zero() {
                    out.c[j] += v * &img[j];
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &CycNum, e: i64) -> Result<CycNum, CycError> {
        if e < 0 {
            let inv = self.invert(a)?;
            return self.pow(&inv, -e);
        }
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        Ok(acc)
    }

    /// Quantum integer [n] = ξ^n - ξ^{-n}.
    pub fn qint(&self, n: i64) -> CycNum {
        self.sub(&self.xi_pow(n), &self.xi_pow(-n))
    }

    /// Complex interval enclosing the image of `a` under ξ ↦ e^{imπ/r},
    /// computed with the requested number of bits of working precision.
    pub fn to_complex(&self, a: &CycNum, precision: u32) -> CInterval {
        assert!(precision >= 53, "precision must be at least 53 bits");
        let mut acc = CInterval::zero();
        let root = CInterval::root_of_unity(self.m as i64, self.r as i64, precision);
        let mut pw = CInterval::exact_one();
        for (k, v) in a.c.iter().enumerate() {
            if k > 0 {
                pw = pw.mul(&root);
            }
            if v.is_zero() {
                continue;
            }
            let cv = CInterval { re: RInterval::point(v.clone()), im: RInterval::point(BigRational::zero()) };
            acc = acc.add(&cv.mul(&pw));
        }
        acc
    }
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (k, v) in a.iter().enumerate() {
        out[k] += v;
    }
    for (k, v) in b.iter().enumerate() {
        out[k] -= v;
    }
    trim(&mut out);
    out
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn qpoly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let coef = &rem[k + db] / &lead;
        if coef.is_zero() {
            continue;
        }
        quot[k] = coef.clone();
        for (j, d) in b.iter().enumerate() {
            let v = &rem[k + j] - &coef * d;
            rem[k + j] = v;
        }
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycError {
    DivisionByZero,
    NotIntegral,
    Parse(String),
}

impl core::fmt::Display for CycError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CycError::DivisionByZero => write!(f, "division by zero in Q(xi)"),
            CycError::NotIntegral => write!(f, "value is not in Z[xi]"),
            CycError::Parse(s) => write!(f, "parse error: {}", s),
        }
    }
}

impl CycNum {
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// True iff all coordinates are integers after reduction, i.e. the value
    /// lies in Z[ξ] (the power basis is an integral basis).
    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|x| x.denom().is_one())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    /// If the element is a plain rational, return it.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Canonical text form: polynomial in `x` with rational coefficients,
    /// ascending powers, e.g. `-1 + 2*x`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut first = true;
        for (k, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if first {
                if v.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if v.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let a = v.abs();
            let is_unit_coeff = a.is_one() && k > 0;
            if !is_unit_coeff {
                if a.denom().is_one() {
                    let _ = write!(out, "{}", a.numer());
                } else {
                    let _ = write!(out, "{}/{}", a.numer(), a.denom());
                }
            }
            if k > 0 {
                if !is_unit_coeff {
                    out.push('*');
                }
                if k == 1 {
                    out.push('x');
                } else {
                    let _ = write!(out, "x^{}", k);
                }
            }
        }
        if first {
            out.push('0');
        }
        out
    }

    /// Parse the canonical text form (also accepts plain rationals).
    pub fn parse(p: &Params, s: &str) -> Result<CycNum, CycError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CycError::Parse(String::from("empty input")));
        }
        let mut out = p.zero();
        // Split into signed terms.
        let bytes = s.as_bytes();
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut started = false;
        let mut i = 0;
        while i < bytes.len() {
            let ch = bytes[i] as char;
            if (ch == '+' || ch == '-') && !started {
                if ch == '-' {
                    neg = !neg;
                }
                i += 1;
                continue;
            }
            if (ch == '+' || ch == '-') && started {
                terms.push((neg, cur.trim().into()));
                cur = String::new();
                neg = ch == '-';
                started = false;
                i += 1;
                continue;
            }
            if !ch.is_whitespace() {
                started = true;
            }
            cur.push(ch);
            i += 1;
        }
        if cur.trim().is_empty() {
            return Err(CycError::Parse(String::from("dangling sign")));
        }
        terms.push((neg, cur.trim().into()));
        for (neg, t) in terms {
            let (coef_s, pow) = match t.find('x') {
                None => (t.as_str(), 0usize),
                Some(ix) => {
                    let coef = t[..ix].trim().trim_end_matches('*').trim();
                    let rest = t[ix + 1..].trim();
                    let pow = if rest.is_empty() {
                        1
                    } else {
                        let rest = rest
                            .strip_prefix('^')
                            .ok_or_else(|| CycError::Parse(String::from("expected ^ after x")))?;
                        rest.trim()
                            .parse::<usize>()
                            .map_err(|_| CycError::Parse(String::from("bad exponent")))?
                    };
                    (if coef.is_empty() { "1" } else { coef }, pow)
                }
            };
            let q = parse_rational(coef_s)?;
            let q = if neg { -q } else { q };
            let mut term = p.xi_pow(pow as i64);
            for c in term.c.iter_mut() {
                *c = &*c * &q;
            }
            out = p.add(&out, &term);
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Result<BigRational, CycError> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| CycError::Parse(String::from(s)))?;
        let d: BigInt = d.trim().parse().map_err(|_| CycError::Parse(String::from(s)))?;
        if d.is_zero() {
            return Err(CycError::Parse(String::from("zero denominator")));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| CycError::Parse(String::from(s)))?;
        Ok(BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn rand_cyc(p: &Params, rng: &mut SplitMix64) -> CycNum {
        let mut c = vec![BigRational::zero(); p.deg()];
        for v in c.iter_mut() {
            *v = big(rng.below(21) as i64 - 10);
        }
        CycNum { c }
    }

    #[test]
    fn phi_small_cases() {
        // Φ_6 = x^2 - x + 1, Φ_10 = x^4 - x^3 + x^2 - x + 1
        assert_eq!(
            cyclotomic_poly(6),
            vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]
        );
        assert_eq!(
            cyclotomic_poly(10),
            vec![
                BigInt::from(1),
                BigInt::from(-1),
                BigInt::from(1),
                BigInt::from(-1),
                BigInt::from(1)
            ]
        );
        // Φ_18 = x^6 - x^3 + 1 (r' = 4 ⇒ 2r = 18)
        let p18 = cyclotomic_poly(18);
        assert_eq!(p18.len(), 7);
        assert_eq!(p18[0], BigInt::from(1));
        assert_eq!(p18[3], BigInt::from(-1));
        assert_eq!(p18[6], BigInt::from(1));
    }

    #[test]
    fn xi_power_identities() {
        for rp in 1..=4 {
            let p = Params::new(rp);
            assert_eq!(p.xi_pow(0), p.one());
            assert_eq!(p.xi_pow(p.r() as i64), p.neg(&p.one()), "xi^r = -1 at rp={}", rp);
            assert_eq!(p.xi_pow(2 * p.r() as i64), p.one());
            // Φ_{2r}(ξ) = 0 exactly: ξ^deg equals the reduction row.
            let mut phi_val = p.zero();
            for (k, c) in p.phi.iter().enumerate() {
                let t = p.mul(&p.xi_pow(k as i64), &p.from_rational(BigRational::from_integer(c.clone())));
                phi_val = p.add(&phi_val, &t);
            }
            assert!(phi_val.is_zero());
        }
    }

    #[test]
    fn xi_squared_at_rp1() {
        // In the basis {1, ξ} of Z[x]/Φ_6: ξ^2 = ξ - 1.
        let p = Params::new(1);
        let got = p.xi_pow(2);
        assert_eq!(got.c[0], big(-1));
        assert_eq!(got.c[1], big(1));
    }

    #[test]
    fn bracket_one_squared_is_minus_three() {
        // [1] = ξ - ξ^{-1}; [1]^2 = -3 at r' = 1 (numerically (i√3)^2).
        let p = Params::new(1);
        let b1 = p.qint(1);
        assert_eq!(b1.to_text(), "-1 + 2*x");
        let sq = p.mul(&b1, &b1);
        assert_eq!(sq, p.from_i64(-3));
    }

    #[test]
    fn invert_roundtrip() {
        let p = Params::new(2);
        let mut rng = SplitMix64::new(7);
        assert_eq!(p.invert(&p.one()).unwrap(), p.one());
        assert!(p.invert(&p.zero()).is_err());
        for _ in 0..50 {
            let a = rand_cyc(&p, &mut rng);
            if a.is_zero() {
                continue;
            }
            let inv = p.invert(&a).unwrap();
            assert_eq!(p.mul(&a, &inv), p.one());
        }
    }

    #[test]
    fn bar_is_ring_automorphism() {
        for rp in 1..=3 {
            let p = Params::new(rp);
            let mut rng = SplitMix64::new(42 + rp as u64);
            for k in -(3 * p.r() as i64)..=(3 * p.r() as i64) {
                assert_eq!(p.bar(&p.xi_pow(k)), p.xi_pow(-k));
            }
            for _ in 0..if rp == 1 { 1000 } else { 100 } {
                let a = rand_cyc(&p, &mut rng);
                let b = rand_cyc(&p, &mut rng);
                assert_eq!(p.bar(&p.mul(&a, &b)), p.mul(&p.bar(&a), &p.bar(&b)));
                assert_eq!(p.bar(&p.bar(&a)), a);
            }
        }
    }

    #[test]
    fn to_complex_basics() {
        let p = Params::new(1);
        let xi = p.to_complex(&p.xi_pow(1), 64);
        // e^{iπ/3} ≈ 0.5 + 0.866025i
        assert!(xi.re.contains_f64_approx(0.5, 1e-12));
        assert!(xi.im.contains_f64_approx(0.8660254037844386, 1e-12));
        // [1] ≈ 1.732050i
        let b1 = p.to_complex(&p.qint(1), 64);
        assert!(b1.re.contains_f64_approx(0.0, 1e-12));
        assert!(b1.im.contains_f64_approx(1.7320508075688772, 1e-12));
        // exact zero: tiny interval containing 0
        let z = p.to_complex(&p.zero(), 64);
        assert!(z.re.contains_zero() && z.im.contains_zero());
        assert!(z.width_bound() < 2f64.powi(-60));
    }

    #[test]
    fn to_complex_respects_products() {
        let p = Params::new(2);
        let mut rng = SplitMix64::new(11);
        for _ in 0..50 {
            let a = rand_cyc(&p, &mut rng);
            let b = rand_cyc(&p, &mut rng);
            let prod = p.to_complex(&p.mul(&a, &b), 96);
            let sep = p.to_complex(&a, 96).mul(&p.to_complex(&b, 96));
            assert!(prod.overlaps(&sep));
        }
    }

    #[test]
    fn text_roundtrip() {
        let p = Params::new(2);
        let mut rng = SplitMix64::new(5);
        for _ in 0..50 {
            let a = rand_cyc(&p, &mut rng);
            let s = a.to_text();
            let back = CycNum::parse(&p, &s).unwrap();
            assert_eq!(a, back, "roundtrip failed for {}", s);
        }
        assert_eq!(CycNum::parse(&p, "2/3").unwrap(), p.from_rational(BigRational::new(BigInt::from(2), BigInt::from(3))));
        assert_eq!(CycNum::parse(&p, "x^2 - x").unwrap(), p.sub(&p.xi_pow(2), &p.xi_pow(1)));
    }

    #[test]
    fn integrality_flag() {
        let p = Params::new(1);
        assert!(p.qint(2).is_integral());
        let half = p.from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert!(!half.is_integral());
        // flag propagates through add/mul on integral values
        let s = p.add(&p.qint(1), &p.xi_pow(3));
        assert!(s.is_integral());
        assert!(p.mul(&s, &s).is_integral());
    }
}
