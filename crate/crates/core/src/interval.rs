//! Self-validating complex interval arithmetic with exact rational endpoints.
//!
//! Endpoints are big rationals rounded outward to a dyadic grid after every
//! operation, so widths stay controlled at a chosen working precision while
//! enclosures remain rigorous.  Enclosures of e^{imπ/r} come from a Machin
//! enclosure of π and Taylor series with explicit remainder bounds.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Closed rational interval [lo, hi].
#[derive(Clone, Debug, PartialEq)]
pub struct RInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    prec: u32,
}

/// Rectangle re × im enclosing a complex number.
#[derive(Clone, Debug, PartialEq)]
pub struct CInterval {
    pub re: RInterval,
    pub im: RInterval,
}

const EXACT: u32 = u32::MAX;

fn two_pow(p: u32) -> BigInt {
    BigInt::one() << p
}

fn floor_to_grid(x: &BigRational, p: u32) -> BigRational {
    let scaled = x * BigRational::from_integer(two_pow(p));
    let fl = scaled.floor();
    fl / BigRational::from_integer(two_pow(p))
}

fn ceil_to_grid(x: &BigRational, p: u32) -> BigRational {
    let scaled = x * BigRational::from_integer(two_pow(p));
    let cl = scaled.ceil();
    cl / BigRational::from_integer(two_pow(p))
}

impl RInterval {
    pub fn point(x: BigRational) -> RInterval {
        RInterval { lo: x.clone(), hi: x, prec: EXACT }
    }

    pub fn new(lo: BigRational, hi: BigRational, prec: u32) -> RInterval {
        debug_assert!(lo <= hi);
        RInterval { lo, hi, prec }.rounded()
    }

    fn rounded(self) -> RInterval {
        if self.prec == EXACT {
            return self;
        }
        RInterval {
            lo: floor_to_grid(&self.lo, self.prec),
            hi: ceil_to_grid(&self.hi, self.prec),
            prec: self.prec,
        }
    }

    fn join_prec(&self, other: &RInterval) -> u32 {
        self.prec.min(other.prec)
    }

    pub fn add(&self, other: &RInterval) -> RInterval {
        RInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            prec: self.join_prec(other),
        }
        .rounded()
    }

    pub fn neg(&self) -> RInterval {
        RInterval { lo: -self.hi.clone(), hi: -self.lo.clone(), prec: self.prec }
    }

    pub fn sub(&self, other: &RInterval) -> RInterval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RInterval) -> RInterval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        RInterval { lo, hi, prec: self.join_prec(other) }.rounded()
    }

    pub fn recip(&self) -> Option<RInterval> {
        if self.contains_zero() {
            return None;
        }
        Some(
            RInterval { lo: self.hi.recip(), hi: self.lo.recip(), prec: self.prec }.rounded(),
        )
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    pub fn contains_f64_approx(&self, v: f64, tol: f64) -> bool {
        (self.mid_f64() - v).abs() <= tol + self.width().to_f64().unwrap_or(f64::INFINITY)
    }
}

impl CInterval {
    pub fn zero() -> CInterval {
        CInterval {
            re: RInterval::point(BigRational::zero()),
            im: RInterval::point(BigRational::zero()),
        }
    }

    pub fn exact_one() -> CInterval {
        CInterval {
            re: RInterval::point(BigRational::one()),
            im: RInterval::point(BigRational::zero()),
        }
    }

    pub fn from_rational(q: BigRational) -> CInterval {
        CInterval { re: RInterval::point(q), im: RInterval::point(BigRational::zero()) }
    }

    pub fn add(&self, other: &CInterval) -> CInterval {
        CInterval { re: self.re.add(&other.re), im: self.im.add(&other.im) }
    }

    pub fn sub(&self, other: &CInterval) -> CInterval {
        CInterval { re: self.re.sub(&other.re), im: self.im.sub(&other.im) }
    }

    pub fn neg(&self) -> CInterval {
        CInterval { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, other: &CInterval) -> CInterval {
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        CInterval { re, im }
    }

    /// 1/z = conj(z)/|z|^2; fails when the norm interval contains zero.
    pub fn recip(&self) -> Option<CInterval> {
        let norm = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let inv = norm.recip()?;
        Some(CInterval { re: self.re.mul(&inv), im: self.im.neg().mul(&inv) })
    }

    pub fn overlaps(&self, other: &CInterval) -> bool {
        self.re.lo <= other.re.hi
            && other.re.lo <= self.re.hi
            && self.im.lo <= other.im.hi
            && other.im.lo <= self.im.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    /// Upper bound on max(width(re), width(im)) as f64.
    pub fn width_bound(&self) -> f64 {
        let w1 = self.re.width().to_f64().unwrap_or(f64::INFINITY);
        let w2 = self.im.width().to_f64().unwrap_or(f64::INFINITY);
        w1.max(w2) * (1.0 + 1e-15) + f64::MIN_POSITIVE
    }

    pub fn dist_bound(&self, other: &CInterval) -> f64 {
        let dre = (self.re.mid_f64() - other.re.mid_f64()).abs();
        let dim = (self.im.mid_f64() - other.im.mid_f64()).abs();
        dre.max(dim) + self.width_bound() + other.width_bound()
    }

    /// Enclosure of e^{i m π / r} at the given dyadic precision.
    pub fn root_of_unity(m: i64, r: i64, prec: u32) -> CInterval {
        let pi = pi_enclosure(prec + 16);
        let q = BigRational::new(BigInt::from(m), BigInt::from(r));
        let theta_lo = &pi.lo * &q;
        let theta_hi = &pi.hi * &q;
        let (lo, hi) = if theta_lo <= theta_hi { (theta_lo, theta_hi) } else { (theta_hi, theta_lo) };
        let mid = floor_to_grid(&((&lo + &hi) / BigRational::from_integer(BigInt::from(2))), prec + 16);
        let slack = {
            let a = (&hi - &mid).abs();
            let b = (&mid - &lo).abs();
            if a > b {
                a
            } else {
                b
            }
        };
        // |cos x - cos x0|, |sin x - sin x0| ≤ |x - x0|.
        let (c, s) = cos_sin_taylor(&mid, prec + 16);
        let re = RInterval::new(&c.lo - &slack, &c.hi + &slack, prec);
        let im = RInterval::new(&s.lo - &slack, &s.hi + &slack, prec);
        CInterval { re, im }
    }
}

/// Machin's formula with alternating-series remainder bounds.
fn pi_enclosure(prec: u32) -> RInterval {
    let a5 = arctan_recip(5, prec + 8);
    let a239 = arctan_recip(239, prec + 8);
    let lo = BigRational::from_integer(BigInt::from(16)) * &a5.lo
        - BigRational::from_integer(BigInt::from(4)) * &a239.hi;
    let hi = BigRational::from_integer(BigInt::from(16)) * &a5.hi
        - BigRational::from_integer(BigInt::from(4)) * &a239.lo;
    RInterval::new(lo, hi, prec)
}

/// arctan(1/n) for integer n ≥ 2 via the alternating Taylor series.
fn arctan_recip(n: u64, prec: u32) -> RInterval {
    let x = BigRational::new(BigInt::one(), BigInt::from(n));
    let x2 = &x * &x;
    let mut term = x.clone();
    let mut sum = BigRational::zero();
    let mut k: u64 = 0;
    let eps = BigRational::new(BigInt::one(), two_pow(prec));
    loop {
        let contrib = &term / BigRational::from_integer(BigInt::from(2 * k + 1));
        if k % 2 == 0 {
            sum += &contrib;
        } else {
            sum -= &contrib;
        }
        term = &term * &x2;
        k += 1;
        let next = &term / BigRational::from_integer(BigInt::from(2 * k + 1));
        if next < eps {
            // Alternating series: remainder within ±next.
            return RInterval::new(&sum - &next, &sum + &next, prec);
        }
    }
}

/// Taylor enclosures of (cos x0, sin x0) at an exact rational x0, |x0| < 8.
fn cos_sin_taylor(x0: &BigRational, prec: u32) -> (RInterval, RInterval) {
    let eps = BigRational::new(BigInt::one(), two_pow(prec));
    let x2 = x0 * x0;
    // cos: Σ (-1)^k x^{2k}/(2k)!, sin: Σ (-1)^k x^{2k+1}/(2k+1)!
    let mut cos_terms: Vec<BigRational> = Vec::new();
    let mut sin_terms: Vec<BigRational> = Vec::new();
    let mut tc = BigRational::one();
    let mut ts = x0.clone();
    let mut k: u64 = 0;
    loop {
        cos_terms.push(tc.clone());
        sin_terms.push(ts.clone());
        // advance to k+1
        let d1 = BigRational::from_integer(BigInt::from((2 * k + 1) * (2 * k + 2)));
        let d2 = BigRational::from_integer(BigInt::from((2 * k + 2) * (2 * k + 3)));
        tc = &tc * &x2 / d1;
        ts = &ts * &x2 / d2;
        k += 1;
        // Once the ratio of consecutive terms is below 1/2, the tail is
        // dominated by a geometric series with ratio 1/2.
        let ratio_ok = x2.clone() < BigRational::from_integer(BigInt::from((2 * k + 1) * (2 * k + 2) / 2));
        if ratio_ok && tc.abs() < eps && ts.abs() < eps {
            break;
        }
        assert!(k < 10_000, "taylor series failed to converge");
    }
    let tail_c = tc.abs() * BigRational::from_integer(BigInt::from(2));
    let tail_s = ts.abs() * BigRational::from_integer(BigInt::from(2));
    let mut c = BigRational::zero();
    for (i, t) in cos_terms.iter().enumerate() {
        if i % 2 == 0 {
            c += t;
        } else {
            c -= t;
        }
    }
    let mut s = BigRational::zero();
    for (i, t) in sin_terms.iter().enumerate() {
        if i % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
    }
    (
        RInterval::new(&c - &tail_c, &c + &tail_c, prec),
        RInterval::new(&s - &tail_s, &s + &tail_s, prec),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_matches_f64() {
        let pi = pi_enclosure(80);
        assert!(pi.contains_f64_approx(core::f64::consts::PI, 1e-14));
        assert!(pi.width().to_f64().unwrap() < 2f64.powi(-70));
    }

    #[test]
    fn roots_of_unity_lie_on_circle() {
        for (m, r) in [(1i64, 3i64), (1, 5), (3, 5), (1, 7)] {
            let z = CInterval::root_of_unity(m, r, 96);
            let norm = z.re.mul(&z.re).add(&z.im.mul(&z.im));
            assert!(norm.contains(&BigRational::one()), "norm for m={m} r={r}");
            assert!(z.width_bound() < 2f64.powi(-80));
        }
    }

    #[test]
    fn interval_product_encloses() {
        let a = RInterval::new(
            BigRational::new(BigInt::from(1), BigInt::from(3)),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            64,
        );
        let b = a.neg();
        let p = a.mul(&b);
        assert!(p.contains(&BigRational::new(BigInt::from(-1), BigInt::from(6))));
        assert!(p.lo <= BigRational::new(BigInt::from(-1), BigInt::from(4)));
    }

    #[test]
    fn complex_recip() {
        let z = CInterval {
            re: RInterval::point(BigRational::from_integer(BigInt::from(3))),
            im: RInterval::point(BigRational::from_integer(BigInt::from(4))),
        };
        let w = z.recip().unwrap();
        assert!(w.re.contains(&BigRational::new(BigInt::from(3), BigInt::from(25))));
        assert!(w.im.contains(&BigRational::new(BigInt::from(-4), BigInt::from(25))));
        assert!(CInterval::zero().recip().is_none());
    }
}
