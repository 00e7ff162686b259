//! Integer Smith normal form with transformation matrices, and the homology
//! presentation H1 = ker ∂1 / im ∂2 of the dual complex with coordinates for
//! integral 1-cycles.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type Mat = Vec<Vec<BigInt>>;

fn mat_from_i64(m: &[Vec<i64>]) -> Mat {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn identity(n: usize) -> Mat {
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::from(1);
    }
    m
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (ra, ca) = (a.len(), a[0].len());
    let cb = b[0].len();
    debug_assert_eq!(ca, b.len());
    let mut out = vec![vec![BigInt::zero(); cb]; ra];
    for i in 0..ra {
        for k in 0..ca {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cb {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// U · A · V = D with U, V unimodular.  `u`, `v`, and the inverse of `v`
/// are all tracked (row/column operations mirrored on identity matrices).
pub struct SnfResult {
    pub d: Mat,
    pub u: Mat,
    pub v: Mat,
    pub vinv: Mat,
    pub rank: usize,
}

/// Smith normal form by pivoting on the minimal nonzero entry.
pub fn snf(a: &Mat) -> SnfResult {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut d = a.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut vinv = identity(cols);
    let mut k = 0usize;
    while k < rows.min(cols) {
        // find a minimal-|entry| pivot in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if d[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if d[i][j].abs() < d[pi][pj].abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        d.swap(k, pi);
        u.swap(k, pi);
        if pj != k {
            for row in d.iter_mut() {
                row.swap(k, pj);
            }
            for row in v.iter_mut() {
                row.swap(k, pj);
            }
            vinv.swap(k, pj);
        }
        if d[k][k].is_negative() {
            for row in d.iter_mut() {
                row[k] = -row[k].clone();
            }
            for row in v.iter_mut() {
                row[k] = -row[k].clone();
            }
            for x in vinv[k].iter_mut() {
                *x = -x.clone();
            }
        }
        // clear the row and column; restart if a remainder pops up
        let mut dirty = false;
        for i in k + 1..rows {
            if d[i][k].is_zero() {
                continue;
            }
            let q = &d[i][k] / &d[k][k];
            if !q.is_zero() {
                for j in 0..cols {
                    let x = &d[i][j] - &q * &d[k][j];
                    d[i][j] = x;
                }
                for j in 0..rows {
                    let x = &u[i][j] - &q * &u[k][j];
                    u[i][j] = x;
                }
            }
            if !d[i][k].is_zero() {
                dirty = true;
            }
        }
        for j in k + 1..cols {
            if d[k][j].is_zero() {
                continue;
            }
            let q = &d[k][j] / &d[k][k];
            if !q.is_zero() {
                for i in 0..rows {
                    let x = &d[i][j] - &q * &d[i][k];
                    d[i][j] = x;
                }
                for i in 0..cols {
                    let x = &v[i][j] - &q * &v[i][k];
                    v[i][j] = x;
                }
                // vinv row op: inverse of adding q·col_k to col_j is adding
                // q·row_j to row_k
                for t in 0..cols {
                    let x = &vinv[k][t] + &q * &vinv[j][t];
                    vinv[k][t] = x;
                }
            }
            if !d[k][j].is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        // divisibility: fold any entry not divisible by the pivot into row k
        let mut fixed = true;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if (&d[i][j] % &d[k][k]).is_zero() {
                    continue;
                }
                for t in 0..cols {
                    let x = &d[k][t] + &d[i][t];
                    d[k][t] = x;
                }
                for t in 0..rows {
                    let x = &u[k][t] + &u[i][t];
                    u[k][t] = x;
                }
                fixed = false;
                break 'scan;
            }
        }
        if fixed {
            k += 1;
        }
    }
    let rank = (0..rows.min(cols)).take_while(|&i| !d[i][i].is_zero()).count();
    SnfResult { d, u, v, vinv, rank }
}

/// Presentation of H1 from the two boundary maps, with a coordinate map for
/// integral cycles.
pub struct HomologyPresentation {
    /// ∂1 (tets × face classes) and ∂2 (face classes × edge classes)
    pub d1: Mat,
    pub d2: Mat,
    snf1: SnfResult,
    /// image of ∂2 expressed in the kernel basis of ∂1, in SNF
    rel_snf: SnfResult,
    kernel_rank: usize,
    /// invariant factors > 1 of H1, then `free_rank` zero factors
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl HomologyPresentation {
    pub fn new(d1_i: Vec<Vec<i64>>, d2_i: Vec<Vec<i64>>) -> HomologyPresentation {
        let d1 = mat_from_i64(&d1_i);
        let d2 = mat_from_i64(&d2_i);
        let n1 = d1[0].len();
        let snf1 = snf(&d1);
        let kernel_rank = n1 - snf1.rank;
        // kernel coordinates of z: the tail of V1^{-1} z
        // relations: each ∂2 column is a cycle; express in kernel coordinates
        let ncols2 = d2[0].len();
        let mut rel = vec![vec![BigInt::zero(); ncols2]; kernel_rank];
        let vinv_d2 = mat_mul(&snf1.vinv, &d2);
        for c in 0..ncols2 {
            for i in 0..snf1.rank {
                debug_assert!(vinv_d2[i][c].is_zero(), "∂1 ∘ ∂2 ≠ 0");
            }
            for i in 0..kernel_rank {
                rel[i][c] = vinv_d2[snf1.rank + i][c].clone();
            }
        }
        let rel_snf = if kernel_rank > 0 && ncols2 > 0 {
            snf(&rel)
        } else {
            SnfResult {
                d: rel.clone(),
                u: identity(kernel_rank),
                v: identity(ncols2.max(1)),
                vinv: identity(ncols2.max(1)),
                rank: 0,
            }
        };
        let mut torsion = Vec::new();
        for i in 0..rel_snf.rank {
            let f = rel_snf.d[i][i].abs();
            if f > BigInt::from(1) {
                torsion.push(f);
            }
        }
        let free_rank = kernel_rank - rel_snf.rank;
        HomologyPresentation { d1, d2, snf1, rel_snf, kernel_rank, torsion, free_rank }
    }

    /// Is the cycle condition ∂1 z = 0 satisfied?
    pub fn is_cycle(&self, z: &[i64]) -> bool {
        for row in &self.d1 {
            let mut acc = BigInt::zero();
            for (c, x) in row.iter().zip(z) {
                acc += c * BigInt::from(*x);
            }
            if !acc.is_zero() {
                return false;
            }
        }
        true
    }

    /// Coordinates of the homology class of an integral 1-cycle: torsion
    /// coordinates reduced modulo the invariant factors, then the free
    /// coordinates.  Two cycles are homologous iff their keys agree.
    pub fn class_of(&self, z: &[i64]) -> Result<Vec<BigInt>, String> {
        if !self.is_cycle(z) {
            return Err(String::from("chain is not a cycle over Z"));
        }
        // kernel coordinates
        let mut kc = vec![BigInt::zero(); self.kernel_rank];
        for i in 0..self.kernel_rank {
            let row = &self.snf1.vinv[self.snf1.rank + i];
            let mut acc = BigInt::zero();
            for (c, x) in row.iter().zip(z) {
                acc += c * BigInt::from(*x);
            }
            kc[i] = acc;
        }
        // rotate into the relation SNF basis and reduce
        let mut out = Vec::with_capacity(self.kernel_rank);
        for i in 0..self.kernel_rank {
            let mut acc = BigInt::zero();
            for j in 0..self.kernel_rank {
                acc += &self.rel_snf.u[i][j] * &kc[j];
            }
            if i < self.rel_snf.rank {
                let f = self.rel_snf.d[i][i].abs();
                if f > BigInt::from(1) {
                    out.push(acc.mod_floor(&f));
                } // factor 1: coordinate dies
            } else {
                out.push(acc);
            }
        }
        Ok(out)
    }

    /// Human-readable description such as `0`, `Z`, `Z ⊕ Z/3`.
    pub fn h1_name(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for _ in 0..self.free_rank {
            parts.push(String::from("Z"));
        }
        for f in &self.torsion {
            parts.push(format!("Z/{}", f));
        }
        if parts.is_empty() {
            String::from("0")
        } else {
            parts.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(a: Vec<Vec<i64>>) {
        let m = mat_from_i64(&a);
        let r = snf(&m);
        // U A V = D
        let uav = mat_mul(&mat_mul(&r.u, &m), &r.v);
        assert_eq!(uav, r.d);
        // V V^{-1} = I
        let vv = mat_mul(&r.v, &r.vinv);
        assert_eq!(vv, identity(m[0].len()));
        // diagonal, with successive divisibility
        for i in 0..r.d.len() {
            for j in 0..r.d[0].len() {
                if i != j {
                    assert!(r.d[i][j].is_zero());
                }
            }
        }
        for i in 1..r.rank {
            assert!((&r.d[i][i] % &r.d[i - 1][i - 1]).is_zero());
        }
    }

    #[test]
    fn snf_examples() {
        check_snf(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        check_snf(vec![vec![0, 0], vec![0, 0]]);
        check_snf(vec![vec![1, 2, 3]]);
        check_snf(vec![vec![6, 10], vec![15, 4], vec![3, 1]]);
        let r = snf(&mat_from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]));
        // invariant factors 2, 2, 156 (determinant 624)
        assert_eq!(r.d[0][0], BigInt::from(2));
        assert_eq!(r.d[1][1], BigInt::from(2));
        assert_eq!(r.d[2][2], BigInt::from(156));
    }

    #[test]
    fn synthetic_h1_z_plus_z3() {
        // C2 = Z^2 → C1 = Z^3 → C0 = Z, with ∂1 = 0 and im ∂2 = <3e1, e2>,
        // conjugated by unimodular matrices to hide the structure.
        let d1 = vec![vec![0i64, 0, 0]];
        // base relations
        let base = [[3i64, 0], [0, 1], [0, 0]];
        // unimodular row mix: add row0 to row2, row1 to row0
        let mut d2 = vec![vec![0i64; 2]; 3];
        for j in 0..2 {
            d2[0][j] = base[0][j] + base[1][j];
            d2[1][j] = base[1][j];
            d2[2][j] = base[2][j] + base[0][j];
        }
        let h = HomologyPresentation::new(d1, d2);
        assert_eq!(h.free_rank, 1);
        assert_eq!(h.torsion, vec![BigInt::from(3)]);
        assert_eq!(h.h1_name(), "Z + Z/3");
        // a boundary (sum of the two relation columns) is null-homologous
        let z1 = [4i64, 1, 3];
        let zero = [0i64, 0, 0];
        assert_eq!(h.class_of(&z1).unwrap(), h.class_of(&zero).unwrap());
        // the mixed e1 has order three
        let zt = [1i64, 0, 1];
        let zt3 = [3i64, 0, 3];
        assert_ne!(h.class_of(&zt).unwrap(), h.class_of(&zero).unwrap());
        assert_eq!(h.class_of(&zt3).unwrap(), h.class_of(&zero).unwrap());
        // non-cycles are rejected once ∂1 is nontrivial
        let h2 = HomologyPresentation::new(vec![vec![1, 0, 0]], vec![vec![0], vec![0], vec![0]]);
        assert!(h2.class_of(&[1, 0, 0]).is_err());
        assert!(h2.class_of(&[0, 1, 0]).is_ok());
    }

    #[test]
    fn fixture_h1_trivial() {
        let tri = crate::statesum::s3_unknot();
        let cx = tri.analyze().unwrap();
        let h = cx.homology();
        assert_eq!(h.h1_name(), "0");
        assert_eq!(h.free_rank, 0);
        assert!(h.torsion.is_empty());
    }
}
