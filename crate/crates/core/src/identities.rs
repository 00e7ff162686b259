//! Exact verification suites for the global identities satisfied by the J
//! polynomials: the Biedenharn-Elliott identity, orthonormality, the theta
//! normalisation, the symmetry/overlap/boundary sweeps, and the recurrence
//! relations.  Identities with denominators are checked as exact fraction
//! equalities by cross-multiplication, never numerically.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cyclotomic::Params;
use crate::laurent::{LPoly, Mono, RFunc, Subst, Var};
use crate::qcalc::{bar_reduce, dpoly, fshift, hset_enumerate, qbinom, qbracket, IndexTriple};
use crate::rng::SplitMix64;
use crate::sixj::{boundary_high, boundary_low, case1_applicable, case2_applicable, j_case1, j_case2, symmetry_orbit, JTable};

fn q(p: &Params, v: Var) -> Mono {
    Mono::var(p, v)
}

fn qq(p: &Params, a: Var, b: Var, k: i64) -> Mono {
    q(p, a).mul(p, &q(p, b).inv(p)).xi_shift(p, k)
}

/// D with its variable replaced by an invertible monomial.
fn d_at(p: &Params, image: &Mono) -> LPoly {
    let mut s = Subst::identity();
    s.set(Var::Q1, image.clone());
    dpoly(p).substitute(p, &s)
}

fn j_at(p: &Params, table: &JTable, t: &IndexTriple, images: [Mono; 3]) -> LPoly {
    let mut s = Subst::identity();
    s.set(Var::Q1, images[0].clone());
    s.set(Var::Q2, images[1].clone());
    s.set(Var::Q3, images[2].clone());
    table.get(t).substitute(p, &s)
}

/// The Biedenharn-Elliott identity for one choice of i1..i6 ∈ Z, checked as
/// an exact equality of fractions in q0..q3.
pub fn check_be(p: &Params, table: &JTable, idx: [i64; 6]) -> Result<(), String> {
    let [i1, i2, i3, i4, i5, i6] = idx;
    let t123 = IndexTriple::new(i1, i2, i3);
    let tp = IndexTriple::new(
        bar_reduce(p, -i1 + i5 - i6),
        bar_reduce(p, -i2 + i6 - i4),
        bar_reduce(p, -i3 + i4 - i5),
    );
    let lhs_poly = table.get(&t123).mul(
        p,
        &j_at(
            p,
            table,
            &tp,
            [
                qq(p, Var::Q0, Var::Q1, 2 * i4),
                qq(p, Var::Q0, Var::Q2, 2 * i5),
                qq(p, Var::Q0, Var::Q3, 2 * i6),
            ],
        ),
    );
    let lhs = RFunc::from_poly(lhs_poly, p);
    let mut rhs = RFunc::zero(p);
    let rp = p.rp() as i64;
    for n in -rp..=rp {
        let ip4 = bar_reduce(p, i4 - n);
        let ip5 = bar_reduce(p, i5 - n);
        let ip6 = bar_reduce(p, i6 - n);
        let q0n = q(p, Var::Q0).xi_shift(p, 2 * n);
        let f1 = j_at(p, table, &IndexTriple::new(i1, ip6, -ip5), [q0n.clone(), q(p, Var::Q2), q(p, Var::Q3)]);
        let f2 = j_at(p, table, &IndexTriple::new(i2, ip4, -ip6), [q0n.clone(), q(p, Var::Q3), q(p, Var::Q1)]);
        let f3 = j_at(p, table, &IndexTriple::new(i3, ip5, -ip4), [q0n.clone(), q(p, Var::Q1), q(p, Var::Q2)]);
        let den = d_at(p, &q0n);
        debug_assert!(!den.is_zero());
        rhs = rhs.add(p, &RFunc::new(f1.mul(p, &f2).mul(p, &f3), den));
    }
    if lhs.eq(p, &rhs) {
        Ok(())
    } else {
        let diff = lhs.sub(p, &rhs);
        Err(format!("BE failed at {:?}; difference numerator = {}", idx, diff.num.to_text()))
    }
}

/// Orthonormality: the n-sum against the Kronecker delta δ_{i1, i1'}.
pub fn check_ortho(p: &Params, table: &JTable, t: &IndexTriple, i1p: i64) -> Result<(), String> {
    let rp = p.rp() as i64;
    let (i1, i2, i3) = (t.i1, t.i2, t.i3);
    let mut sum = RFunc::zero(p);
    let d_fixed = d_at(p, &qq(p, Var::Q2, Var::Q3, -2 * i1));
    debug_assert!(!d_fixed.is_zero());
    for n in -rp..=rp {
        let f1 = j_at(
            p,
            table,
            &IndexTriple::new(i1, bar_reduce(p, i2 - n), bar_reduce(p, i3 + n)),
            [q(p, Var::Q1).xi_shift(p, 2 * n), q(p, Var::Q2), q(p, Var::Q3)],
        );
        let f2 = j_at(
            p,
            table,
            &IndexTriple::new(-i1p, bar_reduce(p, n - i2), bar_reduce(p, -i3 - n)),
            [
                q(p, Var::Q1).inv(p).xi_shift(p, -2 * n),
                q(p, Var::Q2).inv(p),
                q(p, Var::Q3).inv(p),
            ],
        );
        let den = d_fixed.mul(p, &d_at(p, &q(p, Var::Q1).xi_shift(p, 2 * n)));
        sum = sum.add(p, &RFunc::new(f1.mul(p, &f2), den));
    }
    let expect = if i1 == i1p { RFunc::from_poly(LPoly::one(p), p) } else { RFunc::zero(p) };
    if sum.eq(p, &expect) {
        Ok(())
    } else {
        Err(format!(
            "orthonormality failed at {} i1'={}; numerator = {}",
            t.key(),
            i1p,
            sum.num.to_text()
        ))
    }
}

/// The three-term recurrence: shifting (i,j) against shifts of the formal
/// colors.  Pure polynomial identity, no denominators.
pub fn check_rec(p: &Params, table: &JTable, i: i64, j: i64, k: i64) -> Result<(), String> {
    if i > p.rp() as i64 || j < -(p.rp() as i64) {
        return Err(format!("rec precondition fails at ({},{},{})", i, j, k));
    }
    let rp = p.rp() as i64;
    let lhs = LPoly::constant(p.qint(i + rp))
        .mul(p, &qbracket(p, &qq(p, Var::Q2, Var::Q3, -i + rp + 2)))
        .mul(p, table.get(&IndexTriple::new(i - 1, j + 1, k)));
    let shift_g2 = {
        // γ ↦ γ - 2
        let mut s = Subst::identity();
        s.set(Var::Q3, q(p, Var::Q3).xi_shift(p, -2));
        s
    };
    let shift_ab_up_g_down = {
        // α ↦ α+1, β ↦ β+1, γ ↦ γ-1
        let mut s = Subst::identity();
        s.set(Var::Q1, q(p, Var::Q1).xi_shift(p, 1));
        s.set(Var::Q2, q(p, Var::Q2).xi_shift(p, 1));
        s.set(Var::Q3, q(p, Var::Q3).xi_shift(p, -1));
        s
    };
    let jijk = table.get(&IndexTriple::new(i, j, k));
    let rhs1 = qbracket(p, &q(p, Var::Q3).xi_shift(p, i + rp - 1))
        .mul(p, &qbracket(p, &q(p, Var::Q1).xi_shift(p, j + rp + 1)))
        .mul(p, &jijk.substitute(p, &shift_g2));
    let rhs2 = qbracket(p, &q(p, Var::Q3).xi_shift(p, -1))
        .mul(p, &qbracket(p, &q(p, Var::Q1).xi_shift(p, -k - rp)))
        .mul(p, &jijk.substitute(p, &shift_ab_up_g_down));
    if lhs == rhs1.add(p, &rhs2) {
        Ok(())
    } else {
        Err(format!("recurrence failed at ({},{},{})", i, j, k))
    }
}

/// Which of the generalized recurrences to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenRec {
    Sym,
    Up(i64),
    Down(i64),
}

/// The generalized recurrences with cleared prefactors.
pub fn check_rec_gen(
    p: &Params,
    table: &JTable,
    t: &IndexTriple,
    which: GenRec,
) -> Result<(), String> {
    let rp = p.rp() as i64;
    let (i, j, k) = (t.i1, t.i2, t.i3);
    let l = -t.sum();
    let fail = |tag: &str| Err(format!("{} precondition fails at {}", tag, t.key()));
    match which {
        GenRec::Sym => {
            if !(t.sum() < rp && k < rp && t.in_h(p)) {
                return fail("recsym");
            }
            let lhs = LPoly::constant(p.qint(k - rp))
                .mul(p, &qbracket(p, &q(p, Var::Q1).inv(p).xi_shift(p, k - rp)))
                .mul(p, table.get(t));
            let tk1 = IndexTriple::new(i, j, k + 1);
            let beta_down = {
                let mut s = Subst::identity();
                s.set(Var::Q2, q(p, Var::Q2).xi_shift(p, -1));
                s
            };
            let rhs = qbracket(p, &qq(p, Var::Q2, Var::Q1, k - rp))
                .mul(p, &qbracket(p, &qq(p, Var::Q2, Var::Q3, -2 * i - l - rp)))
                .mul(p, table.get(&tk1))
                .add(
                    p,
                    &qbracket(p, &qq(p, Var::Q1, Var::Q2, -2 * k - 1))
                        .mul(p, &qbracket(p, &qq(p, Var::Q3, Var::Q2, i - rp)))
                        .mul(p, &table.get(&tk1).substitute(p, &beta_down)),
                );
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("recsym failed at {}", t.key()))
            }
        }
        GenRec::Up(nn) => {
            if !(nn > 0 && t.sum() <= rp - nn && k <= rp - nn && t.in_h(p)) {
                return fail("recgenup");
            }
            // Fn(N, ξ^{k-r'}) Fn(N, q1^{-1} ξ^{k-r'}) J_{i,j,k}
            let lhs = fshift(p, nn, &Mono::xi(p, k - rp))
                .mul(p, &fshift(p, nn, &q(p, Var::Q1).inv(p).xi_shift(p, k - rp)))
                .mul(p, table.get(t));
            let mut rhs = LPoly::zero();
            let target = IndexTriple::new(i, j, k + nn);
            for n in 0..=nn {
                let mut s = Subst::identity();
                s.set(Var::Q2, q(p, Var::Q2).xi_shift(p, -n));
                let term = LPoly::constant(qbinom(p, nn, n).map_err(|e| format!("{}", e))?)
                    .mul(p, &fshift(p, nn - n, &qq(p, Var::Q2, Var::Q1, k - rp)))
                    .mul(p, &fshift(p, nn - n, &qq(p, Var::Q2, Var::Q3, -2 * i - l - rp)))
                    .mul(p, &fshift(p, n, &qq(p, Var::Q1, Var::Q2, -2 * k - nn)))
                    .mul(p, &fshift(p, n, &qq(p, Var::Q3, Var::Q2, i - rp)))
                    .mul(p, &table.get(&target).substitute(p, &s));
                rhs = rhs.add(p, &term);
            }
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("recgenup N={} failed at {}", nn, t.key()))
            }
        }
        GenRec::Down(nn) => {
            if !(nn > 0 && t.sum() >= nn - rp && k >= nn - rp && t.in_h(p)) {
                return fail("recgendown");
            }
            let lhs = fshift(p, nn, &Mono::xi(p, l - rp))
                .mul(p, &fshift(p, nn, &qq(p, Var::Q1, Var::Q3, 2 * j + l - rp)))
                .mul(p, table.get(t));
            let mut rhs = LPoly::zero();
            let target = IndexTriple::new(i, j, k - nn);
            for n in 0..=nn {
                let mut s = Subst::identity();
                s.set(Var::Q2, q(p, Var::Q2).xi_shift(p, n));
                let term = LPoly::constant(qbinom(p, nn, n).map_err(|e| format!("{}", e))?)
                    .mul(p, &fshift(p, nn - n, &qq(p, Var::Q1, Var::Q2, -2 * k - l - rp)))
                    .mul(p, &fshift(p, nn - n, &q(p, Var::Q2).inv(p).xi_shift(p, -k - rp)))
                    .mul(p, &fshift(p, n, &qq(p, Var::Q2, Var::Q1, 2 * k - nn)))
                    .mul(p, &fshift(p, n, &q(p, Var::Q2).xi_shift(p, -i - rp)))
                    .mul(p, &table.get(&target).substitute(p, &s));
                rhs = rhs.add(p, &term);
            }
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("recgendown N={} failed at {}", nn, t.key()))
            }
        }
    }
}

/// Theta normalisation: delegates to the module-calculus contraction and
/// asserts the resulting Laurent polynomial is the constant 1.
pub fn check_theta(p: &Params, k: i64) -> Result<(), String> {
    if k.unsigned_abs() > p.rp() as u64 {
        return Err(format!("theta height {} out of range", k));
    }
    let theta = crate::repcat::theta_oracle(p, k).map_err(|e| format!("{}", e))?;
    if theta == LPoly::one(p) {
        Ok(())
    } else {
        Err(format!("theta(k={}) = {}", k, theta.to_text()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Card,
    Sym,
    Overlap,
    Boundary,
    Rec,
    Be,
    Ortho,
    Theta,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Card => "card",
            Suite::Sym => "sym",
            Suite::Overlap => "overlap",
            Suite::Boundary => "boundary",
            Suite::Rec => "rec",
            Suite::Be => "be",
            Suite::Ortho => "ortho",
            Suite::Theta => "theta",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "card" => Suite::Card,
            "sym" => Suite::Sym,
            "overlap" => Suite::Overlap,
            "boundary" => Suite::Boundary,
            "rec" => Suite::Rec,
            "be" => Suite::Be,
            "ortho" => Suite::Ortho,
            "theta" => Suite::Theta,
            _ => return None,
        })
    }

    pub fn all() -> &'static [Suite] {
        &[
            Suite::Card,
            Suite::Sym,
            Suite::Overlap,
            Suite::Boundary,
            Suite::Rec,
            Suite::Be,
            Suite::Ortho,
            Suite::Theta,
        ]
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Sampling {
    Exhaustive,
    Sampled { count: u64, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub key: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: Vec<Instance>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.instances.iter().all(|i| i.pass)
    }
}

fn push(instances: &mut Vec<Instance>, key: String, res: Result<(), String>) {
    match res {
        Ok(()) => instances.push(Instance { key, pass: true, witness: None }),
        Err(w) => instances.push(Instance { key, pass: false, witness: Some(w) }),
    }
}

/// Run the selected suites.  Exhaustive tiers sweep every instance; sampled
/// tiers draw deterministically from the given seed.  The report lists every
/// instance in a stable order.
pub fn run_suite(p: &Params, table: &JTable, suites: &[Suite], sampling: Sampling) -> Vec<SuiteReport> {
    let rp = p.rp() as i64;
    let mut out = Vec::new();
    for &suite in suites {
        let mut instances = Vec::new();
        match suite {
            Suite::Card => {
                let n = hset_enumerate(p).len() as i64;
                let expect = crate::qcalc::hset_card(p);
                push(
                    &mut instances,
                    format!("card rp={}", p.rp()),
                    if n == expect {
                        Ok(())
                    } else {
                        Err(format!("enumerated {} but formula gives {}", n, expect))
                    },
                );
            }
            Suite::Sym => {
                for t in hset_enumerate(p) {
                    let jt = table.get(&t);
                    let mut ok = Ok(());
                    for (u, s) in symmetry_orbit(p, &t) {
                        if table.get(&u).substitute(p, &s) != *jt {
                            ok = Err(format!("orbit element {} disagrees", u.key()));
                            break;
                        }
                    }
                    push(&mut instances, format!("sym {}", t.key()), ok);
                }
            }
            Suite::Overlap => {
                for t in hset_enumerate(p) {
                    if case1_applicable(p, &t) && case2_applicable(p, &t) {
                        let res = match (j_case1(p, &t), j_case2(p, &t)) {
                            (Ok(a), Ok(b)) if a == b => Ok(()),
                            (Ok(_), Ok(_)) => Err(String::from("case formulas disagree")),
                            (Err(e), _) | (_, Err(e)) => Err(format!("{}", e)),
                        };
                        push(&mut instances, format!("overlap {}", t.key()), res);
                    }
                }
            }
            Suite::Boundary => {
                for t in hset_enumerate(p) {
                    if t.sum() == rp {
                        let res = match boundary_low(p, &t) {
                            Ok(b) if b == *table.get(&t) => Ok(()),
                            Ok(_) => Err(String::from("low form disagrees")),
                            Err(e) => Err(format!("{}", e)),
                        };
                        push(&mut instances, format!("boundary-low {}", t.key()), res);
                    }
                    if t.sum() == -rp {
                        let res = match boundary_high(p, &t) {
                            Ok(b) if b == *table.get(&t) => Ok(()),
                            Ok(_) => Err(String::from("high form disagrees")),
                            Err(e) => Err(format!("{}", e)),
                        };
                        push(&mut instances, format!("boundary-high {}", t.key()), res);
                    }
                }
            }
            Suite::Rec => {
                for i in -rp..=rp {
                    for j in -rp..=rp {
                        for k in -rp..=rp {
                            if i <= rp && j >= -rp {
                                push(
                                    &mut instances,
                                    format!("rec ({},{},{})", i, j, k),
                                    check_rec(p, table, i, j, k),
                                );
                            }
                        }
                    }
                }
                for t in hset_enumerate(p) {
                    if t.sum() < rp && t.i3 < rp {
                        push(
                            &mut instances,
                            format!("recsym {}", t.key()),
                            check_rec_gen(p, table, &t, GenRec::Sym),
                        );
                    }
                    for nn in 1..=2 {
                        if t.sum() <= rp - nn && t.i3 <= rp - nn {
                            push(
                                &mut instances,
                                format!("recgenup N={} {}", nn, t.key()),
                                check_rec_gen(p, table, &t, GenRec::Up(nn)),
                            );
                        }
                        if t.sum() >= nn - rp && t.i3 >= nn - rp {
                            push(
                                &mut instances,
                                format!("recgendown N={} {}", nn, t.key()),
                                check_rec_gen(p, table, &t, GenRec::Down(nn)),
                            );
                        }
                    }
                }
            }
            Suite::Be => match sampling {
                Sampling::Exhaustive => {
                    for i1 in -rp..=rp {
                        for i2 in -rp..=rp {
                            for i3 in -rp..=rp {
                                for i4 in -rp..=rp {
                                    for i5 in -rp..=rp {
                                        for i6 in -rp..=rp {
                                            let idx = [i1, i2, i3, i4, i5, i6];
                                            push(
                                                &mut instances,
                                                format!("be {:?}", idx),
                                                check_be(p, table, idx),
                                            );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                Sampling::Sampled { count, seed } => {
                    let mut rng = SplitMix64::new(seed);
                    for _ in 0..count {
                        let mut idx = [0i64; 6];
                        for v in idx.iter_mut() {
                            *v = rng.range_i64(-rp, rp);
                        }
                        push(&mut instances, format!("be {:?}", idx), check_be(p, table, idx));
                    }
                }
            },
            Suite::Ortho => match sampling {
                Sampling::Exhaustive => {
                    for t in hset_enumerate(p) {
                        for i1p in -rp..=rp {
                            push(
                                &mut instances,
                                format!("ortho {} i1'={}", t.key(), i1p),
                                check_ortho(p, table, &t, i1p),
                            );
                        }
                    }
                }
                Sampling::Sampled { count, seed } => {
                    let mut rng = SplitMix64::new(seed);
                    let hs = hset_enumerate(p);
                    for _ in 0..count {
                        let t = hs[rng.below(hs.len() as u64) as usize];
                        let i1p = rng.range_i64(-rp, rp);
                        push(
                            &mut instances,
                            format!("ortho {} i1'={}", t.key(), i1p),
                            check_ortho(p, table, &t, i1p),
                        );
                    }
                }
            },
            Suite::Theta => {
                for k in -rp..=rp {
                    push(&mut instances, format!("theta k={}", k), check_theta(p, k));
                }
            }
        }
        instances.sort_by(|a, b| a.key.cmp(&b.key));
        out.push(SuiteReport { suite, instances });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn be_all_zero_indices() {
        let p = Params::new(1);
        let table = JTable::build(&p).unwrap();
        check_be(&p, &table, [0; 6]).unwrap();
    }

    #[test]
    fn be_spot_checks() {
        let p = Params::new(1);
        let table = JTable::build(&p).unwrap();
        for idx in [[1, 0, 0, 0, 0, 0], [0, 1, -1, 1, 0, 1], [1, 1, 1, -1, -1, -1], [-1, 0, 1, 0, 1, -1]] {
            check_be(&p, &table, idx).unwrap();
        }
    }

    #[test]
    fn be_detects_corruption() {
        let p = Params::new(1);
        let mut table = JTable::build(&p).unwrap();
        // perturb one coefficient of J_{0,0,0}
        let t = IndexTriple::new(0, 0, 0);
        let bad = table.get(&t).add(&p, &LPoly::constant(p.xi_pow(1)));
        table_override(&mut table, t, bad);
        assert!(check_be(&p, &table, [0; 6]).is_err());
    }

    fn table_override(table: &mut JTable, t: IndexTriple, poly: LPoly) {
        // tests poke the private map through a crate-internal accessor
        table.override_for_tests(t, poly);
    }

    #[test]
    fn ortho_examples() {
        let p = Params::new(1);
        let table = JTable::build(&p).unwrap();
        let t = IndexTriple::new(0, 0, 0);
        check_ortho(&p, &table, &t, 0).unwrap();
        assert!(check_ortho(&p, &table, &t, 1).is_ok());
        assert!(check_ortho(&p, &table, &t, -1).is_ok());
    }

    #[test]
    fn rec_spot_checks() {
        let p = Params::new(1);
        let table = JTable::build(&p).unwrap();
        check_rec(&p, &table, 0, 0, 0).unwrap();
        check_rec(&p, &table, 1, 0, 0).unwrap();
        check_rec(&p, &table, 0, -1, 1).unwrap();
    }

    #[test]
    fn recgen_spot_checks() {
        let p = Params::new(1);
        let table = JTable::build(&p).unwrap();
        let t = IndexTriple::new(0, 0, 0);
        check_rec_gen(&p, &table, &t, GenRec::Sym).unwrap();
        check_rec_gen(&p, &table, &t, GenRec::Up(1)).unwrap();
        check_rec_gen(&p, &table, &t, GenRec::Down(1)).unwrap();
        // N = 2 needs sum and k at distance ≥ 2 from the matching wall
        check_rec_gen(&p, &table, &IndexTriple::new(0, 0, -1), GenRec::Up(2)).unwrap();
        check_rec_gen(&p, &table, &IndexTriple::new(0, 0, 1), GenRec::Down(2)).unwrap();
        check_rec_gen(&p, &table, &IndexTriple::new(1, -1, 1), GenRec::Down(1)).unwrap();
    }

    #[test]
    fn report_is_deterministic() {
        let p = Params::new(2);
        let table = JTable::build(&p).unwrap();
        let a = run_suite(&p, &table, &[Suite::Be], Sampling::Sampled { count: 5, seed: 42 });
        let b = run_suite(&p, &table, &[Suite::Be], Sampling::Sampled { count: 5, seed: 42 });
        let ka: Vec<_> = a[0].instances.iter().map(|i| (i.key.clone(), i.pass)).collect();
        let kb: Vec<_> = b[0].instances.iter().map(|i| (i.key.clone(), i.pass)).collect();
        assert_eq!(ka, kb);
        assert!(a[0].all_pass());
    }
}
