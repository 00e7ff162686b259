//! Exact arithmetic for the polynomial 6j-symbols of the unrolled quantum
//! sl(2) at a 2r-th root of unity, together with the state-sum invariant of
//! H-triangulations built from them.
//!
//! The crate is organised bottom-up:
//!
//! * [`cyclotomic`] — the coefficient field Q(ξ), ξ a primitive 2r-th root
//!   of unity, represented exactly modulo the cyclotomic polynomial.
//! * [`interval`] — rational complex interval arithmetic used for numeric
//!   cross-checks and the numeric state-sum mode.
//! * [`laurent`] — sparse multivariate Laurent polynomials over Q(ξ) and a
//!   formal fraction field for identity checking.
//! * [`qcalc`] — quantum integers, factorials, binomials and the shifted
//!   factorial products entering the 6j formulas.
//! * [`sixj`] — the three-variable Laurent polynomials J_{i1,i2,i3}.
//! * [`identities`] — exact verification suites (symmetries, pentagon,
//!   orthonormality, theta, recurrences).
//! * [`repcat`] — the explicit module calculus (Y/Z/X maps, dualities) and
//!   the tetrahedron contraction used as an independent oracle for J.
//! * [`statesum`] — H-triangulations, G-colorings, states and the invariant.
//!
//! Everything is `no_std + alloc`; IO, JSON and the command line live in the
//! companion `sixj-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cyclotomic;
pub mod interval;
pub mod laurent;
pub mod qcalc;
pub mod rng;
pub mod sixj;
pub mod identities;
pub mod repcat;
pub mod statesum;

pub use cyclotomic::{CycNum, Params};
pub use laurent::{LPoly, Mono, RFunc, Var};
pub use qcalc::IndexTriple;
