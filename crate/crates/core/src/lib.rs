//! Exact arithmetic toolkit for explicit families of hyperelliptic curves
//! that are everywhere locally solvable but have no rational points.
//!
//! Layers, bottom up: [`arith`] (integers, rationals, primes), [`local`]
//! (Hilbert symbols, Hensel lifting), [`conic`], [`construct`] (parameter
//! triples and sextuples), [`ratfunc`] (polynomials and rational functions,
//! the family constructions), and [`curve`] (curve emission and checks).

// Error enums carry the offending values; boxing them buys nothing here.
#![allow(clippy::result_large_err, clippy::module_inception)]

pub mod arith;
pub mod local;
pub mod ratfunc;
pub mod conic;
pub mod construct;
pub mod report;
pub mod sample;
pub mod curve;
pub mod error;

pub use error::{with_jobs, Error};
