//! Admissible parameters: triples (p, b, d), the gcd witness a, sextuples
//! (p, b, d, α, β, γ) with their conic witness, and the extension step that
//! produces new sextuples from old ones.

mod extend;
mod sextuple;
mod triple;

pub use extend::{b_polynomial, enumerate_ab, extend, extension_constant, extension_function, h_polynomial};
pub use sextuple::{check_conditions, derive, family_seed, Derived, Sextuple};
pub use triple::{check_triple, find_gcd_witness_a, search_triples, Triple, TripleHit, TripleVariant};

use crate::arith::{ArithError, Integer};
use crate::conic::ConicError;
use crate::ratfunc::RatFuncError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot factor H1 = {h1} within the trial-division bound {bound}")]
    Factorization { h1: Integer, bound: u64 },
    #[error("gcd identity fails for a = {a}")]
    GcdIdentity { a: Integer },
    #[error("beta = {0} is not divisible by p")]
    BetaNotDivisible(String),
    #[error("extension constant has zero denominator")]
    ZeroDenominator,
    #[error("condition {name} fails: {detail}")]
    Condition { name: &'static str, detail: String },
    #[error("extended sextuple fails {0:?}")]
    Postcondition(Vec<String>),
    #[error(transparent)]
    Conic(#[from] ConicError),
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
