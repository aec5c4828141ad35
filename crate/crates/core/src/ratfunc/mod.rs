//! Univariate polynomials and rational functions over Q, and the rational
//! functions used to build the curve families.

mod avoid;
mod family;
mod poly;
mod ratfunc;
pub mod reference;

pub use avoid::{build_avoidance_f, build_gamma, check_d_hypotheses, AvoidanceData};
pub use family::{build_family_functions, family_functions, FamilyFunctions};
pub use poly::Polynomial;
pub use ratfunc::{rational_roots, RationalFunction};

use crate::arith::{ArithError, Integer, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFuncError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at {0}")]
    Pole(Rational),
    #[error("composition lands on a pole of the outer function")]
    ComposeIntoPole,
    #[error("condition (D) fails: numerator {a} of zero/pole {z} is divisible by {l}")]
    ConditionD { z: Rational, a: Integer, l: Integer },
    #[error("{eps} is a square modulo {q}")]
    SquareModQ { eps: Integer, q: Integer },
    #[error("{0}")]
    Precondition(String),
    #[error("expected a ratio of even quartics with integer coefficients")]
    Shape,
    #[error("{what}: coefficient of T^{index} is {got}, expected {expected}")]
    Mismatch { what: String, index: usize, expected: Rational, got: Rational },
    #[error("sampled check failed: {0}")]
    Sample(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
