//! Arithmetic over the completions of Q.

mod hensel;
mod hilbert;
mod mpoly;
mod place;

pub use hensel::{hensel_lift, hensel_lift_detailed, hensel_verify, HenselCertificate, HenselLift, HenselSystem};
pub use hilbert::{hilbert_product_check, hilbert_symbol, is_local_norm, is_local_square, support_places};
pub use mpoly::MPoly;
pub use place::{odd_primes_up_to, Place};

use crate::arith::{ArithError, Integer, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("Hilbert symbol arguments must be nonzero")]
    ZeroArgument,
    #[error("{value} is not integral at {prime}")]
    NotIntegral { value: Rational, prime: Integer },
    #[error("not Hensel-liftable at given point")]
    NotLiftable,
    #[error("malformed Hensel system: {0}")]
    Malformed(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
