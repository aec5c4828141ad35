//! The hyperelliptic curves z² = f(x) of genus n built from a sextuple, and
//! the checks run on them.

mod local;
mod points;
mod separability;
mod threefold;

pub use local::{local_solvability_report, LocalEntry, LocalReport, LocalStatus};
pub use points::{search_rational_points, CurvePoint};
pub use separability::{
    family_separability_input, separability_check, separability_input, separability_oracle, SeparabilityInput, SeparabilityResult,
};
pub use threefold::{
    threefold_2adic_obstruction_scan, threefold_invariant, threefold_local_witness, ThreefoldCase, ThreefoldScan, ThreefoldWitness,
};

use crate::arith::{pow, rat_int, serde_str, ArithError, Rational};
use crate::construct::{derive, ConstructError, Sextuple};
use crate::local::LocalError;
use crate::ratfunc::{family_functions, Polynomial, RatFuncError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("{0}")]
    Precondition(String),
    #[error("generic and printed forms disagree at x^{index}: {generic} vs {printed}")]
    PrintedMismatch { index: usize, generic: Rational, printed: Rational },
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// z² = f(x) with deg f = 2n + 2. `coefficients` are ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub family_id: Option<u8>,
    pub n: u32,
    #[serde(rename = "T", with = "serde_str::opt_rat")]
    pub t: Option<Rational>,
    pub coefficients: Polynomial,
    pub provenance: Sextuple,
}

impl CurveSpec {
    pub fn f(&self) -> &Polynomial {
        &self.coefficients
    }
}

fn r(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// pα²Q²x^{2n+2} + (2b²Px² + βQ)(d²pPx² + 2βQ)
fn generic_polynomial(s: &Sextuple, n: u32) -> Polynomial {
    let t = &s.triple;
    let (p, b2, d2) = (rat_int(t.p.clone()), rat_int(pow(&t.b, 2)), rat_int(pow(&t.d, 2)));
    let (big_p, big_q) = (s.big_p(), s.big_q());
    let bq = &s.beta * &big_q;
    let aq = &s.alpha * &big_q;
    let lead = Polynomial::monomial(&p * &aq * &aq, 2 * n as usize + 2);
    let left = Polynomial::new(vec![bq.clone(), Rational::from_integer(0.into()), r(2) * &b2 * &big_p]);
    let right = Polynomial::new(vec![r(2) * &bq, Rational::from_integer(0.into()), &d2 * &p * &big_p]);
    &lead + &(&left * &right)
}

/// The curve of genus n attached to a sextuple.
pub fn curve_polynomial(s: &Sextuple, n: u32) -> Result<CurveSpec, CurveError> {
    if n < 2 {
        return Err(CurveError::Precondition(format!("genus must be at least 2, got {n}")));
    }
    derive(s)?;
    let f = generic_polynomial(s, n);
    if f.degree() != Some(2 * n as usize + 2) {
        return Err(CurveError::Precondition("leading coefficient vanishes".into()));
    }
    Ok(CurveSpec { family_id: None, n, t: None, coefficients: f, provenance: s.clone() })
}

/// The published closed form of family 1 or 2 at a = α(T):
/// family 1: 118579927725a²x^{2n+2} + (2(29a²+123192)x² − 16689645)(261(29a²+123192)x² − 33379290),
/// family 2: 84898109a²x^{2n+2} + (2(29a²−40600)x² + 49619)(261(29a²−40600)x² + 99238).
pub fn printed_family_polynomial(family_id: u8, n: u32, a: &Rational) -> Result<Polynomial, CurveError> {
    let (lead, shift, c, e) = match family_id {
        1 => (118579927725i64, 123192i64, -16689645i64, -33379290i64),
        2 => (84898109, -40600, 49619, 99238),
        _ => return Err(CurveError::Precondition(format!("unknown family {family_id}"))),
    };
    let big_p = r(29) * a * a + r(shift);
    let zero = Rational::from_integer(0.into());
    let left = Polynomial::new(vec![r(c), zero.clone(), r(2) * &big_p]);
    let right = Polynomial::new(vec![r(e), zero, r(261) * &big_p]);
    Ok(&Polynomial::monomial(r(lead) * a * a, 2 * n as usize + 2) + &(&left * &right))
}

/// Family curve at parameter T, built through the sextuple of the family at
/// T and cross-checked coefficientwise against the printed closed form.
pub fn family_polynomial(family_id: u8, n: u32, t: &Rational) -> Result<CurveSpec, CurveError> {
    let ff = family_functions(family_id)?;
    let s = ff.sextuple_at(t)?;
    let mut spec = curve_polynomial(&s, n)?;
    let printed = printed_family_polynomial(family_id, n, &s.alpha)?;
    for i in 0..=2 * n as usize + 2 {
        let (g, p) = (spec.coefficients.coeff(i), printed.coeff(i));
        if g != p {
            return Err(CurveError::PrintedMismatch { index: i, generic: g, printed: p });
        }
    }
    spec.family_id = Some(family_id);
    spec.t = Some(t.clone());
    Ok(spec)
}
