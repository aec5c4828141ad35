use super::avoid::{build_avoidance_f, build_gamma, check_d_hypotheses};
use super::reference::{printed_pair, reference};
use super::{RatFuncError, RationalFunction};
use crate::arith::{int, pow, rat_int, Integer, Rational};
use crate::construct::{extension_function, family_seed, Sextuple};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// Everything needed to instantiate a family at a parameter T:
/// α(T) = D*(Γ(T)) and v(T) = G(F(Γ(T))).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFunctions {
    pub family_id: u8,
    pub seed: Sextuple,
    /// C(T), the extension constant with (A, B) = (0, T)
    pub c: RationalFunction,
    /// G(T) = v₀ + T·C(T)
    pub g: RationalFunction,
    pub f: RationalFunction,
    pub gamma: RationalFunction,
    /// D = C ∘ F
    pub d: RationalFunction,
    /// D* = α₀ + 2p²·D
    pub d_star: RationalFunction,
    /// D* ∘ Γ
    pub d_star_composed: RationalFunction,
    /// the prime q for which D*(Γ(T)) has q-adic valuation exactly 1
    #[serde(with = "crate::arith::serde_str::int")]
    pub q: Integer,
}

/// (q, q0, ε) for Γ: q is the prime dividing the constant term of D*'s
/// numerator exactly once, and ε a non-residue mod q.
fn gamma_parameters(family_id: u8) -> (i64, i64, i64) {
    match family_id {
        1 => (31, 5, 3),
        _ => (11, 3, 7),
    }
}

fn compare(what: &str, got: &RationalFunction, printed: (&[&str], &[&str])) -> Result<(), RatFuncError> {
    let (pn, pd) = printed_pair(printed);
    let expected = RationalFunction::new(pn, pd)?;
    for (part, g, e) in [("numerator", got.numerator(), expected.numerator()), ("denominator", got.denominator(), expected.denominator())] {
        let len = g.coeffs().len().max(e.coeffs().len());
        for i in 0..len {
            if g.coeff(i) != e.coeff(i) {
                return Err(RatFuncError::Mismatch { what: format!("{what} {part}"), index: i, expected: e.coeff(i), got: g.coeff(i) });
            }
        }
    }
    Ok(())
}

/// Same as `compare` but without canonical rescaling: the computed quotient
/// must match the printed numerator and denominator up to one common factor.
fn compare_exact_pair(what: &str, got: &RationalFunction, printed: (&[&str], &[&str])) -> Result<(), RatFuncError> {
    let (pn, pd) = printed_pair(printed);
    let scale = &pd.leading() / &got.denominator().leading();
    for (part, g, e) in [("numerator", got.numerator().scale(&scale), pn), ("denominator", got.denominator().scale(&scale), pd)] {
        let len = g.coeffs().len().max(e.coeffs().len());
        for i in 0..len {
            if g.coeff(i) != e.coeff(i) {
                return Err(RatFuncError::Mismatch { what: format!("{what} {part}"), index: i, expected: e.coeff(i), got: g.coeff(i) });
            }
        }
    }
    Ok(())
}

/// Builds C, G, F, Γ, D, D* and D*∘Γ for family 1 or 2 from the seed
/// sextuple and checks every one against the published closed forms.
pub fn build_family_functions(family_id: u8) -> Result<FamilyFunctions, RatFuncError> {
    let printed = reference(family_id).ok_or_else(|| RatFuncError::Precondition(format!("unknown family {family_id}")))?;
    let seed = family_seed(family_id).map_err(|e| RatFuncError::Precondition(e.to_string()))?;
    let p = seed.triple.p.clone();
    let c = extension_function(&seed).map_err(|e| RatFuncError::Precondition(e.to_string()))?;
    compare_exact_pair("C", &c, printed.c)?;
    let g = c.mul(&RationalFunction::identity()).add_const(&rat_int(seed.witness.v.clone()));
    compare_exact_pair("G", &g, printed.g)?;
    let f = build_avoidance_f(&[int(2), p.clone()], &g)?.f;
    compare("F", &f, printed.f)?;
    let (q, q0, eps) = gamma_parameters(family_id);
    let gamma = build_gamma(&int(0), &int(q), &int(q0), &int(eps))?;
    compare("Gamma", &gamma, printed.gamma)?;
    let d = c.compose(&f)?;
    compare_exact_pair("D", &d, printed.d)?;
    let two_p2 = Rational::from_integer(pow(&p, 2) * 2u32);
    let d_star = d.scale(&two_p2).add_const(&seed.alpha);
    compare_exact_pair("D*", &d_star, printed.d_star)?;
    if !check_d_hypotheses(&d_star, &int(0), &int(q))? {
        return Err(RatFuncError::Precondition(format!("D* fails the congruence hypotheses at q = {q}")));
    }
    let d_star_composed = d_star.compose(&gamma)?;
    compare("D* o Gamma", &d_star_composed, printed.sigma)?;
    Ok(FamilyFunctions { family_id, seed, c, g, f, gamma, d, d_star, d_star_composed, q: int(q) })
}

impl FamilyFunctions {
    /// α(T) = D*(Γ(T))
    pub fn alpha(&self, t: &Rational) -> Result<Rational, RatFuncError> {
        self.d_star_composed.evaluate(t)
    }

    /// B(T) = F(Γ(T)), the second extension coordinate.
    pub fn extension_b(&self, t: &Rational) -> Result<Rational, RatFuncError> {
        self.f.evaluate(&self.gamma.evaluate(t)?)
    }

    /// The sextuple of the family at T with its conic witness (u₀, G(B), t₀).
    pub fn sextuple_at(&self, t: &Rational) -> Result<Sextuple, RatFuncError> {
        let alpha = self.alpha(t)?;
        let v = self.g.evaluate(&self.extension_b(t)?)?;
        let w = &self.seed.witness;
        let witness = crate::conic::ConicPoint::from_rationals(&rat_int(w.u.clone()), &v, &rat_int(w.t.clone()))
            .map_err(|e| RatFuncError::Precondition(e.to_string()))?;
        let s = &self.seed;
        Sextuple::new(s.triple.clone(), alpha, s.beta.clone(), s.gamma.clone(), witness).map_err(|e| RatFuncError::Precondition(e.to_string()))
    }
}

/// Cached [`build_family_functions`]; the construction runs once per process.
pub fn family_functions(family_id: u8) -> Result<&'static FamilyFunctions, RatFuncError> {
    static CACHE: [OnceLock<Result<FamilyFunctions, RatFuncError>>; 2] = [OnceLock::new(), OnceLock::new()];
    let slot = match family_id {
        1 | 2 => &CACHE[family_id as usize - 1],
        _ => return Err(RatFuncError::Precondition(format!("unknown family {family_id}"))),
    };
    slot.get_or_init(|| build_family_functions(family_id)).as_ref().map_err(Clone::clone)
}
