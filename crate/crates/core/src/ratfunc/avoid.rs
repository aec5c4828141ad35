//! Rational functions that keep a parameter inside prescribed unit groups
//! (avoidance functions F) or inside a fixed residue class (shifts Γ).

use super::{Polynomial, RatFuncError, RationalFunction};
use crate::arith::{is_prime, legendre_symbol, ord, pow, serde_str, Integer, Rational};
use crate::sample::{sample_rationals, DEFAULT_SEED};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

const FACTOR_BOUND: u64 = 10_000_000;
const SAMPLES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AvoidanceData {
    pub f: RationalFunction,
    #[serde(with = "serde_str::int")]
    pub p0: Integer,
    #[serde(with = "serde_str::int")]
    pub epsilon: Integer,
    #[serde(with = "serde_str::rat_vec")]
    pub zeros_and_poles: Vec<Rational>,
}

fn check_prime(l: &Integer) -> Result<(), RatFuncError> {
    if !is_prime(l)? {
        return Err(RatFuncError::Precondition(format!("{l} is not prime")));
    }
    Ok(())
}

/// Smallest ε > 0 with ε ≡ 2 mod 4 that is a non-residue mod every odd l.
fn choose_epsilon(odd: &[Integer]) -> Result<Integer, RatFuncError> {
    let span: Integer = odd.iter().product::<Integer>() * 4u32;
    let mut eps = Integer::from(2);
    while eps <= span {
        let mut ok = true;
        for l in odd {
            if legendre_symbol(&eps, l)? != -1 {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(eps);
        }
        eps += 4u32;
    }
    unreachable!("CRT guarantees a solution below 4·∏l")
}

/// The function F of the avoidance construction for primes `s` and a
/// nonzero G: for every rational t, F(t) is an l-adic unit for each l in S
/// and G(F(t)) is finite and nonzero. Both properties are re-checked on a
/// fixed sample before returning.
pub fn build_avoidance_f(s: &[Integer], g: &RationalFunction) -> Result<AvoidanceData, RatFuncError> {
    if g.is_zero() {
        return Err(RatFuncError::Precondition("G must be nonzero".into()));
    }
    let mut s: Vec<Integer> = s.to_vec();
    s.sort();
    s.dedup();
    for l in &s {
        check_prime(l)?;
    }
    let odd: Vec<Integer> = s.iter().filter(|l| l.is_odd()).cloned().collect();
    let zs = g.zeros_and_poles(FACTOR_BOUND)?;
    for z in &zs {
        let a = z.numer();
        if a.is_zero() {
            continue;
        }
        for l in &s {
            if a.is_multiple_of(l) {
                return Err(RatFuncError::ConditionD { z: z.clone(), a: a.clone(), l: l.clone() });
            }
        }
    }
    let eps = choose_epsilon(&odd)?;
    let mut p0 = Integer::from(3);
    loop {
        let ok = is_prime(&p0)?
            && !s.contains(&p0)
            && zs.iter().all(|z| !z.denom().is_multiple_of(&p0))
            && zs.iter().all(|z| z.numer().is_zero() || !z.numer().is_multiple_of(&p0));
        if ok {
            break;
        }
        p0 += 2u32;
    }
    let odd_prod: Integer = odd.iter().product();
    let shift = Polynomial::new(vec![-Rational::from_integer(&p0 * &p0 * &eps), Rational::zero(), Rational::one()]);
    let f = if zs.is_empty() {
        let num = &shift + &Polynomial::constant(Rational::from_integer(odd_prod * 4u32));
        RationalFunction::new(num, shift)?
    } else {
        let height = |z: &Rational| z.numer().abs().max(Integer::one());
        let mut d_prod = Integer::one();
        for z in &zs {
            let sign = if z.numer().is_negative() { -1 } else { 1 };
            let others: Integer = zs.iter().filter(|w| *w != z).map(height).product();
            let dz = &p0 * z.denom() * sign * others;
            d_prod *= dz - 1u32;
        }
        let lead: Integer = &p0 * zs.iter().map(height).product::<Integer>();
        let num = &shift + &Polynomial::constant(Rational::from_integer(odd_prod * 4u32 * d_prod));
        RationalFunction::new(num, shift)?.scale(&Rational::from_integer(lead))
    };
    for t in sample_rationals(DEFAULT_SEED, SAMPLES) {
        let ft = f.evaluate(&t)?;
        for l in &s {
            if ord(&ft, l) != Some(0) {
                return Err(RatFuncError::Sample(format!("F({t}) is not a unit at {l}")));
            }
        }
        match g.evaluate(&ft) {
            Ok(v) if !v.is_zero() => {}
            _ => return Err(RatFuncError::Sample(format!("G(F({t})) is zero or infinite"))),
        }
    }
    Ok(AvoidanceData { f, p0, epsilon: eps, zeros_and_poles: zs })
}

/// Γ(t) = t0 + q²/(t² − q0²ε). Since ε is a non-residue mod q, Γ(t) lies in
/// t0 + q²Z_q for every rational t (re-checked on a fixed sample).
pub fn build_gamma(t0: &Integer, q: &Integer, q0: &Integer, eps: &Integer) -> Result<RationalFunction, RatFuncError> {
    for r in [q, q0] {
        if r.is_even() {
            return Err(RatFuncError::Precondition(format!("{r} is not an odd prime")));
        }
        check_prime(r)?;
    }
    if q == q0 {
        return Err(RatFuncError::Precondition("q0 must differ from q".into()));
    }
    if legendre_symbol(eps, q)? != -1 {
        return Err(RatFuncError::SquareModQ { eps: eps.clone(), q: q.clone() });
    }
    let den = Polynomial::new(vec![-Rational::from_integer(q0 * q0 * eps), Rational::zero(), Rational::one()]);
    let num = &den.scale(&Rational::from_integer(t0.clone())) + &Polynomial::constant(Rational::from_integer(q * q));
    let gamma = RationalFunction::new(num, den)?;
    let t0r = Rational::from_integer(t0.clone());
    for t in sample_rationals(DEFAULT_SEED, SAMPLES) {
        let d = gamma.evaluate(&t)? - &t0r;
        if ord(&d, q).is_some_and(|v| v < 2) {
            return Err(RatFuncError::Sample(format!("Γ({t}) − t0 has q-valuation below 2")));
        }
    }
    Ok(gamma)
}

/// Splits an even polynomial of degree ≤ 4 into (t⁴, t², 1) coefficients.
fn even_quartic(p: &Polynomial) -> Result<[Integer; 3], RatFuncError> {
    let ints = p.integer_coeffs().ok_or(RatFuncError::Shape)?;
    if p.degree().unwrap_or(0) > 4 || !p.is_even() {
        return Err(RatFuncError::Shape);
    }
    let c = |k: usize| ints.get(k).cloned().unwrap_or_default();
    Ok([c(4), c(2), c(0)])
}

/// The three congruence hypotheses at t0 for D = (at⁴+bt²+c)/(dt⁴+et²+f):
/// numerator ≡ 0 mod q, ≢ 0 mod q², denominator ≢ 0 mod q.
pub fn check_d_hypotheses(d: &RationalFunction, t0: &Integer, q: &Integer) -> Result<bool, RatFuncError> {
    if q.is_even() {
        return Err(RatFuncError::Precondition(format!("{q} is not an odd prime")));
    }
    check_prime(q)?;
    let [a, b, c] = even_quartic(d.numerator())?;
    let [dd, e, f] = even_quartic(d.denominator())?;
    let t2 = t0 * t0;
    let num = &a * &t2 * &t2 + &b * &t2 + &c;
    let den = &dd * &t2 * &t2 + &e * &t2 + &f;
    let q2 = pow(q, 2);
    Ok(num.is_multiple_of(q) && !num.is_multiple_of(&q2) && !den.is_multiple_of(q))
}
