use super::{CurveError, CurveSpec};
use crate::arith::{is_integral_at, is_prime, ord, pow, rat_int, serde_str, Integer, Rational};
use crate::ratfunc::{family_functions, Polynomial};
use num_traits::One;
use serde::{Deserialize, Serialize};

/// F(x) = ax^{2n+2} + (bx^{2m} + c)(dx^{2k} + e) together with an odd prime p
/// dividing a.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparabilityInput {
    #[serde(with = "serde_str::rat")]
    pub a: Rational,
    #[serde(with = "serde_str::rat")]
    pub b: Rational,
    #[serde(with = "serde_str::rat")]
    pub c: Rational,
    #[serde(with = "serde_str::rat")]
    pub d: Rational,
    #[serde(with = "serde_str::rat")]
    pub e: Rational,
    pub n: u32,
    pub m: u32,
    pub k: u32,
    #[serde(with = "serde_str::int")]
    pub p: Integer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparabilityResult {
    /// n₁ … n₅
    pub bounds: [i64; 5],
    pub s1: bool,
    pub s2: bool,
    /// S1 ∧ S2, sufficient for F to have 2n + 2 distinct roots
    pub pass: bool,
}

impl SeparabilityInput {
    pub fn polynomial(&self) -> Polynomial {
        let bx = &Polynomial::monomial(self.b.clone(), 2 * self.m as usize) + &Polynomial::constant(self.c.clone());
        let dx = &Polynomial::monomial(self.d.clone(), 2 * self.k as usize) + &Polynomial::constant(self.e.clone());
        &Polynomial::monomial(self.a.clone(), 2 * self.n as usize + 2) + &(&bx * &dx)
    }
}

pub fn separability_check(inp: &SeparabilityInput) -> Result<SeparabilityResult, CurveError> {
    let p = &inp.p;
    let bad = |m: &str| Err(CurveError::Precondition(m.to_string()));
    if *p == Integer::from(2) || !is_prime(p)? {
        return bad("p must be an odd prime");
    }
    if inp.n == 0 || inp.m == 0 || inp.k == 0 {
        return bad("n, m, k must be positive");
    }
    for x in [&inp.a, &inp.b, &inp.c, &inp.d, &inp.e] {
        if !is_integral_at(x, p) {
            return bad(&format!("{x} is not {p}-integral"));
        }
    }
    let (va, vb, vd) = match (ord(&inp.a, p), ord(&inp.b, p), ord(&inp.d, p)) {
        (Some(va), Some(vb), Some(vd)) if va >= 1 => (va, vb, vd),
        (None, ..) => return bad("a must be nonzero"),
        (Some(_), Some(_), Some(_)) => return bad("a must be divisible by p"),
        _ => return bad("b and d must be nonzero"),
    };
    let (n, m, k) = (inp.n as i64, inp.m as i64, inp.k as i64);
    let bounds = [
        (m + k) * (va - vb - vd) + m + k - 1,
        (m + k) * (va - vb) + m - 1,
        (m + k) * (va - vd) + k - 1,
        (m + k) * va - 1,
        va - vb - vd + m + k - 1,
    ];
    let s1 = n > m + k - 1 && bounds.iter().all(|&b| n > b);
    let unit = |x: &Rational| ord(x, p) == Some(0);
    let sign = if (m + k + 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
    let mixed = rat_pow(&inp.b, inp.k) * rat_pow(&inp.e, inp.m) + sign * rat_pow(&inp.c, inp.k) * rat_pow(&inp.d, inp.m);
    let s2 = unit(&(&inp.c * &inp.e)) && unit(&rat_int(Integer::from(k * m))) && unit(&mixed);
    Ok(SeparabilityResult { bounds, s1, s2, pass: s1 && s2 })
}

fn rat_pow(x: &Rational, e: u32) -> Rational {
    Rational::new(pow(x.numer(), e), pow(x.denom(), e))
}

/// True iff gcd(f, f′) is constant.
pub fn separability_oracle(f: &Polynomial) -> bool {
    !f.is_zero() && f.gcd(&f.derivative()).degree() == Some(0)
}

/// a = pα²Q², b = 2b²P, c = βQ, d = d²pP, e = 2βQ, m = k = 1 for an auxiliary
/// prime `aux` (the q of the family).
pub fn separability_input(curve: &CurveSpec, aux: &Integer) -> SeparabilityInput {
    let s = &curve.provenance;
    let t = &s.triple;
    let p = rat_int(t.p.clone());
    let (big_p, big_q) = (s.big_p(), s.big_q());
    let two = rat_int(2);
    let aq = &s.alpha * &big_q;
    SeparabilityInput {
        a: &p * &aq * &aq,
        b: &two * rat_int(pow(&t.b, 2)) * &big_p,
        c: &s.beta * &big_q,
        d: rat_int(pow(&t.d, 2)) * &p * &big_p,
        e: &two * &s.beta * &big_q,
        n: curve.n,
        m: 1,
        k: 1,
        p: aux.clone(),
    }
}

/// Input for a family curve with the family's prime q (31 or 11).
pub fn family_separability_input(curve: &CurveSpec) -> Result<SeparabilityInput, CurveError> {
    let id = curve.family_id.ok_or_else(|| CurveError::Precondition("curve is not a family member".into()))?;
    Ok(separability_input(curve, &family_functions(id)?.q))
}
