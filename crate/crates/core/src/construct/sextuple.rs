use super::triple::{check_triple, Triple, TripleVariant};
use super::ConstructError;
use crate::arith::{divisible_by_power, ord, rat_int, residue, serde_str, Integer, Rational};
use crate::conic::{ConicError, ConicPoint, DiagonalConic};
use crate::report::Report;
use num_integer::Integer as _;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sextuple {
    pub triple: Triple,
    #[serde(with = "serde_str::rat")]
    pub alpha: Rational,
    #[serde(with = "serde_str::rat")]
    pub beta: Rational,
    #[serde(with = "serde_str::rat")]
    pub gamma: Rational,
    pub witness: ConicPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    #[serde(with = "serde_str::int")]
    pub c: Integer,
    #[serde(with = "serde_str::int")]
    pub q: Integer,
    #[serde(with = "serde_str::rat")]
    pub beta_bar: Rational,
    #[serde(rename = "P", with = "serde_str::rat")]
    pub big_p: Rational,
    #[serde(rename = "Q", with = "serde_str::rat")]
    pub big_q: Rational,
    #[serde(rename = "P1", with = "serde_str::rat")]
    pub p1: Rational,
    #[serde(rename = "Q1", with = "serde_str::rat")]
    pub q1: Rational,
}

impl Sextuple {
    pub fn new(triple: Triple, alpha: Rational, beta: Rational, gamma: Rational, witness: ConicPoint) -> Result<Self, ConstructError> {
        if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
            return Err(ConstructError::Precondition("alpha, beta and gamma must be nonzero".into()));
        }
        if witness.is_zero() {
            return Err(ConicError::ZeroPoint.into());
        }
        Ok(Sextuple { triple, alpha, beta, gamma, witness })
    }

    fn p(&self) -> Rational {
        rat_int(self.triple.p.clone())
    }

    /// P = pα² + 2β² − 2pγ²
    pub fn big_p(&self) -> Rational {
        let p = self.p();
        &p * &self.alpha * &self.alpha + Rational::from_integer(2.into()) * &self.beta * &self.beta
            - Rational::from_integer(2.into()) * &p * &self.gamma * &self.gamma
    }

    /// Q = 4bdpγ − 4b²β − d²pβ
    pub fn big_q(&self) -> Rational {
        let (p, b, d) = (self.p(), rat_int(self.triple.b.clone()), rat_int(self.triple.d.clone()));
        let four = Rational::from_integer(4.into());
        &four * &b * &d * &p * &self.gamma - &four * &b * &b * &self.beta - &d * &d * &p * &self.beta
    }

    /// pU² − V² − βPQ·T² = 0
    pub fn conic(&self) -> Result<DiagonalConic, ConicError> {
        let bpq = &self.beta * self.big_p() * self.big_q();
        DiagonalConic::new(self.p(), Rational::from_integer((-1).into()), -bpq)
    }
}

pub fn derive(s: &Sextuple) -> Result<Derived, ConstructError> {
    let p = &s.triple.p;
    if ord(&s.beta, p).is_none_or(|v| v < 1) {
        return Err(ConstructError::BetaNotDivisible(s.beta.to_string()));
    }
    let pr = rat_int(p.clone());
    let (b, d) = (rat_int(s.triple.b.clone()), rat_int(s.triple.d.clone()));
    let two = Rational::from_integer(2.into());
    let four = Rational::from_integer(4.into());
    let beta_bar = &s.beta / &pr;
    let p1 = &s.alpha * &s.alpha + &two * &pr * &beta_bar * &beta_bar - &two * &s.gamma * &s.gamma;
    let q1 = &four * &b * &d * &s.gamma - &four * &b * &b * &beta_bar - &d * &d * &pr * &beta_bar;
    let (big_p, big_q) = (s.big_p(), s.big_q());
    if big_p != &pr * &p1 || big_q != &pr * &q1 {
        return Err(ConstructError::Precondition("P = pP1 and Q = pQ1 fail".into()));
    }
    Ok(Derived { c: s.triple.c(), q: s.triple.q(), beta_bar, big_p, big_q, p1, q1 })
}

/// Per-condition report for a sextuple and genus n: A1–A5, B1 and the genus
/// gate (A6 for odd n, B2 for n ≡ 2 mod 4; n ≡ 0 mod 4 is not covered).
pub fn check_conditions(s: &Sextuple, n: i64) -> Result<Report, ConstructError> {
    let dv = derive(s)?;
    let t = &s.triple;
    let p = &t.p;
    let two = Integer::from(2);
    let mut r = Report::new();

    let tr = check_triple(t, TripleVariant::Strict)?;
    let a1 = ["p_prime", "p_mod_8", "three_nonresidue"];
    let a1_pass = a1.iter().all(|k| tr.passed(k) == Some(true));
    r.add("A1", a1_pass, format!("p = {p}"));
    let a2_pass = tr.conditions.iter().filter(|(k, _)| !a1.contains(&k.as_str())).all(|(_, c)| c.pass);
    r.add("A2", a2_pass, format!("b = {}, d = {}, q = {}", t.b, t.d, dv.q));

    let w = &s.witness;
    let (on_conic, wdesc) = match s.conic() {
        Ok(c) => (c.contains(w)?, format!("({}, {}, {}) on {}U^2 - V^2 + ({})T^2", w.u, w.v, w.t, c.a, c.c)),
        Err(_) => (false, "P or Q vanishes".into()),
    };
    r.add("A3", on_conic && w.all_nonzero() && w.is_primitive(), wdesc);

    let unit = |x: &Rational, l: &Integer| ord(x, l) == Some(0);
    let d = rat_int(t.d.clone());
    let a4 = unit(&s.alpha, &two)
        && unit(&s.beta, &two)
        && unit(&s.gamma, &two)
        && unit(&s.alpha, p)
        && unit(&s.gamma, p)
        && unit(&d, p)
        && ord(&s.beta, p).is_some_and(|v| v >= 0);
    r.add("A4", a4, format!("alpha = {}, beta = {}, gamma = {}", s.alpha, s.beta, s.gamma));

    let bd = rat_int(&t.b * &t.d);
    let a5 = &s.gamma * &dv.q1 + &bd * &dv.p1;
    r.add("A5", divisible_by_power(&a5, p, 2), format!("gamma*Q1 + b*d*P1 = {a5}"));

    let b1 = &bd - &dv.beta_bar * &s.gamma;
    r.add("B1", divisible_by_power(&b1, &two, 2), format!("b*d - beta_bar*gamma = {b1}"));

    let ratio = &s.gamma / &s.alpha;
    let forbidden = residue(&(Rational::from_integer((-2).into()) * &ratio * &ratio), p).ok();
    let n_res = Integer::from(n).mod_floor(p);
    let avoids = forbidden.as_ref().is_some_and(|f| *f != n_res);
    let fdesc = forbidden.map_or("undefined".to_string(), |f| f.to_string());
    let (gate, which) = match n.rem_euclid(4) {
        1 | 3 => (n >= 3 && avoids, "A6"),
        2 => (n >= 2 && avoids, "B2"),
        _ => (false, "none (n = 0 mod 4)"),
    };
    r.add("genus_gate", gate, format!("{which}: n = {n}, -2(gamma/alpha)^2 = {fdesc} mod {p}"));
    Ok(r)
}

/// The seed sextuples of the two published families.
pub fn family_seed(family_id: u8) -> Result<Sextuple, ConstructError> {
    let t = Triple::new(29, 1, 3);
    let r = |x: i64| Rational::from_integer(x.into());
    match family_id {
        1 => Sextuple::new(t, r(7), r(261), r(15), ConicPoint::new(166257, 3020031, 2)),
        2 => Sextuple::new(t, r(133), r(29), r(27), ConicPoint::new(728799, 3613777, 10)),
        _ => Err(ConstructError::Precondition(format!("unknown family {family_id}"))),
    }
}
