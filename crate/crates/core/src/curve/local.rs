use super::{CurveError, CurveSpec};
use crate::arith::{ord, rat_int, Integer, Rational};
use crate::local::{is_local_square, odd_primes_up_to, HenselCertificate, HenselSystem, MPoly, Place};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LocalStatus {
    Solvable,
    Unsolvable,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalEntry {
    /// "inf", a prime, or "generic" for the uniform argument above the bound
    pub place: String,
    pub status: LocalStatus,
    pub method: String,
    pub witness: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<HenselSystem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<HenselCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalReport {
    pub status: LocalStatus,
    pub n: u32,
    pub prime_bound: u64,
    pub entries: Vec<LocalEntry>,
}

impl LocalReport {
    pub fn entry(&self, place: &str) -> Option<&LocalEntry> {
        self.entries.iter().find(|e| e.place == place)
    }
}

/// A rational point of the smooth model given by a square factor:
/// value = factor·square with value the f-value (or leading coefficient) there.
struct CasePoint {
    name: &'static str,
    point: String,
    factor: Rational,
    value: Rational,
}

fn case_points(c: &CurveSpec) -> Result<Vec<CasePoint>, CurveError> {
    let s = &c.provenance;
    let t = &s.triple;
    let f = c.f();
    let p = rat_int(t.p.clone());
    let (big_p, big_q) = (s.big_p(), s.big_q());
    let aq = &s.alpha * &big_q;
    let bq = &s.beta * &big_q;
    let g = &s.gamma * &big_q + rat_int(&t.b * &t.d) * &big_p;
    let two = rat_int(2);
    let cases = vec![
        CasePoint { name: "I", point: format!("(1 : 0 : sqrt(p)*{aq})"), factor: p.clone(), value: &p * &aq * &aq },
        CasePoint { name: "II", point: format!("(0, sqrt(2)*{bq})"), factor: two.clone(), value: &two * &bq * &bq },
        CasePoint { name: "III", point: format!("(1, sqrt(2p)*{g})"), factor: &two * &p, value: &two * &p * &g * &g },
    ];
    let actual = [f.leading(), f.coeff(0), f.eval(&Rational::from_integer(1.into()))];
    for (cp, a) in cases.iter().zip(actual) {
        if cp.value != a {
            return Err(CurveError::Precondition(format!("case {} value {} does not match the curve ({a})", cp.name, cp.value)));
        }
    }
    Ok(cases)
}

fn case_entry(cases: &[CasePoint], v: &Place) -> Result<LocalEntry, CurveError> {
    for cp in cases {
        if !cp.value.is_zero() && is_local_square(&cp.factor, v)? {
            return Ok(LocalEntry {
                place: v.to_string(),
                status: LocalStatus::Solvable,
                method: format!("case-{}", cp.name),
                witness: format!("point {}; {} is a square at {v}, value {}", cp.point, cp.factor, cp.value),
                system: None,
                certificate: None,
            });
        }
    }
    Ok(LocalEntry {
        place: v.to_string(),
        status: LocalStatus::Unknown,
        method: "cases".into(),
        witness: "none of p, 2, 2p gives a smooth local point".into(),
        system: None,
        certificate: None,
    })
}

/// F(x, z) = f(x) − z² around (1, 0), lifting in x.
fn hensel_entry(c: &CurveSpec, l: &Integer, delta: u32, method: &str) -> LocalEntry {
    let f = c.f();
    let mut terms: Vec<(Vec<u32>, Rational)> = f.coeffs().iter().enumerate().map(|(i, a)| (vec![i as u32, 0], a.clone())).collect();
    terms.push((vec![0, 2], -Rational::from_integer(1.into())));
    let system = HenselSystem {
        f: MPoly::from_terms(2, terms),
        point: vec![Rational::from_integer(1.into()), Rational::zero()],
        variable_index: 0,
        delta,
        p: l.clone(),
    };
    let one = Rational::from_integer(1.into());
    let fv = f.eval(&one);
    let dv = f.derivative().eval(&one);
    let show = |v: Option<i64>| v.map_or("inf".to_string(), |v| v.to_string());
    let desc = format!(
        "F(1,0) = {fv} with v_{l} = {}, dF/dx(1,0) = {dv} with v_{l} = {}; need >= {} and exactly {delta} (mod {l}^{})",
        show(ord(&fv, l)),
        show(ord(&dv, l)),
        2 * delta + 1,
        2 * delta + 1
    );
    let (status, certificate, witness) = match system.certificate() {
        Ok(cert) if cert.verified => (LocalStatus::Solvable, Some(cert), desc),
        Ok(cert) => (LocalStatus::Unknown, Some(cert), format!("Hensel congruences fail: {desc}")),
        Err(e) => (LocalStatus::Unknown, None, format!("Hensel system rejected: {e}")),
    };
    LocalEntry { place: l.to_string(), status, method: method.into(), witness, system: Some(system), certificate }
}

fn two_adic_entry(c: &CurveSpec) -> LocalEntry {
    let two = Integer::from(2);
    match c.n % 4 {
        1 | 3 => hensel_entry(c, &two, 1, "hensel-2"),
        2 => hensel_entry(c, &two, 2, "locally-solvable-2-hensel"),
        _ => LocalEntry {
            place: "2".into(),
            status: LocalStatus::Unknown,
            method: "none".into(),
            witness: "n = 0 mod 4: no Hensel system is available at 2".into(),
            system: None,
            certificate: None,
        },
    }
}

/// Per-place local solvability of z² = f(x): Cases I–III at ∞ and at odd
/// l ≠ p up to `prime_bound`, Hensel certificates at p (δ = 3) and at 2
/// (δ = 1 for odd n, δ = 2 for n ≡ 2 mod 4), and one entry for the
/// remaining primes.
pub fn local_solvability_report(c: &CurveSpec, prime_bound: u64) -> Result<LocalReport, CurveError> {
    if c.n < 2 {
        return Err(CurveError::Precondition(format!("genus must be at least 2, got {}", c.n)));
    }
    let p = &c.provenance.triple.p;
    let cases = case_points(c)?;
    let mut entries = vec![case_entry(&cases, &Place::Infinite)?, two_adic_entry(c)];
    let mut odd: Vec<Integer> = odd_primes_up_to(prime_bound).into_iter().map(Integer::from).collect();
    if !odd.contains(p) {
        odd.push(p.clone());
        odd.sort();
    }
    for l in odd {
        if l == *p {
            entries.push(hensel_entry(c, p, 3, "hensel-p"));
        } else {
            entries.push(case_entry(&cases, &Place::Finite(l))?);
        }
    }
    let nonzero = cases.iter().all(|cp| !cp.value.is_zero());
    entries.push(LocalEntry {
        place: "generic".into(),
        status: if nonzero { LocalStatus::Solvable } else { LocalStatus::Unknown },
        method: "cases".into(),
        witness: format!(
            "odd l > {prime_bound}, l != {p}: (2p/l) = (2/l)(p/l), so one of p, 2, 2p is a square at l and the matching case value ({}, {}, {}) is nonzero",
            cases[0].value, cases[1].value, cases[2].value
        ),
        system: None,
        certificate: None,
    });
    let status = if entries.iter().all(|e| e.status == LocalStatus::Solvable) {
        LocalStatus::Solvable
    } else if entries.iter().any(|e| e.status == LocalStatus::Unsolvable) {
        LocalStatus::Unsolvable
    } else {
        LocalStatus::Unknown
    };
    Ok(LocalReport { status, n: c.n, prime_bound, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, pow, rat};
    use crate::construct::{derive, family_seed};
    use crate::curve::{curve_polynomial, family_polynomial};
    use crate::local::hensel_verify;

    #[test]
    fn family_one_report() {
        let c = family_polynomial(1, 7, &rat(0, 1)).unwrap();
        let r = local_solvability_report(&c, 100).unwrap();
        assert_eq!(r.status, LocalStatus::Solvable, "{r:#?}");
        let e = r.entry("29").unwrap();
        assert_eq!(e.method, "hensel-p");
        let cert = e.certificate.as_ref().unwrap();
        assert_eq!(cert.modulus, pow(&int(29), 7));
        assert!(cert.f_value_valuation.is_some_and(|v| v >= 7));
        let d = derive(&c.provenance).unwrap();
        let g = &c.provenance.gamma * &d.q1 + rat(3, 1) * &d.p1;
        assert_eq!(c.f().eval(&rat(1, 1)), rat(2 * 29 * 29 * 29, 1) * &g * &g);
        assert!(hensel_verify(e.system.as_ref().unwrap()).unwrap());
        let e2 = r.entry("2").unwrap();
        assert_eq!((e2.method.as_str(), e2.certificate.as_ref().unwrap().delta), ("hensel-2", 1));
        assert!(hensel_verify(e2.system.as_ref().unwrap()).unwrap());
        assert_eq!(r.entries.len(), 2 + 24 + 1);
    }

    #[test]
    fn seed_curve_value_at_one() {
        // F(1,0) = 2·29³·20184², v₂₉ = 3 + 2·2
        let c = curve_polynomial(&family_seed(1).unwrap(), 7).unwrap();
        assert_eq!(c.f().eval(&rat(1, 1)), rat(2 * 29 * 29 * 29, 1) * rat(20184, 1) * rat(20184, 1));
        let r = local_solvability_report(&c, 100).unwrap();
        assert_eq!(r.status, LocalStatus::Solvable);
        assert_eq!(r.entry("29").unwrap().certificate.as_ref().unwrap().f_value_valuation, Some(7));
    }

    #[test]
    fn family_two_report() {
        let c = family_polynomial(2, 6, &rat(0, 1)).unwrap();
        let r = local_solvability_report(&c, 100).unwrap();
        assert_eq!(r.status, LocalStatus::Solvable, "{r:#?}");
        let e2 = r.entry("2").unwrap();
        assert_eq!(e2.method, "locally-solvable-2-hensel");
        assert_eq!(e2.certificate.as_ref().unwrap().modulus, int(32));
    }

    #[test]
    fn genus_zero_mod_four_is_unknown() {
        let c = curve_polynomial(&family_seed(1).unwrap(), 8).unwrap();
        let r = local_solvability_report(&c, 30).unwrap();
        assert_eq!(r.entry("2").unwrap().status, LocalStatus::Unknown);
        assert_eq!(r.status, LocalStatus::Unknown);
    }

    #[test]
    fn broken_a5_fails_at_p() {
        // γ = 17 keeps A4 but moves γQ₁ + bdP₁ off 29²
        let mut s = family_seed(1).unwrap();
        s.gamma = rat(17, 1);
        let c = curve_polynomial(&s, 7).unwrap();
        let r = local_solvability_report(&c, 10).unwrap();
        let e = r.entry("29").unwrap();
        assert_eq!(e.status, LocalStatus::Unknown);
        assert!(e.witness.contains("fail"));
        assert_ne!(r.status, LocalStatus::Solvable);
    }

    #[test]
    fn selector_always_finds_a_case() {
        // (2p/l) = (2/l)(p/l): some factor is a square at every odd l != p
        for l in odd_primes_up_to(2000).into_iter().filter(|&l| l != 29) {
            let v = Place::Finite(int(l as i64));
            let sq = |x: i64| is_local_square(&rat(x, 1), &v).unwrap();
            assert!(sq(29) || sq(2) || sq(58), "l = {l}");
        }
    }
}
