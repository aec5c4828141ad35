use super::ConstructError;
use crate::arith::{factor_trial, is_prime, legendre_symbol, odd_prime_power, serde_str, ArithError, Integer};
use crate::report::Report;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const GCD_WITNESS_FACTOR_BOUND: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    #[serde(with = "serde_str::int")]
    pub p: Integer,
    #[serde(with = "serde_str::int")]
    pub b: Integer,
    #[serde(with = "serde_str::int")]
    pub d: Integer,
}

impl Triple {
    pub fn new(p: impl Into<Integer>, b: impl Into<Integer>, d: impl Into<Integer>) -> Self {
        Triple { p: p.into(), b: b.into(), d: d.into() }
    }

    pub fn c(&self) -> Integer {
        &self.d * &self.d
    }

    /// |p·d² − 4b²|
    pub fn q(&self) -> Integer {
        (&self.p * self.c() - Integer::from(4) * &self.b * &self.b).abs()
    }
}

/// Strict: q must be 1 or an odd prime, b and d odd, 3 ∤ b.
/// Generalized: with c = d², gcd(b, c) = 1, q is 1 or an odd power of an odd
/// prime, and 3 | b forces c ≡ 2 mod 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleVariant {
    Strict,
    Generalized,
}

/// Conditions common to both variants: p prime, p ≡ 5 mod 8, (3/p) = −1.
fn check_prime_part(p: &Integer, r: &mut Report) -> Result<bool, ArithError> {
    let prime = p > &Integer::from(3) && is_prime(p)?;
    r.add("p_prime", prime, p.to_string());
    let m8 = p.mod_floor(&Integer::from(8));
    r.add("p_mod_8", m8 == Integer::from(5), format!("p mod 8 = {m8}"));
    let sym = if prime { legendre_symbol(&Integer::from(3), p)? } else { 0 };
    r.add("three_nonresidue", sym == -1, format!("(3/p) = {sym}"));
    Ok(prime)
}

pub fn check_triple(t: &Triple, variant: TripleVariant) -> Result<Report, ConstructError> {
    let mut r = Report::new();
    check_prime_part(&t.p, &mut r)?;
    let three = Integer::from(3);
    let q = t.q();
    r.add("p_not_dividing_b", !t.b.is_multiple_of(&t.p), format!("b mod p = {}", t.b.mod_floor(&t.p)));
    match variant {
        TripleVariant::Strict => {
            r.add("b_d_odd", t.b.is_odd() && t.d.is_odd(), format!("b = {}, d = {}", t.b, t.d));
            r.add("three_not_dividing_b", !t.b.is_multiple_of(&three), format!("b mod 3 = {}", t.b.mod_floor(&three)));
            let ok = q.is_one() || (q.is_odd() && is_prime(&q)?);
            r.add("q_one_or_odd_prime", ok, format!("q = {q}"));
        }
        TripleVariant::Generalized => {
            let c = t.c();
            r.add("gcd_b_c", t.b.gcd(&c).is_one(), format!("gcd = {}", t.b.gcd(&c)));
            let power = odd_prime_power(&q)?;
            let ok = q.is_one() || power.as_ref().is_some_and(|(_, k)| k % 2 == 1);
            let w = match &power {
                Some((l, k)) => format!("q = {q} = {l}^{k}"),
                None => format!("q = {q}"),
            };
            r.add("q_one_or_odd_prime_power", ok, w);
            let ok3 = !t.b.is_multiple_of(&three) || c.mod_floor(&three) == Integer::from(2);
            r.add("three_divides_b_implies_c_2_mod_3", ok3, format!("b mod 3 = {}, c mod 3 = {}", t.b.mod_floor(&three), c.mod_floor(&three)));
        }
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleHit {
    pub x: i64,
    pub y: i64,
    pub triple: Triple,
    #[serde(with = "serde_str::int")]
    pub q: Integer,
}

/// Scans d = 2x + 1, b = 6py + b0 over 0 ≤ x ≤ x_max, |y| ≤ y_max and keeps
/// the pairs with |p·d² − 4b²| equal to 1 or an odd prime. Output is sorted by
/// (x, y) regardless of how the scan is split across threads.
pub fn search_triples(p: &Integer, b0: &Integer, x_max: u64, y_max: u64) -> Result<Vec<TripleHit>, ConstructError> {
    let mut pre = Report::new();
    if !check_prime_part(p, &mut pre)? || !pre.pass {
        return Err(ConstructError::Precondition(format!("p = {p} must be a prime ≡ 5 mod 8 with (3/p) = -1")));
    }
    let three = Integer::from(3);
    if b0.is_even() || b0.is_multiple_of(&three) || b0.is_multiple_of(p) {
        return Err(ConstructError::Precondition(format!("b0 = {b0} must be odd and prime to 3p")));
    }
    let x_max = i64::try_from(x_max).map_err(|_| ConstructError::Precondition("x_max too large".into()))?;
    let y_max = i64::try_from(y_max).map_err(|_| ConstructError::Precondition("y_max too large".into()))?;
    let six_p: Integer = p * 6u32;
    let hits: Result<Vec<Vec<TripleHit>>, ArithError> = (0..=x_max)
        .into_par_iter()
        .map(|x| {
            let mut out = Vec::new();
            for y in -y_max..=y_max {
                let t = Triple { p: p.clone(), b: &six_p * y + b0, d: Integer::from(2 * x + 1) };
                let q = t.q();
                if q.is_one() || (q.is_odd() && is_prime(&q)?) {
                    out.push(TripleHit { x, y, triple: t, q });
                }
            }
            Ok(out)
        })
        .collect();
    let mut hits: Vec<TripleHit> = hits?.into_iter().flatten().collect();
    hits.sort_by_key(|h| (h.x, h.y));
    for h in &hits {
        debug_assert!(check_triple(&h.triple, TripleVariant::Strict).map(|r| r.pass).unwrap_or(false));
    }
    Ok(hits)
}

/// A nonzero a with gcd((a² + 2pb²)(2a² + p²c), 3(2b² + pc)) = 1, built from
/// the prime divisors of H1 = 2b² + pc (times 3 when 3 divides neither b nor c).
pub fn find_gcd_witness_a(p: &Integer, b: &Integer, c: &Integer) -> Result<Integer, ConstructError> {
    let three = Integer::from(3);
    let h1: Integer = Integer::from(2) * b * b + p * c;
    if h1.is_zero() {
        return Err(ConstructError::Precondition("2b² + pc = 0".into()));
    }
    let b3 = b.is_multiple_of(&three);
    let c3 = c.is_multiple_of(&three);
    if b3 && c3 {
        return Err(ConstructError::Precondition("3 divides both b and c".into()));
    }
    let factors = factor_trial(&h1, GCD_WITNESS_FACTOR_BOUND).map_err(|e| match e {
        ArithError::FactorizationBound { bound, .. } => ConstructError::Factorization { h1: h1.clone(), bound },
        other => other.into(),
    })?;
    let mut a: Integer = factors.iter().map(|(l, _)| l.clone()).product();
    if !b3 && !c3 {
        a *= &three;
    }
    let two_p_b2: Integer = Integer::from(2) * p * b * b;
    let lhs = (&a * &a + &two_p_b2) * (Integer::from(2) * &a * &a + p * p * c);
    if !lhs.gcd(&(&h1 * &three)).is_one() {
        return Err(ConstructError::GcdIdentity { a });
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use proptest::prelude::*;

    #[test]
    fn printed_triples() {
        let r = check_triple(&Triple::new(5, 1, 1), TripleVariant::Strict).unwrap();
        assert!(r.pass);
        assert_eq!(Triple::new(5, 1, 1).q(), int(1));
        let t = Triple::new(29, 1, 3);
        assert_eq!(t.q(), int(257));
        assert!(check_triple(&t, TripleVariant::Strict).unwrap().pass);
        assert!(check_triple(&t, TripleVariant::Generalized).unwrap().pass);
        let bad = check_triple(&Triple::new(13, 3, 1), TripleVariant::Strict).unwrap();
        assert!(!bad.pass);
        assert_eq!(bad.passed("three_not_dividing_b"), Some(false));
        // 13 ≡ 5 mod 8 and (3/13) = +1
        assert_eq!(bad.passed("three_nonresidue"), Some(false));
    }

    #[test]
    fn generalized_allows_prime_powers() {
        // p = 5, b = 1, d = 5: q = |125 - 4| = 121 = 11², an even power
        let r = check_triple(&Triple::new(5, 1, 5), TripleVariant::Generalized).unwrap();
        assert_eq!(r.passed("q_one_or_odd_prime_power"), Some(false));
        // find d with q an odd prime cube: brute force over small b, d for p = 5
        let mut found = false;
        for b in 1..60i64 {
            for d in 1..60i64 {
                let t = Triple::new(5, b, d);
                if let Some((_, k)) = odd_prime_power(&t.q()).unwrap() {
                    if k >= 3 && k % 2 == 1 && num_integer::gcd(b, d) == 1 && b % 5 != 0 {
                        let r = check_triple(&t, TripleVariant::Generalized).unwrap();
                        assert_eq!(r.passed("q_one_or_odd_prime_power"), Some(true));
                        assert_eq!(check_triple(&t, TripleVariant::Strict).unwrap().passed("q_one_or_odd_prime"), Some(false));
                        found = true;
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn search_recovers_examples() {
        let hits = search_triples(&int(5), &int(1), 5, 5).unwrap();
        assert!(hits.iter().any(|h| h.triple == Triple::new(5, 1, 1) && (h.x, h.y) == (0, 0)));
        let hits = search_triples(&int(29), &int(1), 5, 5).unwrap();
        assert!(hits.iter().any(|h| h.triple == Triple::new(29, 1, 3) && (h.x, h.y) == (1, 0)));
        assert!(hits.windows(2).all(|w| (w[0].x, w[0].y) < (w[1].x, w[1].y)));
        assert!(search_triples(&int(29), &int(1), 0, 0).unwrap().is_empty());
        assert!(search_triples(&int(13), &int(1), 1, 1).is_err());
        assert!(search_triples(&int(29), &int(3), 1, 1).is_err());
    }

    #[test]
    fn search_matches_direct_enumeration() {
        let hits = search_triples(&int(29), &int(5), 8, 6).unwrap();
        let mut expect = Vec::new();
        for x in 0..=8i64 {
            for y in -6..=6i64 {
                let d = 2 * x + 1;
                let b = 174 * y + 5;
                let q = (29 * d * d - 4 * b * b).abs();
                if q == 1 || (q % 2 == 1 && (2..q).take_while(|k| k * k <= q).all(|k| q % k != 0) && q > 1) {
                    expect.push((x, y));
                }
            }
        }
        assert_eq!(hits.iter().map(|h| (h.x, h.y)).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn gcd_witness() {
        assert_eq!(find_gcd_witness_a(&int(29), &int(1), &int(9)).unwrap(), int(263));
        assert_eq!(find_gcd_witness_a(&int(5), &int(1), &int(1)).unwrap(), int(21));
        // Case 1: 3 | b, c ≡ 2 mod 3; q = |25 - 36| = 11, H1 = 43
        let a = find_gcd_witness_a(&int(5), &int(3), &int(5)).unwrap();
        assert_eq!(a, int(43));
        // an even c makes H1 even and no witness of this shape exists
        assert!(matches!(find_gcd_witness_a(&int(5), &int(3), &int(2)), Err(ConstructError::GcdIdentity { .. })));
        assert!(find_gcd_witness_a(&int(5), &int(3), &int(3)).is_err());
    }

    proptest! {
        #[test]
        fn hits_pass_check_and_are_coprime(xm in 0u64..6, ym in 0u64..6) {
            for h in search_triples(&int(29), &int(1), xm, ym).unwrap() {
                prop_assert!(check_triple(&h.triple, TripleVariant::Strict).unwrap().pass);
                prop_assert!(h.triple.b.gcd(&h.triple.d).is_one());
            }
        }

        #[test]
        fn gcd_identity_holds(b in 1i64..200, d in 0i64..100) {
            let d = 2 * d + 1;
            prop_assume!(b % 3 != 0 && b % 29 != 0 && num_integer::gcd(b, d) == 1);
            let (p, c) = (int(29), int(d * d));
            let b = int(b);
            let a = find_gcd_witness_a(&p, &b, &c).unwrap();
            let h1 = int(2) * &b * &b + &p * &c;
            let lhs = (&a * &a + int(2) * &p * &b * &b) * (int(2) * &a * &a + &p * &p * &c);
            prop_assert!(lhs.gcd(&(h1 * 3)).is_one());
        }
    }
}
