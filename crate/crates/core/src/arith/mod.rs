//! Exact integer and rational arithmetic plus the number-theoretic
//! primitives every other module leans on.
//!
//! `Integer` and `Rational` are the arbitrary-precision types from
//! `num-bigint`/`num-rational`. `BigRational` is always stored reduced with a
//! positive denominator, which is the canonical form the rest of the crate
//! relies on for equality and valuation.

mod prime;
pub mod serde_str;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use prime::{is_prime, PROVEN_PRIMALITY_BOUND, SUPPORTED_PRIMALITY_BOUND};

pub type Integer = BigInt;
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("valuation of zero undefined")]
    ValuationOfZero,
    #[error("{0} is not a prime")]
    NotPrime(Integer),
    #[error("{0} is not an odd prime")]
    NotOddPrime(Integer),
    #[error("{value} is not integral at {prime}")]
    NotIntegral { value: Rational, prime: Integer },
    #[error("{value} has no inverse modulo {modulus}")]
    NotInvertible { value: Integer, modulus: Integer },
    #[error("primality of {0} is outside the supported range (< 2^128)")]
    PrimalityOutOfRange(Integer),
    #[error("trial division up to {bound} leaves composite cofactor {cofactor}")]
    FactorizationBound { bound: u64, cofactor: Integer },
    #[error("cannot parse {0:?} as a number")]
    Parse(String),
}

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub fn rat_int(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"123"`, `"-4/6"` and similar decimal forms.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let err = || ArithError::Parse(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Integer = n.trim().parse().map_err(|_| err())?;
            let d: Integer = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| err())?)),
    }
}

pub fn parse_integer(s: &str) -> Result<Integer, ArithError> {
    s.trim().parse().map_err(|_| ArithError::Parse(s.to_string()))
}

/// Always `num/den`, including integers (`5/1`).
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Exponent of `p` in a nonzero integer, together with the cofactor.
pub fn split_power(n: &Integer, p: &Integer) -> (u64, Integer) {
    debug_assert!(!n.is_zero());
    let mut k = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return (k, m);
        }
        m = q;
        k += 1;
    }
}

/// v_p(x) for nonzero rational x.
pub fn valuation(x: &Rational, p: &Integer) -> Result<i64, ArithError> {
    if x.is_zero() {
        return Err(ArithError::ValuationOfZero);
    }
    let (a, _) = split_power(x.numer(), p);
    let (b, _) = split_power(x.denom(), p);
    Ok(a as i64 - b as i64)
}

pub fn valuation_int(n: &Integer, p: &Integer) -> Result<i64, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ValuationOfZero);
    }
    Ok(split_power(n, p).0 as i64)
}

/// Valuation with zero mapped to `None` (+∞).
pub fn ord(x: &Rational, p: &Integer) -> Option<i64> {
    valuation(x, p).ok()
}

/// Splits nonzero x as p^v · u with u a p-adic unit (still a rational).
pub fn unit_part(x: &Rational, p: &Integer) -> Result<(i64, Rational), ArithError> {
    if x.is_zero() {
        return Err(ArithError::ValuationOfZero);
    }
    let (a, n) = split_power(x.numer(), p);
    let (b, d) = split_power(x.denom(), p);
    Ok((a as i64 - b as i64, Rational::new(n, d)))
}

pub fn is_integral_at(x: &Rational, p: &Integer) -> bool {
    !x.denom().is_multiple_of(p)
}

/// True when x ≡ 0 mod p^k in Z_(p); zero counts as divisible by everything.
pub fn divisible_by_power(x: &Rational, p: &Integer, k: i64) -> bool {
    ord(x, p).is_none_or(|v| v >= k)
}

pub fn mod_floor(a: &Integer, m: &Integer) -> Integer {
    a.mod_floor(m)
}

pub fn mod_inverse(a: &Integer, m: &Integer) -> Result<Integer, ArithError> {
    let a = a.mod_floor(m);
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return Err(ArithError::NotInvertible { value: a, modulus: m.clone() });
    }
    Ok(e.x.mod_floor(m))
}

/// Image of a p-integral rational in Z/mZ; `m` must be coprime to the denominator.
pub fn residue(x: &Rational, m: &Integer) -> Result<Integer, ArithError> {
    let inv = mod_inverse(x.denom(), m).map_err(|_| ArithError::NotIntegral {
        value: x.clone(),
        prime: m.clone(),
    })?;
    Ok((x.numer() * inv).mod_floor(m))
}

pub fn pow(base: &Integer, exp: u32) -> Integer {
    num_traits::pow(base.clone(), exp as usize)
}

fn require_odd_prime(p: &Integer) -> Result<(), ArithError> {
    if p.is_even() || !is_prime(p)? {
        return Err(ArithError::NotOddPrime(p.clone()));
    }
    Ok(())
}

/// Legendre symbol (a/p) for an odd prime p, computed by Euler's criterion.
pub fn legendre_symbol(a: &Integer, p: &Integer) -> Result<i8, ArithError> {
    require_odd_prime(p)?;
    Ok(legendre_unchecked(a, p))
}

pub(crate) fn legendre_unchecked(a: &Integer, p: &Integer) -> i8 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e: Integer = (p - 1u32) >> 1;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Square root modulo an odd prime by Tonelli-Shanks; the smaller root in [0, p).
pub fn sqrt_mod(a: &Integer, p: &Integer) -> Result<Option<Integer>, ArithError> {
    require_odd_prime(p)?;
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Ok(Some(Integer::zero()));
    }
    if legendre_unchecked(&a, p) != 1 {
        return Ok(None);
    }
    let one = Integer::one();
    let pm1: Integer = p - 1u32;
    let s = pm1.trailing_zeros().unwrap_or(0);
    let q: Integer = &pm1 >> s;

    let mut z = Integer::from(2);
    while legendre_unchecked(&z, p) != -1 {
        z += 1u32;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + 1u32) >> 1), p);
    while !t.is_one() {
        let mut i = 0;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2) % p;
            i += 1;
        }
        let b = c.modpow(&(&one << (m - i - 1)), p);
        m = i;
        c = (&b * &b) % p;
        t = (t * &c) % p;
        r = (r * b) % p;
    }
    let other = p - &r;
    Ok(Some(if other < r { other } else { r }))
}

/// Factorization by trial division up to `bound`; a remaining cofactor is
/// accepted only if it is prime.
pub fn factor_trial(n: &Integer, bound: u64) -> Result<Vec<(Integer, u32)>, ArithError> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return Ok(out);
    }
    let mut d: u64 = 2;
    while d <= bound {
        let dd = Integer::from(d);
        if &dd * &dd > n {
            break;
        }
        let (k, rest) = split_power(&n, &dd);
        if k > 0 {
            out.push((dd, k as u32));
            n = rest;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        if !is_prime(&n)? {
            return Err(ArithError::FactorizationBound { bound, cofactor: n });
        }
        out.push((n, 1));
    }
    Ok(out)
}

/// Integer square root of a nonnegative integer if it is a perfect square.
pub fn exact_sqrt(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Square root of a rational that is a perfect square in Q.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    Some(Rational::new(exact_sqrt(x.numer())?, exact_sqrt(x.denom())?))
}

/// Tests whether n = r^k with r prime and k odd, returning (r, k).
pub fn odd_prime_power(n: &Integer) -> Result<Option<(Integer, u32)>, ArithError> {
    if n <= &Integer::one() || n.is_even() {
        return Ok(None);
    }
    let bits = n.bits() as u32;
    let mut k = 1;
    while k <= bits {
        let r = n.nth_root(k);
        if &pow(&r, k) == n && is_prime(&r)? {
            return Ok(Some((r, k)));
        }
        k += 2;
    }
    Ok(None)
}

pub fn sign_of(x: &Integer) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        _ => 1,
    }
}

pub fn to_i64(x: &Integer) -> Option<i64> {
    x.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(s: &str) -> Integer {
        s.parse().unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&rat(29, 1), &int(29)).unwrap(), 1);
        assert_eq!(
            valuation(&rat_int(i("-12422263806891130444")), &int(31)).unwrap(),
            1
        );
        assert_eq!(valuation(&rat(9, 4), &int(2)).unwrap(), -2);
        assert_eq!(valuation(&rat(0, 1), &int(2)), Err(ArithError::ValuationOfZero));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(&int(2), &int(5)).unwrap(), -1);
        // squares mod 29 enumerated by hand
        let squares: Vec<i64> = vec![1, 4, 5, 6, 7, 9, 13, 16, 20, 22, 23, 24, 25, 28];
        for a in 1..29 {
            let expected = if squares.contains(&a) { 1 } else { -1 };
            assert_eq!(legendre_symbol(&int(a), &int(29)).unwrap(), expected, "a = {a}");
        }
        assert_eq!(legendre_symbol(&int(3), &int(29)).unwrap(), -1);
        for p in [3, 5, 7, 11, 13, 101] {
            assert_eq!(legendre_symbol(&int(1), &int(p)).unwrap(), 1);
            assert_eq!(legendre_symbol(&int(p), &int(p)).unwrap(), 0);
        }
        assert!(legendre_symbol(&int(3), &int(2)).is_err());
        assert!(legendre_symbol(&int(3), &int(15)).is_err());
    }

    #[test]
    fn sqrt_mod_examples() {
        assert_eq!(sqrt_mod(&int(4), &int(29)).unwrap(), Some(int(2)));
        assert_eq!(sqrt_mod(&int(3), &int(29)).unwrap(), None);
        assert_eq!(sqrt_mod(&int(0), &int(13)).unwrap(), Some(int(0)));
        // p ≡ 1 mod 8 exercises the full Tonelli-Shanks loop
        let p = int(257);
        for a in 1..257 {
            if let Some(r) = sqrt_mod(&int(a), &p).unwrap() {
                assert_eq!((&r * &r) % &p, int(a));
                assert!(r <= &p - &r);
            }
        }
    }

    #[test]
    fn trial_factorization_matches_printed() {
        let f = factor_trial(&i("12422263806891130444"), 100_000).unwrap();
        let expect: Vec<(Integer, u32)> = [(2, 2), (7, 3), (31, 1), (433, 1), (3299, 1), (10589, 1), (19309, 1)]
            .iter()
            .map(|&(p, k)| (int(p), k))
            .collect();
        assert_eq!(f, expect);
        let f = factor_trial(&i("17542605965314382876"), 100_000).unwrap();
        assert_eq!(f.last().unwrap().0, i("56956512874397347"));
        let f = factor_trial(&i("1774606555105302716"), 100_000).unwrap();
        assert_eq!(f.last().unwrap().0, i("192640746320593"));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(odd_prime_power(&int(257)).unwrap(), Some((int(257), 1)));
        assert_eq!(odd_prime_power(&int(27)).unwrap(), Some((int(3), 3)));
        assert_eq!(odd_prime_power(&int(25)).unwrap(), None);
        assert_eq!(odd_prime_power(&int(1)).unwrap(), None);
    }

    #[test]
    fn rational_text_forms() {
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(format_rational(&rat(5, 1)), "5/1");
        assert_eq!(residue(&rat(1, 2), &int(7)).unwrap(), int(4));
    }
}
