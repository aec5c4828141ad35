//! Deterministic primality testing.
//!
//! * n < 2^64: Miller-Rabin with the first twelve prime bases (exact).
//! * n < 3 317 044 064 679 887 385 961 981: first thirteen prime bases (exact,
//!   Sorenson-Webster bound).
//! * n < 2^128: Baillie-PSW (strong base-2 + strong Lucas) combined with the
//!   thirteen-base battery. No BPSW pseudoprime is known; the range is the
//!   documented support boundary.
//! * larger inputs are rejected rather than answered probabilistically.

use super::{ArithError, Integer};
use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

const BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

pub const PROVEN_PRIMALITY_BOUND: &str = "3317044064679887385961981";
pub const SUPPORTED_PRIMALITY_BOUND: &str = "340282366920938463463374607431768211456";

fn bound(cell: &'static OnceLock<Integer>, s: &str) -> &'static Integer {
    cell.get_or_init(|| s.parse().unwrap())
}

pub fn is_prime(n: &Integer) -> Result<bool, ArithError> {
    static PROVEN: OnceLock<Integer> = OnceLock::new();
    static SUPPORTED: OnceLock<Integer> = OnceLock::new();
    if n.is_negative() {
        return Ok(false);
    }
    if let Some(small) = n.to_u64() {
        return Ok(is_prime_u64(small));
    }
    if n.is_even() {
        return Ok(false);
    }
    for &p in &BASES {
        if (n % p).is_zero() {
            return Ok(false);
        }
    }
    let mr = BASES.iter().all(|&a| strong_probable_prime(n, &Integer::from(a)));
    if n < bound(&PROVEN, PROVEN_PRIMALITY_BOUND) {
        return Ok(mr);
    }
    if n >= bound(&SUPPORTED, SUPPORTED_PRIMALITY_BOUND) {
        return Err(ArithError::PrimalityOutOfRange(n.clone()));
    }
    Ok(mr && strong_lucas_probable_prime(n))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &BASES[..12] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &BASES[..12] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(n: &Integer, a: &Integer) -> bool {
    let nm1: Integer = n - 1u32;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d: Integer = &nm1 >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == nm1 {
            return true;
        }
    }
    false
}

fn jacobi(a: &Integer, n: &Integer) -> i8 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut t = 1i8;
    while !a.is_zero() {
        let z = a.trailing_zeros().unwrap_or(0);
        a >>= z;
        let r8 = (&n % 8u32).to_u8().unwrap();
        if z % 2 == 1 && (r8 == 3 || r8 == 5) {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u8() == Some(3) && (&n % 4u32).to_u8() == Some(3) {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

fn half_mod(x: Integer, n: &Integer) -> Integer {
    if x.is_odd() {
        (x + n) >> 1
    } else {
        x >> 1
    }
}

/// Strong Lucas test with Selfridge's parameter choice (method A).
fn strong_lucas_probable_prime(n: &Integer) -> bool {
    if let Some(r) = super::exact_sqrt(n) {
        return r.is_one();
    }
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            -1 => break,
            0 if &d.abs() != n => return false,
            _ => {}
        }
        d = if d.sign() == Sign::Minus { -d + 2 } else { -d - 2 };
    }
    let q: Integer = (BigInt::one() - &d) / 4;
    let np1: Integer = n + 1u32;
    let s = np1.trailing_zeros().unwrap_or(0);
    let k: Integer = &np1 >> s;

    let mut u = BigInt::one();
    let mut v = BigInt::one();
    let mut qk = q.mod_floor(n);
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v).mod_floor(n);
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if k.bit(i) {
            let u2 = half_mod(&u + &v, n);
            let v2 = half_mod(&d * &u + &v, n);
            u = u2.mod_floor(n);
            v = v2.mod_floor(n);
            qk = (&qk * &q).mod_floor(n);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(n);
    }
    false
}
