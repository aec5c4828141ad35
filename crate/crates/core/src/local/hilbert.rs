//! Hilbert symbols (a, b)_v over Q.

use super::{LocalError, Place};
use crate::arith::{legendre_unchecked, residue, unit_part, Integer, Rational};
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

pub fn hilbert_symbol(a: &Rational, b: &Rational, v: &Place) -> Result<i8, LocalError> {
    if a.is_zero() || b.is_zero() {
        return Err(LocalError::ZeroArgument);
    }
    Ok(match v {
        Place::Infinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(p) if *p == Integer::from(2) => hilbert_two(a, b)?,
        Place::Finite(p) => hilbert_odd(a, b, p)?,
    })
}

fn hilbert_odd(a: &Rational, b: &Rational, p: &Integer) -> Result<i8, LocalError> {
    let (alpha, u) = unit_part(a, p)?;
    let (beta, w) = unit_part(b, p)?;
    let mut s = 1i8;
    let half: Integer = (p - 1u32) >> 1;
    if (alpha * beta).rem_euclid(2) == 1 && half.is_odd() {
        s = -s;
    }
    if beta.rem_euclid(2) == 1 {
        s *= legendre_unchecked(&residue(&u, p)?, p);
    }
    if alpha.rem_euclid(2) == 1 {
        s *= legendre_unchecked(&residue(&w, p)?, p);
    }
    Ok(s)
}

fn hilbert_two(a: &Rational, b: &Rational) -> Result<i8, LocalError> {
    let two = Integer::from(2);
    let eight = Integer::from(8);
    let (alpha, u) = unit_part(a, &two)?;
    let (beta, w) = unit_part(b, &two)?;
    let u = residue(&u, &eight)?.to_u32().unwrap();
    let w = residue(&w, &eight)?.to_u32().unwrap();
    let eps = |x: u32| ((x - 1) / 2) % 2;
    let omega = |x: u32| ((x * x - 1) / 8) % 2;
    let e = eps(u) * eps(w)
        + (alpha.rem_euclid(2) as u32) * omega(w)
        + (beta.rem_euclid(2) as u32) * omega(u);
    Ok(if e % 2 == 0 { 1 } else { -1 })
}

/// Places where (a, b)_v can differ from +1: ∞, 2 and odd primes in the
/// numerators or denominators of a and b.
pub fn support_places(a: &Rational, b: &Rational, factor_bound: u64) -> Result<Vec<Place>, LocalError> {
    let mut primes = BTreeSet::new();
    for n in [a.numer(), a.denom(), b.numer(), b.denom()] {
        for (q, _) in crate::arith::factor_trial(n, factor_bound)? {
            if q != Integer::from(2) {
                primes.insert(q);
            }
        }
    }
    let mut out = vec![Place::Infinite, Place::Finite(Integer::from(2))];
    out.extend(primes.into_iter().map(Place::Finite));
    Ok(out)
}

/// Product formula check over the support set of the pair.
pub fn hilbert_product_check(a: &Rational, b: &Rational) -> Result<bool, LocalError> {
    let mut prod = 1i8;
    for v in support_places(a, b, 10_000_000)? {
        prod *= hilbert_symbol(a, b, &v)?;
    }
    Ok(prod == 1)
}

pub fn is_local_square(a: &Rational, v: &Place) -> Result<bool, LocalError> {
    if a.is_zero() {
        return Err(LocalError::ZeroArgument);
    }
    Ok(match v {
        Place::Infinite => a.is_positive(),
        Place::Finite(p) => {
            let (k, u) = unit_part(a, p)?;
            if k.rem_euclid(2) != 0 {
                return Ok(false);
            }
            if *p == Integer::from(2) {
                residue(&u, &Integer::from(8))? == Integer::from(1)
            } else {
                legendre_unchecked(&residue(&u, p)?, p) == 1
            }
        }
    })
}

/// Whether `a` is a norm from the local extension Q_v(√p).
pub fn is_local_norm(a: &Rational, p: &Integer, v: &Place) -> Result<bool, LocalError> {
    Ok(hilbert_symbol(a, &Rational::from_integer(p.clone()), v)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn fin(p: i64) -> Place {
        Place::Finite(int(p))
    }

    /// Primitive solution of z² ≡ a x² + b y² mod p^k by depth-first lifting
    /// over the three affine charts. Every solution mod p^k reduces to one
    /// mod p^j, so the search is exhaustive.
    fn brute_solvable(a: i64, b: i64, p: i64, k: u32) -> bool {
        let md = |x: i64, q: i64| x.rem_euclid(q);
        // charts: x = 1; y = 1 with p | x; z = 1 with p | x, y
        let check = |x: i64, y: i64, z: i64, q: i64| md(z * z - a * x * x - b * y * y, q) == 0;
        fn dfs(
            level: u32,
            k: u32,
            p: i64,
            free: (i64, i64),
            build: &dyn Fn(i64, i64) -> (i64, i64, i64),
            check: &dyn Fn(i64, i64, i64, i64) -> bool,
        ) -> bool {
            if level == k {
                return true;
            }
            let step = p.pow(level);
            for i in 0..p {
                for j in 0..p {
                    let cand = (free.0 + step * i, free.1 + step * j);
                    let (x, y, z) = build(cand.0, cand.1);
                    if check(x, y, z, step * p) && dfs(level + 1, k, p, cand, build, check) {
                        return true;
                    }
                }
            }
            false
        }
        let c1 = |s: i64, t: i64| (1, s, t);
        // y = 1, x divisible by p: free coordinates (x/p, z)
        let c2 = |s: i64, t: i64| (p * s, 1, t);
        let c3 = |s: i64, t: i64| (p * s, p * t, 1);
        dfs(0, k, p, (0, 0), &c1, &check)
            || dfs(0, k, p, (0, 0), &c2, &check)
            || dfs(0, k, p, (0, 0), &c3, &check)
    }

    #[test]
    fn odd_places_match_brute_force_mod_p5() {
        for p in [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            for a in -50i64..=50 {
                for b in -50i64..=50 {
                    if a == 0 || b == 0 {
                        continue;
                    }
                    let sym = hilbert_symbol(&rat(a, 1), &rat(b, 1), &fin(p)).unwrap();
                    assert_eq!(sym == 1, brute_solvable(a, b, p, 5), "({a},{b})_{p}");
                }
            }
        }
    }

    #[test]
    fn two_adic_matches_brute_force() {
        for a in -40i64..=40 {
            for b in -40i64..=40 {
                if a == 0 || b == 0 {
                    continue;
                }
                let sym = hilbert_symbol(&rat(a, 1), &rat(b, 1), &fin(2)).unwrap();
                assert_eq!(sym == 1, brute_solvable(a, b, 2, 9), "({a},{b})_2");
            }
        }
    }

    #[test]
    fn paper_symbol_values() {
        assert_eq!(hilbert_symbol(&rat(2, 1), &rat(5, 1), &fin(5)).unwrap(), -1);
        for p in [5, 13, 29, 37] {
            assert_eq!(hilbert_symbol(&rat(2, 1), &rat(p, 1), &fin(p)).unwrap(), -1);
        }
        // x = 2 gives v₂(x + 116) = 1, odd
        assert_eq!(hilbert_symbol(&rat(29, 1), &rat(118, 1), &fin(2)).unwrap(), -1);
        assert!(hilbert_product_check(&rat(2, 1), &rat(5, 1)).unwrap());
        assert!(hilbert_product_check(&rat(-7, 1), &rat(15, 4)).unwrap());
        assert!(hilbert_product_check(&rat(29, 1), &rat(-63945, 1)).unwrap());
        assert!(hilbert_symbol(&rat(0, 1), &rat(1, 1), &Place::Infinite).is_err());
    }

    #[test]
    fn local_squares_and_norms() {
        assert!(is_local_square(&rat(29, 1), &Place::Infinite).unwrap());
        assert!(is_local_square(&rat(58, 1), &fin(3)).unwrap());
        assert!(!is_local_square(&rat(29, 1), &fin(2)).unwrap());
        assert!(is_local_square(&rat(17, 1), &fin(2)).unwrap());
        assert!(is_local_square(&rat(9, 4), &fin(3)).unwrap());
        // 8p³b²c with c odd is not a norm from Q₂(√p) when p ≡ 5 mod 8
        let p = int(29);
        assert!(!is_local_norm(&rat(8 * 29 * 29 * 29 * 9, 1), &p, &fin(2)).unwrap());
        for v in [Place::Infinite, fin(2), fin(3), fin(29)] {
            assert!(is_local_norm(&rat(1, 1), &p, &v).unwrap());
        }
    }

    fn nonzero_rat() -> impl Strategy<Value = Rational> {
        (-2000i64..2000, 1i64..500)
            .prop_filter("nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| rat(n, d))
    }

    fn place() -> impl Strategy<Value = Place> {
        prop_oneof![
            Just(Place::Infinite),
            prop::sample::select(vec![2i64, 3, 5, 7, 11, 13, 29, 31]).prop_map(fin)
        ]
    }

    proptest! {
        #[test]
        fn bilinear(a in nonzero_rat(), a2 in nonzero_rat(), b in nonzero_rat(), v in place()) {
            let lhs = hilbert_symbol(&(&a * &a2), &b, &v).unwrap();
            let rhs = hilbert_symbol(&a, &b, &v).unwrap() * hilbert_symbol(&a2, &b, &v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn symmetric(a in nonzero_rat(), b in nonzero_rat(), v in place()) {
            prop_assert_eq!(hilbert_symbol(&a, &b, &v).unwrap(), hilbert_symbol(&b, &a, &v).unwrap());
        }

        #[test]
        fn square_classes(a in nonzero_rat(), b in nonzero_rat(), s in nonzero_rat(), v in place()) {
            let as2 = &a * &s * &s;
            prop_assert_eq!(hilbert_symbol(&as2, &b, &v).unwrap(), hilbert_symbol(&a, &b, &v).unwrap());
        }

        #[test]
        fn product_formula(a in nonzero_rat(), b in nonzero_rat()) {
            prop_assert!(hilbert_product_check(&a, &b).unwrap());
        }

        #[test]
        fn norm_is_symbol(a in nonzero_rat(), v in place()) {
            let p = int(29);
            prop_assert_eq!(
                is_local_norm(&a, &p, &v).unwrap(),
                hilbert_symbol(&a, &rat(29, 1), &v).unwrap() == 1
            );
        }
    }
}
