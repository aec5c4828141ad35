use super::sextuple::{check_conditions, Sextuple};
use super::ConstructError;
use crate::arith::{ord, pow, rat_int, Integer, Rational};
use crate::conic::ConicPoint;
use crate::ratfunc::{Polynomial, RationalFunction};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use std::ops::RangeInclusive;

struct Seed {
    p: Rational,
    u0: Rational,
    v0: Rational,
    t0: Rational,
    /// 4p³α₀β₀t₀²Q₀
    m: Rational,
    /// 4p⁵β₀t₀²Q₀
    k: Rational,
}

fn seed(s0: &Sextuple) -> Seed {
    let p = rat_int(s0.triple.p.clone());
    let w = &s0.witness;
    let t0 = rat_int(w.t.clone());
    let base = Rational::from_integer(4.into()) * &s0.beta * &t0 * &t0 * s0.big_q();
    let p3 = rat_int(pow(&s0.triple.p, 3));
    let p5 = rat_int(pow(&s0.triple.p, 5));
    Seed {
        m: &base * &p3 * &s0.alpha,
        k: &base * &p5,
        p,
        u0: rat_int(w.u.clone()),
        v0: rat_int(w.v.clone()),
        t0,
    }
}

/// C = (2pu₀A − 2v₀B − 4p³α₀β₀t₀²Q₀) / (B² − pA² + 4p⁵β₀t₀²Q₀)
pub fn extension_constant(s0: &Sextuple, a: &Rational, b: &Rational) -> Result<Rational, ConstructError> {
    let s = seed(s0);
    let two = Rational::from_integer(2.into());
    let num = &two * &s.p * &s.u0 * a - &two * &s.v0 * b - &s.m;
    let den = b * b - &s.p * a * a + &s.k;
    if den.is_zero() {
        return Err(ConstructError::ZeroDenominator);
    }
    Ok(num / den)
}

/// C(T) for (A, B) = (0, T).
pub fn extension_function(s0: &Sextuple) -> Result<RationalFunction, ConstructError> {
    let s = seed(s0);
    let num = Polynomial::new(vec![-s.m.clone(), Rational::from_integer((-2).into()) * &s.v0]);
    let den = Polynomial::new(vec![s.k.clone(), Rational::zero(), Rational::one()]);
    Ok(RationalFunction::new(num, den)?)
}

/// B(T) = v₀T² + 4p³α₀β₀t₀²Q₀·T − 4p⁵β₀v₀t₀²Q₀; with A = 0, v = v₀ + BC
/// vanishes exactly at the roots of B(T).
pub fn b_polynomial(s0: &Sextuple) -> Polynomial {
    let s = seed(s0);
    Polynomial::new(vec![-(&s.v0 * &s.k), s.m.clone(), s.v0.clone()])
}

/// H_i(T) = (v₀Bᵢ + 2p³α₀β₀t₀²Q₀)T + 2p³α₀β₀t₀²Q₀Bᵢ − 4p⁵β₀v₀t₀²Q₀;
/// a second value B ≠ Bᵢ gives the same α as Bᵢ iff H_i(B) = 0.
pub fn h_polynomial(s0: &Sextuple, b_i: &Rational) -> Polynomial {
    let s = seed(s0);
    let half_m = &s.m / Rational::from_integer(2.into());
    Polynomial::new(vec![&half_m * b_i - &s.v0 * &s.k, &s.v0 * b_i + &half_m])
}

fn condition(name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Result<(), ConstructError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructError::Condition { name, detail: detail() })
    }
}

/// (C3): both moved witness coordinates must stay nonzero.
fn condition_c3(u: &Rational, v: &Rational) -> Result<(), ConstructError> {
    condition("C3", !u.is_zero() && !v.is_zero(), || format!("u = {u}, v = {v}"))
}

/// New sextuple (p, b, d, α₀ + 2p²C, β₀, γ₀) with witness (u₀ + AC, v₀ + BC, t₀).
/// (C1)–(C3) are checked in order; the result is re-checked against
/// A1–A5 and B1 before it is returned.
pub fn extend(s0: &Sextuple, a: &Rational, b: &Rational) -> Result<Sextuple, ConstructError> {
    let two = Integer::from(2);
    let p = &s0.triple.p;
    let pr = rat_int(p.clone());
    let integral = |x: &Rational, l: &Integer| ord(x, l).is_none_or(|v| v >= 0);
    let norm = b * b - &pr * a * a;
    condition("C1", integral(a, &two) && integral(b, &two) && ord(&norm, &two) == Some(0), || {
        format!("A = {a}, B = {b}, B^2 - pA^2 = {norm}")
    })?;
    condition("C2", integral(a, p) && ord(b, p) == Some(0), || format!("A = {a}, B = {b} at p = {p}"))?;
    let c = extension_constant(s0, a, b)?;
    let s = seed(s0);
    let u = &s.u0 + a * &c;
    let v = &s.v0 + b * &c;
    condition_c3(&u, &v)?;
    let alpha = &s0.alpha + Rational::from_integer(2.into()) * &pr * &pr * &c;
    let witness = ConicPoint::from_rationals(&u, &v, &s.t0)?;
    let out = Sextuple::new(s0.triple.clone(), alpha, s0.beta.clone(), s0.gamma.clone(), witness)?;
    let report = check_conditions(&out, 3)?;
    let failed: Vec<String> = ["A1", "A2", "A3", "A4", "A5", "B1"]
        .iter()
        .filter(|k| report.passed(k) != Some(true))
        .map(|k| k.to_string())
        .collect();
    if !failed.is_empty() {
        return Err(ConstructError::Postcondition(failed));
    }
    Ok(out)
}

/// Pairs (0, 2px + B0) for x in the range that pass (C1)–(C3); each is
/// confirmed by running [`extend`].
pub fn enumerate_ab(s0: &Sextuple, b0: &Integer, xs: RangeInclusive<i64>) -> Result<Vec<(Rational, Rational)>, ConstructError> {
    let two_p: Integer = &s0.triple.p * 2u32;
    if !b0.gcd(&two_p).is_one() {
        return Err(ConstructError::Precondition(format!("gcd(B0, 2p) = {} ≠ 1", b0.gcd(&two_p))));
    }
    let mut out = Vec::new();
    for x in xs {
        let b = rat_int(&two_p * x + b0);
        match extend(s0, &Rational::zero(), &b) {
            Ok(_) => out.push((Rational::zero(), b)),
            Err(ConstructError::Condition { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, rational_sqrt};
    use crate::construct::family_seed;
    use crate::ratfunc::reference::{printed_function, FAMILY_1, FAMILY_2};
    use crate::sample::sample_rationals;
    use proptest::prelude::*;

    #[test]
    fn symbolic_constants_match_printed() {
        assert_eq!(extension_function(&family_seed(1).unwrap()).unwrap(), printed_function(FAMILY_1.c));
        assert_eq!(extension_function(&family_seed(2).unwrap()).unwrap(), printed_function(FAMILY_2.c));
    }

    #[test]
    fn trivial_pair() {
        for id in [1, 2] {
            let s0 = family_seed(id).unwrap();
            let c = extension_constant(&s0, &rat(0, 1), &rat(0, 1)).unwrap();
            assert_eq!(c, -&s0.alpha / rat(841, 1));
        }
    }

    #[test]
    fn numeric_agrees_with_symbolic() {
        for id in [1, 2] {
            let s0 = family_seed(id).unwrap();
            let cf = extension_function(&s0).unwrap();
            for b in sample_rationals(11, 50) {
                assert_eq!(extension_constant(&s0, &rat(0, 1), &b).unwrap(), cf.evaluate(&b).unwrap());
            }
        }
    }

    #[test]
    fn moved_coordinate_is_minus_b_polynomial() {
        for id in [1, 2] {
            let s0 = family_seed(id).unwrap();
            let g = extension_function(&s0).unwrap().mul(&RationalFunction::identity()).add_const(&rat_int(s0.witness.v.clone()));
            let bt = b_polynomial(&s0);
            // same zeros: the numerator of G is a constant multiple of B(T)
            let ratio = &g.numerator().leading() / &bt.leading();
            assert_eq!(g.numerator(), &bt.scale(&ratio));
            assert!(ratio < rat(0, 1));
            // B(T) has no rational roots, so (C3) cannot fail for A = 0
            let disc = bt.coeff(1) * bt.coeff(1) - rat(4, 1) * bt.coeff(2) * bt.coeff(0);
            assert!(rational_sqrt(&disc).is_none());
        }
        let s0 = family_seed(1).unwrap();
        let printed = printed_function(FAMILY_1.g);
        let g = extension_function(&s0).unwrap().mul(&RationalFunction::identity()).add_const(&rat(3020031, 1));
        assert_eq!(g, printed);
    }

    #[test]
    fn extend_examples() {
        let s0 = family_seed(1).unwrap();
        let s1 = extend(&s0, &rat(0, 1), &rat(1, 1)).unwrap();
        let c1 = extension_function(&s0).unwrap().evaluate(&rat(1, 1)).unwrap();
        assert_eq!(s1.alpha, rat(7, 1) + rat(1682, 1) * c1);
        assert!(s1.conic().unwrap().contains(&s1.witness).unwrap());
        let s0 = family_seed(2).unwrap();
        match extend(&s0, &rat(0, 1), &rat(29, 1)) {
            Err(ConstructError::Condition { name, .. }) => assert_eq!(name, "C2"),
            other => panic!("{other:?}"),
        }
        match extend(&s0, &rat(0, 1), &rat(2, 1)) {
            Err(ConstructError::Condition { name, .. }) => assert_eq!(name, "C1"),
            other => panic!("{other:?}"),
        }
        match extend(&s0, &rat(1, 29), &rat(2, 1)) {
            Err(ConstructError::Condition { name, .. }) => assert_eq!(name, "C2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn c3_detects_vanishing_coordinates() {
        assert!(condition_c3(&rat(1, 1), &rat(2, 1)).is_ok());
        for (u, v) in [(0, 1), (1, 0), (0, 0)] {
            match condition_c3(&rat(u, 1), &rat(v, 1)) {
                Err(ConstructError::Condition { name, .. }) => assert_eq!(name, "C3"),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn enumerate_family_1() {
        let s0 = family_seed(1).unwrap();
        let pairs = enumerate_ab(&s0, &int(1), 0..=10).unwrap();
        assert_eq!(pairs.len(), 11);
        let mut alphas: Vec<Rational> = pairs.iter().map(|(a, b)| extend(&s0, a, b).unwrap().alpha).collect();
        alphas.sort();
        alphas.dedup();
        assert_eq!(alphas.len(), 11);
        assert!(enumerate_ab(&s0, &int(2), 0..=10).is_err());
        // negative x and the other family
        assert_eq!(enumerate_ab(&family_seed(2).unwrap(), &int(3), -5..=5).unwrap().len(), 11);
    }

    proptest! {
        // C(x) − C(y) = 2(x − y)·H_x(y) / ((x² + K)(y² + K)), so equal α for
        // distinct B happens exactly at zeros of H
        #[test]
        fn collision_polynomial(xn in -500i64..500, yn in -500i64..500, xd in 1i64..50, yd in 1i64..50, id in 1u8..3) {
            let s0 = family_seed(id).unwrap();
            let (x, y) = (rat(xn, xd), rat(yn, yd));
            let cx = extension_constant(&s0, &rat(0, 1), &x).unwrap();
            let cy = extension_constant(&s0, &rat(0, 1), &y).unwrap();
            let k = seed(&s0).k;
            let lhs = (&cx - &cy) * (&x * &x + &k) * (&y * &y + &k);
            let rhs = rat(2, 1) * (&x - &y) * h_polynomial(&s0, &x).eval(&y);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn extended_witness_on_new_conic(x in -200i64..200, id in 1u8..3) {
            let s0 = family_seed(id).unwrap();
            let b = rat(58 * x + 1, 1);
            let s1 = extend(&s0, &rat(0, 1), &b).unwrap();
            prop_assert!(s1.conic().unwrap().contains(&s1.witness).unwrap());
            prop_assert!(check_conditions(&s1, 7).unwrap().passed("A5").unwrap());
        }

        #[test]
        fn extend_with_nonzero_a(an in -30i64..30, x in -30i64..30) {
            // A ≡ 0 mod 2 keeps B² − pA² odd; A p-integral, B a p-unit
            let s0 = family_seed(1).unwrap();
            let (a, b) = (rat(2 * an, 1), rat(58 * x + 3, 1));
            let s1 = extend(&s0, &a, &b).unwrap();
            prop_assert!(s1.conic().unwrap().contains(&s1.witness).unwrap());
        }
    }
}
