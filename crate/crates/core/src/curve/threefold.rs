use super::CurveError;
use crate::arith::{ord, pow, rat, rat_int, serde_str, Integer, Rational};
use crate::construct::{check_triple, find_gcd_witness_a, Triple, TripleVariant};
use crate::local::{hilbert_symbol, is_local_norm, Place};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Local invariant of the quaternion class (p, x + 4pb²) at v: 0 or 1/2.
pub fn threefold_invariant(t: &Triple, x: &Rational, v: &Place) -> Result<Rational, CurveError> {
    let y = x + rat_int(Integer::from(4) * &t.p * &t.b * &t.b);
    if y.is_zero() {
        return Err(CurveError::Precondition("x + 4pb^2 must be nonzero".into()));
    }
    Ok(match hilbert_symbol(&rat_int(t.p.clone()), &y, v)? {
        1 => Rational::zero(),
        _ => rat(1, 2),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThreefoldCase {
    /// x = 2a²
    I,
    /// x = 2pb²
    II,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreefoldWitness {
    pub place: Place,
    pub case: ThreefoldCase,
    #[serde(with = "serde_str::int")]
    pub a: Integer,
    #[serde(with = "serde_str::rat")]
    pub x: Rational,
    /// (2x, p)_l
    pub symbol_2x: i8,
    /// (2(x + 4pb²)(x + p²c), p)_l
    pub symbol_second: i8,
}

fn require_triple(t: &Triple) -> Result<(), CurveError> {
    let strict = check_triple(t, TripleVariant::Strict)?.pass;
    if strict || check_triple(t, TripleVariant::Generalized)?.pass {
        Ok(())
    } else {
        Err(CurveError::Precondition(format!("({}, {}, {}) is not an admissible triple", t.p, t.b, t.d)))
    }
}

/// A local point of the threefold at l: x = 2a² when l is coprime to
/// (a² + 2pb²)(2a² + p²c) (and l ≠ p), otherwise x = 2pb² when l is coprime to
/// 3(2b² + pc). Both norm conditions are re-checked by symbol evaluation.
pub fn threefold_local_witness(t: &Triple, l: &Place) -> Result<ThreefoldWitness, CurveError> {
    require_triple(t)?;
    let (p, b, c) = (&t.p, &t.b, &t.c());
    let a = find_gcd_witness_a(p, b, c)?;
    let a2 = &a * &a;
    let pb2 = p * b * b;
    let coprime = |n: &Integer| match l {
        Place::Infinite => true,
        Place::Finite(q) => q.gcd(n).is_one(),
    };
    let case_one: Integer = (&a2 + Integer::from(2) * &pb2) * (Integer::from(2) * &a2 + p * p * c);
    let case_two: Integer = Integer::from(3) * (Integer::from(2) * b * b + p * c);
    let (case, x) = if l.prime() != Some(p) && coprime(&case_one) {
        (ThreefoldCase::I, Integer::from(2) * &a2)
    } else if coprime(&case_two) {
        (ThreefoldCase::II, Integer::from(2) * &pb2)
    } else {
        return Err(CurveError::Precondition(format!("neither case applies at {l}")));
    };
    let x = rat_int(x);
    let two = rat_int(2);
    let first = &two * &x;
    let second = &two * (&x + rat_int(Integer::from(4) * &pb2)) * (&x + rat_int(p * p * c));
    let symbol = |y: &Rational| -> Result<i8, CurveError> { Ok(if is_local_norm(y, p, l)? { 1 } else { -1 }) };
    let (s1, s2) = (symbol(&first)?, symbol(&second)?);
    if s1 != 1 || s2 != 1 {
        return Err(CurveError::Precondition(format!("x = {x} is not a local point at {l}: symbols ({s1}, {s2})")));
    }
    Ok(ThreefoldWitness { place: l.clone(), case, a, x, symbol_2x: s1, symbol_second: s2 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreefoldScan {
    pub triple: Triple,
    pub precision: u32,
    /// residues x mod 2^N plus the classes u/2^k (u odd mod 2^N, 1 ≤ k ≤ N)
    pub classes: u64,
    /// classes where x, x + 4pb² or x + p²c vanishes mod 2^N
    pub undetermined: u64,
    /// classes on which one of the two norm conditions fails
    pub excluded: u64,
    pub admissible: u64,
    /// admissible classes with v₂(x + 4pb²) odd and invariant 1/2
    pub certified_half: u64,
    pub all_admissible_half: bool,
}

#[derive(Default, Clone, Copy)]
struct Tally {
    classes: u64,
    undetermined: u64,
    excluded: u64,
    admissible: u64,
    certified: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            classes: self.classes + o.classes,
            undetermined: self.undetermined + o.undetermined,
            excluded: self.excluded + o.excluded,
            admissible: self.admissible + o.admissible,
            certified: self.certified + o.certified,
        }
    }
}

/// Classifies every 2-adic class of x at precision 2^N. For p ≡ 5 mod 8 the
/// symbols (p, y)_2 depend only on v₂(y), so a class is decided once the
/// valuations of x, x + 4pb², x + p²c are visible mod 2^N.
pub fn threefold_2adic_obstruction_scan(t: &Triple, precision: u32) -> Result<ThreefoldScan, CurveError> {
    if precision < 4 {
        return Err(CurveError::Precondition(format!("precision {precision} is below 4")));
    }
    if precision > 24 {
        return Err(CurveError::Precondition(format!("precision {precision} is above 24")));
    }
    require_triple(t)?;
    let two = Integer::from(2);
    let modulus = pow(&two, precision);
    let shift_a = Integer::from(4) * &t.p * &t.b * &t.b;
    let shift_b = &t.p * &t.p * t.c();
    let pr = rat_int(t.p.clone());
    let place = Place::Finite(two.clone());
    let size = 1u64 << precision;

    let classify = |x: Rational| -> Result<Tally, CurveError> {
        let mut tally = Tally { classes: 1, ..Tally::default() };
        let ya = &x + rat_int(shift_a.clone());
        let yb = &x + rat_int(shift_b.clone());
        let first = rat_int(2) * &x;
        let second = rat_int(2) * &ya * &yb;
        let norm = |y: &Rational| -> Result<bool, CurveError> { Ok(hilbert_symbol(&pr, y, &place)? == 1) };
        if !(norm(&first)? && norm(&second)?) {
            tally.excluded = 1;
            return Ok(tally);
        }
        tally.admissible = 1;
        let odd = ord(&ya, &two).is_some_and(|v| v % 2 != 0);
        if odd && threefold_invariant(t, &x, &place)? == rat(1, 2) {
            tally.certified = 1;
        }
        Ok(tally)
    };

    let integral = (0..size)
        .into_par_iter()
        .map(|r| {
            let ri = Integer::from(r);
            let vanishes = |y: &Integer| y.mod_floor(&modulus).is_zero();
            if vanishes(&ri) || vanishes(&(&ri + &shift_a)) || vanishes(&(&ri + &shift_b)) {
                return Ok(Tally { classes: 1, undetermined: 1, ..Tally::default() });
            }
            classify(rat_int(ri))
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    // x = u/2^k with u odd: all three terms have valuation −k
    let fractional = (1..=precision)
        .into_par_iter()
        .flat_map_iter(|k| (1..size).step_by(2).map(move |u| (k, u)))
        .map(|(k, u)| classify(Rational::new(Integer::from(u), pow(&two, k))))
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    let total = integral.merge(fractional);
    Ok(ThreefoldScan {
        triple: t.clone(),
        precision,
        classes: total.classes,
        undetermined: total.undetermined,
        excluded: total.excluded,
        admissible: total.admissible,
        certified_half: total.certified,
        all_admissible_half: total.admissible > 0 && total.certified == total.admissible,
    })
}
