//! Diagonal plane conics aU² + bV² + cT² = 0.

use crate::arith::{exact_sqrt, serde_str, Integer, Rational};
use crate::local::{hilbert_symbol, LocalError, Place};
use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConicError {
    #[error("conic coefficients must be nonzero")]
    ZeroCoefficient,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error(transparent)]
    Local(#[from] LocalError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalConic {
    #[serde(with = "serde_str::rat")]
    pub a: Rational,
    #[serde(with = "serde_str::rat")]
    pub b: Rational,
    #[serde(with = "serde_str::rat")]
    pub c: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConicPoint {
    #[serde(with = "serde_str::int")]
    pub u: Integer,
    #[serde(with = "serde_str::int")]
    pub v: Integer,
    #[serde(with = "serde_str::int")]
    pub t: Integer,
}

impl ConicPoint {
    pub fn new(u: impl Into<Integer>, v: impl Into<Integer>, t: impl Into<Integer>) -> Self {
        ConicPoint { u: u.into(), v: v.into(), t: t.into() }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero() && self.t.is_zero()
    }

    pub fn is_primitive(&self) -> bool {
        self.u.gcd(&self.v).gcd(&self.t) == Integer::from(1)
    }

    pub fn all_nonzero(&self) -> bool {
        !self.u.is_zero() && !self.v.is_zero() && !self.t.is_zero()
    }

    /// Primitive representative of a rational projective point, sign fixed so
    /// the first nonzero coordinate is positive.
    pub fn from_rationals(u: &Rational, v: &Rational, t: &Rational) -> Result<Self, ConicError> {
        if u.is_zero() && v.is_zero() && t.is_zero() {
            return Err(ConicError::ZeroPoint);
        }
        let den = u.denom().lcm(v.denom()).lcm(t.denom());
        let scale = |x: &Rational| x.numer() * (&den / x.denom());
        let (mut a, mut b, mut c) = (scale(u), scale(v), scale(t));
        let g = a.gcd(&b).gcd(&c);
        a /= &g;
        b /= &g;
        c /= &g;
        let first = [&a, &b, &c].into_iter().find(|x| !x.is_zero()).unwrap().clone();
        if first.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(ConicPoint { u: a, v: b, t: c })
    }
}

impl DiagonalConic {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, ConicError> {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(ConicError::ZeroCoefficient);
        }
        Ok(DiagonalConic { a, b, c })
    }

    pub fn from_ints(a: impl Into<Integer>, b: impl Into<Integer>, c: impl Into<Integer>) -> Result<Self, ConicError> {
        Self::new(
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
            Rational::from_integer(c.into()),
        )
    }

    pub fn value(&self, pt: &ConicPoint) -> Rational {
        let sq = |x: &Integer| Rational::from_integer(x * x);
        &self.a * sq(&pt.u) + &self.b * sq(&pt.v) + &self.c * sq(&pt.t)
    }

    pub fn contains(&self, pt: &ConicPoint) -> Result<bool, ConicError> {
        if pt.is_zero() {
            return Err(ConicError::ZeroPoint);
        }
        Ok(self.value(pt).is_zero())
    }

    /// aU² + bV² + cT² = 0 has a nontrivial point over Q_v iff (−a/c, −b/c)_v = +1.
    pub fn local_solvable(&self, v: &Place) -> Result<bool, ConicError> {
        let x = -(&self.a / &self.c);
        let y = -(&self.b / &self.c);
        Ok(hilbert_symbol(&x, &y, v)? == 1)
    }

    /// Exhaustive scan over primitive points with all coordinates bounded by
    /// `height_bound` in absolute value. Returns the lexicographically
    /// smallest (u, v, t) with u ≥ 0; the result does not depend on how the
    /// scan is split across threads.
    pub fn search_point(&self, height_bound: u64) -> Option<ConicPoint> {
        let h = height_bound as i64;
        // clear denominators: A u² + B v² + C t² = 0 with integer A, B, C
        let den = self.a.denom().lcm(self.b.denom()).lcm(self.c.denom());
        let ci = |x: &Rational| x.numer() * (&den / x.denom());
        let (a, b, c) = (ci(&self.a), ci(&self.b), ci(&self.c));
        let hb = Integer::from(h);
        (0..=h).into_par_iter().find_map_first(|u| {
            let u = Integer::from(u);
            let au2 = &a * &u * &u;
            let mut best: Option<ConicPoint> = None;
            for t in -h..=h {
                let t = Integer::from(t);
                let rhs = -(&au2 + &c * &t * &t);
                if !rhs.is_multiple_of(&b) {
                    continue;
                }
                let Some(r) = exact_sqrt(&(rhs / &b)) else { continue };
                if r > hb {
                    continue;
                }
                for v in [-r.clone(), r.clone()] {
                    let pt = ConicPoint { u: u.clone(), v, t: t.clone() };
                    if pt.is_zero() || !pt.is_primitive() {
                        continue;
                    }
                    if best.as_ref().is_none_or(|b| pt < *b) {
                        best = Some(pt);
                    }
                }
            }
            best
        })
    }
}
