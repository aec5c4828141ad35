use super::{Polynomial, RatFuncError};
use crate::arith::{factor_trial, Integer, Rational};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A quotient N/D of polynomials over Q in canonical form: N and D coprime,
/// both with integer coefficients whose joint gcd is 1, and D with positive
/// leading coefficient. Equality of canonical forms is equality of functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, RatFuncError> {
        if den.is_zero() {
            return Err(RatFuncError::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction { numerator: Polynomial::zero(), denominator: Polynomial::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        // joint content of both coefficient lists
        let mut l = Integer::one();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            l = l.lcm(c.denom());
        }
        let mut gi = Integer::zero();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            gi = gi.gcd(&(c.numer() * (&l / c.denom())));
        }
        let mut scale = Rational::new(l, gi);
        if den.leading().is_negative() {
            scale = -scale;
        }
        RationalFunction { numerator: num.scale(&scale), denominator: den.scale(&scale) }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::canonical(p, Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn identity() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// max(deg N, deg D)
    pub fn degree(&self) -> usize {
        self.numerator.degree().unwrap_or(0).max(self.denominator.degree().unwrap_or(0))
    }

    pub fn evaluate(&self, t: &Rational) -> Result<Rational, RatFuncError> {
        let d = self.denominator.eval(t);
        if d.is_zero() {
            return Err(RatFuncError::Pole(t.clone()));
        }
        Ok(self.numerator.eval(t) / d)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = &(&self.numerator * &o.denominator) + &(&o.numerator * &self.denominator);
        Self::canonical(n, &self.denominator * &o.denominator)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { numerator: -&self.numerator, denominator: self.denominator.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::canonical(&self.numerator * &o.numerator, &self.denominator * &o.denominator)
    }

    pub fn div(&self, o: &Self) -> Result<Self, RatFuncError> {
        if o.is_zero() {
            return Err(RatFuncError::ZeroDenominator);
        }
        Ok(Self::canonical(&self.numerator * &o.denominator, &self.denominator * &o.numerator))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::canonical(self.numerator.scale(c), self.denominator.clone())
    }

    pub fn add_const(&self, c: &Rational) -> Self {
        self.add(&Self::constant(c.clone()))
    }

    /// self ∘ g, i.e. T ↦ self(g(T)).
    pub fn compose(&self, g: &RationalFunction) -> Result<Self, RatFuncError> {
        // homogenise: with g = a/b and n = deg self, multiply N(a/b) and D(a/b) by b^n
        let n = self.degree();
        let a = &g.numerator;
        let b = &g.denominator;
        let homog = |p: &Polynomial| {
            let mut acc = Polynomial::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                let term = &(&a.pow(i as u32) * &b.pow((n - i) as u32)).scale(c);
                acc = &acc + term;
            }
            acc
        };
        let den = homog(&self.denominator);
        if den.is_zero() {
            return Err(RatFuncError::ComposeIntoPole);
        }
        Ok(Self::canonical(homog(&self.numerator), den))
    }

    /// Rational zeros of the numerator and denominator (zeros and poles).
    pub fn zeros_and_poles(&self, factor_bound: u64) -> Result<Vec<Rational>, RatFuncError> {
        let mut s: BTreeSet<Rational> = BTreeSet::new();
        s.extend(rational_roots(&self.numerator, factor_bound)?);
        s.extend(rational_roots(&self.denominator, factor_bound)?);
        Ok(s.into_iter().collect())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

fn divisors(n: &Integer, bound: u64) -> Result<Vec<Integer>, RatFuncError> {
    let mut ds = vec![Integer::one()];
    for (p, k) in factor_trial(n, bound)? {
        let mut next = Vec::with_capacity(ds.len() * (k as usize + 1));
        for d in &ds {
            let mut m = d.clone();
            for _ in 0..=k {
                next.push(m.clone());
                m *= &p;
            }
        }
        ds = next;
    }
    Ok(ds)
}

/// Distinct rational roots, ascending. Degree ≤ 2 is solved in closed form;
/// higher degrees use the rational root theorem, which needs the constant
/// and leading coefficients factored (trial division up to `factor_bound`).
pub fn rational_roots(p: &Polynomial, factor_bound: u64) -> Result<Vec<Rational>, RatFuncError> {
    let mut roots = BTreeSet::new();
    let Some(deg) = p.degree() else { return Ok(vec![]) };
    // strip the root 0
    let low = p.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.insert(Rational::zero());
    }
    let q = Polynomial::new(p.coeffs()[low..].to_vec()).primitive_part();
    match deg - low {
        0 => {}
        1 => {
            roots.insert(-q.coeff(0) / q.coeff(1));
        }
        2 => {
            let (a, b, c) = (q.coeff(2), q.coeff(1), q.coeff(0));
            let disc = &b * &b - Rational::from_integer(4.into()) * &a * &c;
            if let Some(r) = crate::arith::rational_sqrt(&disc) {
                let two_a = &a * Rational::from_integer(2.into());
                roots.insert((-&b + &r) / &two_a);
                roots.insert((-&b - &r) / &two_a);
            }
        }
        _ => {
            let ints = q.integer_coeffs().expect("primitive part has integer coefficients");
            let c0 = ints[0].abs();
            let cn = ints.last().unwrap().abs();
            let num_divs = divisors(&c0, factor_bound)?;
            let den_divs = divisors(&cn, factor_bound)?;
            for n in &num_divs {
                for d in &den_divs {
                    if n.gcd(d) != Integer::one() {
                        continue;
                    }
                    for s in [n.clone(), -n.clone()] {
                        let r = Rational::new(s, d.clone());
                        if q.eval(&r).is_zero() {
                            roots.insert(r);
                        }
                    }
                }
            }
        }
    }
    Ok(roots.into_iter().collect())
}
