use crate::arith::{serde_str, Integer, Rational};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    #[serde(with = "serde_str::rat_vec")]
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints<I: Into<Integer> + Clone>(cs: &[I]) -> Self {
        Self::new(cs.iter().map(|c| Rational::from_integer(c.clone().into())).collect())
    }

    /// Parses decimal integer coefficients, ascending.
    pub fn from_strs(cs: &[&str]) -> Self {
        Self::new(
            cs.iter()
                .map(|s| Rational::from_integer(s.parse::<Integer>().expect("decimal integer")))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// c·x^k
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// self(g(x))
    pub fn compose(&self, g: &Polynomial) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Polynomial) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lc;
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * di;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    /// Monic gcd over Q.
    pub fn gcd(&self, other: &Polynomial) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            // keep coefficient growth in check
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Least common denominator of the coefficients and gcd of the resulting
    /// integers: self = content · primitive_integer_part.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut den = Integer::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut g = Integer::zero();
        for c in &self.coeffs {
            g = g.gcd(&(c.numer() * (&den / c.denom())));
        }
        Rational::new(g, den)
    }

    /// Integer coefficients with gcd 1 and the sign of the original leading
    /// coefficient preserved.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.content()))
    }

    pub fn integer_coeffs(&self) -> Option<Vec<Integer>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Whether only even powers occur.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| k % 2 == 0 || c.is_zero())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Polynomial::new(v)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("T")?,
                _ => write!(f, "T^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_ints(cs)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(a.derivative(), p(&[0, 2]));
        assert_eq!(a.eval(&rat(3, 1)), rat(8, 1));
        assert_eq!(a.compose(&b), p(&[0, 2, 1]));
        assert_eq!(p(&[2, 4, 6]).content(), rat(2, 1));
        assert_eq!(p(&[2, -4, -6]).primitive_part(), p(&[1, -2, -3]));
        assert_eq!(p(&[1, 0, -3]).to_string(), "-3T^2 + 1");
        assert_eq!(Polynomial::zero().degree(), None);
        assert!(p(&[1, 0, 3, 0, 5]).is_even());
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|v| p(&v))
    }

    proptest! {
        #[test]
        fn division_identity(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }

        #[test]
        fn gcd_divides(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = a.gcd(&b);
            prop_assert!(a.div_rem(&g).1.is_zero());
            prop_assert!(b.div_rem(&g).1.is_zero());
        }

        #[test]
        fn compose_evaluates(a in small_poly(), b in small_poly(), t in -10i64..10) {
            let t = rat(t, 3);
            prop_assert_eq!(a.compose(&b).eval(&t), a.eval(&b.eval(&t)));
        }
    }
}
