use crate::arith::{serde_str, Rational};
use crate::ratfunc::Polynomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Sparse multivariate polynomial over Q; terms keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    exponents: Vec<u32>,
    #[serde(with = "serde_str::rat")]
    coefficient: Rational,
}

#[derive(Serialize, Deserialize)]
struct Repr {
    nvars: usize,
    terms: Vec<Term>,
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| Term { exponents: e.clone(), coefficient: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = Repr::deserialize(d)?;
        let mut m = MPoly::zero(r.nvars);
        for t in r.terms {
            if t.exponents.len() != r.nvars {
                return Err(serde::de::Error::custom("exponent vector length mismatch"));
            }
            m.add_term(t.exponents, t.coefficient);
        }
        Ok(m)
    }
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars);
        let e = self.terms.entry(exps).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut m = Self::zero(nvars);
        for (e, c) in terms {
            m.add_term(e, c);
        }
        m
    }

    /// Embeds a univariate polynomial as a polynomial in variable 0 of one variable.
    pub fn from_univariate(f: &Polynomial) -> Self {
        Self::from_terms(1, f.coeffs().iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone())))
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &Rational> {
        self.terms.values()
    }

    pub fn eval(&self, pt: &[Rational]) -> Rational {
        assert_eq!(pt.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in pt.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut m = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            m.add_term(e2, c * Rational::from_integer(e[var].into()));
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_terms(nvars, [(vec![0; nvars], Rational::one())])
    }
}
