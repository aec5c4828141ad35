use super::{LocalError, MPoly};
use crate::arith::{is_integral_at, ord, pow, residue, serde_str, Integer, Rational};
use crate::ratfunc::Polynomial;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Hypotheses of the δ-version of Hensel's lemma for one variable of a
/// multivariate polynomial at a p-integral point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HenselSystem {
    pub f: MPoly,
    #[serde(with = "serde_str::rat_vec")]
    pub point: Vec<Rational>,
    pub variable_index: usize,
    pub delta: u32,
    #[serde(with = "serde_str::int")]
    pub p: Integer,
}

/// Valuations are `None` when the value is exactly zero (valuation +∞).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HenselCertificate {
    #[serde(with = "serde_str::int")]
    pub prime: Integer,
    pub delta: u32,
    #[serde(with = "serde_str::rat_vec")]
    pub point: Vec<Rational>,
    pub variable_index: usize,
    /// p^(2δ+1), the modulus F must vanish to.
    #[serde(with = "serde_str::int")]
    pub modulus: Integer,
    #[serde(rename = "F_value_valuation")]
    pub f_value_valuation: Option<i64>,
    pub derivative_valuation: Option<i64>,
    pub verified: bool,
}

impl HenselSystem {
    fn check_integral(&self) -> Result<(), LocalError> {
        if self.point.len() != self.f.nvars() || self.variable_index >= self.f.nvars() {
            return Err(LocalError::Malformed("point dimension or variable index".into()));
        }
        for c in self.f.coefficients().chain(self.point.iter()) {
            if !is_integral_at(c, &self.p) {
                return Err(LocalError::NotIntegral { value: c.clone(), prime: self.p.clone() });
            }
        }
        Ok(())
    }

    pub fn certificate(&self) -> Result<HenselCertificate, LocalError> {
        self.check_integral()?;
        let fv = ord(&self.f.eval(&self.point), &self.p);
        let dv = ord(&self.f.partial(self.variable_index).eval(&self.point), &self.p);
        let d = self.delta as i64;
        let verified = fv.is_none_or(|v| v > 2 * d) && dv == Some(d);
        Ok(HenselCertificate {
            prime: self.p.clone(),
            delta: self.delta,
            point: self.point.clone(),
            variable_index: self.variable_index,
            modulus: pow(&self.p, 2 * self.delta + 1),
            f_value_valuation: fv,
            derivative_valuation: dv,
            verified,
        })
    }
}

/// True iff F(pt) ≡ 0 mod p^(2δ+1), ∂F(pt) ≡ 0 mod p^δ and ∂F(pt) ≢ 0 mod p^(δ+1).
pub fn hensel_verify(s: &HenselSystem) -> Result<bool, LocalError> {
    Ok(s.certificate()?.verified)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HenselLift {
    pub residue: Integer,
    pub delta: u32,
    /// The residue is defined modulo this power of p.
    pub modulus: Integer,
}

/// Newton iteration from an approximate root. δ = v_p(f'(x0)) is detected
/// internally and f(x0) ≡ 0 mod p^(2δ+1) is required. The result r satisfies
/// f(r) ≡ 0 mod p^precision and r ≡ x0 mod p^(δ+1); it is reduced modulo
/// p^max(precision, δ+1).
pub fn hensel_lift_detailed(
    f: &Polynomial,
    x0: &Rational,
    p: &Integer,
    precision: u32,
) -> Result<HenselLift, LocalError> {
    let not_liftable = || LocalError::NotLiftable;
    if precision == 0 {
        return Err(LocalError::Malformed("precision must be positive".into()));
    }
    for c in f.coeffs().iter().chain(std::iter::once(x0)) {
        if !is_integral_at(c, p) {
            return Err(LocalError::NotIntegral { value: c.clone(), prime: p.clone() });
        }
    }
    let df = f.derivative();
    let delta = ord(&df.eval(x0), p).ok_or_else(not_liftable)?;
    if ord(&f.eval(x0), p).is_some_and(|v| v < 2 * delta + 1) {
        return Err(not_liftable());
    }
    let delta = delta as u32;
    let keep = precision.max(delta + 1);
    let work = pow(p, keep + 2 * delta + 2);
    let mut x = residue(x0, &work)?;
    loop {
        let xr = Rational::from_integer(x.clone());
        let fx = f.eval(&xr);
        if fx.is_zero() || ord(&fx, p).unwrap() >= (keep + delta) as i64 {
            break;
        }
        let step = fx / df.eval(&xr);
        x = residue(&(xr - step), &work)?;
    }
    let modulus = pow(p, keep);
    Ok(HenselLift { residue: x % &modulus, delta, modulus })
}

pub fn hensel_lift(f: &Polynomial, x0: &Rational, p: &Integer, precision: u32) -> Result<Integer, LocalError> {
    Ok(hensel_lift_detailed(f, x0, p, precision)?.residue)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, sqrt_mod};
    use proptest::prelude::*;

    fn x2_minus(a: i64) -> Polynomial {
        Polynomial::from_ints(&[-a, 0, 1])
    }

    fn univariate_system(f: &Polynomial, x: i64, delta: u32, p: i64) -> HenselSystem {
        HenselSystem { f: MPoly::from_univariate(f), point: vec![rat(x, 1)], variable_index: 0, delta, p: int(p) }
    }

    #[test]
    fn verify_examples() {
        assert!(hensel_verify(&univariate_system(&x2_minus(2), 3, 0, 7)).unwrap());
        assert!(!hensel_verify(&univariate_system(&x2_minus(2), 1, 0, 7)).unwrap());
        assert!(!hensel_verify(&univariate_system(&x2_minus(2), 3, 1, 7)).unwrap());
        let bad = HenselSystem {
            f: MPoly::from_univariate(&x2_minus(2)),
            point: vec![rat(1, 7)],
            variable_index: 0,
            delta: 0,
            p: int(7),
        };
        assert!(matches!(hensel_verify(&bad), Err(LocalError::NotIntegral { .. })));
    }

    #[test]
    fn lift_sqrt2_mod_7_5() {
        let m = 7i64.pow(5);
        let r = hensel_lift(&x2_minus(2), &rat(3, 1), &int(7), 5).unwrap();
        let r: i64 = r.try_into().unwrap();
        assert_eq!((r * r - 2).rem_euclid(m), 0);
        assert_eq!(r % 7, 3);
        // brute force: the unique residue ≡ 3 mod 7 squaring to 2
        let brute: Vec<i64> = (0..m).filter(|x| x % 7 == 3 && (x * x - 2) % m == 0).collect();
        assert_eq!(brute, vec![r]);
    }

    #[test]
    fn lift_trivial_and_58() {
        assert_eq!(hensel_lift(&x2_minus(1), &rat(1, 1), &int(5), 4).unwrap(), int(1));
        let r0 = sqrt_mod(&int(58), &int(3)).unwrap().unwrap();
        let r = hensel_lift(&x2_minus(58), &Rational::from_integer(r0.clone()), &int(3), 6).unwrap();
        let r: i64 = r.try_into().unwrap();
        let m = 729;
        let roots: Vec<i64> = (0..m).filter(|x| (x * x - 58) % m == 0).collect();
        assert!(roots.contains(&r));
        assert_eq!(int(r % 3), r0);
    }

    #[test]
    fn lift_with_positive_delta() {
        // x² - 17 at p = 2: f'(1) = 2 so δ = 1, f(1) = -16 ≡ 0 mod 8
        let f = x2_minus(17);
        let l = hensel_lift_detailed(&f, &rat(1, 1), &int(2), 10).unwrap();
        assert_eq!(l.delta, 1);
        let r = l.residue;
        assert_eq!(((&r * &r) - 17) % 1024, int(0));
        assert_eq!(&r % 4, int(1));
        assert!(matches!(hensel_lift(&x2_minus(3), &rat(1, 1), &int(2), 5), Err(LocalError::NotLiftable)));
    }

    proptest! {
        #[test]
        fn lifted_roots_satisfy_congruence(a in 1i64..500, pi in 0usize..6, prec in 1u32..12) {
            let p = [3i64, 5, 7, 11, 13, 29][pi];
            prop_assume!(a % p != 0);
            if let Some(r0) = sqrt_mod(&int(a), &int(p)).unwrap() {
                let f = x2_minus(a);
                let l = hensel_lift_detailed(&f, &Rational::from_integer(r0.clone()), &int(p), prec).unwrap();
                let fr = f.eval(&Rational::from_integer(l.residue.clone()));
                prop_assert!(crate::arith::divisible_by_power(&fr, &int(p), prec as i64));
                prop_assert_eq!(&l.residue % p, r0);
            }
        }
    }
}
