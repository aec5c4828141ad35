use super::CurveError;
use crate::arith::{exact_sqrt, rational_sqrt, serde_str, Integer, Rational};
use crate::ratfunc::Polynomial;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A rational point of z² = f(x) on the smooth model; at infinity z stands
/// for the leading term z/x^{n+1}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CurvePoint {
    Affine {
        #[serde(with = "serde_str::rat")]
        x: Rational,
        #[serde(with = "serde_str::rat")]
        z: Rational,
    },
    Infinity {
        #[serde(with = "serde_str::rat")]
        z: Rational,
    },
}

// Squares modulo small moduli; L·H(r, s) must be a square mod each of them.
const SIEVE_MODULI: [u64; 10] = [64, 63, 65, 11, 17, 19, 23, 29, 31, 37];

struct Sieve {
    modulus: usize,
    /// ok[r·m + s]
    ok: Vec<bool>,
}

impl Sieve {
    fn new(coeffs: &[Integer], m: u64) -> Self {
        let mi = Integer::from(m);
        let cs: Vec<u64> = coeffs.iter().map(|c| c.mod_floor(&mi).to_u64().unwrap_or(0)).collect();
        let mut square = vec![false; m as usize];
        for y in 0..m {
            square[(y * y % m) as usize] = true;
        }
        let deg = cs.len() - 1;
        let mut ok = vec![false; (m * m) as usize];
        for r in 0..m {
            for s in 0..m {
                // homogeneous evaluation Σ cᵢ rⁱ s^{deg−i}
                let mut acc = 0u64;
                let mut rp = 1u64;
                let mut sp = vec![1u64; deg + 1];
                for j in 1..=deg {
                    sp[j] = sp[j - 1] * s % m;
                }
                for (i, c) in cs.iter().enumerate() {
                    acc = (acc + c * rp % m * sp[deg - i]) % m;
                    rp = rp * r % m;
                }
                ok[(r * m + s) as usize] = square[acc as usize];
            }
        }
        Sieve { modulus: m as usize, ok }
    }

    fn admits(&self, r: i64, s: i64) -> bool {
        let m = self.modulus as i64;
        self.ok[(r.rem_euclid(m) * m + s.rem_euclid(m)) as usize]
    }
}

fn homogeneous(coeffs: &[Integer], r: &Integer, s: &Integer) -> Integer {
    let deg = coeffs.len() - 1;
    let mut acc = Integer::zero();
    let mut spow = Integer::from(1);
    // Horner in r with the s-powers attached from the top
    let mut terms = vec![Integer::zero(); deg + 1];
    for i in (0..=deg).rev() {
        terms[i] = &coeffs[i] * &spow;
        spow *= s;
    }
    for t in terms.iter().rev() {
        acc = acc * r + t;
    }
    acc
}

/// All x = r/s with |r|, s ≤ height_bound and gcd(r, s) = 1 where f(x) is a
/// rational square, plus the two points at infinity when the leading
/// coefficient is a square. f must have even degree. Output is sorted.
pub fn search_rational_points(f: &Polynomial, height_bound: u64) -> Result<Vec<CurvePoint>, CurveError> {
    let deg = match f.degree() {
        Some(d) if d % 2 == 0 && d > 0 => d,
        _ => return Err(CurveError::Precondition("point search needs a polynomial of positive even degree".into())),
    };
    // f = G/L with G integral; f(r/s) is a square iff L·s^deg·f(r/s)·L = L·H(r, s) is
    let den = f.coeffs().iter().fold(Integer::from(1), |acc, c| acc.lcm(c.denom()));
    let coeffs: Vec<Integer> = f.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer() * &den).collect();
    let sieves: Vec<Sieve> = SIEVE_MODULI.iter().map(|&m| Sieve::new(&coeffs, m)).collect();
    let h = i64::try_from(height_bound).map_err(|_| CurveError::Precondition("height bound too large".into()))?;

    let mut points: Vec<CurvePoint> = (1..=h)
        .into_par_iter()
        .flat_map_iter(|s| {
            let coeffs = &coeffs;
            let sieves = &sieves;
            let den = &den;
            (-h..=h).filter_map(move |r| {
                if r.gcd(&s) != 1 || !sieves.iter().all(|sv| sv.admits(r, s)) {
                    return None;
                }
                let (ri, si) = (Integer::from(r), Integer::from(s));
                let v = homogeneous(coeffs, &ri, &si);
                if v.is_negative() {
                    return None;
                }
                let root = exact_sqrt(&v)?;
                // z = √(L·H)/(L·s^{deg/2})
                let z = Rational::new(root, den * num_traits::pow(si.clone(), deg / 2));
                Some((Rational::new(ri, si), z))
            })
        })
        .flat_map_iter(|(x, z)| {
            let mut v = vec![CurvePoint::Affine { x: x.clone(), z: z.clone() }];
            if !z.is_zero() {
                v.push(CurvePoint::Affine { x, z: -z });
            }
            v
        })
        .collect();
    if let Some(z) = rational_sqrt(&f.leading()) {
        points.push(CurvePoint::Infinity { z: z.clone() });
        points.push(CurvePoint::Infinity { z: -z });
    }
    points.sort();
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn affine(x: Rational, z: Rational) -> CurvePoint {
        CurvePoint::Affine { x, z }
    }

    #[test]
    fn control_curves() {
        let f = Polynomial::from_ints(&[1, 0, 0, 0, 0, 0, 1]);
        let pts = search_rational_points(&f, 10).unwrap();
        assert_eq!(
            pts,
            vec![
                affine(rat(0, 1), rat(-1, 1)),
                affine(rat(0, 1), rat(1, 1)),
                CurvePoint::Infinity { z: rat(-1, 1) },
                CurvePoint::Infinity { z: rat(1, 1) },
            ]
        );
        let f = Polynomial::from_ints(&[1, 0, 0, 0, 1]);
        let pts = search_rational_points(&f, 2).unwrap();
        assert!(pts.contains(&affine(rat(0, 1), rat(1, 1))) && pts.contains(&affine(rat(0, 1), rat(-1, 1))));
        assert!(search_rational_points(&Polynomial::from_ints(&[1, 1, 1]), 3).is_ok());
        assert!(search_rational_points(&Polynomial::from_ints(&[1, 1]), 3).is_err());
    }

    #[test]
    fn matches_brute_force_on_rational_coefficients() {
        let f = Polynomial::new(vec![rat(1, 9), rat(2, 3), rat(0, 1), rat(-5, 7), rat(1, 4)]);
        let fast = search_rational_points(&f, 12).unwrap();
        let mut slow = Vec::new();
        for s in 1..=12i64 {
            for r in -12..=12i64 {
                if r.gcd(&s) != 1 {
                    continue;
                }
                let x = rat(r, s);
                if let Some(z) = rational_sqrt(&f.eval(&x)) {
                    slow.push(affine(x.clone(), z.clone()));
                    if !z.is_zero() {
                        slow.push(affine(x, -z));
                    }
                }
            }
        }
        if let Some(z) = rational_sqrt(&f.leading()) {
            slow.push(CurvePoint::Infinity { z: z.clone() });
            slow.push(CurvePoint::Infinity { z: -z });
        }
        slow.sort();
        assert_eq!(fast, slow);
        assert!(!fast.is_empty());
    }

    #[test]
    fn point_json() {
        let j = serde_json::to_string(&affine(rat(1, 2), rat(-3, 1))).unwrap();
        assert_eq!(j, r#"{"kind":"affine","x":"1/2","z":"-3/1"}"#);
    }
}
