use crate::arith::{is_prime, ArithError, Integer};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A place of Q: a prime p, or the real place.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(Integer),
    Infinite,
}

impl Place {
    pub fn finite(p: impl Into<Integer>) -> Result<Self, ArithError> {
        let p = p.into();
        if !is_prime(&p)? {
            return Err(ArithError::NotPrime(p));
        }
        Ok(Place::Finite(p))
    }

    pub fn prime(&self) -> Option<&Integer> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinite => None,
        }
    }

    pub fn is_two(&self) -> bool {
        matches!(self, Place::Finite(p) if *p == Integer::from(2))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Place {
    type Err = ArithError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Place::Infinite),
            t => Place::finite(crate::arith::parse_integer(t)?),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Odd primes up to and including `bound`, ascending.
pub fn odd_primes_up_to(bound: u64) -> Vec<u64> {
    (3..=bound).step_by(2).filter(|&n| is_prime(&Integer::from(n)).unwrap_or(false)).collect()
}
