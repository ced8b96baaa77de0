//! Max-plus carrier over exact rationals with a distinguished minus-infinity.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::rational::{format_rational, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tropical {
    NegInf,
    Finite(BigRational),
}

impl Tropical {
    pub fn zero() -> Self {
        Tropical::NegInf
    }

    pub fn one() -> Self {
        Tropical::Finite(BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Tropical::Finite(crate::rational::rational_int(n))
    }

    /// Addition is maximum.
    pub fn add(&self, other: &Tropical) -> Tropical {
        match self.cmp_trop(other) {
            Ordering::Less => other.clone(),
            _ => self.clone(),
        }
    }

    /// Multiplication is numeric addition; minus-infinity annihilates.
    pub fn mul(&self, other: &Tropical) -> Tropical {
        match (self, other) {
            (Tropical::NegInf, _) | (_, Tropical::NegInf) => Tropical::NegInf,
            (Tropical::Finite(a), Tropical::Finite(b)) => Tropical::Finite(a + b),
        }
    }

    fn cmp_trop(&self, other: &Tropical) -> Ordering {
        match (self, other) {
            (Tropical::NegInf, Tropical::NegInf) => Ordering::Equal,
            (Tropical::NegInf, _) => Ordering::Less,
            (_, Tropical::NegInf) => Ordering::Greater,
            (Tropical::Finite(a), Tropical::Finite(b)) => a.cmp(b),
        }
    }

    pub fn parse(s: &str) -> Result<Tropical> {
        let s = s.trim();
        if s == "-inf" || s == "-∞" {
            return Ok(Tropical::NegInf);
        }
        Ok(Tropical::Finite(parse_rational(s)?))
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::NegInf => write!(f, "-inf"),
            Tropical::Finite(r) => write!(f, "{}", format_rational(r)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_is_max() {
        let a = Tropical::from_int(1);
        let b = Tropical::from_int(3);
        assert_eq!(a.add(&b), Tropical::from_int(3));
    }

    #[test]
    fn mul_is_numeric_addition() {
        let a = Tropical::from_int(2);
        let b = Tropical::from_int(4);
        assert_eq!(a.mul(&b), Tropical::from_int(6));
    }

    #[test]
    fn neginf_annihilates() {
        let a = Tropical::from_int(5);
        assert_eq!(a.mul(&Tropical::NegInf), Tropical::NegInf);
        assert_eq!(a.add(&Tropical::NegInf), a);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["-inf", "0", "13", "-5", "3/2"] {
            let v = Tropical::parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }
}
