//! Text forms for exact rationals shared by several carriers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{CisError, Result};

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || CisError::Parse(format!("expected a rational number, got `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let numer: BigInt = n.trim().parse().map_err(|_| bad())?;
        let denom: BigInt = d.trim().parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(CisError::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(BigRational::new(numer, denom))
    } else {
        let numer: BigInt = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(numer))
    }
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rational_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_negative(r: &BigRational) -> bool {
    r.numer().is_negative()
}
