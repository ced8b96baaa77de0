//! Cofinite topology on the rational line: the empty set together with all
//! complements of finite point sets.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;

use crate::error::{CisError, Result};
use crate::rational::{format_rational, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cofinite {
    Empty,
    /// The complement of the given finite set of excluded points.
    Excluding(BTreeSet<BigRational>),
}

impl Cofinite {
    pub fn zero() -> Self {
        Cofinite::Empty
    }

    /// The whole line: nothing excluded.
    pub fn one() -> Self {
        Cofinite::Excluding(BTreeSet::new())
    }

    pub fn excluding<I: IntoIterator<Item = BigRational>>(points: I) -> Self {
        Cofinite::Excluding(points.into_iter().collect())
    }

    /// Union: excluded points are those missing from both sides.
    pub fn add(&self, other: &Cofinite) -> Cofinite {
        match (self, other) {
            (Cofinite::Empty, x) | (x, Cofinite::Empty) => x.clone(),
            (Cofinite::Excluding(a), Cofinite::Excluding(b)) => {
                Cofinite::Excluding(a.intersection(b).cloned().collect())
            }
        }
    }

    /// Intersection: excluded points accumulate.
    pub fn mul(&self, other: &Cofinite) -> Cofinite {
        match (self, other) {
            (Cofinite::Empty, _) | (_, Cofinite::Empty) => Cofinite::Empty,
            (Cofinite::Excluding(a), Cofinite::Excluding(b)) => {
                Cofinite::Excluding(a.union(b).cloned().collect())
            }
        }
    }

    pub fn parse(s: &str) -> Result<Cofinite> {
        let s = s.trim();
        if s == "∅" || s.eq_ignore_ascii_case("empty") {
            return Ok(Cofinite::Empty);
        }
        if s == "R" {
            return Ok(Cofinite::one());
        }
        let inner = s
            .strip_prefix("R\\")
            .or_else(|| s.strip_prefix("R∖"))
            .and_then(|t| t.strip_prefix('{'))
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| {
                CisError::Parse(format!(
                    "expected `empty`, `R`, or `R\\{{p,...}}`, got `{s}`"
                ))
            })?;
        let mut points = BTreeSet::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            points.insert(parse_rational(part)?);
        }
        Ok(Cofinite::Excluding(points))
    }
}

impl fmt::Display for Cofinite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cofinite::Empty => write!(f, "∅"),
            Cofinite::Excluding(points) if points.is_empty() => write!(f, "R"),
            Cofinite::Excluding(points) => {
                let body: Vec<String> = points.iter().map(format_rational).collect();
                write!(f, "R\\{{{}}}", body.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational_int;

    fn co(points: &[i64]) -> Cofinite {
        Cofinite::excluding(points.iter().map(|&p| rational_int(p)))
    }

    #[test]
    fn union_intersects_exclusions() {
        assert_eq!(co(&[0, 1]).add(&co(&[0, -1])), co(&[0]));
        assert_eq!(Cofinite::Empty.add(&co(&[2])), co(&[2]));
    }

    #[test]
    fn intersection_unions_exclusions() {
        assert_eq!(co(&[0, 1]).mul(&co(&[0, 2])), co(&[0, 1, 2]));
        assert_eq!(co(&[1]).mul(&Cofinite::Empty), Cofinite::Empty);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["∅", "R", "R\\{0}", "R\\{-1,0,3/2}"] {
            let v = Cofinite::parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }
}
