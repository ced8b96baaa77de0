//! Compact convex subsets of the rational plane.
//!
//! A value is either empty or the convex hull of finitely many points,
//! stored canonically: strict hull vertices (no collinear interior
//! vertices) in counter-clockwise order starting at the lexicographically
//! smallest vertex. Points and segments are the degenerate cases.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{CisError, Result};
use crate::rational::{format_rational, parse_rational};

pub type Point = (BigRational, BigRational);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Polygon {
    Empty,
    Hull(Vec<Point>),
}

/// Cross product of (a - o) and (b - o); positive means a left turn.
fn cross(o: &Point, a: &Point, b: &Point) -> BigRational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Strict convex hull, counter-clockwise from the lexicographically
/// smallest point. Collinear runs keep only their endpoints, so the
/// output degenerates gracefully to a segment or a single point.
fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl Polygon {
    pub fn zero() -> Self {
        Polygon::Empty
    }

    /// The origin, the Minkowski identity.
    pub fn one() -> Self {
        Polygon::Hull(vec![(BigRational::zero(), BigRational::zero())])
    }

    /// Canonical hull of an arbitrary point set; empty input gives Empty.
    pub fn from_points(points: &[Point]) -> Polygon {
        if points.is_empty() {
            Polygon::Empty
        } else {
            Polygon::Hull(convex_hull(points))
        }
    }

    pub fn vertices(&self) -> &[Point] {
        match self {
            Polygon::Empty => &[],
            Polygon::Hull(v) => v,
        }
    }

    /// Convex hull of the union; Empty is the identity.
    pub fn hull_union(&self, other: &Polygon) -> Polygon {
        let mut pts = self.vertices().to_vec();
        pts.extend_from_slice(other.vertices());
        Polygon::from_points(&pts)
    }

    /// Minkowski sum as the hull of all pairwise vertex sums; Empty
    /// annihilates.
    pub fn minkowski_sum(&self, other: &Polygon) -> Polygon {
        match (self, other) {
            (Polygon::Empty, _) | (_, Polygon::Empty) => Polygon::Empty,
            (Polygon::Hull(a), Polygon::Hull(b)) => {
                let mut sums = Vec::with_capacity(a.len() * b.len());
                for p in a {
                    for q in b {
                        sums.push((&p.0 + &q.0, &p.1 + &q.1));
                    }
                }
                Polygon::from_points(&sums)
            }
        }
    }

    pub fn parse(s: &str) -> Result<Polygon> {
        let s = s.trim();
        if s == "∅" || s.eq_ignore_ascii_case("empty") {
            return Ok(Polygon::Empty);
        }
        let mut points = Vec::new();
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let inner = part
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| {
                    CisError::Parse(format!("expected a point like (x,y), got `{part}`"))
                })?;
            let (x, y) = inner
                .split_once(',')
                .ok_or_else(|| CisError::Parse(format!("expected two coordinates in `{part}`")))?;
            points.push((parse_rational(x)?, parse_rational(y)?));
        }
        if points.is_empty() {
            return Err(CisError::Parse(format!("no points in polygon `{s}`")));
        }
        Ok(Polygon::from_points(&points))
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polygon::Empty => write!(f, "∅"),
            Polygon::Hull(v) => {
                let parts: Vec<String> = v
                    .iter()
                    .map(|(x, y)| format!("({},{})", format_rational(x), format_rational(y)))
                    .collect();
                write!(f, "{}", parts.join(";"))
            }
        }
    }
}
