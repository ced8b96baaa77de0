//! Ideals of the univariate rational polynomial ring, all principal:
//! ideal sum is a gcd, ideal product is a polynomial product, and the
//! monic generator is the canonical form.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{CisError, Result};
use crate::rational::{format_rational, is_negative, parse_rational};

/// Univariate polynomial over the rationals, coefficients by ascending
/// power, normalized so the leading coefficient is nonzero. The zero
/// polynomial is the empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// `v + c`, the linear polynomial with root `-c`.
    pub fn linear(c: BigRational) -> Self {
        QPoly::from_coeffs(vec![c, BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        QPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn scale(&self, k: &BigRational) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Remainder of `self` divided by a nonzero `divisor`.
    pub fn rem(&self, divisor: &QPoly) -> QPoly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        let lead = divisor.leading().unwrap().clone();
        while rem.len() >= dd {
            let factor = rem.last().unwrap() / &lead;
            let shift = rem.len() - dd;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let delta = c * &factor;
                rem[shift + j] -= delta;
            }
            // The top coefficient cancels exactly, so the trim makes progress.
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        QPoly::from_coeffs(rem)
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = BigRational::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Parses expressions like `v^2-4`, `2v^2-8`, `-v+3/2`, `0`.
    pub fn parse(s: &str) -> Result<QPoly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(CisError::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(BigRational, usize)> = Vec::new();
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigRational::one();
            while i < bytes.len() && (bytes[i] == '+' || bytes[i] == '-') {
                if bytes[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == '/') {
                i += 1;
            }
            let coeff_str: String = bytes[start..i].iter().collect();
            let mut coeff = if coeff_str.is_empty() {
                BigRational::one()
            } else {
                parse_rational(&coeff_str)?
            };
            coeff *= sign;
            let mut exp = 0usize;
            if i < bytes.len() && bytes[i] == 'v' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == '^' {
                    i += 1;
                    let estart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let estr: String = bytes[estart..i].iter().collect();
                    exp = estr
                        .parse()
                        .map_err(|_| CisError::Parse(format!("bad exponent in `{s}`")))?;
                }
            } else if coeff_str.is_empty() {
                return Err(CisError::Parse(format!("dangling sign in `{s}`")));
            }
            terms.push((coeff, exp));
        }
        let top = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let mut coeffs = vec![BigRational::zero(); top + 1];
        for (c, e) in terms {
            coeffs[e] += c;
        }
        Ok(QPoly::from_coeffs(coeffs))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if is_negative(c) {
                    write!(f, "-")?;
                }
                first = false;
            } else if is_negative(c) {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match e {
                0 => write!(f, "{}", format_rational(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", format_rational(&mag))?;
                    }
                    if e == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// An ideal of the rational polynomial ring, canonically its monic
/// generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ideal {
    Zero,
    Principal(QPoly),
}

impl Ideal {
    pub fn zero() -> Self {
        Ideal::Zero
    }

    pub fn one() -> Self {
        Ideal::Principal(QPoly::one())
    }

    /// Canonicalizes an arbitrary generator: zero gives the zero ideal,
    /// anything else is made monic.
    pub fn principal(gen: QPoly) -> Ideal {
        if gen.is_zero() {
            Ideal::Zero
        } else {
            Ideal::Principal(gen.monic())
        }
    }

    /// Ideal sum: the gcd of the generators.
    pub fn add(&self, other: &Ideal) -> Ideal {
        match (self, other) {
            (Ideal::Zero, x) | (x, Ideal::Zero) => x.clone(),
            (Ideal::Principal(f), Ideal::Principal(g)) => Ideal::Principal(f.gcd(g)),
        }
    }

    /// Ideal product: the product of the generators.
    pub fn mul(&self, other: &Ideal) -> Ideal {
        match (self, other) {
            (Ideal::Zero, _) | (_, Ideal::Zero) => Ideal::Zero,
            (Ideal::Principal(f), Ideal::Principal(g)) => Ideal::Principal(f.mul(g)),
        }
    }

    pub fn parse(s: &str) -> Result<Ideal> {
        let s = s.trim();
        let body = s
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .unwrap_or(s);
        Ok(Ideal::principal(QPoly::parse(body)?))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ideal::Zero => write!(f, "<0>"),
            Ideal::Principal(g) => write!(f, "<{g}>"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational_int;

    fn p(s: &str) -> QPoly {
        QPoly::parse(s).unwrap()
    }

    #[test]
    fn parse_basic_forms() {
        assert_eq!(p("0"), QPoly::zero());
        assert_eq!(p("v"), QPoly::linear(BigRational::zero()));
        assert_eq!(p("v-1"), QPoly::linear(rational_int(-1)));
        assert_eq!(p("2v^2-8").to_string(), "2v^2-8");
        assert_eq!(p("-v+3/2").to_string(), "-v+3/2");
    }

    #[test]
    fn monic_normalization() {
        assert_eq!(Ideal::parse("2v^2-8").unwrap().to_string(), "<v^2-4>");
        assert_eq!(Ideal::parse("5").unwrap(), Ideal::one());
        assert_eq!(Ideal::parse("0").unwrap(), Ideal::Zero);
    }

    #[test]
    fn gcd_of_shifted_linears_is_one() {
        let f = p("v-1");
        let g = p("v+1");
        assert_eq!(f.gcd(&g), QPoly::one());
    }

    #[test]
    fn gcd_extracts_common_factor() {
        // (v-1)(v-2) and (v-1)(v+3) share v-1.
        let f = p("v-1").mul(&p("v-2"));
        let g = p("v-1").mul(&p("v+3"));
        assert_eq!(f.gcd(&g), p("v-1"));
    }

    #[test]
    fn ideal_laws() {
        let f = Ideal::parse("v-1").unwrap();
        assert_eq!(f.add(&f), f);
        assert_eq!(f.add(&Ideal::Zero), f);
        assert_eq!(f.mul(&Ideal::one()), f);
        assert_eq!(f.mul(&Ideal::Zero), Ideal::Zero);
        let g = Ideal::parse("v-2").unwrap();
        assert_eq!(f.add(&g), Ideal::one());
        assert_eq!(f.mul(&g).to_string(), "<v^2-3v+2>");
    }
}
