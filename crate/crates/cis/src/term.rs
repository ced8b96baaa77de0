//! Monomial exponents in the root symbols.
//!
//! A term `alpha^mu beta^nu` is named by the exponent pair `(mu, nu)`.
//! The same pair doubles as the carrier element of the free term-set
//! semiring and as the term named by a boolean-matrix representation.

use std::fmt;

use crate::error::{CisError, Result};

/// Exponent pair of a monomial in `alpha_1..alpha_m, beta_1..beta_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermExponent {
    pub mu: Vec<u32>,
    pub nu: Vec<u32>,
}

impl TermExponent {
    pub fn new(mu: Vec<u32>, nu: Vec<u32>) -> Self {
        TermExponent { mu, nu }
    }

    pub fn alpha_dim(&self) -> usize {
        self.mu.len()
    }

    pub fn beta_dim(&self) -> usize {
        self.nu.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.mu.iter().map(|&e| e as u64).sum::<u64>()
            + self.nu.iter().map(|&e| e as u64).sum::<u64>()
    }

    pub fn is_constant(&self) -> bool {
        self.mu.iter().all(|&e| e == 0) && self.nu.iter().all(|&e| e == 0)
    }

    /// Exponent-wise sum; the product of the two monomials.
    pub fn combine(&self, other: &TermExponent) -> Result<TermExponent> {
        if self.alpha_dim() != other.alpha_dim() || self.beta_dim() != other.beta_dim() {
            return Err(CisError::DimensionMismatch(format!(
                "term dimensions ({},{}) vs ({},{})",
                self.alpha_dim(),
                self.beta_dim(),
                other.alpha_dim(),
                other.beta_dim()
            )));
        }
        Ok(TermExponent {
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| a + b).collect(),
            nu: self.nu.iter().zip(&other.nu).map(|(a, b)| a + b).collect(),
        })
    }
}

fn fmt_vec(f: &mut fmt::Formatter<'_>, sym: char, v: &[u32]) -> fmt::Result {
    write!(f, "{sym}(")?;
    for (k, e) in v.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, ")")
}

impl fmt::Display for TermExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        fmt_vec(f, 'a', &self.mu)?;
        fmt_vec(f, 'b', &self.nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_adds_exponents() {
        let s = TermExponent::new(vec![1, 0], vec![2]);
        let t = TermExponent::new(vec![0, 3], vec![1]);
        assert_eq!(
            s.combine(&t).unwrap(),
            TermExponent::new(vec![1, 3], vec![3])
        );
    }

    #[test]
    fn combine_rejects_dimension_mismatch() {
        let s = TermExponent::new(vec![1], vec![1]);
        let t = TermExponent::new(vec![1, 1], vec![1]);
        assert!(s.combine(&t).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(TermExponent::new(vec![0, 0], vec![0]).to_string(), "1");
        assert_eq!(
            TermExponent::new(vec![2, 1, 1], vec![1, 1]).to_string(),
            "a(2,1,1)b(1,1)"
        );
    }
}
