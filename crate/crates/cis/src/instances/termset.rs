//! Free term-level semiring on the root symbols: finite sets of monomial
//! exponents with union as addition and pairwise exponent addition as
//! multiplication. Evaluating an expression here yields exactly its set
//! of expanded monomials with multiplicities discarded, which makes this
//! carrier the verification oracle for term-level identities.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{CisError, Result};
use crate::term::TermExponent;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermSet {
    terms: BTreeSet<TermExponent>,
}

impl TermSet {
    pub fn empty() -> Self {
        TermSet {
            terms: BTreeSet::new(),
        }
    }

    /// The constant monomial in the declared dimensions.
    pub fn one(alpha_dim: usize, beta_dim: usize) -> Self {
        TermSet::singleton(TermExponent::new(vec![0; alpha_dim], vec![0; beta_dim]))
    }

    pub fn singleton(term: TermExponent) -> Self {
        TermSet {
            terms: [term].into(),
        }
    }

    /// The symbol `alpha_i` (1-based) as a one-element set.
    pub fn alpha(i: usize, alpha_dim: usize, beta_dim: usize) -> Self {
        let mut mu = vec![0; alpha_dim];
        mu[i - 1] = 1;
        TermSet::singleton(TermExponent::new(mu, vec![0; beta_dim]))
    }

    /// The symbol `beta_j` (1-based) as a one-element set.
    pub fn beta(j: usize, alpha_dim: usize, beta_dim: usize) -> Self {
        let mut nu = vec![0; beta_dim];
        nu[j - 1] = 1;
        TermSet::singleton(TermExponent::new(vec![0; alpha_dim], nu))
    }

    pub fn from_terms<I: IntoIterator<Item = TermExponent>>(terms: I) -> Result<TermSet> {
        let terms: BTreeSet<TermExponent> = terms.into_iter().collect();
        let mut dims = None;
        for t in &terms {
            let d = (t.alpha_dim(), t.beta_dim());
            match dims {
                None => dims = Some(d),
                Some(prev) if prev != d => {
                    return Err(CisError::DimensionMismatch(format!(
                        "terms of dimensions {prev:?} and {d:?} in one set"
                    )))
                }
                _ => {}
            }
        }
        Ok(TermSet { terms })
    }

    pub fn terms(&self) -> &BTreeSet<TermExponent> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, term: &TermExponent) -> bool {
        self.terms.contains(term)
    }

    fn check_dims(&self, other: &TermSet) -> Result<()> {
        if let (Some(a), Some(b)) = (self.terms.first(), other.terms.first()) {
            if a.alpha_dim() != b.alpha_dim() || a.beta_dim() != b.beta_dim() {
                return Err(CisError::DimensionMismatch(format!(
                    "term sets of dimensions ({},{}) vs ({},{})",
                    a.alpha_dim(),
                    a.beta_dim(),
                    b.alpha_dim(),
                    b.beta_dim()
                )));
            }
        }
        Ok(())
    }

    /// Set union.
    pub fn add(&self, other: &TermSet) -> Result<TermSet> {
        self.check_dims(other)?;
        Ok(TermSet {
            terms: self.terms.union(&other.terms).cloned().collect(),
        })
    }

    /// All pairwise monomial products.
    pub fn mul(&self, other: &TermSet) -> Result<TermSet> {
        self.check_dims(other)?;
        let mut out = BTreeSet::new();
        for s in &self.terms {
            for t in &other.terms {
                out.insert(s.combine(t)?);
            }
        }
        Ok(TermSet { terms: out })
    }

    fn parse_exponents(s: &str) -> Result<Vec<u32>> {
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| CisError::Parse(format!("expected an exponent list, got `{s}`")))?;
        inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| CisError::Parse(format!("bad exponent `{p}`")))
            })
            .collect()
    }

    fn parse_term(s: &str, alpha_dim: usize, beta_dim: usize) -> Result<TermExponent> {
        let s = s.trim();
        if s == "1" {
            return Ok(TermExponent::new(vec![0; alpha_dim], vec![0; beta_dim]));
        }
        let rest = s.strip_prefix('a').ok_or_else(|| {
            CisError::Parse(format!("expected a term like a(2,1)b(0,1), got `{s}`"))
        })?;
        let split = rest
            .find('b')
            .ok_or_else(|| CisError::Parse(format!("missing b-exponents in `{s}`")))?;
        let mu = Self::parse_exponents(&rest[..split])?;
        let nu = Self::parse_exponents(&rest[split + 1..])?;
        if mu.len() != alpha_dim || nu.len() != beta_dim {
            return Err(CisError::Parse(format!(
                "term `{s}` has dimensions ({},{}), instance expects ({alpha_dim},{beta_dim})",
                mu.len(),
                nu.len()
            )));
        }
        Ok(TermExponent::new(mu, nu))
    }

    /// Parses `0`, `1`, or `+`-joined terms like `a(2,1,1)b(1,1)`.
    pub fn parse(s: &str, alpha_dim: usize, beta_dim: usize) -> Result<TermSet> {
        let s = s.trim();
        if s == "0" || s == "∅" || s.eq_ignore_ascii_case("empty") {
            return Ok(TermSet::empty());
        }
        let mut terms = BTreeSet::new();
        for part in s.split('+') {
            terms.insert(Self::parse_term(part, alpha_dim, beta_dim)?);
        }
        Ok(TermSet { terms })
    }
}

impl fmt::Display for TermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}
