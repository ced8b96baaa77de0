//! Power set of a finite labeled universe, stored as a 64-bit mask.

use crate::error::{CisError, Result};

pub const MAX_UNIVERSE: usize = 64;

/// A declared universe of up to 64 labeled points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new(labels: Vec<String>) -> Result<Universe> {
        if labels.is_empty() {
            return Err(CisError::InvalidParams(
                "power-set universe must contain at least one point".into(),
            ));
        }
        if labels.len() > MAX_UNIVERSE {
            return Err(CisError::InvalidParams(format!(
                "power-set universe holds at most {MAX_UNIVERSE} points, got {}",
                labels.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(CisError::InvalidParams(format!(
                    "duplicate universe point `{l}`"
                )));
            }
        }
        Ok(Universe { labels })
    }

    /// Universe labeled by the integer range `lo..=hi`.
    pub fn int_range(lo: i64, hi: i64) -> Result<Universe> {
        if lo > hi {
            return Err(CisError::InvalidParams(format!(
                "empty universe range {lo}..{hi}"
            )));
        }
        Universe::new((lo..=hi).map(|p| p.to_string()).collect())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn full_mask(&self) -> u64 {
        if self.size() == 64 {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn contains_mask(&self, bits: u64) -> bool {
        bits & !self.full_mask() == 0
    }

    pub fn parse_set(&self, s: &str) -> Result<u64> {
        let s = s.trim();
        if s == "∅" || s.eq_ignore_ascii_case("empty") || s == "{}" || s == "[]" {
            return Ok(0);
        }
        if s.eq_ignore_ascii_case("full") || s == "S" {
            return Ok(self.full_mask());
        }
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .or_else(|| s.strip_prefix('{').and_then(|t| t.strip_suffix('}')))
            .ok_or_else(|| {
                CisError::Parse(format!("expected a point list like [1,2], got `{s}`"))
            })?;
        let mut bits = 0u64;
        for part in inner.split(',') {
            let label = part.trim();
            if label.is_empty() {
                continue;
            }
            let idx = self.index_of(label).ok_or_else(|| {
                CisError::Parse(format!("point `{label}` is not in the declared universe"))
            })?;
            bits |= 1u64 << idx;
        }
        Ok(bits)
    }

    pub fn format_set(&self, bits: u64) -> String {
        if bits == 0 {
            return "∅".into();
        }
        let points: Vec<&str> = self
            .labels
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, l)| l.as_str())
            .collect();
        format!("{{{}}}", points.join(","))
    }
}
