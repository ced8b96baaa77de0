//! Exhaustive representation enumeration and the sorting reduction.
//!
//! Enumeration realizes the two "a term occurs iff it has a
//! representation" characterizations as executable oracles. Sizes are
//! guarded because the spaces grow exponentially.

use super::{is_res_rep, properly_coupled, BoolMatrix, SylPair};
use crate::error::{CisError, Result};
use crate::term::TermExponent;

pub const RES_CELL_LIMIT: usize = 12;
pub const SYL_CELL_LIMIT: usize = 9;

/// A term with both exponent vectors sorted non-increasing, plus the
/// permutations that send representations of the sorted term back to
/// representations of the original. `alpha_perm[k]` is the original index
/// (0-based) holding what is now position k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedTerm {
    pub term: TermExponent,
    pub alpha_perm: Vec<usize>,
    pub beta_perm: Vec<usize>,
}

fn sort_desc(values: &[u32]) -> (Vec<u32>, Vec<usize>) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].cmp(&values[a]).then(a.cmp(&b)));
    let sorted = order.iter().map(|&i| values[i]).collect();
    (sorted, order)
}

/// Sorts both exponent vectors into non-increasing order, recording the
/// permutations (stable, so ties keep their original order).
pub fn normalize_term(term: &TermExponent) -> NormalizedTerm {
    let (mu, alpha_perm) = sort_desc(&term.mu);
    let (nu, beta_perm) = sort_desc(&term.nu);
    NormalizedTerm {
        term: TermExponent::new(mu, nu),
        alpha_perm,
        beta_perm,
    }
}

impl NormalizedTerm {
    pub fn is_identity(&self) -> bool {
        self.alpha_perm.iter().enumerate().all(|(k, &i)| k == i)
            && self.beta_perm.iter().enumerate().all(|(k, &i)| k == i)
    }

    /// 1-based images, the conventional way to print a permutation.
    pub fn alpha_perm_one_based(&self) -> Vec<usize> {
        self.alpha_perm.iter().map(|&i| i + 1).collect()
    }

    pub fn beta_perm_one_based(&self) -> Vec<usize> {
        self.beta_perm.iter().map(|&i| i + 1).collect()
    }

    /// Maps a res-representation of the sorted term to one of the
    /// original term by permuting rows and columns back.
    pub fn denormalize_res(&self, matrix: &BoolMatrix) -> BoolMatrix {
        let mut out = BoolMatrix::zeros(matrix.rows(), matrix.cols());
        for (k, &i) in self.alpha_perm.iter().enumerate() {
            for (l, &j) in self.beta_perm.iter().enumerate() {
                out.set(i, j, matrix.get(k, l));
            }
        }
        out
    }

    /// Maps a syl-representation of the sorted term back: rows of the
    /// first matrix carry alpha indices, columns of the second carry beta
    /// indices; the coupled position sums are untouched.
    pub fn denormalize_pair(&self, pair: &SylPair) -> SylPair {
        let mut s1 = BoolMatrix::zeros(pair.s1.rows(), pair.s1.cols());
        for (k, &i) in self.alpha_perm.iter().enumerate() {
            for j in 0..pair.s1.cols() {
                s1.set(i, j, pair.s1.get(k, j));
            }
        }
        let mut s2 = BoolMatrix::zeros(pair.s2.rows(), pair.s2.cols());
        for i in 0..pair.s2.rows() {
            for (l, &j) in self.beta_perm.iter().enumerate() {
                s2.set(i, j, pair.s2.get(i, l));
            }
        }
        SylPair::new(s1, s2).expect("dimensions preserved")
    }
}

/// All 0/1 matrices with the given row sums.
fn matrices_with_row_sums(rows: usize, cols: usize, sums: &[u32]) -> Vec<BoolMatrix> {
    fn fill(out: &mut Vec<BoolMatrix>, current: &mut BoolMatrix, sums: &[u32], row: usize) {
        if row == sums.len() {
            out.push(current.clone());
            return;
        }
        let cols = current.cols();
        let want = sums[row] as usize;
        if want > cols {
            return;
        }
        for mask in 0u32..1 << cols {
            if mask.count_ones() as usize != want {
                continue;
            }
            for j in 0..cols {
                current.set(row, j, mask >> j & 1 == 1);
            }
            fill(out, current, sums, row + 1);
        }
        for j in 0..cols {
            current.set(row, j, false);
        }
    }
    let mut out = Vec::new();
    let mut current = BoolMatrix::zeros(rows, cols);
    fill(&mut out, &mut current, sums, 0);
    out
}

fn check_cell(term: &TermExponent, limit: usize, what: &str) -> Result<(usize, usize)> {
    let m = term.alpha_dim();
    let n = term.beta_dim();
    if m == 0 || n == 0 {
        return Err(CisError::DimensionMismatch(
            "term needs at least one alpha and one beta exponent".into(),
        ));
    }
    if m * n > limit {
        return Err(CisError::EnumerationTooLarge(format!(
            "{what} enumeration allows m*n <= {limit}, got {m}x{n}"
        )));
    }
    Ok((m, n))
}

/// Every matrix encoding the term as a choice in the product-form
/// resultant.
pub fn enumerate_res_reps(term: &TermExponent) -> Result<Vec<BoolMatrix>> {
    let (m, n) = check_cell(term, RES_CELL_LIMIT, "res-representation")?;
    let candidates = matrices_with_row_sums(m, n, &term.mu);
    Ok(candidates
        .into_iter()
        .filter(|c| is_res_rep(c, term).unwrap())
        .collect())
}

/// Every properly coupled pair encoding the term as a permutation path of
/// the Sylvester permanent.
pub fn enumerate_syl_reps(term: &TermExponent) -> Result<Vec<SylPair>> {
    let (m, n) = check_cell(term, SYL_CELL_LIMIT, "syl-representation")?;
    let firsts = matrices_with_row_sums(m, n, &term.mu);
    // Second members by column sums: build transposed and flip.
    let seconds: Vec<BoolMatrix> = matrices_with_row_sums(n, m, &term.nu)
        .into_iter()
        .map(|t| {
            let mut s = BoolMatrix::zeros(m, n);
            for i in 0..m {
                for j in 0..n {
                    s.set(i, j, t.get(j, i));
                }
            }
            s
        })
        .collect();
    let mut out = Vec::new();
    for s1 in &firsts {
        for s2 in &seconds {
            let pair = SylPair::new(s1.clone(), s2.clone())?;
            if properly_coupled(&pair) {
                out.push(pair);
            }
        }
    }
    Ok(out)
}
