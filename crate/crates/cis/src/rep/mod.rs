//! Boolean-matrix representations of monomials.
//!
//! A term of the product-form resultant is encoded by one 0/1 matrix (a
//! res-representation); a term of the Sylvester permanent is encoded by a
//! properly coupled pair of 0/1 matrices (a syl-representation). This
//! module holds the matrices, the adjusted-sum notation, and the defining
//! predicates; `algorithms` converts between the two encodings and
//! `enumerate` exhausts them for small sizes.

mod algorithms;
mod enumerate;

pub use algorithms::{
    flush_pair, res_from_syl, sort_pair, syl_from_res, MatrixTag, SwapStep, Trace,
};
pub use enumerate::{enumerate_res_reps, enumerate_syl_reps, normalize_term, NormalizedTerm};

use std::fmt;

use crate::error::{CisError, Result};
use crate::term::TermExponent;

/// Matrix over {0,1}, row-major. Indices are 0-based internally; printed
/// coordinates are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BoolMatrix {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        BoolMatrix {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> BoolMatrix {
        BoolMatrix {
            bits: vec![true; rows * cols],
            ..BoolMatrix::zeros(rows, cols)
        }
    }

    pub fn from_rows(rows: &[&[u8]]) -> BoolMatrix {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = BoolMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v != 0);
            }
        }
        m
    }

    /// Parses whitespace-separated 0/1 rows; `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<BoolMatrix> {
        let mut rows: Vec<Vec<bool>> = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row: Result<Vec<bool>> = line
                .split_whitespace()
                .map(|tok| match tok {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    other => Err(CisError::Parse(format!(
                        "matrix entries must be 0 or 1, got `{other}`"
                    ))),
                })
                .collect();
            rows.push(row?);
        }
        if rows.is_empty() {
            return Err(CisError::Parse("matrix has no rows".into()));
        }
        let cols = rows[0].len();
        if cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return Err(CisError::Parse("matrix rows have uneven lengths".into()));
        }
        let bits = rows.concat();
        Ok(BoolMatrix {
            rows: rows.len(),
            cols,
            bits,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.bits[row * self.cols + col] = value;
    }

    pub fn swap(&mut self, a: (usize, usize), b: (usize, usize)) {
        let va = self.get(a.0, a.1);
        let vb = self.get(b.0, b.1);
        self.set(a.0, a.1, vb);
        self.set(b.0, b.1, va);
    }

    /// Entrywise flip.
    pub fn complement(&self) -> BoolMatrix {
        BoolMatrix {
            rows: self.rows,
            cols: self.cols,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| self.get(i, j)).count())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|j| (0..self.rows).filter(|&i| self.get(i, j)).count())
            .collect()
    }

    /// Row sums shifted by their 1-based row index.
    pub fn adj_row_sums(&self) -> Vec<usize> {
        self.row_sums()
            .iter()
            .enumerate()
            .map(|(i, s)| i + 1 + s)
            .collect()
    }

    /// Column sums shifted by their 1-based column index.
    pub fn adj_col_sums(&self) -> Vec<usize> {
        self.col_sums()
            .iter()
            .enumerate()
            .map(|(j, s)| j + 1 + s)
            .collect()
    }
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", if self.get(i, j) { 1 } else { 0 })?;
            }
        }
        Ok(())
    }
}

/// Candidate syl-representation: a pair of equally sized 0/1 matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylPair {
    pub s1: BoolMatrix,
    pub s2: BoolMatrix,
}

impl SylPair {
    pub fn new(s1: BoolMatrix, s2: BoolMatrix) -> Result<SylPair> {
        if s1.rows() != s2.rows() || s1.cols() != s2.cols() {
            return Err(CisError::DimensionMismatch(format!(
                "pair members are {}x{} and {}x{}",
                s1.rows(),
                s1.cols(),
                s2.rows(),
                s2.cols()
            )));
        }
        Ok(SylPair { s1, s2 })
    }

    /// The term named by the pair: row sums of the first member, column
    /// sums of the second.
    pub fn term(&self) -> TermExponent {
        TermExponent::new(
            self.s1.row_sums().iter().map(|&s| s as u32).collect(),
            self.s2.col_sums().iter().map(|&s| s as u32).collect(),
        )
    }
}

/// The term named by a res-representation: row sums paired with the
/// column sums of the complement.
pub fn res_term(matrix: &BoolMatrix) -> TermExponent {
    TermExponent::new(
        matrix.row_sums().iter().map(|&s| s as u32).collect(),
        matrix
            .complement()
            .col_sums()
            .iter()
            .map(|&s| s as u32)
            .collect(),
    )
}

fn check_term_dims(rows: usize, cols: usize, term: &TermExponent) -> Result<()> {
    if term.alpha_dim() != rows || term.beta_dim() != cols {
        return Err(CisError::DimensionMismatch(format!(
            "matrix is {rows}x{cols}, term has dimensions ({},{})",
            term.alpha_dim(),
            term.beta_dim()
        )));
    }
    Ok(())
}

/// Does `matrix` encode `term` as a choice of one summand per factor of
/// the product-form resultant?
pub fn is_res_rep(matrix: &BoolMatrix, term: &TermExponent) -> Result<bool> {
    check_term_dims(matrix.rows(), matrix.cols(), term)?;
    Ok(res_term(matrix) == *term)
}

/// Adjusted column sums of the first member and adjusted row sums of the
/// second jointly hit every value 1..=m+n exactly once.
pub fn properly_coupled(pair: &SylPair) -> bool {
    let mut seen = vec![false; pair.s1.rows() + pair.s1.cols()];
    for v in pair
        .s1
        .adj_col_sums()
        .into_iter()
        .chain(pair.s2.adj_row_sums())
    {
        if v == 0 || v > seen.len() || seen[v - 1] {
            return false;
        }
        seen[v - 1] = true;
    }
    true
}

/// The three conditions of a syl-representation: row sums of the first
/// member, column sums of the second, and proper coupling.
pub fn is_syl_rep(pair: &SylPair, term: &TermExponent) -> Result<bool> {
    check_term_dims(pair.s1.rows(), pair.s1.cols(), term)?;
    Ok(pair.term() == *term && properly_coupled(pair))
}

/// All ones below all zeros in every column, with non-increasing column
/// sums left to right; equivalently the matrix is determined by its
/// column sums.
pub fn is_bottom_left_flushed(matrix: &BoolMatrix) -> bool {
    for j in 0..matrix.cols() {
        let mut seen_one = false;
        for i in 0..matrix.rows() {
            match (matrix.get(i, j), seen_one) {
                (true, _) => seen_one = true,
                (false, true) => return false,
                (false, false) => {}
            }
        }
    }
    let cs = matrix.col_sums();
    cs.windows(2).all(|w| w[0] >= w[1])
}

/// The unique bottom-left flushed matrix with the given column sums;
/// rejects increasing or out-of-range sums.
pub fn flushed_from_col_sums(col_sums: &[usize], rows: usize) -> Result<BoolMatrix> {
    if col_sums.is_empty() || rows == 0 {
        return Err(CisError::DimensionMismatch(
            "flushed matrix needs positive dimensions".into(),
        ));
    }
    if let Some(&bad) = col_sums.iter().find(|&&c| c > rows) {
        return Err(CisError::NotFlushable(format!(
            "column sum {bad} exceeds row count {rows}"
        )));
    }
    if let Some(w) = col_sums.windows(2).find(|w| w[0] < w[1]) {
        return Err(CisError::NotFlushable(format!(
            "column sums increase from {} to {}",
            w[0], w[1]
        )));
    }
    let mut m = BoolMatrix::zeros(rows, col_sums.len());
    for (j, &c) in col_sums.iter().enumerate() {
        for i in rows - c..rows {
            m.set(i, j, true);
        }
    }
    Ok(m)
}
