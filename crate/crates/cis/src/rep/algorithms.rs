//! Conversions between the two term encodings.
//!
//! `syl_from_res` is a single flush construction. The reverse direction
//! composes `sort_pair` (bubble sort on the adjusted sums) with
//! `flush_pair` (swap entries of the second matrix downwards while
//! compensating in the first), then keeps the first matrix. Every swap is
//! recorded; all "find" steps take the smallest index in row-major order
//! so traces are reproducible.

use std::fmt;

use super::{flushed_from_col_sums, is_bottom_left_flushed, properly_coupled, BoolMatrix, SylPair};
use crate::error::{CisError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixTag {
    S1,
    S2,
}

impl fmt::Display for MatrixTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixTag::S1 => write!(f, "S1"),
            MatrixTag::S2 => write!(f, "S2"),
        }
    }
}

/// One recorded swap, with the pair state right after it. Coordinates are
/// 1-based to match the printed trace format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapStep {
    pub target: MatrixTag,
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub s1_after: BoolMatrix,
    pub s2_after: BoolMatrix,
}

impl fmt::Display for SwapStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SWAP {} ({},{}) <-> ({},{})",
            self.target, self.a.0, self.a.1, self.b.0, self.b.1
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<SwapStep>,
}

impl Trace {
    pub fn swap_count(&self) -> usize {
        self.steps.len()
    }

    pub fn lines(&self) -> Vec<String> {
        self.steps.iter().map(|s| s.to_string()).collect()
    }

    fn record(&mut self, pair: &SylPair, target: MatrixTag, a: (usize, usize), b: (usize, usize)) {
        self.steps.push(SwapStep {
            target,
            a: (a.0 + 1, a.1 + 1),
            b: (b.0 + 1, b.1 + 1),
            s1_after: pair.s1.clone(),
            s2_after: pair.s2.clone(),
        });
    }

    fn extend(&mut self, other: Trace) {
        self.steps.extend(other.steps);
    }
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

fn require_syl_rep(pair: &SylPair) -> Result<()> {
    if !properly_coupled(pair) {
        return Err(CisError::NotSylRep(
            "adjusted column sums of S1 and adjusted row sums of S2 do not partition 1..=m+n"
                .into(),
        ));
    }
    Ok(())
}

/// Pairs a res-representation with the flushed matrix of the complement
/// column sums. Requires the encoded beta exponents to be non-increasing,
/// which is the same as the column sums being non-decreasing.
pub fn syl_from_res(matrix: &BoolMatrix) -> Result<SylPair> {
    let m = matrix.rows();
    let col_sums = matrix.col_sums();
    let complement_sums: Vec<usize> = col_sums.iter().map(|&c| m - c).collect();
    let flushed = flushed_from_col_sums(&complement_sums, m)?;
    SylPair::new(matrix.clone(), flushed)
}

/// Bubble-sorts the adjusted column sums of S1 and then the adjusted row
/// sums of S2 into increasing order, swapping matrix entries so the term
/// and the coupling are preserved.
pub fn sort_pair(pair: &SylPair) -> Result<(SylPair, Trace)> {
    require_syl_rep(pair)?;
    let mut pair = pair.clone();
    let mut trace = Trace::default();
    let (m, n) = (pair.s1.rows(), pair.s1.cols());
    let budget = (m + n + 1).pow(4);
    let mut spent = 0usize;

    // Phase 1: columns of S1. Moving a 1 from column j to j+1 in the same
    // row shifts one unit of adjusted column sum.
    loop {
        let acs = pair.s1.adj_col_sums();
        if strictly_increasing(&acs) {
            break;
        }
        let j = (0..n - 1)
            .find(|&j| acs[j] > acs[j + 1])
            .expect("unsorted vector has a descent");
        let h = acs[j] - acs[j + 1];
        for _ in 0..h {
            let i = (0..m)
                .find(|&i| pair.s1.get(i, j) && !pair.s1.get(i, j + 1))
                .expect("a column with larger sum has a movable 1");
            pair.s1.swap((i, j), (i, j + 1));
            trace.record(&pair, MatrixTag::S1, (i, j), (i, j + 1));
        }
        spent += 1;
        assert!(spent < budget, "sort phase 1 failed to converge");
    }

    // Phase 2: rows of S2, symmetrically.
    loop {
        let ars = pair.s2.adj_row_sums();
        if strictly_increasing(&ars) {
            break;
        }
        let i = (0..m - 1)
            .find(|&i| ars[i] > ars[i + 1])
            .expect("unsorted vector has a descent");
        let h = ars[i] - ars[i + 1];
        for _ in 0..h {
            let j = (0..n)
                .find(|&j| pair.s2.get(i, j) && !pair.s2.get(i + 1, j))
                .expect("a row with larger sum has a movable 1");
            pair.s2.swap((i, j), (i + 1, j));
            trace.record(&pair, MatrixTag::S2, (i, j), (i + 1, j));
        }
        spent += 1;
        assert!(spent < budget, "sort phase 2 failed to converge");
    }

    Ok((pair, trace))
}

/// Flushes the ones of S2 to the bottom-left while keeping the pair a
/// sorted syl-representation of the same term. Each iteration snapshots
/// the plain and adjusted sums, swaps one out-of-order vertical (1,0)
/// pair in S2, rebalances the rows that now collide, and makes one
/// compensating horizontal swap in S1.
pub fn flush_pair(pair: &SylPair) -> Result<(SylPair, Trace)> {
    require_syl_rep(pair)?;
    if !strictly_increasing(&pair.s1.adj_col_sums()) {
        return Err(CisError::NotSorted(
            "adjusted column sums of S1 are not increasing".into(),
        ));
    }
    if !strictly_increasing(&pair.s2.adj_row_sums()) {
        return Err(CisError::NotSorted(
            "adjusted row sums of S2 are not increasing".into(),
        ));
    }
    if let Some(w) = pair.s2.col_sums().windows(2).find(|w| w[0] < w[1]) {
        return Err(CisError::NotFlushable(format!(
            "beta exponents increase from {} to {}",
            w[0], w[1]
        )));
    }

    let mut pair = pair.clone();
    let mut trace = Trace::default();
    let (m, n) = (pair.s1.rows(), pair.s1.cols());
    let budget = (m + n + 1).pow(4);
    let mut spent = 0usize;

    loop {
        if is_bottom_left_flushed(&pair.s2) {
            return Ok((pair, trace));
        }
        // Snapshot the sums; every later step of this iteration reads
        // these, not recomputed values.
        let r = pair.s2.row_sums();
        let acs = pair.s1.adj_col_sums();
        let ars = pair.s2.adj_row_sums();

        // One out-of-order vertical (1,0) pair in S2, row-major.
        let (i, j) = (0..m - 1)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| pair.s2.get(i, j) && !pair.s2.get(i + 1, j))
            .expect("an unflushed matrix with non-increasing column sums has one");
        pair.s2.swap((i, j), (i + 1, j));
        trace.record(&pair, MatrixTag::S2, (i, j), (i + 1, j));

        // Rows above i with the same snapshot row sum: push the deficit up
        // to the smallest of them.
        let i_low = (0..=i)
            .find(|&k| r[k] == r[i])
            .expect("the row itself qualifies");
        if i_low < i {
            let jj = (0..n)
                .find(|&jj| pair.s2.get(i_low, jj) && !pair.s2.get(i, jj))
                .expect("row i_low has a 1 where row i has a 0");
            pair.s2.swap((i_low, jj), (i, jj));
            trace.record(&pair, MatrixTag::S2, (i_low, jj), (i, jj));
        }

        // Rows below i+1 with the same snapshot row sum: push the surplus
        // down to the largest of them.
        let i_up = (i + 1..m)
            .rev()
            .find(|&k| r[k] == r[i + 1])
            .expect("the row itself qualifies");
        if i + 1 < i_up {
            let jj = (0..n)
                .find(|&jj| pair.s2.get(i + 1, jj) && !pair.s2.get(i_up, jj))
                .expect("row i+1 has a 1 where row i_up has a 0");
            pair.s2.swap((i + 1, jj), (i_up, jj));
            trace.record(&pair, MatrixTag::S2, (i + 1, jj), (i_up, jj));
        }

        // Compensating swap in S1 between the columns whose snapshot
        // adjusted sums bracket the changed rows.
        let want_low = ars[i_low] - 1;
        let want_up = ars[i_up] + 1;
        let j_low = (0..n)
            .find(|&j| acs[j] == want_low)
            .expect("the value below the changed block sits in S1");
        let j_up = (0..n)
            .find(|&j| acs[j] == want_up)
            .expect("the value above the changed block sits in S1");
        let row = (0..m)
            .find(|&i2| !pair.s1.get(i2, j_low) && pair.s1.get(i2, j_up))
            .expect("the larger column has a movable 1");
        pair.s1.swap((row, j_low), (row, j_up));
        trace.record(&pair, MatrixTag::S1, (row, j_low), (row, j_up));

        spent += 1;
        assert!(spent < budget, "flush failed to converge");
    }
}

/// Sorts, flushes, and keeps the first matrix, which is then a
/// res-representation of the same term.
pub fn res_from_syl(pair: &SylPair) -> Result<(BoolMatrix, Trace)> {
    let (sorted, mut trace) = sort_pair(pair)?;
    let (flushed, flush_trace) = flush_pair(&sorted)?;
    trace.extend(flush_trace);
    Ok((flushed.s1, trace))
}
