//! The two routes to the resultant: the product over all root pairs, and
//! the permanent of the Sylvester matrix built from the expanded
//! coefficients. The headline identity is that they always agree over a
//! commutative idempotent semiring.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CisError, Result};
use crate::instance::Instance;
use crate::poly::{poly_from_roots, Polynomial};
use crate::value::Value;

/// Largest matrix order accepted by the permanent; the memo table has one
/// entry per column subset.
pub const PERMANENT_LIMIT: usize = 16;

/// The two root families; `alphas` are the roots of f, `betas` of g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootVectors {
    pub alphas: Vec<Value>,
    pub betas: Vec<Value>,
}

impl RootVectors {
    pub fn new(alphas: Vec<Value>, betas: Vec<Value>) -> Result<RootVectors> {
        if alphas.is_empty() || betas.is_empty() {
            return Err(CisError::EmptyRoots);
        }
        Ok(RootVectors { alphas, betas })
    }
}

/// Square matrix of carrier values, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    order: usize,
    entries: Vec<Value>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<Value>>) -> Result<SquareMatrix> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(CisError::NotSquare);
        }
        Ok(SquareMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &Value {
        &self.entries[row * self.order + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Value]> {
        self.entries.chunks(self.order)
    }
}

/// The product form: fold of `alpha_i + beta_j` over all pairs in
/// row-major order. The value is order-independent; the fold order is
/// fixed so traces reproduce.
pub fn resultant_product(instance: &Instance, roots: &RootVectors) -> Result<Value> {
    let mut acc: Option<Value> = None;
    for a in &roots.alphas {
        for b in &roots.betas {
            let factor = instance.add(a, b)?;
            acc = Some(match acc {
                None => factor,
                Some(p) => p.mul(&factor)?,
            });
        }
    }
    Ok(acc.expect("root vectors are non-empty"))
}

/// The banded coefficient matrix: n shifted rows of f's coefficients
/// above m shifted rows of g's, order m+n, unset entries zero.
pub fn sylvester_matrix(
    instance: &Instance,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<SquareMatrix> {
    let m = f.degree();
    let n = g.degree();
    if m == 0 || n == 0 {
        return Err(CisError::DegreeZero);
    }
    let order = m + n;
    let zero = instance.zero();
    let mut entries = vec![zero; order * order];
    for row in 0..n {
        for (k, c) in f.coeffs().iter().enumerate() {
            entries[row * order + row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().enumerate() {
            entries[(n + row) * order + row + k] = c.clone();
        }
    }
    Ok(SquareMatrix { order, entries })
}

/// Permanent by row expansion memoized on the set of used columns. A
/// semiring has no subtraction, so expansion formulas that cancel terms
/// are unavailable; zero entries prune branches instead.
pub fn permanent(instance: &Instance, matrix: &SquareMatrix) -> Result<Value> {
    let k = matrix.order();
    if k == 0 {
        return Ok(instance.one());
    }
    if k > PERMANENT_LIMIT {
        return Err(CisError::PermanentTooLarge {
            order: k,
            limit: PERMANENT_LIMIT,
        });
    }
    let zero = instance.zero();
    let mut memo: Vec<Option<Value>> = vec![None; 1 << k];
    let full: u32 = (1u32 << k) - 1;

    fn expand(
        matrix: &SquareMatrix,
        zero: &Value,
        memo: &mut [Option<Value>],
        used: u32,
        full: u32,
    ) -> Result<Value> {
        if let Some(v) = &memo[used as usize] {
            return Ok(v.clone());
        }
        let row = used.count_ones() as usize;
        let k = matrix.order();
        let mut acc: Option<Value> = None;
        for col in 0..k {
            if used >> col & 1 == 1 {
                continue;
            }
            let entry = matrix.get(row, col);
            if entry == zero {
                continue;
            }
            let rest = used | 1 << col;
            let sub = if rest == full {
                None
            } else {
                Some(expand(matrix, zero, memo, rest, full)?)
            };
            let prod = match sub {
                None => entry.clone(),
                Some(s) => {
                    if &s == zero {
                        continue;
                    }
                    entry.mul(&s)?
                }
            };
            acc = Some(match acc {
                None => prod,
                Some(s) => s.add(&prod)?,
            });
        }
        let value = acc.unwrap_or_else(|| zero.clone());
        memo[used as usize] = Some(value.clone());
        Ok(value)
    }

    expand(matrix, &zero, &mut memo, 0, full)
}

/// Permanent of the Sylvester matrix of the monic polynomials built from
/// the roots.
pub fn sylvester_expression(instance: &Instance, roots: &RootVectors) -> Result<Value> {
    let f = poly_from_roots(instance, &roots.alphas)?;
    let g = poly_from_roots(instance, &roots.betas)?;
    let matrix = sylvester_matrix(instance, &f, &g)?;
    permanent(instance, &matrix)
}

/// Outcome of comparing the two routes on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub resultant: Value,
    pub sylvester: Value,
}

impl Verdict {
    pub fn equal(&self) -> bool {
        self.resultant == self.sylvester
    }
}

/// Computes both routes and reports both values; they differ only if the
/// instance violates a semiring axiom.
pub fn verify_main_theorem(instance: &Instance, roots: &RootVectors) -> Result<Verdict> {
    Ok(Verdict {
        resultant: resultant_product(instance, roots)?,
        sylvester: sylvester_expression(instance, roots)?,
    })
}

/// One cell of the randomized verification sweep.
#[derive(Debug, Clone)]
pub struct SweepCell {
    pub m: usize,
    pub n: usize,
    pub draw: usize,
    pub verdict: Verdict,
}

/// Runs `draws` random root draws from the instance sample pool for every
/// degree pair up to `(max_m, max_n)`, seeded for reproducibility.
pub fn theorem_sweep(
    instance: &Instance,
    max_m: usize,
    max_n: usize,
    draws: usize,
    seed: u64,
) -> Result<Vec<SweepCell>> {
    let pool = instance.sample_pool();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            for draw in 0..draws {
                let alphas: Vec<Value> = (0..m)
                    .map(|_| pool.choose(&mut rng).unwrap().clone())
                    .collect();
                let betas: Vec<Value> = (0..n)
                    .map(|_| pool.choose(&mut rng).unwrap().clone())
                    .collect();
                let roots = RootVectors::new(alphas, betas)?;
                let verdict = verify_main_theorem(instance, &roots)?;
                cells.push(SweepCell {
                    m,
                    n,
                    draw,
                    verdict,
                });
            }
        }
    }
    Ok(cells)
}
