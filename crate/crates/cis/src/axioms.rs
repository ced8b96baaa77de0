//! The semiring axiom battery.
//!
//! Each law from the defining table is evaluated over sample triples and
//! reported individually, with a witness triple on failure. The checker
//! is generic over an operation table so tests can aim it at a
//! deliberately broken mock as well as at real instances.

use std::fmt;

use crate::error::{CisError, Result};

/// Operation table the axiom checker runs against.
pub trait CisOps {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn render(&self, e: &Self::Elem) -> String;
}

/// The defining laws of a commutative idempotent semiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdentity,
    AddIdempotent,
    MulCommutative,
    MulAssociative,
    MulIdentity,
    MulAnnihilation,
    Distributive,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::AddCommutative,
        Axiom::AddAssociative,
        Axiom::AddIdentity,
        Axiom::AddIdempotent,
        Axiom::MulCommutative,
        Axiom::MulAssociative,
        Axiom::MulIdentity,
        Axiom::MulAnnihilation,
        Axiom::Distributive,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddAssociative => "add-associative",
            Axiom::AddIdentity => "add-identity",
            Axiom::AddIdempotent => "add-idempotent",
            Axiom::MulCommutative => "mul-commutative",
            Axiom::MulAssociative => "mul-associative",
            Axiom::MulIdentity => "mul-identity",
            Axiom::MulAnnihilation => "mul-annihilation",
            Axiom::Distributive => "distributive",
        }
    }

    pub fn law(&self) -> &'static str {
        match self {
            Axiom::AddCommutative => "a+b = b+a",
            Axiom::AddAssociative => "(a+b)+c = a+(b+c)",
            Axiom::AddIdentity => "a+0 = a",
            Axiom::AddIdempotent => "a+a = a",
            Axiom::MulCommutative => "a*b = b*a",
            Axiom::MulAssociative => "(a*b)*c = a*(b*c)",
            Axiom::MulIdentity => "a*1 = a",
            Axiom::MulAnnihilation => "a*0 = 0",
            Axiom::Distributive => "(a+b)*c = a*c+b*c",
        }
    }

    fn holds<O: CisOps>(&self, ops: &O, a: &O::Elem, b: &O::Elem, c: &O::Elem) -> bool {
        match self {
            Axiom::AddCommutative => ops.add(a, b) == ops.add(b, a),
            Axiom::AddAssociative => ops.add(&ops.add(a, b), c) == ops.add(a, &ops.add(b, c)),
            Axiom::AddIdentity => ops.add(a, &ops.zero()) == *a,
            Axiom::AddIdempotent => ops.add(a, a) == *a,
            Axiom::MulCommutative => ops.mul(a, b) == ops.mul(b, a),
            Axiom::MulAssociative => ops.mul(&ops.mul(a, b), c) == ops.mul(a, &ops.mul(b, c)),
            Axiom::MulIdentity => ops.mul(a, &ops.one()) == *a,
            Axiom::MulAnnihilation => ops.mul(a, &ops.zero()) == ops.zero(),
            Axiom::Distributive => {
                ops.mul(&ops.add(a, b), c) == ops.add(&ops.mul(a, c), &ops.mul(b, c))
            }
        }
    }
}

/// Result of checking one axiom over the sampled triples.
#[derive(Debug, Clone)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub passed: bool,
    /// A failing triple (a, b, c), rendered.
    pub witness: Option<[String; 3]>,
    pub triples_checked: usize,
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> Vec<&AxiomOutcome> {
        self.outcomes.iter().filter(|o| !o.passed).collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            write!(
                f,
                "{:<17} {:<19} {} ({} triples)",
                o.axiom.name(),
                o.axiom.law(),
                if o.passed { "pass" } else { "FAIL" },
                o.triples_checked
            )?;
            if let Some([a, b, c]) = &o.witness {
                write!(f, "  witness: a={a} b={b} c={c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Evaluates every axiom on all ordered triples drawn from `samples`,
/// stopping each axiom after `budget` triples. Requires at least two
/// distinct samples; the two-element boolean carrier is checked
/// exhaustively this way.
pub fn check_axioms<O: CisOps>(ops: &O, samples: &[O::Elem], budget: usize) -> Result<AxiomReport> {
    let mut distinct: Vec<&O::Elem> = Vec::new();
    for s in samples {
        if !distinct.contains(&s) {
            distinct.push(s);
        }
    }
    if distinct.len() < 2 {
        return Err(CisError::TooFewSamples(2, distinct.len()));
    }

    let outcomes = Axiom::ALL
        .iter()
        .map(|axiom| {
            let mut checked = 0usize;
            let mut witness = None;
            'outer: for a in &distinct {
                for b in &distinct {
                    for c in &distinct {
                        if checked >= budget {
                            break 'outer;
                        }
                        checked += 1;
                        if !axiom.holds(ops, a, b, c) {
                            witness = Some([ops.render(a), ops.render(b), ops.render(c)]);
                            break 'outer;
                        }
                    }
                }
            }
            AxiomOutcome {
                axiom: *axiom,
                passed: witness.is_none(),
                witness,
                triples_checked: checked,
            }
        })
        .collect();

    Ok(AxiomReport { outcomes })
}
