//! Instance handles: each one fixes a carrier plus its parameters and
//! supplies identities, operations, validation, and the text forms used
//! by the command-line front end.

use std::fmt;

use crate::axioms::{check_axioms, AxiomReport, CisOps};
use crate::error::{CisError, Result};
use crate::instances::{Cofinite, Ideal, Polygon, TermSet, Tropical, Universe};
use crate::rational::rational_frac;
use crate::rational::rational_int;
use crate::value::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Tropical,
    Boolean,
    PowerSet(Universe),
    Cofinite,
    Polygon,
    Sequences { inner: Box<Instance>, len: usize },
    Ideal,
    TermSet { alpha_dim: usize, beta_dim: usize },
}

impl Instance {
    pub fn tropical() -> Instance {
        Instance::Tropical
    }

    pub fn boolean() -> Instance {
        Instance::Boolean
    }

    pub fn power_set(universe: Universe) -> Instance {
        Instance::PowerSet(universe)
    }

    pub fn cofinite() -> Instance {
        Instance::Cofinite
    }

    pub fn polygon() -> Instance {
        Instance::Polygon
    }

    pub fn sequences(inner: Instance, len: usize) -> Result<Instance> {
        if len == 0 {
            return Err(CisError::InvalidParams(
                "sequence length must be at least 1".into(),
            ));
        }
        Ok(Instance::Sequences {
            inner: Box::new(inner),
            len,
        })
    }

    pub fn term_set(alpha_dim: usize, beta_dim: usize) -> Result<Instance> {
        if alpha_dim == 0 || beta_dim == 0 {
            return Err(CisError::InvalidParams(
                "term-set dimensions must be at least 1".into(),
            ));
        }
        Ok(Instance::TermSet {
            alpha_dim,
            beta_dim,
        })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Instance::Tropical => "tropical",
            Instance::Boolean => "boolean",
            Instance::PowerSet(_) => "powerset",
            Instance::Cofinite => "cofinite",
            Instance::Polygon => "polygon",
            Instance::Sequences { .. } => "sequences",
            Instance::Ideal => "ideal",
            Instance::TermSet { .. } => "termset",
        }
    }

    pub fn zero(&self) -> Value {
        match self {
            Instance::Tropical => Value::Tropical(Tropical::zero()),
            Instance::Boolean => Value::Boolean(false),
            Instance::PowerSet(_) => Value::PowerSet(0),
            Instance::Cofinite => Value::Cofinite(Cofinite::zero()),
            Instance::Polygon => Value::Polygon(Polygon::zero()),
            Instance::Sequences { inner, len } => Value::Sequence(vec![inner.zero(); *len]),
            Instance::Ideal => Value::Ideal(Ideal::zero()),
            Instance::TermSet { .. } => Value::TermSet(TermSet::empty()),
        }
    }

    pub fn one(&self) -> Value {
        match self {
            Instance::Tropical => Value::Tropical(Tropical::one()),
            Instance::Boolean => Value::Boolean(true),
            Instance::PowerSet(u) => Value::PowerSet(u.full_mask()),
            Instance::Cofinite => Value::Cofinite(Cofinite::one()),
            Instance::Polygon => Value::Polygon(Polygon::one()),
            Instance::Sequences { inner, len } => {
                let mut v = vec![inner.zero(); *len];
                v[0] = inner.one();
                Value::Sequence(v)
            }
            Instance::Ideal => Value::Ideal(Ideal::one()),
            Instance::TermSet {
                alpha_dim,
                beta_dim,
            } => Value::TermSet(TermSet::one(*alpha_dim, *beta_dim)),
        }
    }

    /// Checks that a value belongs to this instance.
    pub fn validate(&self, v: &Value) -> Result<()> {
        let bad = || {
            CisError::Malformed(format!(
                "{} value does not fit instance {}",
                v.kind(),
                self.describe()
            ))
        };
        match (self, v) {
            (Instance::Tropical, Value::Tropical(_)) => Ok(()),
            (Instance::Boolean, Value::Boolean(_)) => Ok(()),
            (Instance::PowerSet(u), Value::PowerSet(bits)) => {
                if u.contains_mask(*bits) {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            (Instance::Cofinite, Value::Cofinite(_)) => Ok(()),
            (Instance::Polygon, Value::Polygon(_)) => Ok(()),
            (Instance::Sequences { inner, len }, Value::Sequence(parts)) => {
                if parts.len() != *len {
                    return Err(bad());
                }
                parts.iter().try_for_each(|p| inner.validate(p))
            }
            (Instance::Ideal, Value::Ideal(_)) => Ok(()),
            (
                Instance::TermSet {
                    alpha_dim,
                    beta_dim,
                },
                Value::TermSet(ts),
            ) => match ts.terms().first() {
                None => Ok(()),
                Some(t) if t.alpha_dim() == *alpha_dim && t.beta_dim() == *beta_dim => Ok(()),
                Some(_) => Err(bad()),
            },
            _ => Err(bad()),
        }
    }

    pub fn add(&self, a: &Value, b: &Value) -> Result<Value> {
        self.validate(a)?;
        self.validate(b)?;
        a.add(b)
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Result<Value> {
        self.validate(a)?;
        self.validate(b)?;
        a.mul(b)
    }

    pub fn eq_values(&self, a: &Value, b: &Value) -> bool {
        a == b
    }

    /// Parses one value literal of this instance.
    pub fn parse_value(&self, s: &str) -> Result<Value> {
        let s = s.trim();
        match self {
            Instance::Tropical => Ok(Value::Tropical(Tropical::parse(s)?)),
            Instance::Boolean => match s {
                "T" | "true" => Ok(Value::Boolean(true)),
                "F" | "false" => Ok(Value::Boolean(false)),
                _ => Err(CisError::Parse(format!("expected T or F, got `{s}`"))),
            },
            Instance::PowerSet(u) => Ok(Value::PowerSet(u.parse_set(s)?)),
            Instance::Cofinite => Ok(Value::Cofinite(Cofinite::parse(s)?)),
            Instance::Polygon => Ok(Value::Polygon(Polygon::parse(s)?)),
            Instance::Sequences { inner, len } => self.parse_sequence(inner, *len, s),
            Instance::Ideal => Ok(Value::Ideal(Ideal::parse(s)?)),
            Instance::TermSet {
                alpha_dim,
                beta_dim,
            } => Ok(Value::TermSet(TermSet::parse(s, *alpha_dim, *beta_dim)?)),
        }
    }

    fn parse_sequence(&self, inner: &Instance, len: usize, s: &str) -> Result<Value> {
        if let Some(k) = s.strip_prefix('s') {
            if let Ok(k) = k.parse::<i64>() {
                if !matches!(inner, Instance::Boolean) {
                    return Err(CisError::Parse(
                        "s<k> shorthand needs the boolean inner instance".into(),
                    ));
                }
                if k < -1 || k + 1 > len as i64 {
                    return Err(CisError::Parse(format!(
                        "s{k} does not fit truncation length {len}"
                    )));
                }
                let parts = (0..len).map(|i| Value::Boolean((i as i64) <= k)).collect();
                return Ok(Value::Sequence(parts));
            }
        }
        let inner_src = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| CisError::Parse(format!("expected s<k> or [v,v,...], got `{s}`")))?;
        let pieces = split_top_level(inner_src, ',');
        if pieces.len() > len {
            return Err(CisError::Parse(format!(
                "sequence literal has {} components, truncation length is {len}",
                pieces.len()
            )));
        }
        let mut parts = Vec::with_capacity(len);
        for piece in &pieces {
            if piece.trim().is_empty() {
                continue;
            }
            parts.push(inner.parse_value(piece)?);
        }
        while parts.len() < len {
            parts.push(inner.zero());
        }
        Ok(Value::Sequence(parts))
    }

    /// Canonical text form; inverse of `parse_value` on valid values.
    pub fn format_value(&self, v: &Value) -> String {
        match (self, v) {
            (Instance::Tropical, Value::Tropical(t)) => t.to_string(),
            (Instance::Boolean, Value::Boolean(b)) => if *b { "T" } else { "F" }.into(),
            (Instance::PowerSet(u), Value::PowerSet(bits)) => u.format_set(*bits),
            (Instance::Cofinite, Value::Cofinite(c)) => c.to_string(),
            (Instance::Polygon, Value::Polygon(p)) => p.to_string(),
            (Instance::Sequences { inner, .. }, Value::Sequence(parts)) => {
                if matches!(**inner, Instance::Boolean) {
                    if let Some(k) = boolean_run_length(parts) {
                        return format!("s{k}");
                    }
                }
                let body: Vec<String> = parts.iter().map(|p| inner.format_value(p)).collect();
                format!("[{}]", body.join(","))
            }
            (Instance::Ideal, Value::Ideal(i)) => i.to_string(),
            (Instance::TermSet { .. }, Value::TermSet(ts)) => ts.to_string(),
            _ => format!("{v:?}"),
        }
    }

    /// Human-readable instance description including parameters.
    pub fn describe(&self) -> String {
        match self {
            Instance::PowerSet(u) => format!("powerset[{} points]", u.size()),
            Instance::Sequences { inner, len } => {
                format!("sequences[{}, L={len}]", inner.describe())
            }
            Instance::TermSet {
                alpha_dim,
                beta_dim,
            } => format!("termset[{alpha_dim},{beta_dim}]"),
            other => other.tag().into(),
        }
    }

    /// Curated sample values used by axiom checks and randomized sweeps.
    pub fn sample_pool(&self) -> Vec<Value> {
        let mut pool = self.raw_sample_pool();
        let mut unique: Vec<Value> = Vec::with_capacity(pool.len());
        for v in pool.drain(..) {
            if !unique.contains(&v) {
                unique.push(v);
            }
        }
        unique
    }

    fn raw_sample_pool(&self) -> Vec<Value> {
        match self {
            Instance::Tropical => {
                let mut pool: Vec<Value> = [0, 1, 3, -2, 7]
                    .iter()
                    .map(|&n| Value::Tropical(Tropical::from_int(n)))
                    .collect();
                pool.insert(0, self.zero());
                pool.push(Value::Tropical(Tropical::Finite(rational_frac(1, 2))));
                pool.push(Value::Tropical(Tropical::Finite(rational_frac(-5, 3))));
                pool
            }
            Instance::Boolean => vec![Value::Boolean(false), Value::Boolean(true)],
            Instance::PowerSet(u) => {
                let full = u.full_mask();
                let singles = 1u64 & full;
                vec![
                    Value::PowerSet(0),
                    Value::PowerSet(full),
                    Value::PowerSet(singles),
                    Value::PowerSet(0b11 & full),
                    Value::PowerSet(0b101 & full),
                    Value::PowerSet(0b110 & full),
                    Value::PowerSet(full & !1),
                    Value::PowerSet(0b1001 & full),
                ]
            }
            Instance::Cofinite => {
                let co = |pts: &[(i64, i64)]| {
                    Value::Cofinite(Cofinite::excluding(
                        pts.iter().map(|&(n, d)| rational_frac(n, d)),
                    ))
                };
                vec![
                    self.zero(),
                    self.one(),
                    co(&[(0, 1)]),
                    co(&[(1, 1)]),
                    co(&[(0, 1), (1, 1)]),
                    co(&[(-1, 1), (-2, 1)]),
                    co(&[(0, 1), (1, 1), (2, 1)]),
                    co(&[(3, 2)]),
                ]
            }
            Instance::Polygon => {
                let poly = |pts: &[(i64, i64)]| {
                    Value::Polygon(Polygon::from_points(
                        &pts.iter()
                            .map(|&(x, y)| (rational_int(x), rational_int(y)))
                            .collect::<Vec<_>>(),
                    ))
                };
                vec![
                    self.zero(),
                    self.one(),
                    poly(&[(1, 2)]),
                    poly(&[(0, 0), (1, 0)]),
                    poly(&[(0, 0), (0, 1)]),
                    poly(&[(0, 0), (1, 0), (0, 1)]),
                    poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]),
                    poly(&[(-1, 0), (0, -1), (1, 0), (0, 1)]),
                ]
            }
            Instance::Sequences { inner, len } => {
                let mut pool = vec![self.zero(), self.one()];
                let inner_pool = inner.sample_pool();
                // Prefix runs of the inner one, one per length.
                for k in 1..=3usize.min(len - 1) {
                    let mut parts = vec![inner.zero(); *len];
                    for p in parts.iter_mut().take(k + 1) {
                        *p = inner.one();
                    }
                    pool.push(Value::Sequence(parts));
                }
                // A couple of mixed vectors drawn from the inner pool.
                for (offset, stride) in [(0usize, 2usize), (1, 3)] {
                    let parts: Vec<Value> = (0..*len)
                        .map(|i| {
                            if i % stride == offset % stride {
                                inner_pool[(i + offset) % inner_pool.len()].clone()
                            } else {
                                inner.zero()
                            }
                        })
                        .collect();
                    pool.push(Value::Sequence(parts));
                }
                pool
            }
            Instance::Ideal => {
                let gen = |s: &str| Value::Ideal(Ideal::parse(s).unwrap());
                vec![
                    self.zero(),
                    self.one(),
                    gen("v-1"),
                    gen("v-2"),
                    gen("v+1"),
                    gen("v^2-4"),
                    gen("v^2-3v+2"),
                    gen("v"),
                ]
            }
            Instance::TermSet {
                alpha_dim,
                beta_dim,
            } => {
                let (m, n) = (*alpha_dim, *beta_dim);
                let a1 = TermSet::alpha(1, m, n);
                let b1 = TermSet::beta(1, m, n);
                let am = TermSet::alpha(m, m, n);
                let bn = TermSet::beta(n, m, n);
                vec![
                    self.zero(),
                    self.one(),
                    Value::TermSet(a1.clone()),
                    Value::TermSet(b1.clone()),
                    Value::TermSet(am.clone()),
                    Value::TermSet(bn.clone()),
                    Value::TermSet(a1.add(&b1).unwrap()),
                    Value::TermSet(am.mul(&bn).unwrap()),
                ]
            }
        }
    }

    /// Runs the axiom battery over the given samples.
    pub fn check_axioms(&self, samples: &[Value], budget: usize) -> Result<AxiomReport> {
        for s in samples {
            self.validate(s)?;
        }
        check_axioms(&InstanceOps(self), samples, budget)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// Adapter running axiom checks against an instance handle. Operations
/// cannot fail because the samples were validated up front.
struct InstanceOps<'a>(&'a Instance);

impl CisOps for InstanceOps<'_> {
    type Elem = Value;

    fn zero(&self) -> Value {
        self.0.zero()
    }

    fn one(&self) -> Value {
        self.0.one()
    }

    fn add(&self, a: &Value, b: &Value) -> Value {
        a.add(b).expect("validated samples share the instance")
    }

    fn mul(&self, a: &Value, b: &Value) -> Value {
        a.mul(b).expect("validated samples share the instance")
    }

    fn render(&self, e: &Value) -> String {
        self.0.format_value(e)
    }
}

/// Detects the all-prefix-run shape `s_k` over the boolean inner carrier;
/// returns -1 for the all-false sequence.
fn boolean_run_length(parts: &[Value]) -> Option<i64> {
    let mut run = 0usize;
    let mut in_run = true;
    for p in parts {
        match p {
            Value::Boolean(true) if in_run => run += 1,
            Value::Boolean(false) => in_run = false,
            Value::Boolean(true) => return None,
            _ => return None,
        }
    }
    Some(run as i64 - 1)
}

/// Splits on a separator at bracket depth zero, honoring (), [], {} and <>.
pub fn split_top_level(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' | '{' | '<' => depth += 1,
            ')' | ']' | '}' | '>' => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 {
            out.push(std::mem::take(&mut current));
        } else {
            current.push(c);
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}
