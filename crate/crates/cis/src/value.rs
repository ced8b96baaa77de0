//! Carrier elements as one tagged union.
//!
//! Every payload is kept in canonical form, so structural equality is
//! semantic equality. Addition and multiplication are total within one
//! carrier and reject mixed operands with a typed error.

use crate::error::{CisError, Result};
use crate::instances::{sequence, Cofinite, Ideal, Polygon, TermSet, Tropical};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Tropical(Tropical),
    Boolean(bool),
    PowerSet(u64),
    Cofinite(Cofinite),
    Polygon(Polygon),
    Sequence(Vec<Value>),
    Ideal(Ideal),
    TermSet(TermSet),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Tropical(_) => "tropical",
            Value::Boolean(_) => "boolean",
            Value::PowerSet(_) => "powerset",
            Value::Cofinite(_) => "cofinite",
            Value::Polygon(_) => "polygon",
            Value::Sequence(_) => "sequences",
            Value::Ideal(_) => "ideal",
            Value::TermSet(_) => "termset",
        }
    }

    fn mismatch(&self, other: &Value) -> CisError {
        CisError::InstanceMismatch {
            left: self.kind(),
            right: other.kind(),
        }
    }

    /// Semiring addition.
    pub fn add(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (Value::Tropical(a), Value::Tropical(b)) => Ok(Value::Tropical(a.add(b))),
            (Value::Boolean(a), Value::Boolean(b)) => Ok(Value::Boolean(*a || *b)),
            (Value::PowerSet(a), Value::PowerSet(b)) => Ok(Value::PowerSet(a | b)),
            (Value::Cofinite(a), Value::Cofinite(b)) => Ok(Value::Cofinite(a.add(b))),
            (Value::Polygon(a), Value::Polygon(b)) => Ok(Value::Polygon(a.hull_union(b))),
            (Value::Sequence(a), Value::Sequence(b)) => Ok(Value::Sequence(sequence::add(a, b)?)),
            (Value::Ideal(a), Value::Ideal(b)) => Ok(Value::Ideal(a.add(b))),
            (Value::TermSet(a), Value::TermSet(b)) => Ok(Value::TermSet(a.add(b)?)),
            _ => Err(self.mismatch(other)),
        }
    }

    /// Semiring multiplication.
    pub fn mul(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (Value::Tropical(a), Value::Tropical(b)) => Ok(Value::Tropical(a.mul(b))),
            (Value::Boolean(a), Value::Boolean(b)) => Ok(Value::Boolean(*a && *b)),
            (Value::PowerSet(a), Value::PowerSet(b)) => Ok(Value::PowerSet(a & b)),
            (Value::Cofinite(a), Value::Cofinite(b)) => Ok(Value::Cofinite(a.mul(b))),
            (Value::Polygon(a), Value::Polygon(b)) => Ok(Value::Polygon(a.minkowski_sum(b))),
            (Value::Sequence(a), Value::Sequence(b)) => Ok(Value::Sequence(sequence::mul(a, b)?)),
            (Value::Ideal(a), Value::Ideal(b)) => Ok(Value::Ideal(a.mul(b))),
            (Value::TermSet(a), Value::TermSet(b)) => Ok(Value::TermSet(a.mul(b)?)),
            _ => Err(self.mismatch(other)),
        }
    }
}
