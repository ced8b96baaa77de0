//! Fixed-length sequences over an inner carrier: componentwise addition
//! and truncated convolution. Truncation to length L is harmless because
//! the convolution coefficient at index i < L only reads indices < L.

use crate::error::{CisError, Result};
use crate::value::Value;

fn check_len(a: &[Value], b: &[Value]) -> Result<()> {
    if a.len() != b.len() {
        return Err(CisError::DimensionMismatch(format!(
            "sequence lengths {} vs {}",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

pub fn add(a: &[Value], b: &[Value]) -> Result<Vec<Value>> {
    check_len(a, b)?;
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn mul(a: &[Value], b: &[Value]) -> Result<Vec<Value>> {
    check_len(a, b)?;
    let len = a.len();
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        // (u*v)_i = sum over j+k=i of u_j v_k; at least one summand exists.
        let mut acc: Option<Value> = None;
        for j in 0..=i {
            let prod = a[j].mul(&b[i - j])?;
            acc = Some(match acc {
                None => prod,
                Some(s) => s.add(&prod)?,
            });
        }
        out.push(acc.expect("convolution index has at least one summand"));
    }
    Ok(out)
}
