//! Polynomials over a semiring carrier, stored by descending power:
//! `coeffs[k]` multiplies `x^(d-k)`, so `coeffs[0]` is the leading
//! coefficient. Building from roots produces monic polynomials whose
//! coefficients are the elementary symmetric expressions of the roots.

use crate::error::{CisError, Result};
use crate::instance::Instance;
use crate::value::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Value>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Value>) -> Result<Polynomial> {
        if coeffs.is_empty() {
            return Err(CisError::Malformed(
                "polynomial needs at least one coefficient".into(),
            ));
        }
        Ok(Polynomial { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^(degree - k)`.
    pub fn coeff(&self, k: usize) -> &Value {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Value] {
        &self.coeffs
    }
}

/// Monic product of the linear factors `(x + root)`.
pub fn poly_from_roots(instance: &Instance, roots: &[Value]) -> Result<Polynomial> {
    if roots.is_empty() {
        return Err(CisError::EmptyRoots);
    }
    for r in roots {
        instance.validate(r)?;
    }
    let mut acc = Polynomial::new(vec![instance.one(), roots[0].clone()])?;
    for r in &roots[1..] {
        let factor = Polynomial::new(vec![instance.one(), r.clone()])?;
        acc = poly_mul(&acc, &factor)?;
    }
    Ok(acc)
}

/// Coefficient convolution; degrees add.
pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let dp = p.degree();
    let dq = q.degree();
    let mut coeffs = Vec::with_capacity(dp + dq + 1);
    for k in 0..=dp + dq {
        let lo = k.saturating_sub(dq);
        let hi = dp.min(k);
        let mut acc: Option<Value> = None;
        for i in lo..=hi {
            let prod = p.coeff(i).mul(q.coeff(k - i))?;
            acc = Some(match acc {
                None => prod,
                Some(s) => s.add(&prod)?,
            });
        }
        coeffs.push(acc.expect("convolution band is never empty"));
    }
    Polynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Instance;
    use crate::instances::{TermSet, Tropical};
    use itertools::Itertools;

    fn trop(n: i64) -> Value {
        Value::Tropical(Tropical::from_int(n))
    }

    /// Independent elementary-symmetric oracle: coefficient k is the sum
    /// over all k-subsets of the product of the chosen roots.
    fn elementary_symmetric(instance: &Instance, roots: &[Value], k: usize) -> Value {
        if k == 0 {
            return instance.one();
        }
        let mut acc: Option<Value> = None;
        for subset in (0..roots.len()).combinations(k) {
            let mut prod = instance.one();
            for i in subset {
                prod = prod.mul(&roots[i]).unwrap();
            }
            acc = Some(match acc {
                None => prod,
                Some(s) => s.add(&prod).unwrap(),
            });
        }
        acc.unwrap()
    }

    #[test]
    fn tropical_roots_one_three() {
        let inst = Instance::tropical();
        let p = poly_from_roots(&inst, &[trop(1), trop(3)]).unwrap();
        assert_eq!(p.coeffs(), &[trop(0), trop(3), trop(4)]);
    }

    #[test]
    fn single_root_is_linear_factor() {
        let inst = Instance::tropical();
        let p = poly_from_roots(&inst, &[trop(5)]).unwrap();
        assert_eq!(p.coeffs(), &[inst.one(), trop(5)]);
    }

    #[test]
    fn empty_roots_rejected() {
        let inst = Instance::tropical();
        assert_eq!(poly_from_roots(&inst, &[]), Err(CisError::EmptyRoots));
    }

    #[test]
    fn termset_symbolic_coefficients() {
        let inst = Instance::term_set(3, 1).unwrap();
        let roots: Vec<Value> = (1..=3)
            .map(|i| Value::TermSet(TermSet::alpha(i, 3, 1)))
            .collect();
        let p = poly_from_roots(&inst, &roots).unwrap();
        // coeffs[2] is {a1 a2, a1 a3, a2 a3}.
        let a = |i: usize| TermSet::alpha(i, 3, 1);
        let expected = a(1)
            .mul(&a(2))
            .unwrap()
            .add(&a(1).mul(&a(3)).unwrap())
            .unwrap()
            .add(&a(2).mul(&a(3)).unwrap())
            .unwrap();
        assert_eq!(p.coeff(2), &Value::TermSet(expected));
    }

    #[test]
    fn boolean_square_of_linear_factor() {
        let inst = Instance::boolean();
        let t = Value::Boolean(true);
        let p = poly_from_roots(&inst, &[t.clone(), t.clone()]).unwrap();
        assert_eq!(p.coeffs(), &[t.clone(), t.clone(), t]);
    }

    #[test]
    fn mul_by_constant_one_is_identity() {
        let inst = Instance::tropical();
        let p = poly_from_roots(&inst, &[trop(2)]).unwrap();
        let one_poly = Polynomial::new(vec![inst.one()]).unwrap();
        assert_eq!(poly_mul(&p, &one_poly).unwrap(), p);
    }

    #[test]
    fn tropical_product_of_linear_factors() {
        let inst = Instance::tropical();
        let p = poly_from_roots(&inst, &[trop(1)]).unwrap();
        let q = poly_from_roots(&inst, &[trop(3)]).unwrap();
        let prod = poly_mul(&p, &q).unwrap();
        assert_eq!(prod.coeffs(), &[trop(0), trop(3), trop(4)]);
    }

    #[test]
    fn from_roots_matches_subset_formula() {
        let instances = vec![
            Instance::tropical(),
            Instance::boolean(),
            Instance::cofinite(),
            Instance::polygon(),
            Instance::Ideal,
            Instance::term_set(2, 2).unwrap(),
        ];
        for inst in &instances {
            let pool = inst.sample_pool();
            for len in 1..=5usize.min(pool.len()) {
                let roots: Vec<Value> = pool.iter().take(len).cloned().collect();
                let p = poly_from_roots(inst, &roots).unwrap();
                assert_eq!(p.degree(), len);
                for k in 0..=len {
                    assert_eq!(
                        p.coeff(k),
                        &elementary_symmetric(inst, &roots, k),
                        "coefficient {k} over {} with {len} roots",
                        inst.describe()
                    );
                }
            }
        }
    }

    #[test]
    fn poly_mul_commutes_and_associates() {
        let inst = Instance::tropical();
        let pool = inst.sample_pool();
        let p = poly_from_roots(&inst, &pool[0..2]).unwrap();
        let q = poly_from_roots(&inst, &pool[2..5]).unwrap();
        let r = poly_from_roots(&inst, &pool[5..6]).unwrap();
        assert_eq!(poly_mul(&p, &q).unwrap(), poly_mul(&q, &p).unwrap());
        assert_eq!(
            poly_mul(&poly_mul(&p, &q).unwrap(), &r).unwrap(),
            poly_mul(&p, &poly_mul(&q, &r).unwrap()).unwrap()
        );
    }
}
