//! Scalars, monomials, polynomials and graded free modules.

pub mod field;
pub mod free;
pub mod monomial;
pub mod poly;

pub use field::{PrimeField, PrimeScalar, ScalarOp, DEFAULT_PRIME};
pub use free::{FreeElement, FreeModule, ModuleOrder, Term, TermKey};
pub use monomial::{Monomial, MAX_VARS};
pub use poly::Polynomial;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C(n, k)`, zero whenever `k < 0`, `n < 0` or `n < k`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as i128)
            .expect("binomial overflow")
            / (i as i128 + 1);
    }
    acc
}

/// A standard graded polynomial ring `F_p[x_1, ..., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    names: Vec<String>,
    field: PrimeField,
}

impl PolyRing {
    pub fn new(names: Vec<String>, field: PrimeField) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::InvalidInput(format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidInput(format!("duplicate variable {n}")));
            }
        }
        Ok(PolyRing { names, field })
    }

    /// Variables `x1, ..., xn` over the default field.
    pub fn standard(n: usize) -> Self {
        PolyRing::new((1..=n).map(|i| format!("x{i}")).collect(), PrimeField::default())
            .expect("too many variables")
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        self.var_index(name)
            .map(Polynomial::var)
            .ok_or_else(|| Error::InvalidInput(format!("unknown variable {name}")))
    }

    pub fn show(&self, p: &Polynomial) -> String {
        p.to_string_with(&self.names, &self.field)
    }

    /// Sum of `c_i * x_i` over the given coefficients.
    pub fn linear_form(&self, coeffs: &[i64]) -> Polynomial {
        let f = &self.field;
        Polynomial::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (Monomial::var(i), f.from_i64(c))),
            f,
        )
        .expect("linear forms are homogeneous")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 2), 1);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(-1, 3), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![1i128];
        for n in 0..=64i64 {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(binomial(n, k as i64), v);
            }
            let mut next = vec![1i128; row.len() + 1];
            for k in 1..row.len() {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
        }
    }

    #[test]
    fn ring_names() {
        let r = PolyRing::standard(3);
        assert_eq!(r.var_index("x2"), Some(1));
        assert!(r.var("y").is_err());
        let names = vec!["a".to_string(), "a".to_string()];
        assert!(PolyRing::new(names, PrimeField::default()).is_err());
        assert_eq!(r.show(&r.linear_form(&[1, -1, 0])), "x1 - x2");
    }
}
