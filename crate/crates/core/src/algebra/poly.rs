use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::field::PrimeField;
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// A homogeneous polynomial over the prime field.
///
/// Terms are kept sorted in descending degrevlex order and never carry a
/// zero coefficient. The zero polynomial has no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: u32, field: &PrimeField) -> Self {
        let c = c % field.characteristic();
        if c == 0 {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn monomial(m: Monomial, c: u32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Polynomial { terms: vec![(m, c)] }
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), 1)
    }

    /// Collects terms, combining equal monomials. Fails if the resulting
    /// nonzero terms have different degrees.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, u32)>>(
        terms: I,
        field: &PrimeField,
    ) -> Result<Self> {
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c % field.characteristic());
        }
        let terms: Vec<_> = acc.into_iter().rev().filter(|&(_, c)| c != 0).collect();
        if let Some(&(first, _)) = terms.first() {
            if terms.iter().any(|(m, _)| m.degree() != first.degree()) {
                return Err(Error::HomogeneityViolation(
                    "polynomial mixes terms of different degrees".into(),
                ));
            }
        }
        Ok(Polynomial { terms })
    }

    /// Wraps terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Polynomial { terms }
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn leading(&self) -> Option<(Monomial, u32)> {
        self.terms.first().copied()
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn add(&self, other: &Polynomial, field: &PrimeField) -> Result<Polynomial> {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(Error::HomogeneityViolation(format!(
                    "cannot add polynomials of degrees {a} and {b}"
                )));
            }
        }
        Ok(Polynomial {
            terms: merge(&self.terms, &other.terms, 1, field),
        })
    }

    pub fn sub(&self, other: &Polynomial, field: &PrimeField) -> Result<Polynomial> {
        self.add(&other.neg(field), field)
    }

    pub fn neg(&self, field: &PrimeField) -> Polynomial {
        self.scale(field.neg(1), field)
    }

    pub fn scale(&self, c: u32, field: &PrimeField) -> Polynomial {
        let c = c % field.characteristic();
        if c == 0 {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|&(m, a)| (m, field.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u32, field: &PrimeField) -> Polynomial {
        if c.is_multiple_of(field.characteristic()) {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|&(t, a)| (t.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, field: &PrimeField) -> Polynomial {
        let mut acc: Vec<(Monomial, u32)> = Vec::new();
        for &(m, c) in &other.terms {
            let part = self.mul_monomial(&m, c, field);
            acc = merge(&acc, &part.terms, 1, field);
        }
        Polynomial { terms: acc }
    }

    pub fn pow(&self, e: u32, field: &PrimeField) -> Polynomial {
        let mut out = Polynomial::constant(1, field);
        for _ in 0..e {
            out = out.mul(self, field);
        }
        out
    }

    /// Renders with variable names; coefficients use the symmetric
    /// representative.
    pub fn to_string_with(&self, names: &[String], field: &PrimeField) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, &(m, c)) in self.terms.iter().enumerate() {
            let v = field.to_signed(c);
            let (sign, abs) = if v < 0 { ("-", -v) } else { ("+", v) };
            if i == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs == 1 {
                s.push_str(&m.display(names).to_string());
            } else {
                s.push_str(&format!("{abs}*{}", m.display(names)));
            }
        }
        s
    }
}

/// `a + c*b` for descending-sorted term lists.
fn merge(a: &[(Monomial, u32)], b: &[(Monomial, u32)], c: u32, field: &PrimeField) -> Vec<(Monomial, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, field.mul(b[j].1, c)));
                j += 1;
            }
            Ordering::Equal => {
                let v = field.add(a[i].1, field.mul(b[j].1, c));
                if v != 0 {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(m, x)| (m, field.mul(x, c))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn x() -> Polynomial {
        Polynomial::var(0)
    }
    fn y() -> Polynomial {
        Polynomial::var(1)
    }

    #[test]
    fn difference_of_squares() {
        let f = f();
        let lhs = x().add(&y(), &f).unwrap().mul(&x().sub(&y(), &f).unwrap(), &f);
        let rhs = x().pow(2, &f).sub(&y().pow(2, &f), &f).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogeneity_is_enforced() {
        let f = f();
        assert!(matches!(x().add(&y().pow(2, &f), &f), Err(Error::HomogeneityViolation(_))));
        assert!(Polynomial::from_terms(
            [(Monomial::var(0), 1), (Monomial::var(1).mul(&Monomial::var(1)), 1)],
            &f
        )
        .is_err());
        assert!(x().scale(0, &f).is_zero());
        // adding zero is always allowed
        assert_eq!(x().add(&Polynomial::zero(), &f).unwrap(), x());
    }

    fn random_poly(rng: &mut ChaCha8Rng, deg: u32, f: &PrimeField) -> Polynomial {
        let mut terms = Vec::new();
        for m in Monomial::all_of_degree(3, deg) {
            if rng.gen_bool(0.5) {
                terms.push((m, rng.gen_range(0..f.characteristic())));
            }
        }
        Polynomial::from_terms(terms, f).unwrap()
    }

    #[test]
    fn ring_axioms_on_seeded_samples() {
        let f = f();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = random_poly(&mut rng, 2, &f);
            let b = random_poly(&mut rng, 2, &f);
            let c = random_poly(&mut rng, 1, &f);
            assert_eq!(a.mul(&b, &f), b.mul(&a, &f));
            assert_eq!(a.mul(&b, &f).mul(&c, &f), a.mul(&b.mul(&c, &f), &f));
            assert_eq!(
                a.add(&b, &f).unwrap().mul(&c, &f),
                a.mul(&c, &f).add(&b.mul(&c, &f), &f).unwrap()
            );
            assert!(a.sub(&a, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn printing_uses_symmetric_coefficients() {
        let f = f();
        let names: Vec<String> = vec!["x".into(), "y".into()];
        let p = x().sub(&y().scale(3, &f), &f).unwrap();
        assert_eq!(p.to_string_with(&names, &f), "x - 3*y");
        assert_eq!(Polynomial::zero().to_string_with(&names, &f), "0");
    }
}
