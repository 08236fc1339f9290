use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use super::monomial::Monomial;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// A term `coef * mon * e_comp` of a free-module element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mon: Monomial,
    pub comp: u32,
    pub coef: u32,
}

/// A module monomial order.
///
/// Terms in components below `split` beat all others (elimination block).
/// Inside a block, terms with smaller degree in the variables of `ymask`
/// win, then degrevlex on the monomial, then the smaller position. With
/// the defaults this is plain term-over-position degrevlex. The `ymask`
/// refinement is only meaningful on homogeneous elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub split: u32,
    pub ymask: u32,
}

impl Default for ModuleOrder {
    fn default() -> Self {
        ModuleOrder {
            split: u32::MAX,
            ymask: 0,
        }
    }
}

impl ModuleOrder {
    pub fn weighted(ymask: u32) -> Self {
        ModuleOrder {
            split: u32::MAX,
            ymask,
        }
    }

    pub fn with_split(self, split: u32) -> Self {
        ModuleOrder { split, ..self }
    }

    #[inline]
    pub fn key(&self, t: &Term) -> TermKey {
        TermKey {
            upper: t.comp < self.split,
            ydeg: Reverse(t.mon.masked_degree(self.ymask) as u16),
            mon: t.mon,
            comp: Reverse(t.comp),
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

/// Sort key of a term under a [`ModuleOrder`]; larger is greater.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub upper: bool,
    pub ydeg: Reverse<u16>,
    pub mon: Monomial,
    pub comp: Reverse<u32>,
}

impl TermKey {
    pub fn term(&self, coef: u32) -> Term {
        Term {
            mon: self.mon,
            comp: self.comp.0,
            coef,
        }
    }
}

/// `a + c * m * b` for term lists sorted descending under `order`.
pub(crate) fn axpy(a: &[Term], c: u32, m: &Monomial, b: &[Term], field: &PrimeField, order: &ModuleOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |t: &Term| Term {
        mon: t.mon.mul(m),
        comp: t.comp,
        coef: field.mul(t.coef, c),
    };
    while i < a.len() && j < b.len() {
        let bj = scaled(&b[j]);
        match order.cmp(&a[i], &bj) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(bj);
                j += 1;
            }
            Ordering::Equal => {
                let v = field.add(a[i].coef, bj.coef);
                if v != 0 {
                    out.push(Term { coef: v, ..a[i] });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(scaled));
    out
}

pub(crate) fn sort_terms(terms: &mut [Term], order: &ModuleOrder) {
    terms.sort_by_key(|t| Reverse(order.key(t)));
}

/// A graded free module `S(-t_0) + ... + S(-t_{r-1})`, recorded by the
/// degrees `t_i` of its basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FreeModule {
    twists: Vec<i32>,
}

impl FreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        FreeModule { twists }
    }

    pub fn free(rank: usize) -> Self {
        FreeModule {
            twists: vec![0; rank],
        }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    #[inline]
    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    #[inline]
    pub fn twist(&self, i: usize) -> i32 {
        self.twists[i]
    }

    #[inline]
    pub fn term_degree(&self, t: &Term) -> i32 {
        t.mon.degree() as i32 + self.twists[t.comp as usize]
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        FreeModule { twists }
    }

    pub fn shifted(&self, by: i32) -> FreeModule {
        FreeModule {
            twists: self.twists.iter().map(|t| t + by).collect(),
        }
    }

    pub fn min_twist(&self) -> Option<i32> {
        self.twists.iter().copied().min()
    }

    pub fn max_twist(&self) -> Option<i32> {
        self.twists.iter().copied().max()
    }

    pub fn basis(&self) -> Vec<FreeElement> {
        (0..self.rank()).map(FreeElement::basis).collect()
    }
}

/// An element of a graded free module, sorted in descending
/// term-over-position order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeElement {
    terms: Vec<Term>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement { terms: Vec::new() }
    }

    pub fn basis(i: usize) -> Self {
        FreeElement {
            terms: vec![Term {
                mon: Monomial::one(),
                comp: i as u32,
                coef: 1,
            }],
        }
    }

    /// `p * e_comp`.
    pub fn from_polynomial(p: &Polynomial, comp: usize) -> Self {
        FreeElement {
            terms: p
                .terms()
                .iter()
                .map(|&(mon, coef)| Term {
                    mon,
                    comp: comp as u32,
                    coef,
                })
                .collect(),
        }
    }

    /// Builds `sum_i p_i e_i`.
    pub fn from_components(parts: &[Polynomial]) -> Self {
        let mut terms: Vec<Term> = parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.terms().iter().map(move |&(mon, coef)| Term {
                    mon,
                    comp: i as u32,
                    coef,
                })
            })
            .collect();
        sort_terms(&mut terms, &ModuleOrder::default());
        FreeElement { terms }
    }

    /// Normalizes an arbitrary bag of terms.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I, field: &PrimeField) -> Self {
        let mut acc: BTreeMap<(u32, Monomial), u32> = BTreeMap::new();
        for t in terms {
            let e = acc.entry((t.comp, t.mon)).or_insert(0);
            *e = field.add(*e, t.coef % field.characteristic());
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|((comp, mon), coef)| Term { mon, comp, coef })
            .collect();
        sort_terms(&mut terms, &ModuleOrder::default());
        FreeElement { terms }
    }

    pub(crate) fn from_unsorted(mut terms: Vec<Term>) -> Self {
        sort_terms(&mut terms, &ModuleOrder::default());
        FreeElement { terms }
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Degree in `ambient`; `None` for zero. Fails if not homogeneous.
    pub fn degree(&self, ambient: &FreeModule) -> Result<Option<i32>> {
        let mut deg = None;
        for t in &self.terms {
            if t.comp as usize >= ambient.rank() {
                return Err(Error::InvalidInput(format!(
                    "component {} outside a free module of rank {}",
                    t.comp,
                    ambient.rank()
                )));
            }
            let d = ambient.term_degree(t);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::HomogeneityViolation(format!(
                        "element mixes degrees {e} and {d}"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn max_component(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.comp as usize).max()
    }

    pub fn component(&self, i: usize) -> Polynomial {
        polynomial_of_component(self, i)
    }

    pub fn add(&self, other: &FreeElement, field: &PrimeField) -> FreeElement {
        FreeElement {
            terms: axpy(&self.terms, 1, &Monomial::one(), &other.terms, field, &ModuleOrder::default()),
        }
    }

    pub fn sub(&self, other: &FreeElement, field: &PrimeField) -> FreeElement {
        FreeElement {
            terms: axpy(&self.terms, field.neg(1), &Monomial::one(), &other.terms, field, &ModuleOrder::default()),
        }
    }

    pub fn scale(&self, c: u32, field: &PrimeField) -> FreeElement {
        let c = c % field.characteristic();
        if c == 0 {
            return Self::zero();
        }
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: field.mul(t.coef, c),
                    ..*t
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u32, field: &PrimeField) -> FreeElement {
        FreeElement {
            terms: axpy(&[], c, m, &self.terms, field, &ModuleOrder::default()),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial, field: &PrimeField) -> FreeElement {
        let mut acc = Vec::new();
        for &(m, c) in p.terms() {
            acc = axpy(&acc, c, &m, &self.terms, field, &ModuleOrder::default());
        }
        FreeElement { terms: acc }
    }

    /// Adds `offset` to every component index.
    pub fn shift_components(&self, offset: usize) -> FreeElement {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp + offset as u32,
                    ..*t
                })
                .collect(),
        }
    }

    /// Renames components through `map`; the order is recomputed.
    pub fn map_components(&self, map: impl Fn(u32) -> u32) -> FreeElement {
        FreeElement::from_unsorted(
            self.terms
                .iter()
                .map(|t| Term {
                    comp: map(t.comp),
                    ..*t
                })
                .collect(),
        )
    }

    pub fn to_string_with(&self, names: &[String], field: &PrimeField) -> String {
        let rank = self.max_component().map_or(0, |c| c + 1);
        if rank == 0 {
            return "0".into();
        }
        let parts: Vec<String> = (0..rank)
            .map(|i| polynomial_of_component(self, i).to_string_with(names, field))
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// The `i`-th coordinate as a polynomial.
pub fn polynomial_of_component(v: &FreeElement, i: usize) -> Polynomial {
    let terms: Vec<(Monomial, u32)> = v
        .terms
        .iter()
        .filter(|t| t.comp as usize == i)
        .map(|t| (t.mon, t.coef))
        .collect();
    // terms of one component keep their descending monomial order
    Polynomial::from_sorted_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_round_trip() {
        let f = PrimeField::default();
        let x = Polynomial::var(0);
        let y = Polynomial::var(1);
        let v = FreeElement::from_components(&[x.clone(), y.clone()]);
        assert_eq!(polynomial_of_component(&v, 0), x);
        assert_eq!(polynomial_of_component(&v, 1), y);
        let amb = FreeModule::free(2);
        assert_eq!(v.degree(&amb).unwrap(), Some(1));
        let twisted = FreeModule::new(vec![0, 1]);
        assert!(v.degree(&twisted).is_err());
        assert!(v.sub(&v, &f).is_zero());
    }

    #[test]
    fn top_order_breaks_ties_by_position() {
        let a = Term { mon: Monomial::var(0), comp: 0, coef: 1 };
        let b = Term { mon: Monomial::var(0), comp: 1, coef: 1 };
        assert_eq!(ModuleOrder::default().cmp(&a, &b), Ordering::Greater);
        // lower block always loses under an elimination split
        let c = Term { mon: Monomial::var(0).mul(&Monomial::var(0)), comp: 1, coef: 1 };
        assert_eq!(ModuleOrder::default().with_split(1).cmp(&a, &c), Ordering::Greater);
        // the weighted order prefers fewer masked variables
        let y2 = Term { mon: Monomial::var(1).mul(&Monomial::var(1)), comp: 0, coef: 1 };
        let xy = Term { mon: Monomial::var(0).mul(&Monomial::var(1)), comp: 0, coef: 1 };
        assert_eq!(ModuleOrder::weighted(0b10).cmp(&xy, &y2), Ordering::Greater);
        assert_eq!(ModuleOrder::weighted(0b01).cmp(&xy, &y2), Ordering::Less);
    }
}
