//! Gröbner bases of submodules of graded free modules.

mod buchberger;
pub mod hilbert;
mod syzygy;

use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::{Arc, OnceLock};

use crate::algebra::{FreeElement, FreeModule, ModuleOrder, Monomial, PrimeField, Term};
use crate::error::{Error, Result};
use buchberger::{groebner, is_groebner, reduce, sorted, GbInput, Reducer};
use hilbert::Laurent;

pub use syzygy::{intersect, preimage};

static VERIFY: AtomicBool = AtomicBool::new(false);

/// Enables a Buchberger-criterion check after every basis computation.
pub fn set_verify(on: bool) {
    VERIFY.store(on, AtomicOrdering::Relaxed);
}

pub fn verify_enabled() -> bool {
    VERIFY.load(AtomicOrdering::Relaxed)
}

#[derive(Debug)]
struct Inner {
    ambient: FreeModule,
    order: ModuleOrder,
    field: PrimeField,
    /// Reduced basis, terms sorted under `order`, ascending leads.
    gb: Vec<Vec<Term>>,
    reducer: Reducer,
    gens: OnceLock<Vec<FreeElement>>,
    numerator: OnceLock<Laurent>,
}

/// A submodule `N` of a graded free module `F`, stored through its reduced
/// Gröbner basis. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct SubmoduleBasis {
    inner: Arc<Inner>,
}

fn check_homogeneous(ambient: &FreeModule, v: &FreeElement) -> Result<()> {
    v.degree(ambient).map(|_| ())
}

impl SubmoduleBasis {
    /// Gröbner basis of the span of `gens` under the default order.
    pub fn new(ambient: FreeModule, gens: Vec<FreeElement>, field: PrimeField) -> Result<Self> {
        Self::with_order(ambient, gens, field, ModuleOrder::default())
    }

    pub fn with_order(ambient: FreeModule, gens: Vec<FreeElement>, field: PrimeField, order: ModuleOrder) -> Result<Self> {
        for g in &gens {
            check_homogeneous(&ambient, g)?;
        }
        let input: Vec<Vec<Term>> = gens.iter().map(|g| sorted(g.terms().to_vec(), &order)).collect();
        let out = groebner(GbInput {
            ambient: &ambient,
            order,
            field,
            seeds: Vec::new(),
            gens: input,
            degree_limit: None,
        });
        let minimal: Vec<FreeElement> = out.minimal.iter().map(|&i| gens[i].clone()).collect();
        let b = Self::from_reduced(ambient, order, field, out.basis);
        let _ = b.inner.gens.set(minimal);
        Ok(b)
    }

    pub fn zero(ambient: FreeModule, field: PrimeField) -> Self {
        Self::from_reduced(ambient, ModuleOrder::default(), field, Vec::new())
    }

    /// The whole free module.
    pub fn whole(ambient: FreeModule, field: PrimeField) -> Self {
        let basis = ambient.basis();
        let gb: Vec<Vec<Term>> = basis.iter().map(|b| b.terms().to_vec()).collect();
        let mut gb = gb;
        gb.sort_by_key(|e| ModuleOrder::default().key(&e[0]));
        let b = Self::from_reduced(ambient, ModuleOrder::default(), field, gb);
        let _ = b.inner.gens.set(basis);
        b
    }

    pub(crate) fn from_reduced(ambient: FreeModule, order: ModuleOrder, field: PrimeField, gb: Vec<Vec<Term>>) -> Self {
        let order = ModuleOrder {
            split: u32::MAX,
            ..order
        };
        if verify_enabled() {
            assert!(is_groebner(&gb, &ambient, &order, &field), "basis fails the Buchberger criterion");
        }
        let reducer = Reducer::build(ambient.rank(), &gb);
        SubmoduleBasis {
            inner: Arc::new(Inner {
                ambient,
                order,
                field,
                gb,
                reducer,
                gens: OnceLock::new(),
                numerator: OnceLock::new(),
            }),
        }
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.inner.ambient
    }

    pub fn field(&self) -> &PrimeField {
        &self.inner.field
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.inner.order
    }

    pub(crate) fn raw_gb(&self) -> &[Vec<Term>] {
        &self.inner.gb
    }

    /// The reduced Gröbner basis in canonical term order.
    pub fn gb(&self) -> Vec<FreeElement> {
        self.inner.gb.iter().map(|e| FreeElement::from_unsorted(e.clone())).collect()
    }

    pub fn gb_len(&self) -> usize {
        self.inner.gb.len()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.gb.is_empty()
    }

    /// Whether `N = F`.
    pub fn is_whole(&self) -> bool {
        (0..self.ambient().rank()).all(|c| {
            self.inner
                .reducer
                .find(&Term {
                    mon: Monomial::one(),
                    comp: c as u32,
                    coef: 1,
                })
                .is_some()
        })
    }

    /// Leading terms of the basis (canonical coefficient 1).
    pub fn leads(&self) -> impl Iterator<Item = &Term> + '_ {
        self.inner.gb.iter().map(|e| &e[0])
    }

    /// Leading monomials grouped by component.
    pub fn leads_by_component(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.ambient().rank()];
        for t in self.leads() {
            out[t.comp as usize].push(t.mon);
        }
        out
    }

    /// A minimal homogeneous generating set.
    pub fn minimal_generators(&self) -> &[FreeElement] {
        self.inner.gens.get_or_init(|| {
            let order = self.inner.order;
            let input: Vec<Vec<Term>> = self.inner.gb.clone();
            let out = groebner(GbInput {
                ambient: &self.inner.ambient,
                order,
                field: self.inner.field,
                seeds: Vec::new(),
                gens: input,
                degree_limit: None,
            });
            out.minimal
                .iter()
                .map(|&i| FreeElement::from_unsorted(self.inner.gb[i].clone()))
                .collect()
        })
    }

    pub fn generators(&self) -> &[FreeElement] {
        self.minimal_generators()
    }

    fn reduce_terms(&self, terms: Vec<Term>) -> Vec<Term> {
        let i = &self.inner;
        reduce(sorted(terms, &i.order), &i.gb, &i.reducer, &i.order, &i.field)
    }

    /// Normal form: no term is divisible by a leading term of the basis.
    pub fn normal_form(&self, v: &FreeElement) -> FreeElement {
        FreeElement::from_unsorted(self.reduce_terms(v.terms().to_vec()))
    }

    pub fn contains(&self, v: &FreeElement) -> bool {
        self.reduce_terms(v.terms().to_vec()).is_empty()
    }

    /// `other` is contained in `self`.
    pub fn contains_module(&self, other: &SubmoduleBasis) -> bool {
        other.inner.gb.iter().all(|g| self.reduce_terms(g.clone()).is_empty())
    }

    pub fn same_span(&self, other: &SubmoduleBasis) -> bool {
        if self.ambient() != other.ambient() {
            return false;
        }
        if self.order() == other.order() {
            let a: Vec<FreeElement> = self.gb();
            let b: Vec<FreeElement> = other.gb();
            return a == b;
        }
        self.contains_module(other) && other.contains_module(self)
    }

    /// `N + N'` in the same ambient.
    pub fn sum(&self, other: &SubmoduleBasis) -> Result<SubmoduleBasis> {
        self.extend(other.gb())
    }

    /// `N + span(extra)`.
    pub fn extend(&self, extra: Vec<FreeElement>) -> Result<SubmoduleBasis> {
        for g in &extra {
            check_homogeneous(self.ambient(), g)?;
        }
        let i = &self.inner;
        let gens: Vec<Vec<Term>> = extra.iter().map(|g| sorted(g.terms().to_vec(), &i.order)).collect();
        let out = groebner(GbInput {
            ambient: &i.ambient,
            order: i.order,
            field: i.field,
            seeds: i.gb.clone(),
            gens,
            degree_limit: None,
        });
        Ok(Self::from_reduced(i.ambient.clone(), i.order, i.field, out.basis))
    }

    /// The same submodule under another order.
    pub fn reordered(&self, order: ModuleOrder) -> SubmoduleBasis {
        if order == *self.order() {
            return self.clone();
        }
        SubmoduleBasis::with_order(self.ambient().clone(), self.gb(), *self.field(), order).expect("homogeneous basis")
    }

    /// Reinterprets the basis in a free module of equal rank whose twists
    /// differ from the current ones by a constant.
    pub fn with_ambient(&self, ambient: FreeModule) -> Result<SubmoduleBasis> {
        let cur = self.ambient();
        if ambient.rank() != cur.rank() {
            return Err(Error::InvalidInput("rank mismatch".into()));
        }
        if ambient.rank() > 0 {
            let d = ambient.twist(0) - cur.twist(0);
            if (0..cur.rank()).any(|i| ambient.twist(i) - cur.twist(i) != d) {
                return Err(Error::InvalidInput("twists differ by a non-constant shift".into()));
            }
        }
        let b = Self::from_reduced(ambient, *self.order(), *self.field(), self.inner.gb.clone());
        if let Some(g) = self.inner.gens.get() {
            let _ = b.inner.gens.set(g.clone());
        }
        Ok(b)
    }

    /// Hilbert series numerator of `F/N` over `n` variables.
    pub fn numerator(&self, nvars: usize) -> &Laurent {
        self.inner
            .numerator
            .get_or_init(|| hilbert::module_numerator(&self.leads_by_component(), self.ambient().twists(), nvars))
    }

    /// `dim_k (F/N)_t`.
    pub fn standard_monomial_count(&self, nvars: usize, t: i32) -> u64 {
        self.numerator(nvars).series_coeff(nvars, t) as u64
    }

    /// Krull dimension of `F/N`; `None` for the zero module.
    pub fn dimension(&self, nvars: usize) -> Option<usize> {
        self.leads_by_component()
            .iter()
            .filter_map(|g| hilbert::ideal_dimension(g, nvars))
            .max()
    }

    /// Length of `F/N`.
    pub fn colength(&self, nvars: usize) -> Result<i128> {
        hilbert::length_from_numerator(self.numerator(nvars), nvars)
    }

    /// Syzygies of the minimal generators.
    pub fn syzygies(&self) -> Result<SubmoduleBasis> {
        let gens = self.minimal_generators().to_vec();
        let source = FreeModule::new(
            gens.iter()
                .map(|g| g.degree(self.ambient()).unwrap().unwrap())
                .collect(),
        );
        let zero = SubmoduleBasis::zero(self.ambient().clone(), *self.field());
        preimage(&source, &gens, &zero)
    }
}

/// Length of `Z/B` for submodules `B ⊆ Z` of a common free module.
pub fn quotient_length(z: &SubmoduleBasis, b: &SubmoduleBasis, nvars: usize) -> Result<i128> {
    let diff = b.numerator(nvars).sub(z.numerator(nvars));
    hilbert::length_from_numerator(&diff, nvars)
}
