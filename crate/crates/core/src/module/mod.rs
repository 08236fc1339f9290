//! Graded algebras `S/I` and finitely presented graded modules over them.

mod ops;

use std::sync::{Arc, OnceLock};

use crate::algebra::{FreeElement, FreeModule, PolyRing, Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::groebner::SubmoduleBasis;

pub use ops::{
    annihilator, apply_linear_change, colon, colon_ideal, direct_sum, h0, h0_length, ideal_power, ideal_times,
    idealization, minimal_presentation, saturate, subquotient,
};

/// A standard graded algebra `S/I`.
#[derive(Debug)]
pub struct GradedAlgebra {
    ring: PolyRing,
    ideal_gens: Vec<Polynomial>,
    ideal: SubmoduleBasis,
    dimension: OnceLock<Option<usize>>,
}

impl GradedAlgebra {
    pub fn new(ring: PolyRing, gens: Vec<Polynomial>) -> Result<Arc<Self>> {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let elems = gens.iter().map(|g| FreeElement::from_polynomial(g, 0)).collect();
        let ideal = SubmoduleBasis::new(FreeModule::free(1), elems, *ring.field())?;
        Ok(Arc::new(GradedAlgebra {
            ring,
            ideal_gens: gens,
            ideal,
            dimension: OnceLock::new(),
        }))
    }

    pub fn polynomial_ring(ring: PolyRing) -> Arc<Self> {
        Self::new(ring, Vec::new()).expect("zero ideal")
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn field(&self) -> &PrimeField {
        self.ring.field()
    }

    pub fn ideal(&self) -> &SubmoduleBasis {
        &self.ideal
    }

    pub fn ideal_generators(&self) -> &[Polynomial] {
        &self.ideal_gens
    }

    /// Krull dimension, `None` for the zero ring.
    pub fn dimension(&self) -> Option<usize> {
        *self.dimension.get_or_init(|| self.ideal.dimension(self.nvars()))
    }

    pub fn variables(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(Polynomial::var).collect()
    }

    /// The algebra as a cyclic module over itself.
    pub fn as_module(self: &Arc<Self>) -> GradedModule {
        GradedModule::from_basis(self.clone(), self.ideal.clone())
    }

    /// The residue field `A/m`.
    pub fn residue_field(self: &Arc<Self>) -> GradedModule {
        self.as_module().quotient_by_ideal(&self.variables()).expect("linear forms")
    }

    pub fn show(&self, p: &Polynomial) -> String {
        self.ring.show(p)
    }
}

/// A finitely presented graded module `F/N` over a graded algebra, with
/// `N ⊇ I F`.
#[derive(Clone, Debug)]
pub struct GradedModule {
    algebra: Arc<GradedAlgebra>,
    relations: SubmoduleBasis,
    dimension: OnceLock<Option<usize>>,
    pub(crate) h0: OnceLock<SubmoduleBasis>,
    pub(crate) resolution: OnceLock<Arc<crate::homological::FreeComplex>>,
    pub(crate) duals: OnceLock<Arc<Vec<GradedModule>>>,
}

impl GradedModule {
    /// `F / (span(relations) + I F)`.
    pub fn new(algebra: Arc<GradedAlgebra>, ambient: FreeModule, relations: Vec<FreeElement>) -> Result<Self> {
        let mut gens = relations;
        gens.extend(ideal_times(&ambient, algebra.ideal_generators()));
        let n = SubmoduleBasis::new(ambient, gens, *algebra.field())?;
        Ok(Self::from_basis_unchecked(algebra, n))
    }

    /// Cokernel of a matrix given by rows; row `i` belongs to the basis
    /// vector of degree `twists[i]`, and the columns are the relations.
    pub fn cokernel(algebra: Arc<GradedAlgebra>, twists: Vec<i32>, rows: &[Vec<Polynomial>]) -> Result<Self> {
        if rows.len() != twists.len() {
            return Err(Error::InvalidInput(format!(
                "{} rows but {} twists",
                rows.len(),
                twists.len()
            )));
        }
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidInput("ragged presentation matrix".into()));
        }
        let ambient = FreeModule::new(twists);
        let cols: Vec<FreeElement> = (0..ncols)
            .map(|j| {
                let col: Vec<Polynomial> = rows.iter().map(|r| r[j].clone()).collect();
                FreeElement::from_components(&col)
            })
            .collect();
        for (j, c) in cols.iter().enumerate() {
            c.degree(&ambient).map_err(|_| {
                Error::HomogeneityViolation(format!("column {j} of the presentation matrix is not homogeneous"))
            })?;
        }
        Self::new(algebra, ambient, cols)
    }

    /// Wraps `N`, adding `I F` if needed.
    pub fn from_basis(algebra: Arc<GradedAlgebra>, n: SubmoduleBasis) -> Self {
        let extra = ideal_times(n.ambient(), algebra.ideal_generators());
        let n = if extra.is_empty() || extra.iter().all(|e| n.contains(e)) {
            n
        } else {
            n.extend(extra).expect("homogeneous ideal")
        };
        Self::from_basis_unchecked(algebra, n)
    }

    pub(crate) fn from_basis_unchecked(algebra: Arc<GradedAlgebra>, n: SubmoduleBasis) -> Self {
        GradedModule {
            algebra,
            relations: n,
            dimension: OnceLock::new(),
            h0: OnceLock::new(),
            resolution: OnceLock::new(),
            duals: OnceLock::new(),
        }
    }

    pub fn zero(algebra: Arc<GradedAlgebra>) -> Self {
        let f = *algebra.field();
        Self::from_basis_unchecked(algebra, SubmoduleBasis::zero(FreeModule::default(), f))
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn ambient(&self) -> &FreeModule {
        self.relations.ambient()
    }

    pub fn relations(&self) -> &SubmoduleBasis {
        &self.relations
    }

    pub fn nvars(&self) -> usize {
        self.algebra.nvars()
    }

    pub fn field(&self) -> &PrimeField {
        self.algebra.field()
    }

    pub fn is_zero(&self) -> bool {
        self.ambient().rank() == 0 || self.relations.is_whole()
    }

    /// Krull dimension, `None` for the zero module.
    pub fn dimension(&self) -> Option<usize> {
        *self.dimension.get_or_init(|| self.relations.dimension(self.nvars()))
    }

    /// `dim_k M_t`.
    pub fn hilbert_function(&self, t: i32) -> u64 {
        self.relations.standard_monomial_count(self.nvars(), t)
    }

    pub fn total_length(&self) -> Result<i128> {
        match self.dimension() {
            None => Ok(0),
            Some(0) => self.relations.colength(self.nvars()),
            Some(d) => Err(Error::InfiniteLength(format!("module of dimension {d}"))),
        }
    }

    /// `M / J M`.
    pub fn quotient_by_ideal(&self, gens: &[Polynomial]) -> Result<GradedModule> {
        self.quotient_by_elements(ideal_times(self.ambient(), gens))
    }

    /// `F / (N + span(extra))`.
    pub fn quotient_by_elements(&self, extra: Vec<FreeElement>) -> Result<GradedModule> {
        let extra: Vec<FreeElement> = extra.into_iter().filter(|e| !e.is_zero()).collect();
        if extra.is_empty() {
            return Ok(self.clone());
        }
        let n = self.relations.extend(extra)?;
        Ok(Self::from_basis_unchecked(self.algebra.clone(), n))
    }

    /// `F / N'` for a submodule `N' ⊇ N` of the same ambient module.
    pub fn with_relations(&self, n: SubmoduleBasis) -> GradedModule {
        Self::from_basis_unchecked(self.algebra.clone(), n)
    }

    /// The image of `J F` as the submodule `N + J F`.
    pub fn ideal_submodule(&self, gens: &[Polynomial]) -> Result<SubmoduleBasis> {
        self.relations.extend(ideal_times(self.ambient(), gens))
    }

    /// Generators of the module as elements of `F`.
    pub fn generators(&self) -> Vec<FreeElement> {
        self.ambient().basis()
    }
}

/// An ordered list of homogeneous elements `a_1..a_d` relative to a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSequence {
    elements: Vec<Polynomial>,
}

impl ParameterSequence {
    /// Accepts the elements if they are homogeneous of positive degree and
    /// `M/QM` has finite length.
    pub fn new(elements: Vec<Polynomial>, module: &GradedModule) -> Result<Self> {
        for (i, a) in elements.iter().enumerate() {
            match a.degree() {
                None => return Err(Error::PreconditionViolation(format!("element {} is zero", i + 1))),
                Some(0) => {
                    return Err(Error::PreconditionViolation(format!(
                        "element {} is a unit",
                        i + 1
                    )))
                }
                _ => {}
            }
        }
        let q = module.quotient_by_ideal(&elements)?;
        if q.dimension().is_some_and(|d| d > 0) {
            return Err(Error::InfiniteLength(
                "the sequence does not generate an ideal primary to the maximal ideal on the module".into(),
            ));
        }
        Ok(ParameterSequence { elements })
    }

    /// Like [`ParameterSequence::new`] and also requires `d = dim M`.
    pub fn parameters(elements: Vec<Polynomial>, module: &GradedModule) -> Result<Self> {
        let s = Self::new(elements, module)?;
        let d = module.dimension().unwrap_or(0);
        if s.len() != d {
            return Err(Error::PreconditionViolation(format!(
                "{} elements for a module of dimension {d}",
                s.len()
            )));
        }
        Ok(s)
    }

    /// Wraps the elements without checking the length condition.
    pub fn unchecked(elements: Vec<Polynomial>) -> Self {
        ParameterSequence { elements }
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `Q_i = (a_1, ..., a_i)`.
    pub fn partial(&self, i: usize) -> &[Polynomial] {
        &self.elements[..i]
    }
}

#[cfg(test)]
mod tests;
