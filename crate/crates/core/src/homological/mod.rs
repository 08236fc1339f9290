//! Free resolutions, Ext duals and Koszul homology.

mod koszul;

use std::sync::Arc;

use crate::algebra::{FreeElement, FreeModule, PrimeField, Term};
use crate::error::{Error, Result};
use crate::groebner::{preimage, verify_enabled, SubmoduleBasis};
use crate::module::{minimal_presentation, subquotient, GradedAlgebra, GradedModule};

pub use koszul::{koszul_complex, koszul_homology_lengths, KoszulComplex};

/// A complex of graded free modules `F_0 <- F_1 <- ... <- F_L`.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    modules: Vec<FreeModule>,
    maps: Vec<Vec<FreeElement>>,
}

/// `sum_c v_c images[c]`.
pub fn apply_map(images: &[FreeElement], v: &FreeElement, field: &PrimeField) -> FreeElement {
    let mut acc = FreeElement::zero();
    let mut by_comp: Vec<Vec<Term>> = vec![Vec::new(); images.len()];
    for t in v.terms() {
        by_comp[t.comp as usize].push(*t);
    }
    for (c, terms) in by_comp.iter().enumerate() {
        for t in terms {
            acc = acc.add(&images[c].mul_monomial(&t.mon, t.coef, field), field);
        }
    }
    acc
}

impl FreeComplex {
    /// `maps[i]` lists the images of the basis of `modules[i + 1]` in
    /// `modules[i]`.
    pub fn new(modules: Vec<FreeModule>, maps: Vec<Vec<FreeElement>>) -> Result<Self> {
        if modules.is_empty() || maps.len() + 1 != modules.len() {
            return Err(Error::InvalidInput("a complex needs one map between consecutive modules".into()));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.len() != modules[i + 1].rank() {
                return Err(Error::InvalidInput(format!("map {} has the wrong number of images", i + 1)));
            }
            for (j, v) in m.iter().enumerate() {
                if v.max_component().is_some_and(|c| c >= modules[i].rank()) {
                    return Err(Error::InvalidInput(format!("image {j} of map {} leaves its target", i + 1)));
                }
                if let Some(d) = v.degree(&modules[i])? {
                    if d != modules[i + 1].twist(j) {
                        return Err(Error::HomogeneityViolation(format!(
                            "map {} does not preserve degrees at generator {j}",
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(FreeComplex { modules, maps })
    }

    /// Index of the last module.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.iter().all(|m| m.rank() == 0)
    }

    pub fn module(&self, i: usize) -> &FreeModule {
        &self.modules[i]
    }

    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    /// `d_i : F_i -> F_{i-1}` for `1 <= i <= len`.
    pub fn differential(&self, i: usize) -> &[FreeElement] {
        &self.maps[i - 1]
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// Checks `d_i d_{i+1} = 0` for all `i`.
    pub fn is_complex(&self, field: &PrimeField) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[1].iter().all(|v| apply_map(&w[0], v, field).is_zero()))
    }
}

/// Minimal graded free resolution of `M` over the polynomial ring, with at
/// most `max_len` maps.
pub fn free_resolution(m: &GradedModule, max_len: usize) -> Result<FreeComplex> {
    let pres = minimal_presentation(m)?;
    let field = *m.field();
    let mut modules = vec![pres.ambient().clone()];
    let mut maps = Vec::new();
    let mut gens: Vec<FreeElement> = pres.relations().minimal_generators().to_vec();
    while !gens.is_empty() && maps.len() < max_len {
        let target = modules.last().unwrap().clone();
        let mut twists = Vec::with_capacity(gens.len());
        for g in &gens {
            twists.push(g.degree(&target)?.expect("nonzero generator"));
        }
        let source = FreeModule::new(twists);
        let kernel = preimage(&source, &gens, &SubmoduleBasis::zero(target, field))?;
        let next = kernel.minimal_generators().to_vec();
        modules.push(source);
        maps.push(gens);
        gens = next;
    }
    let c = FreeComplex::new(modules, maps)?;
    if verify_enabled() {
        check_resolution(&c, &pres)?;
    }
    Ok(c)
}

/// `sum (-1)^i HS(F_i) = HS(M)` and `d^2 = 0`.
fn check_resolution(c: &FreeComplex, m: &GradedModule) -> Result<()> {
    let n = m.nvars();
    let field = *m.field();
    let mut euler = crate::groebner::hilbert::Laurent::zero();
    for (i, f) in c.modules().iter().enumerate() {
        let num = SubmoduleBasis::zero(f.clone(), field).numerator(n).clone();
        euler = euler.add_scaled(&num, if i % 2 == 0 { 1 } else { -1 }, 0);
    }
    if &euler != m.relations().numerator(n) || !c.is_complex(&field) {
        return Err(Error::CrossCheckFailure("free resolution is not exact".into()));
    }
    Ok(())
}

/// The resolution of `M` of full length, cached on the module.
pub fn resolution(m: &GradedModule) -> Result<Arc<FreeComplex>> {
    if let Some(r) = m.resolution.get() {
        return Ok(r.clone());
    }
    let r = Arc::new(free_resolution(m, m.nvars() + 1)?);
    let _ = m.resolution.set(r.clone());
    Ok(r)
}

pub fn projective_dimension(m: &GradedModule) -> Result<usize> {
    Ok(resolution(m)?.len())
}

/// `Hom(F_i, S)` with twists negated.
fn dual_module(f: &FreeModule) -> FreeModule {
    FreeModule::new(f.twists().iter().map(|t| -t).collect())
}

/// `d^T : F_{i-1}^* -> F_i^*` given by the images of the basis of `F_{i-1}^*`.
fn transpose(images: &[FreeElement], rows: usize) -> Vec<FreeElement> {
    let mut out: Vec<Vec<Term>> = vec![Vec::new(); rows];
    for (j, v) in images.iter().enumerate() {
        for t in v.terms() {
            out[t.comp as usize].push(Term {
                comp: j as u32,
                ..*t
            });
        }
    }
    out.into_iter().map(FreeElement::from_unsorted).collect()
}

fn ext_from(c: &FreeComplex, algebra: &Arc<GradedAlgebra>, i: usize) -> Result<GradedModule> {
    let field = *algebra.field();
    if i > c.len() {
        return Ok(GradedModule::zero(algebra.clone()));
    }
    let fi = dual_module(c.module(i));
    let z = if i == c.len() {
        SubmoduleBasis::whole(fi.clone(), field)
    } else {
        let next = dual_module(c.module(i + 1));
        let images = transpose(c.differential(i + 1), c.module(i).rank());
        preimage(&fi, &images, &SubmoduleBasis::zero(next, field))?
    };
    let b = if i == 0 {
        SubmoduleBasis::zero(fi.clone(), field)
    } else {
        let images = transpose(c.differential(i), c.module(i - 1).rank());
        SubmoduleBasis::new(fi.clone(), images, field)?
    };
    let q = subquotient(algebra, z.minimal_generators(), &b)?;
    minimal_presentation(&q)
}

/// `Ext^i_S(M, S)` as a module over the polynomial ring.
pub fn ext_module(m: &GradedModule, i: usize) -> Result<GradedModule> {
    Ok(ext_modules(m)?.get(i).cloned().unwrap_or_else(|| GradedModule::zero(polynomial_algebra(m))))
}

fn polynomial_algebra(m: &GradedModule) -> Arc<GradedAlgebra> {
    GradedAlgebra::polynomial_ring(m.algebra().ring().clone())
}

/// `Ext^0 .. Ext^n`, cached on the module.
fn ext_modules(m: &GradedModule) -> Result<Arc<Vec<GradedModule>>> {
    if let Some(d) = m.duals.get() {
        return Ok(d.clone());
    }
    let c = resolution(m)?;
    let s = polynomial_algebra(m);
    let exts = (0..=m.nvars()).map(|i| ext_from(&c, &s, i)).collect::<Result<Vec<_>>>()?;
    let exts = Arc::new(exts);
    let _ = m.duals.set(exts.clone());
    Ok(exts)
}

/// `M_j = Ext^{n-j}(M, S)`, the Matlis dual of `H^j_m(M)` up to a twist.
#[derive(Clone, Debug)]
pub struct DualSection {
    pub index: usize,
    pub module: GradedModule,
    pub finite_length: bool,
}

pub fn dual_section(m: &GradedModule, j: usize) -> Result<DualSection> {
    let n = m.nvars();
    let module = if j > n {
        GradedModule::zero(polynomial_algebra(m))
    } else {
        ext_module(m, n - j)?
    };
    if let Some(d) = module.dimension() {
        if d > j {
            return Err(Error::CrossCheckFailure(format!("dual section {j} has dimension {d}")));
        }
    }
    let finite_length = module.dimension().is_none_or(|d| d == 0);
    if j == 0 {
        let l0 = module.total_length()?;
        let h = crate::module::h0_length(m)?;
        if l0 != h {
            return Err(Error::CrossCheckFailure(format!(
                "length of the zeroth dual section is {l0} but H^0 has length {h}"
            )));
        }
    }
    Ok(DualSection {
        index: j,
        module,
        finite_length,
    })
}

/// `M_0, ..., M_{s-1}` for `s = dim M`.
pub fn dual_sections(m: &GradedModule) -> Result<Vec<DualSection>> {
    let s = m.dimension().unwrap_or(0);
    (0..s).map(|j| dual_section(m, j)).collect()
}

/// `n - pd(M)`, checked against the least `j` with `M_j != 0`.
pub fn depth(m: &GradedModule) -> Result<usize> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let n = m.nvars();
    let pd = projective_dimension(m)?;
    if pd > n {
        return Err(Error::CrossCheckFailure(format!("projective dimension {pd} exceeds {n}")));
    }
    let by_ab = n - pd;
    let s = m.dimension().unwrap_or(0);
    let mut first = None;
    for j in 0..=s {
        if !dual_section(m, j)?.module.is_zero() {
            first = Some(j);
            break;
        }
    }
    if first != Some(by_ab) {
        return Err(Error::CrossCheckFailure(format!(
            "depth {by_ab} from the resolution but first nonzero dual section at {first:?}"
        )));
    }
    Ok(by_ab)
}

#[cfg(test)]
mod tests;
