use std::collections::HashMap;
use std::sync::Arc;

use super::{GradedAlgebra, GradedModule};
use crate::algebra::{FreeElement, FreeModule, Monomial, PolyRing, Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::groebner::{preimage, quotient_length, SubmoduleBasis};
use crate::linalg::Echelon;

/// Generators `f e_c` of `J F`.
pub fn ideal_times(ambient: &FreeModule, gens: &[Polynomial]) -> Vec<FreeElement> {
    let mut out = Vec::new();
    for c in 0..ambient.rank() {
        for g in gens {
            if !g.is_zero() {
                out.push(FreeElement::from_polynomial(g, c));
            }
        }
    }
    out
}

/// `N :_F f = { v : f v ∈ N }`.
pub fn colon(n: &SubmoduleBasis, f: &Polynomial) -> Result<SubmoduleBasis> {
    let field = *n.field();
    let Some(d) = f.degree() else {
        return Ok(SubmoduleBasis::whole(n.ambient().clone(), field));
    };
    if d == 0 {
        return Ok(n.clone());
    }
    let ambient = n.ambient();
    let source = ambient.shifted(d as i32);
    let images: Vec<FreeElement> = (0..ambient.rank()).map(|c| FreeElement::from_polynomial(f, c)).collect();
    preimage(&source, &images, n)?.with_ambient(ambient.clone())
}

/// `N :_F J = { v : J v ⊆ N }`.
pub fn colon_ideal(n: &SubmoduleBasis, gens: &[Polynomial]) -> Result<SubmoduleBasis> {
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let field = *n.field();
    let ambient = n.ambient();
    if gens.is_empty() {
        return Ok(SubmoduleBasis::whole(ambient.clone(), field));
    }
    if gens.len() == 1 {
        return colon(n, gens[0]);
    }
    if gens.iter().any(|g| g.degree() == Some(0)) {
        return Ok(n.clone());
    }
    let top = gens.iter().map(|g| g.degree().unwrap() as i32).max().unwrap();
    let r = ambient.rank();
    let mut target = FreeModule::default();
    let mut seeds = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let shift = top - g.degree().unwrap() as i32;
        target = target.direct_sum(&ambient.shifted(shift));
        seeds.extend(n.gb().into_iter().map(|e| e.shift_components(k * r)));
    }
    let base = SubmoduleBasis::with_order(target, seeds, field, *n.order())?;
    let source = ambient.shifted(top);
    let images: Vec<FreeElement> = (0..r)
        .map(|c| {
            let mut acc = FreeElement::zero();
            for (k, g) in gens.iter().enumerate() {
                acc = acc.add(&FreeElement::from_polynomial(g, c + k * r), &field);
            }
            acc
        })
        .collect();
    preimage(&source, &images, &base)?.with_ambient(ambient.clone())
}

/// `N :_F J^∞`, by colon until stable.
pub fn saturate(n: &SubmoduleBasis, gens: &[Polynomial]) -> Result<SubmoduleBasis> {
    let mut cur = n.clone();
    loop {
        let next = colon_ideal(&cur, gens)?;
        if cur.contains_module(&next) {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Minimal generators of the `n`-th power of the ideal `J`.
pub fn ideal_power(gens: &[Polynomial], n: u32, field: &PrimeField) -> Result<Vec<Polynomial>> {
    let mut cur = vec![Polynomial::constant(1, field)];
    for _ in 0..n {
        let mut prod = Vec::new();
        for a in &cur {
            for g in gens {
                let p = a.mul(g, field);
                if !p.is_zero() {
                    prod.push(FreeElement::from_polynomial(&p, 0));
                }
            }
        }
        let b = SubmoduleBasis::new(FreeModule::free(1), prod, *field)?;
        cur = b.minimal_generators().iter().map(|v| v.component(0)).collect();
    }
    Ok(cur)
}

/// `ann(M) = { f ∈ S : f M = 0 }` as an ideal of `S`.
pub fn annihilator(m: &GradedModule) -> Result<SubmoduleBasis> {
    let field = *m.field();
    let ambient = m.ambient();
    let r = ambient.rank();
    let one = FreeModule::free(1);
    if m.is_zero() {
        return Ok(SubmoduleBasis::whole(one, field));
    }
    let n = m.relations();
    let mut target = FreeModule::default();
    let mut seeds = Vec::new();
    for c in 0..r {
        target = target.direct_sum(&ambient.shifted(-ambient.twist(c)));
        seeds.extend(n.gb().into_iter().map(|e| e.shift_components(c * r)));
    }
    let base = SubmoduleBasis::with_order(target, seeds, field, *n.order())?;
    let mut image = FreeElement::zero();
    for c in 0..r {
        image = image.add(&FreeElement::basis(c * r + c), &field);
    }
    preimage(&one, &[image], &base)
}

/// The submodule `W ⊆ F` with `W/N = H^0_m(M)`.
pub fn h0(m: &GradedModule) -> Result<SubmoduleBasis> {
    if let Some(w) = m.h0.get() {
        return Ok(w.clone());
    }
    let w = saturate(m.relations(), &m.algebra().variables())?;
    let _ = m.h0.set(w.clone());
    Ok(w)
}

pub fn h0_length(m: &GradedModule) -> Result<i128> {
    let w = h0(m)?;
    quotient_length(&w, m.relations(), m.nvars())
}

/// Presentation of `(K + B) / B` for elements `K` of the ambient of `B`.
pub fn subquotient(algebra: &Arc<GradedAlgebra>, k: &[FreeElement], b: &SubmoduleBasis) -> Result<GradedModule> {
    let mut twists = Vec::new();
    let mut gens = Vec::new();
    for v in k {
        if let Some(d) = v.degree(b.ambient())? {
            twists.push(d);
            gens.push(v.clone());
        }
    }
    let source = FreeModule::new(twists);
    let rel = preimage(&source, &gens, b)?;
    Ok(GradedModule::from_basis(algebra.clone(), rel))
}

/// An isomorphic presentation with a minimal number of generators and
/// minimal relations.
pub fn minimal_presentation(m: &GradedModule) -> Result<GradedModule> {
    let field = *m.field();
    let ambient = m.ambient();
    let r = ambient.rank();
    let rels = m.relations().minimal_generators();
    let mut ech = Echelon::new(field, r);
    for g in rels {
        let mut row = vec![0u32; r];
        for t in g.terms() {
            if t.mon.is_one() {
                row[t.comp as usize] = t.coef;
            }
        }
        ech.insert(row);
    }
    let pivots = ech.pivots();
    if pivots.is_empty() {
        return Ok(m.clone());
    }
    let keep: Vec<usize> = (0..r).filter(|c| !pivots.contains(c)).collect();
    // pivot components first, so that eliminating them leaves N ∩ F'
    let mut perm = vec![0u32; r];
    for (i, &c) in pivots.iter().chain(keep.iter()).enumerate() {
        perm[c] = i as u32;
    }
    let p = pivots.len() as u32;
    let permuted = FreeModule::new(pivots.iter().chain(keep.iter()).map(|&c| ambient.twist(c)).collect());
    let gens: Vec<FreeElement> = m.relations().gb().iter().map(|g| g.map_components(|c| perm[c as usize])).collect();
    let order = m.relations().order().with_split(p);
    let elim = SubmoduleBasis::with_order(permuted, gens, field, order)?;
    let lower: Vec<FreeElement> = elim
        .gb()
        .into_iter()
        .filter(|g| g.terms().iter().all(|t| t.comp >= p))
        .map(|g| g.map_components(|c| c - p))
        .collect();
    let small = FreeModule::new(keep.iter().map(|&c| ambient.twist(c)).collect());
    let n = SubmoduleBasis::new(small, lower, field)?;
    Ok(GradedModule::from_basis_unchecked(m.algebra().clone(), n))
}

/// `M1 ⊕ M2` over a common algebra.
pub fn direct_sum(a: &GradedModule, b: &GradedModule) -> Result<GradedModule> {
    if !Arc::ptr_eq(a.algebra(), b.algebra()) && a.algebra().ring() != b.algebra().ring() {
        return Err(Error::InvalidInput("direct sum of modules over different rings".into()));
    }
    let ambient = a.ambient().direct_sum(b.ambient());
    let r = a.ambient().rank();
    let mut gb: Vec<FreeElement> = a.relations().gb();
    gb.extend(b.relations().gb().iter().map(|g| g.shift_components(r)));
    let n = SubmoduleBasis::new(ambient, gb, *a.field())?;
    Ok(GradedModule::from_basis_unchecked(a.algebra().clone(), n))
}

/// The trivial extension `R ⋉ M` as a quotient of `S[u_1..u_t]`, with the
/// new variables in degree 1.
pub fn idealization(m: &GradedModule, degrees: Option<&[u32]>) -> Result<Arc<GradedAlgebra>> {
    let r = m.algebra();
    let t = m.ambient().rank();
    if let Some(ds) = degrees {
        if ds.len() != t {
            return Err(Error::InvalidInput(format!("{} degrees for {t} generators", ds.len())));
        }
        if let Some(d) = ds.iter().find(|&&d| d != 1) {
            return Err(Error::NonStandardGrading(format!(
                "a new variable of degree {d} is not standard graded"
            )));
        }
    }
    let tw = m.ambient().twists();
    if tw.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::NonStandardGrading(
            "module generators live in different degrees".into(),
        ));
    }
    let n = r.nvars();
    let mut names: Vec<String> = r.ring().names().to_vec();
    for c in 0..t {
        let mut name = format!("u{}", c + 1);
        while names.contains(&name) {
            name.push('_');
        }
        names.push(name);
    }
    let ring = PolyRing::new(names, *r.field())?;
    let field = *r.field();
    let mut gens: Vec<Polynomial> = r.ideal_generators().to_vec();
    for rel in m.relations().minimal_generators() {
        let mut acc = Polynomial::zero();
        for c in 0..t {
            let p = rel.component(c);
            if !p.is_zero() {
                acc = acc.add(&p.mul(&Polynomial::var(n + c), &field), &field)?;
            }
        }
        if !acc.is_zero() {
            gens.push(acc);
        }
    }
    for i in 0..t {
        for j in i..t {
            gens.push(Polynomial::var(n + i).mul(&Polynomial::var(n + j), &field));
        }
    }
    GradedAlgebra::new(ring, gens)
}

/// Substitutes `x_j -> images[j]` (linear forms) in a polynomial.
pub(crate) fn substitute(p: &Polynomial, images: &[Polynomial], field: &PrimeField, cache: &mut HashMap<Monomial, Polynomial>) -> Polynomial {
    let mut acc = Polynomial::zero();
    for &(m, c) in p.terms() {
        let v = cache
            .entry(m)
            .or_insert_with(|| {
                let mut out = Polynomial::constant(1, field);
                for (j, img) in images.iter().enumerate() {
                    for _ in 0..m.exponent(j) {
                        out = out.mul(img, field);
                    }
                }
                out
            })
            .scale(c, field);
        acc = acc.add(&v, field).expect("homogeneous substitution");
    }
    acc
}

/// Applies the ring automorphism `x_j -> images[j]` (linear forms) to the
/// algebra and the module presentation.
pub fn apply_linear_change(m: &GradedModule, images: &[Polynomial]) -> Result<GradedModule> {
    let alg = m.algebra();
    let field = *m.field();
    if images.len() != alg.nvars() || images.iter().any(|p| p.degree() != Some(1)) {
        return Err(Error::InvalidInput("a linear change needs one linear form per variable".into()));
    }
    let mut cache = HashMap::new();
    let ideal: Vec<Polynomial> = alg
        .ideal_generators()
        .iter()
        .map(|g| substitute(g, images, &field, &mut cache))
        .collect();
    let new_alg = GradedAlgebra::new(alg.ring().clone(), ideal)?;
    let rank = m.ambient().rank();
    let rels: Vec<FreeElement> = m
        .relations()
        .minimal_generators()
        .iter()
        .map(|v| {
            let parts: Vec<Polynomial> = (0..rank).map(|c| substitute(&v.component(c), images, &field, &mut cache)).collect();
            FreeElement::from_components(&parts)
        })
        .collect();
    GradedModule::new(new_alg, m.ambient().clone(), rels)
}
