use super::buchberger::{groebner, sorted, GbInput};
use super::SubmoduleBasis;
use crate::algebra::{FreeElement, FreeModule, Term};
use crate::error::{Error, Result};

/// `{ v in source : sum v_i images_i in target }` for a degree-preserving
/// map `source -> target.ambient()` sending `e_i` to `images[i]`.
pub fn preimage(source: &FreeModule, images: &[FreeElement], target: &SubmoduleBasis) -> Result<SubmoduleBasis> {
    if images.len() != source.rank() {
        return Err(Error::InvalidInput(format!(
            "{} images for a free module of rank {}",
            images.len(),
            source.rank()
        )));
    }
    let top = target.ambient();
    for (i, im) in images.iter().enumerate() {
        if let Some(d) = im.degree(top)? {
            if d != source.twist(i) {
                return Err(Error::HomogeneityViolation(format!(
                    "image {i} has degree {d} but its source generator has degree {}",
                    source.twist(i)
                )));
            }
        }
    }
    let r = top.rank() as u32;
    let ambient = top.direct_sum(source);
    let order = target.order().with_split(r);
    let gens: Vec<Vec<Term>> = images
        .iter()
        .enumerate()
        .map(|(i, im)| {
            let mut t = im.terms().to_vec();
            t.push(Term {
                mon: crate::algebra::Monomial::one(),
                comp: r + i as u32,
                coef: 1,
            });
            sorted(t, &order)
        })
        .collect();
    let out = groebner(GbInput {
        ambient: &ambient,
        order,
        field: *target.field(),
        seeds: target.raw_gb().to_vec(),
        gens,
        degree_limit: None,
    });
    let lower: Vec<Vec<Term>> = out
        .basis
        .into_iter()
        .filter(|e| e[0].comp >= r)
        .map(|e| {
            e.into_iter()
                .map(|t| Term {
                    comp: t.comp - r,
                    ..t
                })
                .collect()
        })
        .collect();
    Ok(SubmoduleBasis::from_reduced(source.clone(), *target.order(), *target.field(), lower))
}

/// `N1 ∩ N2` inside their common ambient module.
pub fn intersect(a: &SubmoduleBasis, b: &SubmoduleBasis) -> Result<SubmoduleBasis> {
    let f = a.ambient();
    if f != b.ambient() {
        return Err(Error::InvalidInput("intersection of submodules of different modules".into()));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(SubmoduleBasis::zero(f.clone(), *a.field()));
    }
    let r = f.rank();
    let both = f.direct_sum(f);
    let mut seeds: Vec<FreeElement> = a.gb();
    seeds.extend(b.gb().iter().map(|g| g.shift_components(r)));
    let base = SubmoduleBasis::from_reduced(
        both,
        *a.order(),
        *a.field(),
        seeds.iter().map(|g| sorted(g.terms().to_vec(), a.order())).collect(),
    );
    let images: Vec<FreeElement> = (0..r)
        .map(|c| FreeElement::basis(c).add(&FreeElement::basis(c + r), a.field()))
        .collect();
    preimage(f, &images, &base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Polynomial, PrimeField};

    fn ideal(gens: &[Polynomial]) -> SubmoduleBasis {
        let g = gens.iter().map(|p| FreeElement::from_polynomial(p, 0)).collect();
        SubmoduleBasis::new(FreeModule::free(1), g, PrimeField::default()).unwrap()
    }

    #[test]
    fn intersection_of_variable_ideals() {
        let f = PrimeField::default();
        let v = Polynomial::var;
        let a = ideal(&[v(0), v(1)]);
        let b = ideal(&[v(2), v(3)]);
        let c = intersect(&a, &b).unwrap();
        let expect = ideal(&[v(0).mul(&v(2), &f), v(0).mul(&v(3), &f), v(1).mul(&v(2), &f), v(1).mul(&v(3), &f)]);
        assert!(c.same_span(&expect));
        assert!(intersect(&a, &a).unwrap().same_span(&a));
        let z = SubmoduleBasis::zero(FreeModule::free(1), f);
        assert!(intersect(&a, &z).unwrap().is_zero());
    }

    #[test]
    fn syzygy_of_two_monomials() {
        let f = PrimeField::default();
        let v = Polynomial::var;
        // x1 y1, x1 y2 with variables x1 = 0, y1 = 1, y2 = 2
        let g = [v(0).mul(&v(1), &f), v(0).mul(&v(2), &f)];
        let source = FreeModule::new(vec![2, 2]);
        let images: Vec<FreeElement> = g.iter().map(|p| FreeElement::from_polynomial(p, 0)).collect();
        let ker = preimage(&source, &images, &SubmoduleBasis::zero(FreeModule::free(1), f)).unwrap();
        assert_eq!(ker.gb_len(), 1);
        let s = &ker.gb()[0];
        let prod = s.component(0).mul(&g[0], &f).add(&s.component(1).mul(&g[1], &f), &f).unwrap();
        assert!(prod.is_zero());
        assert_eq!(s.component(0).degree(), Some(1));
    }

    #[test]
    fn mismatched_degrees_are_rejected() {
        let f = PrimeField::default();
        let images = vec![FreeElement::from_polynomial(&Polynomial::var(0), 0)];
        let r = preimage(&FreeModule::new(vec![0]), &images, &SubmoduleBasis::zero(FreeModule::free(1), f));
        assert!(matches!(r, Err(Error::HomogeneityViolation(_))));
    }
}
