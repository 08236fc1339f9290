use super::*;
use crate::homological::depth;
use crate::invariants::{hilbert_coefficients_of, Invariants};

#[test]
fn example44_shape() {
    let (a, q) = build_example44(2, 1, DEFAULT_PRIME).unwrap();
    assert_eq!(a.nvars(), 5);
    assert_eq!(a.ideal_generators().len(), 4);
    assert_eq!(a.dimension(), Some(3));
    assert_eq!(q.len(), 3);
    assert!(build_example44(1, 1, DEFAULT_PRIME).is_err());
}

#[test]
fn example44_intersection_matches_products() {
    let f = PrimeField::default();
    let (a, _) = build_example44(2, 1, DEFAULT_PRIME).unwrap();
    let x = ideal(&[Polynomial::var(0), Polynomial::var(1)], f).unwrap();
    let y = ideal(&[Polynomial::var(2), Polynomial::var(3)], f).unwrap();
    let cap = crate::groebner::intersect(&x, &y).unwrap();
    assert!(cap.same_span(a.ideal()));
}

#[test]
fn example42_is_ulrich() {
    let (_, c, i) = build_example42(2, DEFAULT_PRIME).unwrap();
    let r = ulrich_check(&c, &i).unwrap();
    assert!(r.holds(), "{r:?}");
    assert_eq!((r.length, r.multiplicity), (2, 2));
    for d in [1, 3] {
        let (_, c, i) = build_example42(d, DEFAULT_PRIME).unwrap();
        assert!(ulrich_check(&c, &i).unwrap().holds());
    }
    let (_, c, i) = build_example42(3, DEFAULT_PRIME).unwrap();
    assert_eq!(c.dimension(), Some(2));
    assert_eq!(hilbert_coefficients_of(&c, &i).unwrap().get(0), 3);
}

#[test]
fn ulrich_negative_case() {
    let a = GradedAlgebra::new(PolyRing::standard(1), vec![Polynomial::var(0).pow(2, &PrimeField::default())]).unwrap();
    let r = ulrich_check(&a.as_module(), &[Polynomial::var(0)]).unwrap();
    assert!(r.maximal_cohen_macaulay);
    assert_eq!((r.multiplicity, r.length), (2, 1));
    assert!(!r.holds());
    let s = GradedAlgebra::polynomial_ring(PolyRing::standard(2));
    assert!(ulrich_check(&s.as_module(), &s.variables()).unwrap().holds());
}

#[test]
fn prop41_shape() {
    let (a, q) = build_prop41_instance(DEFAULT_PRIME).unwrap();
    assert_eq!(a.nvars(), 3);
    assert_eq!(a.dimension(), Some(2));
    let m = a.as_module();
    assert_eq!(depth(&m).unwrap(), 1);
    let inv = Invariants::compute(&m, &q).unwrap();
    assert_eq!((inv.sectional_genus, inv.e(0), inv.e(1)), (0, 1, -1));
    assert_eq!(inv.bound(), 0);
    assert_eq!(inv.dual_dimensions[1], Some(1));
}

#[test]
fn random_instances_are_reproducible() {
    let a = random_instance(0, 4, 3).unwrap();
    let b = random_instance(0, 4, 3).unwrap();
    assert_eq!(a.descriptor, b.descriptor);
    assert!(a.module.relations().same_span(b.module.relations()));
    assert_eq!(a.parameters, b.parameters);
    for seed in 0..20 {
        let r = random_instance(seed, 4, 3).unwrap();
        let q = r.module.quotient_by_ideal(r.parameters.elements()).unwrap();
        assert!(q.total_length().is_ok());
    }
}

#[test]
fn keys_are_stable() {
    let i = example44_instance(2, 1, DEFAULT_PRIME).unwrap();
    assert_eq!(i.descriptor.key(), "example44-l2-m1-p32003");
    assert_eq!(i.descriptor.expected["hdeg"], 3);
}

#[test]
fn standard_corpus_satisfies_every_property() {
    for inst in standard_corpus(3).unwrap() {
        let r = evaluate(&inst, 0, 64);
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{}: {bad:?}", r.instance);
    }
}
