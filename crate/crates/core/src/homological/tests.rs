use super::*;
use crate::algebra::{PolyRing, Polynomial};
use crate::module::{direct_sum, ParameterSequence};

fn ring(n: usize) -> PolyRing {
    PolyRing::standard(n)
}

fn example44_21() -> Arc<GradedAlgebra> {
    // x1, x2, y1, y2, z
    let f = PrimeField::default();
    let mut gens = Vec::new();
    for i in 0..2 {
        for j in 2..4 {
            gens.push(Polynomial::var(i).mul(&Polynomial::var(j), &f));
        }
    }
    GradedAlgebra::new(ring(5), gens).unwrap()
}

fn parameters44(a: &GradedAlgebra) -> Vec<Polynomial> {
    let f = a.field();
    vec![
        Polynomial::var(0).sub(&Polynomial::var(2), f).unwrap(),
        Polynomial::var(1).sub(&Polynomial::var(3), f).unwrap(),
        Polynomial::var(4),
    ]
}

#[test]
fn residue_field_resolution_is_koszul() {
    let s = GradedAlgebra::polynomial_ring(ring(2));
    let k = s.residue_field();
    let c = free_resolution(&k, 4).unwrap();
    assert_eq!(c.betti_numbers(), vec![1, 2, 1]);
    assert!(c.is_complex(k.field()));
    assert_eq!(c.module(2).twists(), &[2]);
    assert_eq!(free_resolution(&s.as_module(), 4).unwrap().len(), 0);
}

#[test]
fn ext_of_residue_field() {
    let s = GradedAlgebra::polynomial_ring(ring(2));
    let k = s.residue_field();
    assert!(ext_module(&k, 0).unwrap().is_zero());
    assert!(ext_module(&k, 1).unwrap().is_zero());
    let e2 = ext_module(&k, 2).unwrap();
    assert_eq!(e2.total_length().unwrap(), 1);
    assert_eq!(e2.ambient().twists(), &[-2]);
    let free = s.as_module();
    assert!(ext_module(&free, 1).unwrap().is_zero());
    assert!(ext_module(&free, 2).unwrap().is_zero());
    assert_eq!(ext_module(&free, 0).unwrap().dimension(), Some(2));
}

#[test]
fn example_resolution_and_duals() {
    let a = example44_21();
    let m = a.as_module();
    assert_eq!(m.dimension(), Some(3));
    assert_eq!(projective_dimension(&m).unwrap(), 3);
    assert_eq!(depth(&m).unwrap(), 2);
    let e = ext_module(&m, 3).unwrap();
    assert_eq!(e.dimension(), Some(1));
    let duals = dual_sections(&m).unwrap();
    assert_eq!(duals.len(), 3);
    assert!(duals[0].module.is_zero() && duals[1].module.is_zero());
    assert_eq!(duals[2].module.dimension(), Some(1));
    assert!(!duals[2].finite_length);
}

#[test]
fn depth_examples() {
    let s = GradedAlgebra::polynomial_ring(ring(2));
    assert_eq!(depth(&s.as_module()).unwrap(), 2);
    let sum = direct_sum(&s.as_module(), &s.residue_field()).unwrap();
    assert_eq!(depth(&sum).unwrap(), 0);
    assert!(matches!(depth(&GradedModule::zero(s)), Err(Error::ZeroModule)));
}

#[test]
fn first_dual_matches_h0() {
    let f = PrimeField::default();
    let x = Polynomial::var(0);
    let y = Polynomial::var(1);
    let a = GradedAlgebra::new(ring(2), vec![x.mul(&x, &f), x.mul(&y, &f)]).unwrap();
    let m0 = dual_section(&a.as_module(), 0).unwrap();
    assert_eq!(m0.module.total_length().unwrap(), 1);
}

#[test]
fn koszul_differentials() {
    let s = GradedAlgebra::polynomial_ring(ring(2));
    let m = s.as_module();
    let seq = ParameterSequence::new(vec![Polynomial::var(0), Polynomial::var(1)], &m).unwrap();
    let k = koszul_complex(&seq, &m).unwrap();
    assert!(k.cover().is_complex(m.field()));
    assert_eq!(k.cover().betti_numbers(), vec![1, 2, 1]);
    let d2 = &k.cover().differential(2)[0];
    let f = m.field();
    assert_eq!(d2.component(0), Polynomial::var(1).neg(f));
    assert_eq!(d2.component(1), Polynomial::var(0));
    assert_eq!(koszul_homology_lengths(&seq, &m).unwrap(), vec![1, 0, 0]);
    let one = ParameterSequence::new(vec![Polynomial::var(0)], &s.residue_field()).unwrap();
    assert_eq!(koszul_complex(&one, &m).unwrap().cover().betti_numbers(), vec![1, 1]);
}

#[test]
fn koszul_in_dimension_one() {
    let f = PrimeField::default();
    let x = Polynomial::var(0);
    let y = Polynomial::var(1);
    let a = GradedAlgebra::new(ring(2), vec![x.mul(&x, &f), x.mul(&y, &f)]).unwrap();
    let m = a.as_module();
    let seq = ParameterSequence::new(vec![y.clone()], &m).unwrap();
    let h = koszul_homology_lengths(&seq, &m).unwrap();
    assert_eq!(h, vec![2, 1]);
    let bad = ParameterSequence::unchecked(vec![x.clone()]);
    assert!(matches!(koszul_homology_lengths(&bad, &m), Err(Error::InfiniteLength(_))));
}

#[test]
fn koszul_euler_characteristic_of_example() {
    let a = example44_21();
    let m = a.as_module();
    let seq = ParameterSequence::parameters(parameters44(&a), &m).unwrap();
    let h = koszul_homology_lengths(&seq, &m).unwrap();
    assert_eq!(h[0], 3);
    let chi1: i128 = h.iter().skip(1).enumerate().map(|(i, l)| if i % 2 == 0 { *l } else { -l }).sum();
    assert_eq!(chi1, 1);
}

