use super::*;
use crate::algebra::Monomial;
use crate::groebner::intersect;

fn ring(names: &[&str]) -> PolyRing {
    PolyRing::new(names.iter().map(|s| s.to_string()).collect(), PrimeField::default()).unwrap()
}

fn mono(e: &[u32]) -> Polynomial {
    Polynomial::monomial(Monomial::from_exponents(e).unwrap(), 1)
}

fn xy_algebra(gens: &[&[u32]]) -> Arc<GradedAlgebra> {
    GradedAlgebra::new(ring(&["x", "y"]), gens.iter().map(|e| mono(e)).collect()).unwrap()
}

fn principal(p: &Polynomial) -> SubmoduleBasis {
    SubmoduleBasis::new(FreeModule::free(1), vec![FreeElement::from_polynomial(p, 0)], PrimeField::default()).unwrap()
}

#[test]
fn colon_by_y() {
    let a = xy_algebra(&[&[2, 0], &[1, 1]]);
    let c = colon(a.ideal(), &Polynomial::var(1)).unwrap();
    assert!(c.same_span(&principal(&Polynomial::var(0))));
    let b = xy_algebra(&[&[2, 0]]);
    let c = colon(b.ideal(), &Polynomial::var(1)).unwrap();
    assert!(c.same_span(b.ideal()));
    let one = Polynomial::constant(1, b.field());
    assert!(colon(b.ideal(), &one).unwrap().same_span(b.ideal()));
}

#[test]
fn colon_composes() {
    let a = xy_algebra(&[&[3, 0], &[1, 2]]);
    let (x, y) = (Polynomial::var(0), Polynomial::var(1));
    let f = a.field();
    let lhs = colon(&colon(a.ideal(), &x).unwrap(), &y).unwrap();
    let rhs = colon(a.ideal(), &x.mul(&y, f)).unwrap();
    assert!(lhs.same_span(&rhs));
    let by_ideal = colon_ideal(a.ideal(), &[x.clone(), y.clone()]).unwrap();
    let both = intersect(&colon(a.ideal(), &x).unwrap(), &colon(a.ideal(), &y).unwrap()).unwrap();
    assert!(by_ideal.same_span(&both));
}

#[test]
fn powers() {
    let f = PrimeField::default();
    let g = [Polynomial::var(0), Polynomial::var(1)];
    assert_eq!(ideal_power(&g, 2, &f).unwrap().len(), 3);
    assert_eq!(ideal_power(&g, 0, &f).unwrap(), vec![Polynomial::constant(1, &f)]);
    assert_eq!(ideal_power(&g, 1, &f).unwrap().len(), 2);
}

#[test]
fn annihilators() {
    let s = GradedAlgebra::polynomial_ring(ring(&["x", "y"]));
    assert!(annihilator(&s.as_module()).unwrap().is_zero());
    let z = GradedModule::zero(s.clone());
    assert!(annihilator(&z).unwrap().is_whole());
    let k = s.residue_field();
    let ann = annihilator(&k).unwrap();
    assert!(ann.same_span(&SubmoduleBasis::new(
        FreeModule::free(1),
        vec![FreeElement::from_polynomial(&Polynomial::var(0), 0), FreeElement::from_polynomial(&Polynomial::var(1), 0)],
        PrimeField::default()
    )
    .unwrap()));
}

#[test]
fn zeroth_local_cohomology() {
    let s = GradedAlgebra::polynomial_ring(ring(&["x", "y"]));
    assert_eq!(h0_length(&s.as_module()).unwrap(), 0);
    let a = xy_algebra(&[&[2, 0], &[1, 1]]);
    let m = a.as_module();
    let w = h0(&m).unwrap();
    assert!(w.same_span(&principal(&Polynomial::var(0))));
    assert_eq!(h0_length(&m).unwrap(), 1);
    let sum = direct_sum(&s.as_module(), &s.residue_field()).unwrap();
    assert_eq!(sum.dimension(), Some(2));
    assert_eq!(h0_length(&sum).unwrap(), 1);
}

#[test]
fn dimensions_and_lengths() {
    let z = GradedModule::zero(GradedAlgebra::polynomial_ring(ring(&["x"])));
    assert_eq!(z.dimension(), None);
    assert_eq!(z.total_length().unwrap(), 0);
    let s = GradedAlgebra::polynomial_ring(ring(&["x", "y"]));
    let m = s.as_module();
    assert!(matches!(m.total_length(), Err(Error::InfiniteLength(_))));
    let q = m.quotient_by_ideal(&[mono(&[2, 0]), mono(&[0, 3])]).unwrap();
    assert_eq!(q.total_length().unwrap(), 6);
    assert_eq!(m.quotient_by_ideal(&[]).unwrap().hilbert_function(4), 5);
    assert!(m.quotient_by_ideal(&[Polynomial::constant(1, s.field())]).unwrap().is_zero());
}

#[test]
fn direct_sums_add_lengths() {
    let s = GradedAlgebra::polynomial_ring(ring(&["x", "y"]));
    let a = s.as_module().quotient_by_ideal(&[mono(&[2, 0]), mono(&[0, 2])]).unwrap();
    let b = s.residue_field();
    let sum = direct_sum(&a, &b).unwrap();
    assert_eq!(sum.total_length().unwrap(), a.total_length().unwrap() + b.total_length().unwrap());
    let z = GradedModule::zero(s.clone());
    assert_eq!(direct_sum(&a, &z).unwrap().total_length().unwrap(), 4);
}

#[test]
fn idealization_of_a_cyclic_module() {
    let s = GradedAlgebra::polynomial_ring(ring(&["x", "y"]));
    let m = s.as_module().quotient_by_ideal(&[Polynomial::var(0)]).unwrap();
    let a = idealization(&m, None).unwrap();
    assert_eq!(a.nvars(), 3);
    let expect = [mono(&[1, 0, 1]), mono(&[0, 0, 2])];
    let want = SubmoduleBasis::new(
        FreeModule::free(1),
        expect.iter().map(|p| FreeElement::from_polynomial(p, 0)).collect(),
        PrimeField::default(),
    )
    .unwrap();
    assert!(a.ideal().same_span(&want));
    // HF(R x M) = HF(R) + HF(M twisted up by one)
    let am = a.as_module();
    for t in 0..6 {
        let expect = s.as_module().hilbert_function(t) + m.hilbert_function(t - 1);
        assert_eq!(am.hilbert_function(t), expect);
    }
    assert_eq!(a.dimension(), Some(2));
    assert!(matches!(idealization(&m, Some(&[2])), Err(Error::NonStandardGrading(_))));
}

#[test]
fn presentations_are_minimized() {
    let s = GradedAlgebra::polynomial_ring(ring(&["x", "y"]));
    let x = Polynomial::var(0);
    let y = Polynomial::var(1);
    let f = s.field();
    // coker [[1, x], [0, y]] with twists 0, 0 ... needs homogeneous columns
    let rows = vec![vec![x.clone(), Polynomial::zero()], vec![Polynomial::constant(1, f), y.clone()]];
    let m = GradedModule::cokernel(s.clone(), vec![0, 1], &rows).unwrap();
    let p = minimal_presentation(&m).unwrap();
    assert_eq!(p.ambient().rank(), 1);
    for t in 0..5 {
        assert_eq!(p.hilbert_function(t), m.hilbert_function(t));
    }
}

#[test]
fn parameter_sequences_must_be_primary() {
    let s = GradedAlgebra::polynomial_ring(ring(&["x", "y"]));
    let m = s.as_module();
    assert!(ParameterSequence::new(vec![Polynomial::var(0)], &m).is_err());
    let q = ParameterSequence::parameters(vec![Polynomial::var(0), Polynomial::var(1)], &m).unwrap();
    assert_eq!(q.partial(1).len(), 1);
    assert!(ParameterSequence::parameters(vec![Polynomial::var(0)], &m).is_err());
}

#[test]
fn linear_change_preserves_hilbert_function() {
    let a = xy_algebra(&[&[2, 0], &[1, 1]]);
    let f = a.field();
    let imgs = vec![Polynomial::var(0).add(&Polynomial::var(1), f).unwrap(), Polynomial::var(1)];
    let m = apply_linear_change(&a.as_module(), &imgs).unwrap();
    for t in 0..5 {
        assert_eq!(m.hilbert_function(t), a.as_module().hilbert_function(t));
    }
}
