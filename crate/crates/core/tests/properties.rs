mod common;

use genuslab::algebra::{Monomial, PolyRing, Polynomial};
use genuslab::corpus::random_instance;
use genuslab::invariants::{coefficients, euler_chi1, hilbert_coefficients, HilbertCoefficients, HilbertSamuel, LengthTable};
use genuslab::module::GradedAlgebra;
use proptest::prelude::*;

fn arb_monomials(n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..4, n), 1..5)
        .prop_map(|v| v.into_iter().filter(|e| e.iter().sum::<u32>() > 0).collect())
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn standard_count(gens: &[Vec<u32>], n: usize, t: u32) -> usize {
    fn all(n: usize, t: u32) -> Vec<Vec<u32>> {
        if n == 1 {
            return vec![vec![t]];
        }
        (0..=t)
            .flat_map(|a| {
                all(n - 1, t - a).into_iter().map(move |mut r| {
                    r.push(a);
                    r
                })
            })
            .collect()
    }
    all(n, t).iter().filter(|m| !gens.iter().any(|g| divides(g, m))).count()
}

/// Largest set of variables containing the support of no generator.
fn monomial_dimension(gens: &[Vec<u32>], n: usize) -> usize {
    (0u32..1 << n)
        .filter(|&s| {
            gens.iter().all(|g| g.iter().enumerate().any(|(i, &e)| e > 0 && s & (1 << i) == 0))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn algebra(gens: &[Vec<u32>], n: usize) -> std::sync::Arc<GradedAlgebra> {
    let polys = gens
        .iter()
        .map(|e| Polynomial::monomial(Monomial::from_exponents(e).unwrap(), 1))
        .collect();
    GradedAlgebra::new(PolyRing::standard(n), polys).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn monomial_hilbert_function_counts_standard_monomials(n in 1usize..=3, gens in (1usize..=3).prop_flat_map(arb_monomials)) {
        let gens: Vec<Vec<u32>> = gens.into_iter().map(|mut g| { g.resize(n, 0); g }).filter(|g| g.iter().sum::<u32>() > 0).collect();
        prop_assume!(!gens.is_empty());
        let a = algebra(&gens, n);
        let m = a.as_module();
        for t in 0..7u32 {
            prop_assert_eq!(m.hilbert_function(t as i32) as usize, standard_count(&gens, n, t));
        }
        let d = monomial_dimension(&gens, n);
        prop_assert_eq!(m.dimension(), Some(d));
    }

    #[test]
    fn coefficients_round_trip(s in 0usize..=3, lead in 1i128..6, rest in prop::collection::vec(-6i128..6, 3), post in 0usize..4, noise in 1i128..5) {
        let mut e = vec![lead];
        e.extend_from_slice(&rest[..s]);
        let c = HilbertCoefficients { e: e.clone(), postulation: 0 };
        let mut values: Vec<i128> = (0..2 * s + 10).map(|n| c.polynomial_at(n as i64)).collect();
        for v in values.iter_mut().take(post) {
            *v += noise;
        }
        let got = hilbert_coefficients(&LengthTable { values }, s).unwrap();
        prop_assert_eq!(got.e, e);
        prop_assert_eq!(got.postulation, post);
    }

    #[test]
    fn short_tables_do_not_stabilize(s in 1usize..=3) {
        let t = LengthTable { values: vec![1; s + 2] };
        prop_assert!(hilbert_coefficients(&t, s).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tangent_cone_lengths_match_powers(seed in 100u64..400) {
        let inst = random_instance(seed, 3, 3).unwrap();
        let hs = HilbertSamuel::new(&inst.module, inst.parameters.elements()).unwrap();
        for n in 0..3 {
            prop_assert_eq!(hs.length(n).unwrap(), hs.direct_length(n).unwrap());
        }
    }

    #[test]
    fn koszul_and_serre_agree(seed in 400u64..700) {
        let inst = random_instance(seed, 4, 3).unwrap();
        let c = euler_chi1(&inst.module, &inst.parameters).unwrap();
        prop_assert_eq!(c.koszul, c.serre);
        let e = coefficients(&HilbertSamuel::new(&inst.module, inst.parameters.elements()).unwrap(), None).unwrap();
        prop_assert!(e.get(0) >= 1);
        prop_assert!(c.serre >= 0);
    }

    #[test]
    fn random_instances_are_deterministic(seed in 0u64..1000) {
        let a = random_instance(seed, 4, 3).unwrap();
        let b = random_instance(seed, 4, 3).unwrap();
        prop_assert_eq!(a.descriptor, b.descriptor);
        prop_assert_eq!(&a.parameters, &b.parameters);
        prop_assert!(a.module.quotient_by_ideal(a.parameters.elements()).unwrap().total_length().is_ok());
    }
}
