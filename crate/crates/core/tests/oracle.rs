mod common;

use common::oracle::{rank, vector_of, Oracle};
use genuslab::algebra::{Polynomial, DEFAULT_PRIME};

const P: u64 = DEFAULT_PRIME as u64;

#[test]
fn oracle_on_known_quotients() {
    let f = common::field();
    let x = Polynomial::var(0);
    let y = Polynomial::var(1);
    let mut o = Oracle::new(P, 2, vec![0]);
    o.add_poly(&x.pow(2, &f), 0);
    o.add_poly(&y.pow(3, &f), 0);
    assert_eq!((0..5).map(|t| o.hilbert_function(t)).collect::<Vec<_>>(), [1, 2, 2, 1, 0]);
    assert_eq!(o.length(20), Some(6));
    assert!(o.contains(&vector_of(&[x.mul(&y, &f).mul(&x, &f)], 2)));
    assert!(!o.contains(&vector_of(&[x.mul(&y, &f)], 2)));
    let mut free = Oracle::new(P, 1, vec![0, 1]);
    free.add(vector_of(&[x.clone(), Polynomial::constant(1, &f).scale(0, &f)], 1));
    assert_eq!(free.hilbert_function(1), 1);
    assert_eq!(free.length(5), None);
    assert_eq!(rank(vec![vec![1, 2], vec![2, 4]], P), 1);
}

#[test]
fn engine_agrees_with_dense_linear_algebra() {
    let bad = common::oracle_queries(100, 1);
    assert!(bad.is_empty(), "{bad:#?}");
}
