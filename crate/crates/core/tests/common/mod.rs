#![allow(dead_code)]

pub mod oracle;

use genuslab::algebra::{FreeElement, Monomial, PolyRing, Polynomial, PrimeField, DEFAULT_PRIME};
use genuslab::invariants::HilbertSamuel;
use genuslab::module::{GradedAlgebra, GradedModule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oracle::{vector_of, Oracle};

pub fn field() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).unwrap()
}

pub fn random_poly(rng: &mut ChaCha8Rng, n: usize, deg: u32, f: &PrimeField) -> Polynomial {
    let terms = rng.gen_range(1..=3);
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        out.push((Monomial::from_exponents(&e).unwrap(), rng.gen_range(1..f.characteristic())));
    }
    Polynomial::from_terms(out, f).expect("equal degrees")
}

fn random_ideal(rng: &mut ChaCha8Rng, n: usize, f: &PrimeField) -> Vec<Polynomial> {
    let k = rng.gen_range(1..=3);
    (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            random_poly(rng, n, d, f)
        })
        .filter(|g| !g.is_zero())
        .collect()
}

fn ideal_oracle(n: usize, gens: &[Polynomial]) -> Oracle {
    let mut o = Oracle::new(u64::from(DEFAULT_PRIME), n, vec![0]);
    for g in gens {
        o.add_poly(g, 0);
    }
    o
}

/// Runs `count` seeded queries comparing the engine with the dense oracle;
/// returns the mismatches.
pub fn oracle_queries(count: usize, seed: u64) -> Vec<String> {
    let f = field();
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for q in 0..count {
        let n = rng.gen_range(1..=3);
        let ring = PolyRing::standard(n);
        let gens = random_ideal(&mut rng, n, &f);
        let tag = format!("query {q} ({n} variables)");
        match q % 5 {
            0 => {
                let a = GradedAlgebra::new(ring, gens.clone()).unwrap();
                let o = ideal_oracle(n, &gens);
                for t in 0..=6 {
                    let got = a.as_module().hilbert_function(t) as usize;
                    let want = o.hilbert_function(t as i64);
                    if got != want {
                        bad.push(format!("{tag}: HF({t}) = {got}, oracle {want}"));
                    }
                }
            }
            1 => {
                let mut all = gens.clone();
                for i in 0..n {
                    let k = rng.gen_range(1..=4);
                    all.push(Polynomial::var(i).pow(k, &f));
                }
                let a = GradedAlgebra::new(ring, all.clone()).unwrap();
                let got = a.as_module().total_length().unwrap();
                let want = ideal_oracle(n, &all).length(40).expect("finite length");
                if got != want as i128 {
                    bad.push(format!("{tag}: length {got}, oracle {want}"));
                }
            }
            2 => {
                let a = GradedAlgebra::new(ring, gens.clone()).unwrap();
                let o = ideal_oracle(n, &gens);
                let d = rng.gen_range(1..=6);
                let cand = if rng.gen_bool(0.5) {
                    let mut acc = Polynomial::zero();
                    for g in &gens {
                        let gd = g.degree().unwrap();
                        if gd <= d {
                            let m = random_poly(&mut rng, n, d - gd, &f);
                            acc = acc.add(&m.mul(g, &f), &f).unwrap();
                        }
                    }
                    acc
                } else {
                    random_poly(&mut rng, n, d, &f)
                };
                let got = a.ideal().contains(&FreeElement::from_polynomial(&cand, 0));
                let want = o.contains(&vector_of(std::slice::from_ref(&cand), n));
                if got != want {
                    bad.push(format!("{tag}: membership {got}, oracle {want}"));
                }
            }
            3 => {
                let twists = vec![0, 1];
                let cols = rng.gen_range(1..=3);
                let mut rows = vec![Vec::new(), Vec::new()];
                for _ in 0..cols {
                    let d = rng.gen_range(1..=3);
                    rows[0].push(random_poly(&mut rng, n, d, &f));
                    rows[1].push(if d >= 2 && rng.gen_bool(0.7) {
                        random_poly(&mut rng, n, d - 1, &f)
                    } else {
                        Polynomial::zero()
                    });
                }
                let a = GradedAlgebra::polynomial_ring(ring);
                let m = GradedModule::cokernel(a, twists.clone(), &rows).unwrap();
                let mut o = Oracle::new(u64::from(DEFAULT_PRIME), n, vec![0, 1]);
                for (a, b) in rows[0].iter().zip(&rows[1]) {
                    o.add(vector_of(&[a.clone(), b.clone()], n));
                }
                for t in 0..=6 {
                    let got = m.hilbert_function(t) as usize;
                    let want = o.hilbert_function(t as i64);
                    if got != want {
                        bad.push(format!("{tag}: module HF({t}) = {got}, oracle {want}"));
                    }
                }
                let d = rng.gen_range(2..=5);
                let mut cand = vec![Polynomial::zero(), Polynomial::zero()];
                for (a, b) in rows[0].iter().zip(&rows[1]) {
                    let jd = a.degree().unwrap();
                    if jd <= d && rng.gen_bool(0.8) {
                        let c = random_poly(&mut rng, n, d - jd, &f);
                        cand[0] = cand[0].add(&c.mul(a, &f), &f).unwrap();
                        cand[1] = cand[1].add(&c.mul(b, &f), &f).unwrap();
                    }
                }
                if rng.gen_bool(0.3) {
                    cand[1] = cand[1].add(&random_poly(&mut rng, n, d - 1, &f), &f).unwrap();
                }
                let got = m.relations().contains(&FreeElement::from_components(&cand));
                let want = o.contains(&vector_of(&cand, n));
                if got != want {
                    bad.push(format!("{tag}: module membership {got}, oracle {want}"));
                }
            }
            _ => {
                let a = GradedAlgebra::new(ring.clone(), gens.clone()).unwrap();
                let qs: Vec<Polynomial> = (0..n)
                    .map(|_| {
                        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(0..f.characteristic()) as i64).collect();
                        ring.linear_form(&c)
                    })
                    .collect();
                let k = rng.gen_range(0..=2usize);
                let mut o = ideal_oracle(n, &gens);
                let mut prods = vec![Polynomial::constant(1, &f)];
                for _ in 0..=k {
                    let mut next = Vec::new();
                    for p in &prods {
                        for g in &qs {
                            next.push(p.mul(g, &f));
                        }
                    }
                    prods = next;
                }
                for p in &prods {
                    o.add_poly(p, 0);
                }
                let want = o.length(40);
                let got = HilbertSamuel::new(&a.as_module(), &qs).and_then(|h| h.length(k));
                match (got, want) {
                    (Ok(g), Some(w)) if g == w as i128 => {}
                    (Err(_), None) => {}
                    (g, w) => bad.push(format!("{tag}: l(M/Q^{}M) = {g:?}, oracle {w:?}", k + 1)),
                }
            }
        }
    }
    bad
}
