//! Dense per-degree linear algebra over F_p, independent of the Groebner code.

use std::collections::BTreeMap;

use genuslab::algebra::Polynomial;

pub type Exps = Vec<u32>;

/// A homogeneous vector in a free module: `(component, exponents) -> coefficient`.
pub type Vector = BTreeMap<(usize, Exps), u64>;

fn monomials(n: usize, d: i64) -> Vec<Exps> {
    if d < 0 {
        return Vec::new();
    }
    let d = d as u32;
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(n - 1, (d - first) as i64) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn add_exps(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank of the rows over F_p.
pub fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = pow_mod(rows[r][c], p - 2, p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot = rows[r].clone();
                for (x, y) in rows[i][c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// A graded submodule `N` of `F = ⊕ S(-twists[i])` over `S = k[x_1..x_n]`,
/// given by homogeneous generators.
pub struct Oracle {
    pub p: u64,
    pub nvars: usize,
    pub twists: Vec<i64>,
    pub gens: Vec<(i64, Vector)>,
}

pub fn vector_of(parts: &[Polynomial], nvars: usize) -> Vector {
    let mut v = Vector::new();
    for (i, f) in parts.iter().enumerate() {
        for (m, c) in f.terms() {
            v.insert((i, m.exponents(nvars)), u64::from(*c));
        }
    }
    v
}

impl Oracle {
    pub fn new(p: u64, nvars: usize, twists: Vec<i64>) -> Self {
        Oracle {
            p,
            nvars,
            twists,
            gens: Vec::new(),
        }
    }

    fn degree_of(&self, v: &Vector) -> Option<i64> {
        let mut d = None;
        for (i, e) in v.keys() {
            let t = self.twists[*i] + e.iter().map(|&x| x as i64).sum::<i64>();
            match d {
                None => d = Some(t),
                Some(s) => assert_eq!(s, t, "inhomogeneous vector"),
            }
        }
        d
    }

    pub fn add(&mut self, v: Vector) {
        if let Some(d) = self.degree_of(&v) {
            self.gens.push((d, v));
        }
    }

    /// Adds a polynomial `f` as the vector `f e_i`.
    pub fn add_poly(&mut self, f: &Polynomial, i: usize) {
        let mut parts = vec![Polynomial::zero(); self.twists.len()];
        parts[i] = f.clone();
        self.add(vector_of(&parts, self.nvars));
    }

    fn basis(&self, t: i64) -> Vec<(usize, Exps)> {
        let mut out = Vec::new();
        for (i, &a) in self.twists.iter().enumerate() {
            for m in monomials(self.nvars, t - a) {
                out.push((i, m));
            }
        }
        out
    }

    fn rows(&self, t: i64, index: &BTreeMap<(usize, Exps), usize>) -> Vec<Vec<u64>> {
        let mut rows = Vec::new();
        for (d, g) in &self.gens {
            for m in monomials(self.nvars, t - d) {
                let mut row = vec![0u64; index.len()];
                for ((i, e), c) in g {
                    row[index[&(*i, add_exps(e, &m))]] = *c % self.p;
                }
                rows.push(row);
            }
        }
        rows
    }

    /// `dim_k (F/N)_t`.
    pub fn hilbert_function(&self, t: i64) -> usize {
        let basis = self.basis(t);
        let index: BTreeMap<(usize, Exps), usize> = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        basis.len() - rank(self.rows(t, &index), self.p)
    }

    /// `ℓ(F/N)` when finite; `None` if no vanishing degree is found by `limit`.
    pub fn length(&self, limit: i64) -> Option<u64> {
        let top = self.twists.iter().copied().max().unwrap_or(0);
        let low = self.twists.iter().copied().min().unwrap_or(0);
        let mut total = 0u64;
        for t in low..=limit {
            let h = self.hilbert_function(t) as u64;
            if h == 0 && t >= top {
                return Some(total);
            }
            total += h;
        }
        None
    }

    /// Whether the homogeneous vector lies in `N`.
    pub fn contains(&self, v: &Vector) -> bool {
        let Some(t) = self.degree_of(v) else {
            return true;
        };
        let basis = self.basis(t);
        let index: BTreeMap<(usize, Exps), usize> = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        let mut rows = self.rows(t, &index);
        let before = rank(rows.clone(), self.p);
        let mut row = vec![0u64; index.len()];
        for (k, c) in v {
            row[index[k]] = *c % self.p;
        }
        rows.push(row);
        rank(rows, self.p) == before
    }
}
