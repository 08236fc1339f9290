//! Dense linear algebra over the prime field.

use crate::algebra::PrimeField;

/// Row echelon form built incrementally; rows are kept sorted by pivot
/// column and normalized to a leading 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Reduces `v` against the stored rows in place.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = &self.field;
        for (p, row) in &self.rows {
            let c = v[*p];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &r) in v[*p..].iter_mut().zip(&row[*p..]) {
                if r != 0 {
                    *x = f.add(*x, f.mul(neg, r));
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[p]).expect("nonzero pivot");
        for x in v[p..].iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }
}

/// Rank of a dense matrix given by rows.
pub fn rank(field: PrimeField, ncols: usize, rows: &[Vec<u32>]) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}

/// Inverse of a square matrix, `None` if singular.
pub fn invert(field: PrimeField, m: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut a: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| u32::from(i == j)));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        let inv = field.inv(a[col][col]).ok()?;
        for x in a[col].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let c = field.neg(a[r][col]);
                let pivot_row = a[col].clone();
                for (x, &p) in a[r].iter_mut().zip(&pivot_row) {
                    *x = field.add(*x, field.mul(c, p));
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(field: PrimeField, a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(0, |acc, (&x, br)| field.add(acc, field.mul(x, br[j])))
                })
                .collect()
        })
        .collect()
}
