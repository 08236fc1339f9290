//! Hilbert series numerators of monomial modules.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use crate::algebra::{binomial, Monomial};
use crate::error::{Error, Result};

/// A Laurent polynomial `sum_k c_k t^(low + k)` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    pub low: i32,
    pub coeffs: Vec<i128>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent {
            low: 0,
            coeffs: vec![1],
        }
    }

    pub fn coeff(&self, k: i32) -> i128 {
        let i = k - self.low;
        if i < 0 {
            0
        } else {
            self.coeffs.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            return Laurent::zero();
        }
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        self
    }

    pub fn add_scaled(&self, other: &Laurent, c: i128, shift: i32) -> Laurent {
        if other.is_zero() || c == 0 {
            return self.clone();
        }
        if self.is_zero() {
            return Laurent {
                low: other.low + shift,
                coeffs: other.coeffs.iter().map(|&x| x * c).collect(),
            }
            .normalize();
        }
        let low = self.low.min(other.low + shift);
        let high = self.high().max(other.high() + shift);
        let coeffs = (low..=high)
            .map(|k| self.coeff(k) + c * other.coeff(k - shift))
            .collect();
        Laurent { low, coeffs }.normalize()
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        self.add_scaled(other, 1, 0)
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add_scaled(other, -1, 0)
    }

    pub fn shift(&self, by: i32) -> Laurent {
        Laurent::zero().add_scaled(self, 1, by)
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent {
            low: self.low + other.low,
            coeffs,
        }
        .normalize()
    }

    pub fn eval_one(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    /// Exact division by `1 - t`, if possible.
    pub fn div_one_minus_t(&self) -> Option<Laurent> {
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        if self.eval_one() != 0 {
            return None;
        }
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut run = 0i128;
        for &c in &self.coeffs[..self.coeffs.len() - 1] {
            run += c;
            q.push(run);
        }
        Some(Laurent { low: self.low, coeffs: q }.normalize())
    }

    /// Largest `k <= max` such that `(1-t)^k` divides, and the quotient.
    pub fn strip_one_minus_t(&self, max: usize) -> (usize, Laurent) {
        let mut cur = self.clone();
        for k in 0..max {
            match cur.div_one_minus_t() {
                Some(q) if !cur.is_zero() => cur = q,
                _ => return (k, cur),
            }
        }
        (max, cur)
    }

    /// Coefficient of `t^deg` in `self / (1-t)^n`.
    pub fn series_coeff(&self, n: usize, deg: i32) -> i128 {
        if n == 0 {
            return self.coeff(deg);
        }
        let mut sum = 0i128;
        for (i, &c) in self.coeffs.iter().enumerate() {
            let k = self.low + i as i32;
            if k > deg {
                break;
            }
            sum += c * binomial((deg - k) as i64 + n as i64 - 1, n as i64 - 1);
        }
        sum
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// A polynomial in `t` (unmasked variables) and `u` (masked variables).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Bigraded {
    pub terms: BTreeMap<(u32, u32), i128>,
}

impl Bigraded {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, 0), 1);
        Bigraded { terms }
    }

    pub(crate) fn add_scaled(&mut self, other: &Bigraded, c: i128, shift: (u32, u32)) {
        for (&(a, b), &v) in &other.terms {
            let e = self.terms.entry((a + shift.0, b + shift.1)).or_insert(0);
            *e += c * v;
            if *e == 0 {
                self.terms.remove(&(a + shift.0, b + shift.1));
            }
        }
    }

    fn mul_binomial(&mut self, shift: (u32, u32)) {
        // self *= 1 - t^a u^b
        let copy = self.clone();
        self.add_scaled(&copy, -1, shift);
    }

    /// Substitutes `u = t`.
    pub fn collapse(&self) -> Laurent {
        let high = self.terms.keys().map(|&(a, b)| a + b).max();
        let Some(high) = high else {
            return Laurent::zero();
        };
        let mut coeffs = vec![0i128; high as usize + 1];
        for (&(a, b), &v) in &self.terms {
            coeffs[(a + b) as usize] += v;
        }
        Laurent { low: 0, coeffs }.normalize()
    }

    /// Divides by `(1-t)^k` exactly and sets `t = 1`, giving a polynomial
    /// in `u`. `None` if the division is not exact.
    pub fn eliminate_t(&self, k: usize) -> Option<Laurent> {
        let hu = self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0) as usize;
        let mut out = vec![0i128; hu + 1];
        for (b, slot) in out.iter_mut().enumerate() {
            let ht = self.terms.keys().filter(|&&(_, bb)| bb as usize == b).map(|&(a, _)| a).max();
            let Some(ht) = ht else { continue };
            let mut col = Laurent {
                low: 0,
                coeffs: (0..=ht).map(|a| self.terms.get(&(a, b as u32)).copied().unwrap_or(0)).collect(),
            }
            .normalize();
            for _ in 0..k {
                col = col.div_one_minus_t()?;
            }
            *slot = col.eval_one();
        }
        Some(Laurent { low: 0, coeffs: out }.normalize())
    }
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^n` of `S/J`.
pub fn ideal_numerator(gens: &[Monomial], nvars: usize) -> Laurent {
    bigraded_numerator(gens, nvars, 0).collapse()
}

/// Numerator of the bigraded Hilbert series of `S/J`, where the
/// variables in `ymask` carry the second grading.
pub fn bigraded_numerator(gens: &[Monomial], nvars: usize, ymask: u32) -> Bigraded {
    numerator_rec(minimalize(gens.to_vec()), nvars, ymask)
}

fn bidegree(m: &Monomial, ymask: u32) -> (u32, u32) {
    let y = m.masked_degree(ymask);
    (m.degree() - y, y)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize, ymask: u32) -> Bigraded {
    if gens.is_empty() {
        return Bigraded::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return Bigraded::default();
    }
    let mut counts = [0usize; crate::algebra::MAX_VARS];
    for g in &gens {
        for (v, c) in counts.iter_mut().enumerate().take(nvars) {
            if g.exponent(v) > 0 {
                *c += 1;
            }
        }
    }
    let (v, &best) = counts.iter().enumerate().max_by_key(|&(i, c)| (*c, Reverse(i))).unwrap();
    if best <= 1 {
        // pairwise coprime generators form a regular sequence
        let mut acc = Bigraded::one();
        for g in &gens {
            acc.mul_binomial(bidegree(g, ymask));
        }
        return acc;
    }
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exponent(v)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let mut e = exps[exps.len() / 2];
    if let Some(pure) = gens.iter().filter(|g| g.degree() == g.exponent(v)).map(|g| g.degree()).min() {
        e = e.min(pure - 1);
    }
    let e = e.max(1);
    let mut pe = vec![0u32; nvars];
    pe[v] = e;
    let p = Monomial::from_exponents(&pe).unwrap();

    let mut plus = gens.clone();
    plus.push(p);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex = g.exponents(nvars);
            ex[v] = ex[v].saturating_sub(e);
            Monomial::from_exponents(&ex).unwrap()
        })
        .collect();
    let mut a = numerator_rec(minimalize(plus), nvars, ymask);
    let b = numerator_rec(minimalize(colon), nvars, ymask);
    a.add_scaled(&b, 1, bidegree(&p, ymask));
    a
}

/// Numerator of `F / L` where `L` is the monomial module whose component
/// `c` is generated by `leads[c]` and `F` has basis degrees `twists`.
pub fn module_numerator(leads: &[Vec<Monomial>], twists: &[i32], nvars: usize) -> Laurent {
    let mut acc = Laurent::zero();
    for (c, gens) in leads.iter().enumerate() {
        acc = acc.add_scaled(&ideal_numerator(gens, nvars), 1, twists[c]);
    }
    acc
}

/// Krull dimension of `S/J` from independent sets of variables, `None`
/// when `J` is the unit ideal.
pub fn ideal_dimension(gens: &[Monomial], nvars: usize) -> Option<usize> {
    let gens = minimalize(gens.to_vec());
    if gens.iter().any(|g| g.is_one()) {
        return None;
    }
    let mut supports: Vec<u32> = gens.iter().map(|g| g.support_mask()).collect();
    supports.sort_unstable();
    supports.dedup();
    let supports: Vec<u32> = supports
        .iter()
        .copied()
        .filter(|&s| !supports.iter().any(|&t| t != s && t & s == t))
        .collect();
    // smallest set of variables meeting every support
    fn cover(supports: &[u32], chosen: u32, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        match supports.iter().find(|&&s| s & chosen == 0) {
            None => *best = size,
            Some(&s) => {
                for v in 0..32 {
                    if s & (1 << v) != 0 {
                        cover(supports, chosen | (1 << v), size + 1, best);
                    }
                }
            }
        }
    }
    let mut best = nvars;
    cover(&supports, 0, 0, &mut best);
    Some(nvars - best)
}

/// Length of a module with numerator `num` over `n` variables.
pub fn length_from_numerator(num: &Laurent, nvars: usize) -> Result<i128> {
    let mut cur = num.clone();
    for _ in 0..nvars {
        cur = cur
            .div_one_minus_t()
            .ok_or_else(|| Error::InfiniteLength("module has positive dimension".into()))?;
    }
    Ok(cur.eval_one())
}
