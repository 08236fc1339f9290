use serde::Serialize;

use crate::algebra::{binomial, Monomial, ModuleOrder, Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::groebner::hilbert::{bigraded_numerator, Bigraded, Laurent};
use crate::linalg::{invert, Echelon};
use crate::module::{apply_linear_change, ideal_power, GradedModule};

/// `ℓ(M/Q^{n+1}M)` for `n = 0..values.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthTable {
    pub values: Vec<i128>,
}

impl LengthTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `e^0 .. e^s` and the least `n0` from which the table is polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertCoefficients {
    pub e: Vec<i128>,
    pub postulation: usize,
}

impl HilbertCoefficients {
    pub fn dimension(&self) -> usize {
        self.e.len() - 1
    }

    pub fn get(&self, i: usize) -> i128 {
        self.e.get(i).copied().unwrap_or(0)
    }

    /// `sum (-1)^i e^i C(n+s-i, s-i)`.
    pub fn polynomial_at(&self, n: i64) -> i128 {
        let s = self.dimension() as i64;
        self.e
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let i = i as i64;
                let sign = if i % 2 == 0 { 1 } else { -1 };
                sign * e * binomial(n + s - i, s - i)
            })
            .sum()
    }
}

/// Evaluates `n -> ℓ(M/Q^{n+1}M)`.
#[derive(Clone, Debug)]
pub struct HilbertSamuel {
    module: GradedModule,
    gens: Vec<Polynomial>,
    /// `ℓ(M/Q^{n+1}M) = sum_i c_i C(n - i + k, k)` when `Q` is linear.
    closed: Option<(Laurent, usize)>,
}

/// Coefficient rows of linear forms, `None` if some generator is not linear.
fn linear_rows(gens: &[Polynomial], n: usize) -> Option<Vec<Vec<u32>>> {
    gens.iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            if g.degree() != Some(1) {
                return None;
            }
            let mut row = vec![0u32; n];
            for &(m, c) in g.terms() {
                row[m.last_var()?] = c;
            }
            Some(row)
        })
        .collect()
}

/// Linear change sending a maximal independent subset of `rows` to the last
/// variables; returns the images of the old variables and the count.
fn straighten(rows: &[Vec<u32>], n: usize, field: PrimeField) -> (Vec<Polynomial>, usize) {
    let mut ech = Echelon::new(field, n);
    let mut basis = Vec::new();
    for r in rows {
        if ech.insert(r.clone()) {
            basis.push(r.clone());
        }
    }
    let k = basis.len();
    let mut full = Echelon::new(field, n);
    for r in &basis {
        full.insert(r.clone());
    }
    let mut mat = Vec::with_capacity(n);
    for c in 0..n {
        if mat.len() + k == n {
            break;
        }
        let mut e = vec![0u32; n];
        e[c] = 1;
        if full.insert(e.clone()) {
            mat.push(e);
        }
    }
    mat.extend(basis);
    let inv = invert(field, &mat).expect("completed basis");
    let images = (0..n)
        .map(|j| {
            Polynomial::from_terms((0..n).map(|l| (Monomial::var(l), inv[j][l])), &field)
                .expect("linear form")
        })
        .collect();
    (images, k)
}

impl HilbertSamuel {
    pub fn new(m: &GradedModule, gens: &[Polynomial]) -> Result<Self> {
        let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        if gens.iter().any(|g| g.degree() == Some(0)) {
            return Ok(HilbertSamuel {
                module: m.clone(),
                gens,
                closed: Some((Laurent::zero(), 0)),
            });
        }
        let q = m.quotient_by_ideal(&gens)?;
        if q.dimension().is_some_and(|d| d > 0) {
            return Err(Error::InfiniteLength(
                "the ideal is not primary to the maximal ideal on the module".into(),
            ));
        }
        let n = m.nvars();
        let closed = match linear_rows(&gens, n) {
            Some(rows) if !m.is_zero() => Some(Self::tangent_cone(m, &rows)?),
            Some(_) => Some((Laurent::zero(), 0)),
            None => None,
        };
        Ok(HilbertSamuel {
            module: m.clone(),
            gens,
            closed,
        })
    }

    /// Counts standard monomials of the associated graded module under an
    /// order that prefers low degree in the ideal's variables.
    fn tangent_cone(m: &GradedModule, rows: &[Vec<u32>]) -> Result<(Laurent, usize)> {
        let n = m.nvars();
        let (images, k) = straighten(rows, n, *m.field());
        let moved = apply_linear_change(m, &images)?;
        let ymask = (n - k..n).fold(0u32, |acc, v| acc | 1 << v);
        let basis = moved.relations().reordered(ModuleOrder::weighted(ymask));
        let mut total = Bigraded::default();
        for leads in basis.leads_by_component() {
            total.add_scaled(&bigraded_numerator(&leads, n, ymask), 1, (0, 0));
        }
        let p = total.eliminate_t(n - k).ok_or_else(|| {
            Error::InfiniteLength("the ideal is not primary to the maximal ideal on the module".into())
        })?;
        Ok((p, k))
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// `ℓ(M/Q^{n+1}M)`.
    pub fn length(&self, n: usize) -> Result<i128> {
        match &self.closed {
            Some((p, k)) => Ok(closed_length(p, *k, n)),
            None => self.direct_length(n),
        }
    }

    /// The same length through `Q^{n+1}` and a quotient.
    pub fn direct_length(&self, n: usize) -> Result<i128> {
        let pow = ideal_power(&self.gens, n as u32 + 1, self.module.field())?;
        self.module.quotient_by_ideal(&pow)?.total_length()
    }

    pub fn table(&self, len: usize) -> Result<LengthTable> {
        let values = (0..len).map(|n| self.length(n)).collect::<Result<Vec<_>>>()?;
        Ok(LengthTable { values })
    }
}

fn closed_length(p: &Laurent, k: usize, n: usize) -> i128 {
    (p.low..=p.high())
        .map(|i| p.coeff(i) * binomial(n as i64 - i as i64 + k as i64, k as i64))
        .sum()
}

pub fn hilbert_samuel_table(m: &GradedModule, gens: &[Polynomial], len: usize) -> Result<LengthTable> {
    HilbertSamuel::new(m, gens)?.table(len)
}

/// Fits `sum (-1)^i e^i C(n+s-i, s-i)` through `values[o..=o+s]`.
fn fit_window(values: &[i128], o: usize, s: usize) -> Vec<i128> {
    let mut rest: Vec<i128> = values[o..=o + s].to_vec();
    let mut e = Vec::with_capacity(s + 1);
    for i in 0..=s {
        let m = s - i;
        // m-th backward difference at the window end is (-1)^i e^i
        let mut diff = rest.clone();
        for _ in 0..m {
            diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        }
        let lead = *diff.last().unwrap();
        let ei = if i % 2 == 0 { lead } else { -lead };
        e.push(ei);
        for (t, r) in rest.iter_mut().enumerate() {
            let n = (o + t) as i64;
            *r -= lead * binomial(n + m as i64, m as i64);
        }
    }
    e
}

/// Extracts the coefficients from a table alone; fails unless the two
/// trailing windows agree and reproduce the trailing `s + 2` entries.
pub fn hilbert_coefficients(table: &LengthTable, s: usize) -> Result<HilbertCoefficients> {
    let v = &table.values;
    if v.len() < s + 3 {
        return Err(Error::NoStabilization { cap: v.len() });
    }
    let o = v.len() - s - 2;
    let first = fit_window(v, o, s);
    let second = fit_window(v, o + 1, s);
    if first != second {
        return Err(Error::NoStabilization { cap: v.len() });
    }
    let c = HilbertCoefficients {
        e: first,
        postulation: 0,
    };
    let mut n0 = v.len();
    while n0 > 0 && c.polynomial_at(n0 as i64 - 1) == v[n0 - 1] {
        n0 -= 1;
    }
    if n0 > o {
        return Err(Error::NoStabilization { cap: v.len() });
    }
    Ok(HilbertCoefficients { postulation: n0, ..c })
}

/// Largest table length tried before giving up.
pub const TABLE_CAP: usize = 512;

/// Coefficients of `M` with respect to `Q`, doubling the table until the
/// windows stabilize. `s` defaults to `dim M`.
pub fn coefficients(hs: &HilbertSamuel, s: Option<usize>) -> Result<HilbertCoefficients> {
    let Some(dim) = hs.module().dimension() else {
        return Ok(HilbertCoefficients {
            e: vec![0],
            postulation: 0,
        });
    };
    let s = s.unwrap_or(dim);
    let mut len = 2 * s + 6;
    loop {
        let table = hs.table(len)?;
        match hilbert_coefficients(&table, s) {
            Ok(c) if c.postulation + s + 2 < len => return Ok(c),
            Ok(_) | Err(Error::NoStabilization { .. }) if len < TABLE_CAP => len = (2 * len).min(TABLE_CAP),
            Ok(_) => return Err(Error::NoStabilization { cap: TABLE_CAP }),
            Err(e) => return Err(e),
        }
    }
}
