use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::hilbert_samuel::{coefficients, HilbertSamuel};
use crate::algebra::{FreeElement, FreeModule, Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::groebner::{intersect, quotient_length, SubmoduleBasis};
use crate::linalg::invert;
use crate::module::{colon, h0, ideal_power, GradedModule, ParameterSequence};

/// Largest offset `c` tried by the superficiality window.
pub const SUPERFICIAL_MAX_OFFSET: usize = 2;
/// Number of extra `n` checked past `c`.
pub const SUPERFICIAL_WINDOW: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Superficiality {
    Verified { offset: usize },
    Refuted { witness: String },
    Inconclusive,
}

impl Superficiality {
    pub fn is_verified(&self) -> bool {
        matches!(self, Superficiality::Verified { .. })
    }
}

fn ideal(gens: &[Polynomial], field: PrimeField) -> Result<SubmoduleBasis> {
    let elems = gens.iter().filter(|g| !g.is_zero()).map(|g| FreeElement::from_polynomial(g, 0)).collect();
    SubmoduleBasis::new(FreeModule::free(1), elems, field)
}

/// `ℓ(0 :_M a)`.
pub fn annihilator_length(m: &GradedModule, a: &Polynomial) -> Result<i128> {
    let c = colon(m.relations(), a)?;
    quotient_length(&c, m.relations(), m.nvars())
}

/// Windowed test that `a` is superficial for `M` with respect to `Q`.
pub fn is_superficial(a: &Polynomial, m: &GradedModule, q: &[Polynomial]) -> Result<Superficiality> {
    let field = *m.field();
    let alg = m.algebra();
    let ring_ideal = alg.ideal_generators();
    let mut in_q: Vec<Polynomial> = q.to_vec();
    in_q.extend_from_slice(ring_ideal);
    let af = FreeElement::from_polynomial(a, 0);
    if a.is_zero() || !ideal(&in_q, field)?.contains(&af) {
        return Err(Error::PreconditionViolation("the element is not in the ideal".into()));
    }
    let mut mq: Vec<Polynomial> = Vec::new();
    for v in alg.variables() {
        mq.extend(q.iter().map(|g| g.mul(&v, &field)));
    }
    mq.extend_from_slice(ring_ideal);
    if ideal(&mq, field)?.contains(&af) {
        return Err(Error::PreconditionViolation("the element lies in m Q".into()));
    }
    let top = SUPERFICIAL_MAX_OFFSET + SUPERFICIAL_WINDOW + 1;
    let mut powers = Vec::with_capacity(top + 1);
    for n in 0..=top {
        powers.push(m.ideal_submodule(&ideal_power(q, n as u32, &field)?)?);
    }
    let mut colons = BTreeMap::new();
    let mut verdict = Superficiality::Inconclusive;
    'offsets: for c in 0..=SUPERFICIAL_MAX_OFFSET {
        for n in c..=c + SUPERFICIAL_WINDOW {
            if let std::collections::btree_map::Entry::Vacant(e) = colons.entry(n) {
                e.insert(colon(&powers[n + 1], a)?);
            }
            let lhs = intersect(&colons[&n], &powers[c])?;
            if !powers[n].contains_module(&lhs) {
                continue 'offsets;
            }
        }
        verdict = Superficiality::Verified { offset: c };
        break;
    }
    if let Some(w) = refutation(a, m, q)? {
        return Ok(Superficiality::Refuted { witness: w });
    }
    Ok(verdict)
}

/// Necessary conditions: `a` is a parameter on `M`, `0 :_M a` has finite
/// length, and the Hilbert coefficients of `M/aM` are the expected ones.
fn refutation(a: &Polynomial, m: &GradedModule, q: &[Polynomial]) -> Result<Option<String>> {
    let Some(d) = m.dimension() else {
        return Ok(None);
    };
    if d == 0 {
        return Ok(None);
    }
    let bar = m.quotient_by_ideal(std::slice::from_ref(a))?;
    let db = bar.dimension().unwrap_or(0);
    if db + 1 != d {
        return Ok(Some(format!("dim M/aM = {db} but dim M = {d}")));
    }
    let ann = colon(m.relations(), a)?;
    let w = h0(m)?;
    let names = m.algebra().ring().names();
    if let Some(g) = ann.gb().into_iter().find(|g| !w.contains(g)) {
        return Ok(Some(format!(
            "{} is killed by the element but is not in H^0",
            g.to_string_with(names, m.field())
        )));
    }
    if d >= 2 {
        let e = coefficients(&HilbertSamuel::new(m, q)?, None)?;
        let eb = coefficients(&HilbertSamuel::new(&bar, q)?, None)?;
        for i in 0..=d - 2 {
            if e.get(i) != eb.get(i) {
                return Ok(Some(format!("e^{i}(M) = {} but e^{i}(M/aM) = {}", e.get(i), eb.get(i))));
            }
        }
        let l = quotient_length(&ann, m.relations(), m.nvars())?;
        let sign = if (d - 1) % 2 == 0 { 1 } else { -1 };
        let lhs = sign * (e.get(d - 1) - eb.get(d - 1));
        if lhs != -l {
            return Ok(Some(format!(
                "(-1)^(d-1) (e^(d-1)(M) - e^(d-1)(M/aM)) = {lhs} but the annihilator has length {l}"
            )));
        }
    }
    Ok(None)
}

/// The first `(i, j)` with `Q_{i-1}M : a_i a_j != Q_{i-1}M : a_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSequenceViolation {
    pub i: usize,
    pub j: usize,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSequenceCheck {
    pub holds: bool,
    pub violation: Option<DSequenceViolation>,
}

pub fn is_d_sequence(seq: &ParameterSequence, m: &GradedModule) -> Result<DSequenceCheck> {
    let field = *m.field();
    let a = seq.elements();
    let names = m.algebra().ring().names();
    for i in 1..=a.len() {
        let base = m.ideal_submodule(seq.partial(i - 1))?;
        for j in i..=a.len() {
            let big = colon(&base, &a[i - 1].mul(&a[j - 1], &field))?;
            let small = colon(&base, &a[j - 1])?;
            if let Some(g) = big.gb().into_iter().find(|g| !small.contains(g)) {
                return Ok(DSequenceCheck {
                    holds: false,
                    violation: Some(DSequenceViolation {
                        i,
                        j,
                        witness: g.to_string_with(names, &field),
                    }),
                });
            }
        }
    }
    Ok(DSequenceCheck {
        holds: true,
        violation: None,
    })
}

/// A generating set found by [`find_d_sequence_generators`] with the
/// mixing matrices tried, in order.
#[derive(Clone, Debug, Serialize)]
pub struct DSequenceSearch {
    #[serde(skip)]
    pub sequence: ParameterSequence,
    pub generators: Vec<String>,
    pub attempts: usize,
    pub transcript: Vec<Vec<Vec<u32>>>,
}

/// Random invertible matrix mixing only generators of equal degree.
fn mixing_matrix(degrees: &[Option<u32>], rng: &mut ChaCha8Rng, field: PrimeField) -> Vec<Vec<u32>> {
    let d = degrees.len();
    loop {
        let mut mat = vec![vec![0u32; d]; d];
        for (i, row) in mat.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                if degrees[i] == degrees[j] {
                    *x = rng.gen_range(0..field.characteristic());
                }
            }
        }
        if invert(field, &mat).is_some() {
            return mat;
        }
    }
}

fn combine(mat: &[Vec<u32>], gens: &[Polynomial], field: &PrimeField) -> Vec<Polynomial> {
    mat.iter()
        .map(|row| {
            row.iter().zip(gens).fold(Polynomial::zero(), |acc, (&c, g)| {
                acc.add(&g.scale(c, field), field).expect("equal degrees")
            })
        })
        .collect()
}

/// Seeded search for generators of `Q` forming a d-sequence on `M`. The
/// first attempt uses the given generators.
pub fn find_d_sequence_generators(
    q: &ParameterSequence,
    m: &GradedModule,
    budget: usize,
    seed: u64,
) -> Result<DSequenceSearch> {
    if m.dimension().is_none_or(|d| d == 0) {
        return Err(Error::PreconditionViolation("the search needs dim M >= 1".into()));
    }
    let field = *m.field();
    let gens = q.elements();
    let d = gens.len();
    let degrees: Vec<Option<u32>> = gens.iter().map(|g| g.degree()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut transcript = Vec::with_capacity(budget);
    let names = m.algebra().ring().names();
    for attempt in 0..budget {
        let mat = if attempt == 0 {
            (0..d).map(|i| (0..d).map(|j| u32::from(i == j)).collect()).collect()
        } else {
            mixing_matrix(&degrees, &mut rng, field)
        };
        let cand = combine(&mat, gens, &field);
        transcript.push(mat);
        let seq = ParameterSequence::new(cand, m)?;
        if is_d_sequence(&seq, m)?.holds {
            return Ok(DSequenceSearch {
                generators: seq.elements().iter().map(|g| g.to_string_with(names, &field)).collect(),
                sequence: seq,
                attempts: attempt + 1,
                transcript,
            });
        }
    }
    Err(Error::NotFoundWithinBudget { budget })
}

/// A seeded random combination of the generators of `Q` of lowest degree.
pub fn random_element(q: &[Polynomial], rng: &mut ChaCha8Rng, field: &PrimeField) -> Polynomial {
    let low = q.iter().filter_map(|g| g.degree()).min().unwrap_or(0);
    let mut acc = Polynomial::zero();
    for g in q.iter().filter(|g| g.degree() == Some(low)) {
        let c = rng.gen_range(1..field.characteristic());
        acc = acc.add(&g.scale(c, field), field).expect("equal degrees");
    }
    acc
}

/// Draws random elements until one is verified superficial.
pub fn find_superficial(
    m: &GradedModule,
    q: &[Polynomial],
    rng: &mut ChaCha8Rng,
    tries: usize,
) -> Result<Option<Polynomial>> {
    let field = *m.field();
    for _ in 0..tries {
        let a = random_element(q, rng, &field);
        if a.is_zero() {
            continue;
        }
        if is_superficial(&a, m, q)?.is_verified() {
            return Ok(Some(a));
        }
    }
    Ok(None)
}
