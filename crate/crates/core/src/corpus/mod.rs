//! Constructors for the example families and seeded random instances.

mod properties;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{FreeElement, FreeModule, Monomial, PolyRing, Polynomial, PrimeField, DEFAULT_PRIME};
use crate::error::{Error, Result};
use crate::groebner::SubmoduleBasis;
use crate::homological::depth;
use crate::invariants::{multiplicity, HilbertSamuel};
use crate::module::{idealization, GradedAlgebra, GradedModule, ParameterSequence};

pub use properties::{evaluate, PropertyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Example44,
    Example42,
    Idealization,
    Random,
}

/// What an instance is and the values known for it in advance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    pub family: Family,
    pub params: BTreeMap<String, u64>,
    pub expected: BTreeMap<String, i64>,
}

impl InstanceDescriptor {
    fn new(family: Family, params: &[(&str, u64)]) -> Self {
        InstanceDescriptor {
            family,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            expected: BTreeMap::new(),
        }
    }

    fn expect(mut self, values: &[(&str, i64)]) -> Self {
        self.expected.extend(values.iter().map(|&(k, v)| (k.to_string(), v)));
        self
    }

    /// A stable key such as `example44-l2-m1-p32003`.
    pub fn key(&self) -> String {
        let tag = match self.family {
            Family::Example44 => "example44",
            Family::Example42 => "example42",
            Family::Idealization => "idealization",
            Family::Random => "random",
        };
        let mut s = tag.to_string();
        for (k, v) in &self.params {
            s.push_str(&format!("-{k}{v}"));
        }
        s
    }
}

/// A module with a parameter ideal.
#[derive(Clone, Debug)]
pub struct Instance {
    pub descriptor: InstanceDescriptor,
    pub module: GradedModule,
    pub parameters: ParameterSequence,
}

fn field(p: u32) -> Result<PrimeField> {
    PrimeField::new(p)
}

fn ideal(gens: &[Polynomial], f: PrimeField) -> Result<SubmoduleBasis> {
    let e = gens.iter().map(|g| FreeElement::from_polynomial(g, 0)).collect();
    SubmoduleBasis::new(FreeModule::free(1), e, f)
}

/// `S/(X) ∩ (Y)` over `S = k[x_1..x_l, y_1..y_l, z_1..z_m]` with
/// `Q = (x_i - y_i, z_j)`.
pub fn build_example44(l: usize, m: usize, p: u32) -> Result<(Arc<GradedAlgebra>, ParameterSequence)> {
    if l < 2 || m < 1 {
        return Err(Error::InvalidInput(format!("need l >= 2 and m >= 1, got l = {l}, m = {m}")));
    }
    let f = field(p)?;
    let mut names: Vec<String> = (1..=l).map(|i| format!("x{i}")).collect();
    names.extend((1..=l).map(|i| format!("y{i}")));
    names.extend((1..=m).map(|j| format!("z{j}")));
    let ring = PolyRing::new(names, f)?;
    let mut gens = Vec::with_capacity(l * l);
    for i in 0..l {
        for j in 0..l {
            gens.push(Polynomial::var(i).mul(&Polynomial::var(l + j), &f));
        }
    }
    let a = GradedAlgebra::new(ring, gens)?;
    let mut q: Vec<Polynomial> = (0..l)
        .map(|i| Polynomial::var(i).sub(&Polynomial::var(l + i), &f))
        .collect::<Result<_>>()?;
    q.extend((0..m).map(|j| Polynomial::var(2 * l + j)));
    // m^2 = Qm, so Q is a reduction of m
    let vars = a.variables();
    let mut m2 = a.ideal_generators().to_vec();
    let mut qm = a.ideal_generators().to_vec();
    for v in &vars {
        m2.extend(vars.iter().map(|w| v.mul(w, &f)));
        qm.extend(q.iter().map(|g| v.mul(g, &f)));
    }
    if !ideal(&m2, f)?.same_span(&ideal(&qm, f)?) {
        return Err(Error::CrossCheckFailure("Q is not a reduction of the maximal ideal".into()));
    }
    let seq = ParameterSequence::parameters(q, &a.as_module())?;
    Ok((a, seq))
}

/// `C = coker ∂` over `R = k[x_1..x_d]/(x_1^d)` with `∂_ii = x_1` and
/// `∂_ij = x_{j-i+1}` above the diagonal; `I = (x_1..x_d)`.
pub fn build_example42(d: usize, p: u32) -> Result<(Arc<GradedAlgebra>, GradedModule, Vec<Polynomial>)> {
    if d < 1 {
        return Err(Error::InvalidInput("need d >= 1".into()));
    }
    let f = field(p)?;
    let ring = PolyRing::new((1..=d).map(|i| format!("x{i}")).collect(), f)?;
    let x1d = Polynomial::var(0).pow(d as u32, &f);
    let r = GradedAlgebra::new(ring, vec![x1d])?;
    let rows: Vec<Vec<Polynomial>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => Polynomial::var(0),
                    std::cmp::Ordering::Less => Polynomial::var(j - i),
                    std::cmp::Ordering::Greater => Polynomial::zero(),
                })
                .collect()
        })
        .collect();
    let c = GradedModule::cokernel(r.clone(), vec![0; d], &rows)?;
    let i = r.variables();
    Ok((r, c, i))
}

/// `R ⋉ M` for `R = k[x, y]`, `M = R/(x)`, with `Q = (x, y)`.
pub fn build_prop41_instance(p: u32) -> Result<(Arc<GradedAlgebra>, ParameterSequence)> {
    let f = field(p)?;
    let r = GradedAlgebra::polynomial_ring(PolyRing::new(vec!["x".into(), "y".into()], f)?);
    let m = r.as_module().quotient_by_ideal(&[Polynomial::var(0)])?;
    let a = idealization(&m, None)?;
    let q = ParameterSequence::parameters(vec![Polynomial::var(0), Polynomial::var(1)], &a.as_module())?;
    Ok((a, q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UlrichReport {
    pub maximal_cohen_macaulay: bool,
    pub multiplicity_equals_length: bool,
    pub free_modulo_ideal: bool,
    pub depth: usize,
    pub ring_dimension: usize,
    pub multiplicity: i128,
    pub length: i128,
    pub rank: usize,
    pub residue_length: i128,
}

impl UlrichReport {
    pub fn holds(&self) -> bool {
        self.maximal_cohen_macaulay && self.multiplicity_equals_length && self.free_modulo_ideal
    }
}

/// Checks that `N` is maximal Cohen-Macaulay, `e^0_I(N) = ℓ(N/IN)` and
/// `N/IN` is free over `R/I`.
pub fn ulrich_check(n: &GradedModule, i: &[Polynomial]) -> Result<UlrichReport> {
    let ring_dimension = n.algebra().dimension().unwrap_or(0);
    let depth = depth(n)?;
    let mult = multiplicity(n, i)?;
    let length = HilbertSamuel::new(n, i)?.length(0)?;
    let rank = crate::module::minimal_presentation(n)?.ambient().rank();
    let residue_length = n.algebra().as_module().quotient_by_ideal(i)?.total_length()?;
    Ok(UlrichReport {
        maximal_cohen_macaulay: depth == ring_dimension && n.dimension() == Some(ring_dimension),
        multiplicity_equals_length: mult == length,
        free_modulo_ideal: rank as i128 * residue_length == length,
        depth,
        ring_dimension,
        multiplicity: mult,
        length,
        rank,
        residue_length,
    })
}

/// Attempts allowed before [`random_instance`] gives up.
pub const RANDOM_ATTEMPTS: usize = 64;

/// A seeded monomial quotient with a random linear parameter ideal.
pub fn random_instance(seed: u64, max_vars: usize, max_deg: u32) -> Result<Instance> {
    let max_vars = max_vars.clamp(1, 4);
    let max_deg = max_deg.clamp(1, 3);
    let f = field(DEFAULT_PRIME)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let n = rng.gen_range(1..=max_vars);
        let ngens = rng.gen_range(1..=n + 1);
        let mut gens = Vec::with_capacity(ngens);
        for _ in 0..ngens {
            let deg = rng.gen_range(max_deg.min(2)..=max_deg);
            let mut e = vec![0u32; n];
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            gens.push(Polynomial::monomial(Monomial::from_exponents(&e)?, 1));
        }
        let a = GradedAlgebra::new(PolyRing::standard(n), gens)?;
        let m = a.as_module();
        let Some(d) = m.dimension() else { continue };
        if d == 0 {
            continue;
        }
        let q: Vec<Polynomial> = (0..d)
            .map(|_| {
                let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(0..f.characteristic()) as i64).collect();
                a.ring().linear_form(&coeffs)
            })
            .collect();
        if q.iter().any(|g| g.is_zero()) {
            continue;
        }
        if let Ok(seq) = ParameterSequence::parameters(q, &m) {
            let descriptor = InstanceDescriptor::new(
                Family::Random,
                &[("seed", seed), ("vars", max_vars as u64), ("deg", max_deg as u64)],
            );
            return Ok(Instance {
                descriptor,
                module: m,
                parameters: seq,
            });
        }
    }
    Err(Error::GenerationFailure {
        attempts: RANDOM_ATTEMPTS,
    })
}

pub fn example44_instance(l: usize, m: usize, p: u32) -> Result<Instance> {
    let (a, q) = build_example44(l, m, p)?;
    let binom = |n: usize, k: usize| crate::algebra::binomial(n as i64, k as i64) as i64;
    let (li, mi) = (l as i64, m as i64);
    let descriptor = InstanceDescriptor::new(Family::Example44, &[("l", l as u64), ("m", m as u64), ("p", p as u64)])
        .expect(&[
            ("dimension", li + mi),
            ("depth", mi + 1),
            ("length", li + 1),
            ("e0", 2),
            ("e1", -1),
            ("chi1", li - 1),
            ("sectional_genus", li - 2),
            ("hdeg", 2 + binom(l + m - 1, m + 1)),
            ("t1", binom(l + m - 2, m)),
        ]);
    Ok(Instance {
        descriptor,
        module: a.as_module(),
        parameters: q,
    })
}

pub fn prop41_instance(p: u32) -> Result<Instance> {
    let (a, q) = build_prop41_instance(p)?;
    let descriptor = InstanceDescriptor::new(Family::Idealization, &[("p", p as u64)]).expect(&[
        ("dimension", 2),
        ("depth", 1),
        ("sectional_genus", 0),
        ("e0", 1),
        ("e1", -1),
    ]);
    Ok(Instance {
        descriptor,
        module: a.as_module(),
        parameters: q,
    })
}

/// `C` of the Ulrich family with a system of parameters of `R/x_1^d`.
pub fn example42_instance(d: usize, p: u32) -> Result<Instance> {
    let (_, c, _) = build_example42(d, p)?;
    let q: Vec<Polynomial> = (1..d).map(Polynomial::var).collect();
    let parameters = if d == 1 {
        ParameterSequence::unchecked(Vec::new())
    } else {
        ParameterSequence::parameters(q, &c)?
    };
    let descriptor = InstanceDescriptor::new(Family::Example42, &[("d", d as u64), ("p", p as u64)])
        .expect(&[("dimension", d as i64 - 1), ("depth", d as i64 - 1)]);
    Ok(Instance {
        descriptor,
        module: c,
        parameters,
    })
}

/// The fixed corpus: the example families in their fast range, the
/// idealization and `randoms` seeded random instances.
pub fn standard_corpus(randoms: u64) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (l, m) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
        out.push(example44_instance(l, m, DEFAULT_PRIME)?);
    }
    for d in 1..=3 {
        out.push(example42_instance(d, DEFAULT_PRIME)?);
    }
    out.push(prop41_instance(DEFAULT_PRIME)?);
    for seed in 0..randoms {
        out.push(random_instance(seed, 4, 3)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
