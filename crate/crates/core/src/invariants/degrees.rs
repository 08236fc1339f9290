use serde::Serialize;

use super::hilbert_samuel::{coefficients, HilbertCoefficients, HilbertSamuel};
use crate::algebra::{binomial, Polynomial};
use crate::error::{Error, Result};
use crate::homological::{dual_sections, koszul_homology_lengths};
use crate::module::{GradedModule, ParameterSequence};

/// Hilbert coefficients of `M` with respect to the ideal generated by `gens`.
pub fn hilbert_coefficients_of(m: &GradedModule, gens: &[Polynomial]) -> Result<HilbertCoefficients> {
    coefficients(&HilbertSamuel::new(m, gens)?, None)
}

pub fn multiplicity(m: &GradedModule, gens: &[Polynomial]) -> Result<i128> {
    Ok(hilbert_coefficients_of(m, gens)?.get(0))
}

/// `g_s(Q; M) = ℓ(M/QM) - e^0 + e^1`.
pub fn sectional_genus(m: &GradedModule, q: &ParameterSequence) -> Result<i128> {
    if m.dimension().is_none_or(|d| d == 0) {
        return Err(Error::PreconditionViolation("the sectional genus needs dim M >= 1".into()));
    }
    let hs = HilbertSamuel::new(m, q.elements())?;
    let c = coefficients(&hs, None)?;
    Ok(hs.length(0)? - c.get(0) + c.get(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Chi1 {
    pub koszul: i128,
    pub serre: i128,
}

/// `χ_1(Q; M)` from Koszul homology and from `ℓ(M/QM) - e^0`.
pub fn euler_chi1(m: &GradedModule, q: &ParameterSequence) -> Result<Chi1> {
    let h = koszul_homology_lengths(q, m)?;
    let koszul = h
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &l)| if i % 2 == 1 { l } else { -l })
        .sum();
    let hs = HilbertSamuel::new(m, q.elements())?;
    let serre = hs.length(0)? - coefficients(&hs, None)?.get(0);
    if koszul != serre {
        return Err(Error::CrossCheckFailure(format!(
            "first Euler characteristic is {koszul} from Koszul homology but {serre} from lengths"
        )));
    }
    Ok(Chi1 { koszul, serre })
}

/// Homological degree with respect to the ideal generated by `gens`.
pub fn hdeg(m: &GradedModule, gens: &[Polynomial]) -> Result<i128> {
    match m.dimension() {
        None => Ok(0),
        Some(0) => m.total_length(),
        Some(s) => {
            let mut total = multiplicity(m, gens)?;
            for d in dual_sections(m)? {
                let c = binomial(s as i64 - 1, d.index as i64);
                if c != 0 && !d.module.is_zero() {
                    total += c * hdeg(&d.module, gens)?;
                }
            }
            Ok(total)
        }
    }
}

/// `T^i(M) = sum_{j=1}^{s-i} C(s-i-1, j-1) hdeg(M_j)`.
pub fn torsion(m: &GradedModule, gens: &[Polynomial], i: usize) -> Result<i128> {
    let s = m.dimension().unwrap_or(0);
    if s < 2 || i < 1 || i > s - 1 {
        return Err(Error::IndexOutOfRange {
            index: i,
            range: format!("1..={}", s.saturating_sub(1)),
        });
    }
    let duals = dual_sections(m)?;
    let mut total = 0;
    for (j, dual) in duals.iter().enumerate().take(s - i + 1).skip(1) {
        let c = binomial((s - i) as i64 - 1, j as i64 - 1);
        if c != 0 && !dual.module.is_zero() {
            total += c * hdeg(&dual.module, gens)?;
        }
    }
    Ok(total)
}

/// `T^1 .. T^{s-1}`, empty when `s < 2`.
pub fn torsions(m: &GradedModule, gens: &[Polynomial]) -> Result<Vec<i128>> {
    let s = m.dimension().unwrap_or(0);
    (1..s).map(|i| torsion(m, gens, i)).collect()
}

/// `sum_{j<s} C(s-1, j) ℓ(M_j)` for generalized Cohen-Macaulay `M`.
pub fn sv_invariant(m: &GradedModule) -> Result<i128> {
    let s = m.dimension().unwrap_or(0);
    let mut total = 0;
    for d in dual_sections(m)? {
        if !d.finite_length {
            return Err(Error::NotGeneralizedCM(format!(
                "dual section {} has dimension {}",
                d.index,
                d.module.dimension().unwrap_or(0)
            )));
        }
        total += binomial(s as i64 - 1, d.index as i64) * d.module.total_length()?;
    }
    Ok(total)
}
