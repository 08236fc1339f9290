use serde::Serialize;

use super::Instance;
use crate::error::{Error, Result};
use crate::groebner::intersect;
use crate::homological::{depth, dual_section};
use crate::invariants::{
    check_prop38, check_theorem34, hdeg, inequality_suite, is_d_sequence, is_superficial, Check, Invariants,
};
use crate::module::{direct_sum, h0, h0_length, GradedModule, ParameterSequence};

/// Outcome of the property suite on one instance.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub instance: String,
    pub checks: Vec<Check>,
    pub invariants: Option<Invariants>,
    pub d_sequence: Option<Vec<String>>,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

fn record(checks: &mut Vec<Check>, name: &str, r: Result<Check>) {
    match r {
        Ok(c) => checks.push(c),
        Err(e) => checks.push(Check::new(name, false, format!("error: {e}"))),
    }
}

fn duals_and_depth(m: &GradedModule) -> Result<Check> {
    let n = m.nvars();
    let mut first = None;
    for j in 0..=n {
        let s = dual_section(m, j)?;
        if !s.module.is_zero() && first.is_none() {
            first = Some(j);
        }
    }
    let d = depth(m)?;
    Ok(Check::new(
        "dim M_j <= j and depth = min { j : M_j != 0 }",
        first == Some(d),
        format!("depth {d}, first nonzero dual section {first:?}"),
    ))
}

fn first_dual_length(m: &GradedModule) -> Result<Check> {
    let l0 = dual_section(m, 0)?.module.total_length()?;
    let h = h0_length(m)?;
    Ok(Check::new("l(M_0) = l(H^0)", l0 == h, format!("{l0} = {h}")))
}

fn hdeg_additivity(m: &GradedModule, q: &ParameterSequence, base: i128) -> Result<Check> {
    let k = m.algebra().residue_field();
    let sum = direct_sum(m, &k)?;
    let h = hdeg(&sum, q.elements())?;
    Ok(Check::new(
        "hdeg(M + k) = hdeg(M) + 1",
        h == base + 1,
        format!("{h} = {base} + 1"),
    ))
}

/// `a_1..a_n` is a d-sequence on `M` iff `a_2..a_n` is one on `M/a_1M` and
/// `QM ∩ H^0(M) = 0`, for `a_1` verified superficial.
fn prefix_transfer(m: &GradedModule, q: &ParameterSequence) -> Result<Option<Check>> {
    let a = q.elements();
    if a.len() < 2 || !is_superficial(&a[0], m, a)?.is_verified() {
        return Ok(None);
    }
    let whole = is_d_sequence(q, m)?.holds;
    let bar = m.quotient_by_ideal(&a[..1])?;
    let rest = is_d_sequence(&ParameterSequence::unchecked(a[1..].to_vec()), &bar)?.holds;
    let qm = m.ideal_submodule(a)?;
    let meets = m.relations().contains_module(&intersect(&qm, &h0(m)?)?);
    Ok(Some(Check::new(
        "d-sequence iff d-sequence modulo a_1 and QM ∩ H^0 = 0",
        whole == (rest && meets),
        format!("M {whole}, M/a_1M {rest}, QM ∩ H^0 = 0 {meets}"),
    )))
}

fn prop38_checks(checks: &mut Vec<Check>, m: &GradedModule, seq: &ParameterSequence, label: &str) {
    match check_prop38(m, seq) {
        Ok(r) => {
            checks.push(Check::new(&format!("{label}: e^0 length formula"), r.multiplicity.holds, r.multiplicity.detail));
            let bad: Vec<String> = r.coefficients.iter().filter(|c| !c.holds).map(|c| c.name.clone()).collect();
            checks.push(Check::new(
                &format!("{label}: e^i from H^0 lengths"),
                bad.is_empty(),
                if bad.is_empty() { String::new() } else { bad.join(", ") },
            ));
            checks.push(Check::new(&format!("{label}: closed form"), r.closed_form.holds, r.closed_form.detail));
        }
        Err(e) => checks.push(Check::new(label, false, format!("error: {e}"))),
    }
}

/// Runs every property that applies to the instance; engine errors are
/// recorded as failed checks.
pub fn evaluate(inst: &Instance, seed: u64, budget: usize) -> PropertyReport {
    let m = &inst.module;
    let q = &inst.parameters;
    let mut checks = Vec::new();
    let mut report = PropertyReport {
        instance: inst.descriptor.key(),
        checks: Vec::new(),
        invariants: None,
        d_sequence: None,
    };
    let inv = match Invariants::compute(m, q) {
        Ok(i) => i,
        Err(e) => {
            report.checks.push(Check::new("invariants", false, format!("error: {e}")));
            return report;
        }
    };
    let d = inv.dimension;
    checks.push(Check::new(
        "chi_1 from Koszul homology = l(M/QM) - e^0",
        inv.chi1.koszul == inv.chi1.serre,
        format!("{} = {}", inv.chi1.koszul, inv.chi1.serre),
    ));
    checks.push(Check::new("hdeg(M) > 0", inv.hdeg > 0, format!("{}", inv.hdeg)));
    for (key, &want) in &inst.descriptor.expected {
        let got = match key.as_str() {
            "dimension" => Some(d as i128),
            "depth" => depth(m).ok().map(|x| x as i128),
            "length" => Some(inv.length),
            "e0" => Some(inv.e(0)),
            "e1" => Some(inv.e(1)),
            "chi1" => Some(inv.chi1.serre),
            "sectional_genus" => Some(inv.sectional_genus),
            "hdeg" => Some(inv.hdeg),
            "t1" => Some(inv.t(1)),
            _ => None,
        };
        checks.push(Check::new(
            &format!("expected {key}"),
            got == Some(want as i128),
            format!("{got:?} = {want}"),
        ));
    }
    record(&mut checks, "dual sections and depth", duals_and_depth(m));
    record(&mut checks, "l(M_0) = l(H^0)", first_dual_length(m));
    record(&mut checks, "hdeg additivity", hdeg_additivity(m, q, inv.hdeg));
    if d >= 1 {
        match inequality_suite(m, q, seed) {
            Ok(r) => checks.extend(r.checks),
            Err(e) => checks.push(Check::new("inequality suite", false, format!("error: {e}"))),
        }
    }
    if d >= 2 {
        match check_theorem34(m, q, seed, budget) {
            Ok(r) => {
                checks.push(Check::new(
                    "(1) iff (2)",
                    r.equality.holds == r.conditions_hold,
                    format!("(1) {}, (2) {}", r.equality.holds, r.conditions_hold),
                ));
                if r.equality.holds {
                    checks.push(Check::new(
                        "(i) d-sequence generators found",
                        r.d_sequence.is_some(),
                        r.d_sequence_error.clone().unwrap_or_default(),
                    ));
                    if let Some(c) = &r.closed_form {
                        checks.push(Check::new("(ii) closed form", c.holds, c.detail.clone()));
                    }
                    for c in &r.vanishing {
                        checks.push(Check::new(&format!("(iii) {}", c.name), c.holds, c.detail.clone()));
                    }
                }
                if let Some(s) = &r.d_sequence {
                    report.d_sequence = Some(s.generators.clone());
                    prop38_checks(&mut checks, m, &s.sequence, "d-sequence found by search");
                    match prefix_transfer(m, &s.sequence) {
                        Ok(Some(c)) => checks.push(c),
                        Ok(None) => {}
                        Err(e) => checks.push(Check::new("prefix transfer", false, format!("error: {e}"))),
                    }
                }
            }
            Err(e @ Error::EquivalenceViolation(_)) => checks.push(Check::new("(1) iff (2)", false, e.to_string())),
            Err(e) => checks.push(Check::new("theorem checker", false, format!("error: {e}"))),
        }
    }
    if d >= 1 {
        match is_d_sequence(q, m) {
            Ok(c) if c.holds => prop38_checks(&mut checks, m, q, "given parameters"),
            Ok(_) => {}
            Err(e) => checks.push(Check::new("d-sequence test", false, format!("error: {e}"))),
        }
    }
    report.checks = checks;
    report.invariants = Some(inv);
    report
}
