use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::degrees::{euler_chi1, hdeg, sv_invariant, torsions, Chi1};
use super::hilbert_samuel::{coefficients, HilbertCoefficients, HilbertSamuel};
use super::superficial::{annihilator_length, find_d_sequence_generators, find_superficial, is_d_sequence, DSequenceSearch};
use crate::algebra::{binomial, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::intersect;
use crate::homological::dual_sections;
use crate::module::{annihilator, h0, h0_length, ideal_power, subquotient, GradedModule, ParameterSequence};

/// One checked relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, holds: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            holds,
            detail,
        }
    }

    fn equal(name: &str, lhs: i128, rhs: i128) -> Self {
        Check::new(name, lhs == rhs, format!("{lhs} = {rhs}"))
    }
}

fn sign(i: usize) -> i128 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Compares the table with `sum (-1)^i e^i C(n+d-i, d-i)` for `n = 0..=last`.
fn closed_form(hs: &HilbertSamuel, e: &HilbertCoefficients, last: usize) -> Result<Check> {
    let mut bad = Vec::new();
    for n in 0..=last {
        let l = hs.length(n)?;
        let p = e.polynomial_at(n as i64);
        if l != p {
            bad.push(format!("n={n}: {l} != {p}"));
        }
    }
    let detail = if bad.is_empty() {
        format!("agrees for n = 0..={last}")
    } else {
        bad.join(", ")
    };
    Ok(Check::new("closed form", bad.is_empty(), detail))
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop38Report {
    pub e: Vec<i128>,
    pub multiplicity: Check,
    pub coefficients: Vec<Check>,
    pub closed_form: Check,
    pub holds: bool,
}

/// The length formulas for a d-sequence.
pub fn check_prop38(m: &GradedModule, seq: &ParameterSequence) -> Result<Prop38Report> {
    if !is_d_sequence(seq, m)?.holds {
        return Err(Error::PreconditionViolation("the sequence is not a d-sequence".into()));
    }
    let d = seq.len();
    let a = seq.elements();
    let hs = HilbertSamuel::new(m, a)?;
    let e = coefficients(&hs, Some(d))?;
    let base = m.ideal_submodule(seq.partial(d - 1))?;
    let col = crate::module::colon(&base, &a[d - 1])?;
    let extra = crate::groebner::quotient_length(&col, &base, m.nvars())?;
    let multiplicity = Check::equal("multiplicity", e.get(0), hs.length(0)? - extra);
    let mut h = Vec::with_capacity(d + 1);
    for k in 0..=d {
        h.push(h0_length(&m.quotient_by_ideal(seq.partial(k))?)?);
    }
    let mut coeffs = Vec::with_capacity(d);
    for i in 1..d {
        coeffs.push(Check::equal(
            &format!("e^{i}"),
            sign(i) * e.get(i),
            h[d - i] - h[d - i - 1],
        ));
    }
    coeffs.push(Check::equal(&format!("e^{d}"), sign(d) * e.get(d), h[0]));
    let closed_form = closed_form(&hs, &e, d + 3)?;
    let holds = multiplicity.holds && coeffs.iter().all(|c| c.holds) && closed_form.holds;
    Ok(Prop38Report {
        e: e.e,
        multiplicity,
        coefficients: coeffs,
        closed_form,
        holds,
    })
}

/// Numbers shared by the theorem checker and the inequality suite.
#[derive(Clone, Debug, Serialize)]
pub struct Invariants {
    pub dimension: usize,
    pub length: i128,
    pub e: Vec<i128>,
    pub sectional_genus: i128,
    pub chi1: Chi1,
    pub hdeg: i128,
    pub torsions: Vec<i128>,
    pub h0_length: i128,
    pub sv_invariant: Option<i128>,
    pub dual_dimensions: Vec<Option<usize>>,
}

impl Invariants {
    pub fn compute(m: &GradedModule, q: &ParameterSequence) -> Result<Self> {
        let d = m.dimension().ok_or(Error::ZeroModule)?;
        let hs = HilbertSamuel::new(m, q.elements())?;
        let e = coefficients(&hs, None)?;
        let length = hs.length(0)?;
        let sectional_genus = if d >= 1 { length - e.get(0) + e.get(1) } else { 0 };
        let sv = match sv_invariant(m) {
            Ok(v) => Some(v),
            Err(Error::NotGeneralizedCM(_)) => None,
            Err(err) => return Err(err),
        };
        Ok(Invariants {
            dimension: d,
            length,
            sectional_genus,
            chi1: euler_chi1(m, q)?,
            hdeg: hdeg(m, q.elements())?,
            torsions: torsions(m, q.elements())?,
            h0_length: h0_length(m)?,
            sv_invariant: sv,
            dual_dimensions: dual_sections(m)?.iter().map(|s| s.module.dimension()).collect(),
            e: e.e,
        })
    }

    pub fn e(&self, i: usize) -> i128 {
        self.e.get(i).copied().unwrap_or(0)
    }

    pub fn t(&self, i: usize) -> i128 {
        self.torsions.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `hdeg - e^0 - T^1`.
    pub fn bound(&self) -> i128 {
        self.hdeg - self.e(0) - self.t(1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem34Report {
    pub invariants: Invariants,
    pub equality: Check,
    pub torsion_conditions: Vec<Check>,
    pub constant_term: Check,
    pub conditions_hold: bool,
    pub d_sequence: Option<DSequenceSearch>,
    pub d_sequence_error: Option<String>,
    pub closed_form: Option<Check>,
    pub vanishing: Vec<Check>,
}

/// Evaluates both sides of the equivalence and, when equality holds, its
/// three consequences.
pub fn check_theorem34(m: &GradedModule, q: &ParameterSequence, seed: u64, budget: usize) -> Result<Theorem34Report> {
    let inv = Invariants::compute(m, q)?;
    let d = inv.dimension;
    if d < 2 {
        return Err(Error::PreconditionViolation(format!("the theorem needs dim M >= 2, got {d}")));
    }
    let equality = Check::new(
        "g_s = hdeg - e^0 - T^1",
        inv.sectional_genus == inv.bound(),
        format!("{} vs {} - {} - {}", inv.sectional_genus, inv.hdeg, inv.e(0), inv.t(1)),
    );
    let mut tors = Vec::new();
    for i in 2..d {
        tors.push(Check::equal(&format!("(-1)^{i} e^{i} = T^{i}"), sign(i) * inv.e(i), inv.t(i)));
    }
    tors.push(Check::equal(&format!("(-1)^{d} e^{d} = l(H^0)"), sign(d) * inv.e(d), inv.h0_length));
    let alt: i128 = (0..=d).map(|i| sign(i) * inv.e(i)).sum();
    let constant_term = Check::equal("l(M/QM) = sum (-1)^i e^i", inv.length, alt);
    let conditions_hold = tors.iter().all(|c| c.holds) && constant_term.holds;
    if equality.holds != conditions_hold {
        return Err(Error::EquivalenceViolation(format!(
            "equality {} but the coefficient conditions {}",
            if equality.holds { "holds" } else { "fails" },
            if conditions_hold { "hold" } else { "fail" }
        )));
    }
    let mut report = Theorem34Report {
        invariants: inv,
        equality,
        torsion_conditions: tors,
        constant_term,
        conditions_hold,
        d_sequence: None,
        d_sequence_error: None,
        closed_form: None,
        vanishing: Vec::new(),
    };
    if !report.equality.holds {
        return Ok(report);
    }
    match find_d_sequence_generators(q, m, budget, seed) {
        Ok(s) => report.d_sequence = Some(s),
        Err(e @ Error::NotFoundWithinBudget { .. }) => report.d_sequence_error = Some(e.to_string()),
        Err(e) => return Err(e),
    }
    let hs = HilbertSamuel::new(m, q.elements())?;
    let e = coefficients(&hs, None)?;
    report.closed_form = Some(closed_form(&hs, &e, d + 3)?);
    report.vanishing = vanishing(m, q)?;
    Ok(report)
}

/// `QM ∩ H^0(M) = 0` and `Q ⊆ ann(M_i)` for `1 <= i <= d-3`.
fn vanishing(m: &GradedModule, q: &ParameterSequence) -> Result<Vec<Check>> {
    let d = m.dimension().unwrap_or(0);
    let qm = m.ideal_submodule(q.elements())?;
    let w = h0(m)?;
    let cap = intersect(&qm, &w)?;
    let zero = m.relations().contains_module(&cap);
    let mut out = vec![Check::new("QM ∩ H^0(M) = 0", zero, String::new())];
    let duals = dual_sections(m)?;
    for (i, dual) in duals.iter().enumerate().take(d.saturating_sub(2)).skip(1) {
        let ann = annihilator(&dual.module)?;
        let ok = q
            .elements()
            .iter()
            .all(|a| ann.contains(&crate::algebra::FreeElement::from_polynomial(a, 0)));
        out.push(Check::new(&format!("Q M_{i} = 0"), ok, String::new()));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct InequalityReport {
    pub checks: Vec<Check>,
}

impl InequalityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// `Q^t M` as a module.
fn power_submodule(m: &GradedModule, q: &[Polynomial], t: u32) -> Result<GradedModule> {
    let pow = ideal_power(q, t, m.field())?;
    let k = crate::module::ideal_times(m.ambient(), &pow);
    subquotient(m.algebra(), &k, m.relations())
}

/// Every inequality and identity that applies to `(M, Q)`.
pub fn inequality_suite(m: &GradedModule, q: &ParameterSequence, seed: u64) -> Result<InequalityReport> {
    let inv = Invariants::compute(m, q)?;
    let d = inv.dimension;
    let gens = q.elements();
    let mut checks = Vec::new();
    let chi = inv.chi1.serre;
    checks.push(Check::new(
        "chi_1 >= 0",
        chi >= 0,
        format!("{chi}"),
    ));
    checks.push(Check::new(
        "chi_1 <= hdeg - e^0",
        chi <= inv.hdeg - inv.e(0),
        format!("{chi} <= {}", inv.hdeg - inv.e(0)),
    ));
    if d >= 2 {
        checks.push(Check::new(
            "g_s <= hdeg - e^0 - T^1",
            inv.sectional_genus <= inv.bound(),
            format!("{} <= {}", inv.sectional_genus, inv.bound()),
        ));
        checks.push(Check::new(
            "0 >= e^1 >= -T^1",
            inv.e(1) <= 0 && inv.e(1) >= -inv.t(1),
            format!("0 >= {} >= {}", inv.e(1), -inv.t(1)),
        ));
        let mut rhs = inv.e(0);
        for (j, s) in dual_sections(m)?.iter().enumerate().take(d - 1) {
            let c = binomial(d as i64 - 2, j as i64);
            if c != 0 && !s.module.is_zero() {
                rhs += c * hdeg(&s.module, gens)?;
            }
        }
        checks.push(Check::equal("hdeg - T^1 = e^0 + sum C(s-2,j) hdeg(M_j)", inv.hdeg - inv.t(1), rhs));
    }
    if d == 1 {
        checks.push(Check::new(
            "g_s <= 0",
            inv.sectional_genus <= 0,
            format!("{}", inv.sectional_genus),
        ));
        let dseq = is_d_sequence(q, m)?.holds;
        checks.push(Check::new(
            "g_s = 0 iff d-sequence",
            (inv.sectional_genus == 0) == dseq,
            format!("g_s = {}, d-sequence {dseq}", inv.sectional_genus),
        ));
    }
    if let Some(sv) = inv.sv_invariant {
        checks.push(Check::equal("hdeg - e^0 = I(M)", inv.hdeg - inv.e(0), sv));
        checks.push(Check::new(
            "l(M/QM) - e^0 <= I(M)",
            inv.length - inv.e(0) <= sv,
            format!("{} <= {sv}", inv.length - inv.e(0)),
        ));
    }
    for t in 1..=2u32 {
        let x = power_submodule(m, gens, t)?;
        let z = m.quotient_by_ideal(&ideal_power(gens, t, m.field())?)?;
        let (hx, hz) = (hdeg(&x, gens)?, hdeg(&z, gens)?);
        checks.push(Check::new(
            &format!("hdeg(M) <= hdeg(Q^{t}M) + hdeg(M/Q^{t}M)"),
            inv.hdeg <= hx + hz,
            format!("{} <= {hx} + {hz}", inv.hdeg),
        ));
    }
    let w = h0(m)?;
    let bar = m.with_relations(w.clone());
    let hbar = hdeg(&bar, gens)?;
    checks.push(Check::equal("hdeg(M) = l(H^0) + hdeg(M/H^0)", inv.hdeg, inv.h0_length + hbar));
    if d >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(a) = find_superficial(m, gens, &mut rng, 8)? {
            let mbar = m.quotient_by_ideal(std::slice::from_ref(&a))?;
            let qbar = ParameterSequence::unchecked(gens.to_vec());
            let gbar = {
                let hs = HilbertSamuel::new(&mbar, qbar.elements())?;
                let e = coefficients(&hs, None)?;
                hs.length(0)? - e.get(0) + e.get(1)
            };
            let extra = if d == 2 { annihilator_length(m, &a)? } else { 0 };
            checks.push(Check::equal("g_s(Q;M) = g_s(Q;M/aM) (+ l(0:a))", inv.sectional_genus, gbar + extra));
        } else {
            checks.push(Check::new("g_s(Q;M) = g_s(Q;M/aM) (+ l(0:a))", true, "no verified superficial element".into()));
        }
        let qm = m.ideal_submodule(gens)?;
        let meets = m.relations().contains_module(&intersect(&qm, &w)?);
        let eq_m = inv.sectional_genus == inv.bound();
        let eq_bar = if bar.is_zero() || bar.dimension() != Some(d) {
            false
        } else {
            let ib = Invariants::compute(&bar, q)?;
            ib.sectional_genus == ib.bound()
        };
        checks.push(Check::new(
            "equality for M iff equality for M/H^0 and QM ∩ H^0 = 0",
            eq_m == (eq_bar && meets),
            format!("M {eq_m}, M/H^0 {eq_bar}, QM ∩ H^0 = 0 {meets}"),
        ));
    }
    Ok(InequalityReport { checks })
}
