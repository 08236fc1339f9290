//! Command execution.

use std::time::Instant;

use genuslab::algebra::Polynomial;
use genuslab::corpus::{
    evaluate, example42_instance, example44_instance, prop41_instance, random_instance, ulrich_check, Family,
    Instance, PropertyReport,
};
use genuslab::groebner::set_verify;
use genuslab::homological::depth;
use genuslab::invariants::{
    check_prop38, check_theorem34, hilbert_coefficients, inequality_suite, is_d_sequence, Check, HilbertSamuel,
    Invariants,
};
use genuslab::module::{GradedModule, ParameterSequence};
use genuslab::{Error, Result};

use crate::dsl::{CheckKind, Session, SessionError, Stmt};
use crate::env::Env;
use crate::report::{Document, Report, ReportError};

/// Default d-sequence search budget.
pub const DEFAULT_BUDGET: usize = 64;

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: u64,
    /// Caps the Hilbert-Samuel table at `n <= max_n`.
    pub max_n: Option<usize>,
    pub budget: usize,
    pub verify_gb: bool,
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 0,
            max_n: None,
            budget: DEFAULT_BUDGET,
            verify_gb: false,
            timings: true,
        }
    }
}

/// Dimension, depth and the length table; with `max_n` the coefficients
/// must stabilize inside the capped table.
fn numbers(rep: &mut Report, m: &GradedModule, gens: &[Polynomial], opts: &RunOptions) -> Result<()> {
    rep.dim = m.dimension();
    if !m.is_zero() {
        rep.depth = Some(depth(m)?);
    }
    let hs = HilbertSamuel::new(m, gens)?;
    rep.length = Some(hs.length(0)?);
    let s = rep.dim.unwrap_or(0);
    match opts.max_n {
        Some(n) => {
            let table = hs.table(n + 1)?;
            rep.length_table = table.values.clone();
            match hilbert_coefficients(&table, s) {
                Ok(c) if c.postulation + s + 2 < n + 1 => {}
                Ok(_) | Err(Error::NoStabilization { .. }) => return Err(Error::NoStabilization { cap: n }),
                Err(e) => return Err(e),
            }
        }
        None => rep.length_table = hs.table((s + 4).max(7))?.values,
    }
    Ok(())
}

fn invariants(rep: &mut Report, m: &GradedModule, q: &ParameterSequence, opts: &RunOptions) -> Result<Invariants> {
    numbers(rep, m, q.elements(), opts)?;
    let inv = Invariants::compute(m, q)?;
    rep.fill(&inv);
    Ok(inv)
}

fn chi1_check(inv: &Invariants) -> Check {
    Check::new(
        "chi_1 from Koszul homology = l(M/QM) - e^0",
        inv.chi1.koszul == inv.chi1.serre,
        format!("{} = {}", inv.chi1.koszul, inv.chi1.serre),
    )
}

fn theorem(rep: &mut Report, m: &GradedModule, q: &ParameterSequence, opts: &RunOptions) -> Result<()> {
    numbers(rep, m, q.elements(), opts)?;
    let r = check_theorem34(m, q, opts.seed, opts.budget)?;
    rep.fill(&r.invariants);
    rep.detail("equality", if r.equality.holds { "holds" } else { "fails" });
    rep.detail("conditions", if r.conditions_hold { "hold" } else { "fail" });
    rep.detail("equality_check", &r.equality);
    let mut conds = r.torsion_conditions.clone();
    conds.push(r.constant_term.clone());
    rep.detail("condition_checks", &conds);
    rep.checks.push(Check::new(
        "(1) iff (2)",
        true,
        format!("(1) {}, (2) {}", r.equality.holds, r.conditions_hold),
    ));
    if r.equality.holds {
        rep.checks.push(Check::new(
            "(i) d-sequence generating set found",
            r.d_sequence.is_some(),
            match &r.d_sequence {
                Some(s) => format!("{} after {} attempts", s.generators.join(", "), s.attempts),
                None => r.d_sequence_error.clone().unwrap_or_default(),
            },
        ));
        if let Some(c) = &r.closed_form {
            rep.checks.push(Check::new("(ii) closed form", c.holds, c.detail.clone()));
        }
        for c in &r.vanishing {
            rep.checks.push(Check::new(&format!("(iii) {}", c.name), c.holds, c.detail.clone()));
        }
    }
    if let Some(s) = &r.d_sequence {
        rep.detail("d_sequence", s);
    }
    Ok(())
}

fn prop38(rep: &mut Report, m: &GradedModule, q: &ParameterSequence, opts: &RunOptions) -> Result<()> {
    invariants(rep, m, q, opts)?;
    let d = is_d_sequence(q, m)?;
    if !d.holds {
        let w = d.violation.as_ref().map(|v| format!("i = {}, j = {}: {}", v.i, v.j, v.witness));
        rep.checks.push(Check::new("d-sequence", false, w.unwrap_or_default()));
        return Ok(());
    }
    rep.checks.push(Check::new("d-sequence", true, String::new()));
    let r = check_prop38(m, q)?;
    rep.checks.push(r.multiplicity.clone());
    rep.checks.extend(r.coefficients.iter().cloned());
    rep.checks.push(r.closed_form.clone());
    Ok(())
}

fn inequalities(rep: &mut Report, m: &GradedModule, q: &ParameterSequence, opts: &RunOptions) -> Result<()> {
    invariants(rep, m, q, opts)?;
    rep.checks.extend(inequality_suite(m, q, opts.seed)?.checks);
    Ok(())
}

fn ulrich(rep: &mut Report, n: &GradedModule, gens: &[Polynomial], opts: &RunOptions) -> Result<()> {
    numbers(rep, n, gens, opts)?;
    let u = ulrich_check(n, gens)?;
    rep.e = vec![u.multiplicity];
    rep.checks.push(Check::new(
        "maximal Cohen-Macaulay",
        u.maximal_cohen_macaulay,
        format!("depth {} over a ring of dimension {}", u.depth, u.ring_dimension),
    ));
    rep.checks.push(Check::new(
        "e^0 = l(N/IN)",
        u.multiplicity_equals_length,
        format!("{} = {}", u.multiplicity, u.length),
    ));
    rep.checks.push(Check::new(
        "N/IN free over R/I",
        u.free_modulo_ideal,
        format!("rank {} times l(R/I) = {} against {}", u.rank, u.residue_length, u.length),
    ));
    rep.detail("ulrich", &u);
    Ok(())
}

/// Builds a corpus instance from a `corpus` command.
pub fn corpus_instance(family: &str, args: &[u64], prime: u32) -> Result<Instance> {
    let arg = |i: usize, default: u64| args.get(i).copied().unwrap_or(default) as usize;
    match family {
        "example44" => example44_instance(arg(0, 2), arg(1, 1), prime),
        "example42" => example42_instance(arg(0, 1), prime),
        "prop41" => prop41_instance(prime),
        "random" => random_instance(args.first().copied().unwrap_or(0), arg(1, 4), arg(2, 3) as u32),
        _ => Err(Error::InvalidInput(format!("unknown corpus family `{family}`"))),
    }
}

/// The property suite, plus the Ulrich conditions for the Ulrich family.
pub fn properties(inst: &Instance, seed: u64, budget: usize) -> PropertyReport {
    let mut p = evaluate(inst, seed, budget);
    if inst.descriptor.family == Family::Example42 {
        let all: Vec<Polynomial> = (0..inst.module.nvars()).map(Polynomial::var).collect();
        match ulrich_check(&inst.module, &all) {
            Ok(u) => p.checks.push(Check::new(
                "Ulrich",
                u.holds(),
                format!("e^0 = {}, l(N/IN) = {}, rank {}, depth {}", u.multiplicity, u.length, u.rank, u.depth),
            )),
            Err(e) => p.checks.push(Check::new("Ulrich", false, format!("error: {e}"))),
        }
    }
    p
}

fn corpus(rep: &mut Report, family: &str, args: &[u64], prime: u32, opts: &RunOptions) -> Result<()> {
    let inst = corpus_instance(family, args, prime)?;
    rep.instance = inst.descriptor.key();
    numbers(rep, &inst.module, inst.parameters.elements(), opts)?;
    let p = properties(&inst, opts.seed, opts.budget);
    if let Some(inv) = &p.invariants {
        rep.fill(inv);
    }
    rep.checks = p.checks;
    if let Some(s) = p.d_sequence {
        rep.detail("d_sequence", s);
    }
    Ok(())
}

fn execute(rep: &mut Report, stmt: &Stmt, env: &Env, pos: crate::dsl::Pos, opts: &RunOptions) -> Result<()> {
    let prime = env.field.characteristic();
    let target = |name: &str| env.target(name, pos).map_err(|e| Error::InvalidInput(e.to_string()));
    let sequence = |m: &GradedModule, name: &str| -> Result<ParameterSequence> {
        let e = env.sequence(name, pos).map_err(|e| Error::InvalidInput(e.to_string()))?;
        ParameterSequence::new(e.polys, m)
    };
    match stmt {
        Stmt::Compute { target: t, sequence: s } => {
            rep.instance = format!("{t}/{s}");
            let m = target(t)?.module;
            let q = sequence(&m, s)?;
            let inv = invariants(rep, &m, &q, opts)?;
            rep.checks.push(chi1_check(&inv));
            Ok(())
        }
        Stmt::Check { kind, args } => {
            rep.instance = format!("{}/{}", args[0], args[1]);
            let m = target(&args[0])?.module;
            match kind {
                CheckKind::Ulrich => {
                    let i = env.ideal_like(&args[1], pos).map_err(|e| Error::InvalidInput(e.to_string()))?;
                    ulrich(rep, &m, &i.polys, opts)
                }
                CheckKind::Thm34 => theorem(rep, &m, &sequence(&m, &args[1])?, opts),
                CheckKind::Prop38 => prop38(rep, &m, &sequence(&m, &args[1])?, opts),
                CheckKind::Inequalities => inequalities(rep, &m, &sequence(&m, &args[1])?, opts),
            }
        }
        Stmt::Corpus { family, args } => corpus(rep, family, args, prime, opts),
        _ => Ok(()),
    }
}

/// Runs the commands in order; engine errors are recorded in the report of
/// the command that raised them.
pub fn run(session: &Session, opts: &RunOptions) -> std::result::Result<Document, SessionError> {
    let env = Env::build(session)?;
    if opts.verify_gb {
        set_verify(true);
    }
    let prime = env.field.characteristic();
    let mut reports = Vec::new();
    for (index, st) in session.commands().enumerate() {
        let start = Instant::now();
        let mut rep = Report {
            command_index: index,
            command: st.stmt.to_string(),
            prime,
            seed: opts.seed,
            ..Report::default()
        };
        if let Err(e) = execute(&mut rep, &st.stmt, &env, st.pos, opts) {
            rep.error = Some(ReportError::from_engine(&e));
        }
        rep.finish();
        if opts.timings {
            rep.elapsed_us = Some(start.elapsed().as_micros() as u64);
        }
        reports.push(rep);
    }
    Ok(Document::new(prime, opts.seed, reports))
}
