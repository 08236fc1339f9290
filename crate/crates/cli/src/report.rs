//! Report types and their canonical JSON and CSV forms.

use std::collections::BTreeMap;

use genuslab::invariants::{Check, Chi1, Invariants};
use genuslab::Error;
use serde::Serialize;
use serde_json::Value;

/// Version of the report layout.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    #[default]
    Holds,
    Fails,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportError {
    pub kind: String,
    pub message: String,
}

impl ReportError {
    pub fn from_engine(e: &Error) -> Self {
        ReportError {
            kind: error_kind(e).into(),
            message: e.to_string(),
        }
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "DivisionByZero",
        Error::HomogeneityViolation(_) => "HomogeneityViolation",
        Error::InfiniteLength(_) => "InfiniteLength",
        Error::NoStabilization { .. } => "NoStabilization",
        Error::CrossCheckFailure(_) => "CrossCheckFailure",
        Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        Error::NotGeneralizedCM(_) => "NotGeneralizedCM",
        Error::PreconditionViolation(_) => "PreconditionViolation",
        Error::NotFoundWithinBudget { .. } => "NotFoundWithinBudget",
        Error::EquivalenceViolation(_) => "EquivalenceViolation",
        Error::NonStandardGrading(_) => "NonStandardGrading",
        Error::ZeroModule => "ZeroModule",
        Error::GenerationFailure { .. } => "GenerationFailure",
        Error::InvalidInput(_) => "InvalidInput",
    }
}

/// The result of one command.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command_index: usize,
    pub command: String,
    pub instance: String,
    pub prime: u32,
    pub seed: u64,
    pub dim: Option<usize>,
    pub depth: Option<usize>,
    pub length: Option<i128>,
    pub length_table: Vec<i128>,
    pub e: Vec<i128>,
    pub sectional_genus: Option<i128>,
    pub chi1: Option<Chi1>,
    pub hdeg: Option<i128>,
    pub torsions: Vec<i128>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    pub details: BTreeMap<String, Value>,
    pub error: Option<ReportError>,
    pub elapsed_us: Option<u64>,
}

impl Report {
    pub fn fill(&mut self, inv: &Invariants) {
        self.dim = Some(inv.dimension);
        self.length = Some(inv.length);
        self.e = inv.e.clone();
        self.sectional_genus = Some(inv.sectional_genus);
        self.chi1 = Some(inv.chi1);
        self.hdeg = Some(inv.hdeg);
        self.torsions = inv.torsions.clone();
    }

    pub fn detail(&mut self, key: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).unwrap_or(Value::Null);
        self.details.insert(key.to_string(), v);
    }

    /// Sets the verdict from the error and the checks.
    pub fn finish(&mut self) {
        self.verdict = if self.error.is_some() {
            Verdict::Error
        } else if self.checks.iter().all(|c| c.holds) {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    CheckFailure,
    EngineError,
}

impl Status {
    pub fn of(reports: &[Report]) -> Self {
        if reports.iter().any(|r| r.verdict == Verdict::Error) {
            Status::EngineError
        } else if reports.iter().any(|r| r.verdict == Verdict::Fails) {
            Status::CheckFailure
        } else {
            Status::Pass
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::CheckFailure => 1,
            Status::EngineError => 3,
        }
    }
}

/// All reports of one session run.
#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub schema: u32,
    pub prime: u32,
    pub seed: u64,
    pub status: Status,
    pub reports: Vec<Report>,
}

impl Document {
    pub fn new(prime: u32, seed: u64, reports: Vec<Report>) -> Self {
        Document {
            schema: SCHEMA,
            prime,
            seed,
            status: Status::of(&reports),
            reports,
        }
    }
}

/// Pretty JSON with keys sorted at every level.
pub fn canonical_json(v: &impl Serialize) -> String {
    let value = serde_json::to_value(v).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

const E_COLUMNS: usize = 5;
const T_COLUMNS: usize = 4;

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Flat numeric projection, one row per report.
pub fn to_csv(reports: &[Report]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = ["command_index", "instance", "dim", "depth", "length"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    header.extend((0..E_COLUMNS).map(|i| format!("e{i}")));
    header.extend(["sectional_genus", "chi1_koszul", "chi1_serre", "hdeg"].iter().map(|s| s.to_string()));
    header.extend((1..=T_COLUMNS).map(|i| format!("t{i}")));
    header.extend(["checks_passed", "checks_failed"].iter().map(|s| s.to_string()));
    w.write_record(&header).expect("in-memory write");
    for r in reports {
        let mut row = vec![
            r.command_index.to_string(),
            r.instance.clone(),
            opt(r.dim),
            opt(r.depth),
            opt(r.length),
        ];
        row.extend((0..E_COLUMNS).map(|i| opt(r.e.get(i))));
        row.push(opt(r.sectional_genus));
        row.push(opt(r.chi1.map(|c| c.koszul)));
        row.push(opt(r.chi1.map(|c| c.serre)));
        row.push(opt(r.hdeg));
        row.extend((0..T_COLUMNS).map(|i| opt(r.torsions.get(i))));
        let passed = r.checks.iter().filter(|c| c.holds).count();
        row.push(passed.to_string());
        row.push((r.checks.len() - passed).to_string());
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}
