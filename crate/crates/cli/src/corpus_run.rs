//! Parallel corpus evaluation with a deterministic merge.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use genuslab::algebra::DEFAULT_PRIME;
use genuslab::corpus::{
    example42_instance, example44_instance, prop41_instance, random_instance, Instance, InstanceDescriptor,
};
use genuslab::invariants::Check;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::SCHEMA;
use crate::run::properties;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RandomGrid {
    pub start: u64,
    pub count: u64,
    pub max_vars: usize,
    pub max_deg: u32,
}

impl Default for RandomGrid {
    fn default() -> Self {
        RandomGrid {
            start: 0,
            count: 0,
            max_vars: 4,
            max_deg: 3,
        }
    }
}

/// Families, parameter grids and seeds to run, with optional expected
/// values keyed by instance id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    pub prime: Option<u32>,
    pub example44: Vec<(usize, usize)>,
    pub example42: Vec<usize>,
    pub prop41: bool,
    pub random: RandomGrid,
    pub golden: BTreeMap<String, BTreeMap<String, i64>>,
    pub seed: u64,
    pub budget: Option<usize>,
}

impl CorpusConfig {
    /// The default grid: example44 at (2,1) and (3,1), example42 for d = 1..3,
    /// the idealization and 50 random seeds.
    pub fn standard() -> Self {
        CorpusConfig {
            example44: vec![(2, 1), (3, 1)],
            example42: vec![1, 2, 3],
            prop41: true,
            random: RandomGrid {
                count: 50,
                ..RandomGrid::default()
            },
            ..CorpusConfig::default()
        }
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Copy, Debug)]
enum Job {
    Example44(usize, usize),
    Example42(usize),
    Prop41,
    Random(u64),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PassCount {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub instance: String,
    pub check: String,
    pub detail: String,
    pub d_sequence: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceSummary {
    pub instance: String,
    pub descriptor: Option<InstanceDescriptor>,
    pub checks: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Aggregate {
    pub schema: u32,
    pub instances: usize,
    pub passed: usize,
    pub failing: Vec<String>,
    pub properties: BTreeMap<String, PassCount>,
    pub counterexamples: Vec<Counterexample>,
    pub unmatched_golden: Vec<String>,
    pub summaries: Vec<InstanceSummary>,
    pub elapsed_us: Option<u64>,
}

impl Aggregate {
    pub fn all_pass(&self) -> bool {
        self.failing.is_empty()
    }
}

struct Outcome {
    key: String,
    descriptor: Option<InstanceDescriptor>,
    checks: Vec<Check>,
    d_sequence: Option<Vec<String>>,
}

fn build(job: Job, prime: u32, g: &RandomGrid) -> genuslab::Result<Instance> {
    match job {
        Job::Example44(l, m) => example44_instance(l, m, prime),
        Job::Example42(d) => example42_instance(d, prime),
        Job::Prop41 => prop41_instance(prime),
        Job::Random(seed) => random_instance(seed, g.max_vars, g.max_deg),
    }
}

fn job_key(job: Job, prime: u32, g: &RandomGrid) -> String {
    match job {
        Job::Example44(l, m) => format!("example44-l{l}-m{m}-p{prime}"),
        Job::Example42(d) => format!("example42-d{d}-p{prime}"),
        Job::Prop41 => format!("idealization-p{prime}"),
        Job::Random(seed) => format!("random-deg{}-seed{seed}-vars{}", g.max_deg, g.max_vars),
    }
}

/// Runs every instance of the config, in parallel, and merges the results
/// ordered by instance id.
pub fn corpus_run(config: &CorpusConfig, timings: bool) -> Aggregate {
    let start = Instant::now();
    let prime = config.prime.unwrap_or(DEFAULT_PRIME);
    let budget = config.budget.unwrap_or(crate::run::DEFAULT_BUDGET);
    let mut jobs: Vec<Job> = config.example44.iter().map(|&(l, m)| Job::Example44(l, m)).collect();
    jobs.extend(config.example42.iter().map(|&d| Job::Example42(d)));
    if config.prop41 {
        jobs.push(Job::Prop41);
    }
    let g = &config.random;
    jobs.extend((g.start..g.start + g.count).map(Job::Random));
    let mut outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|&job| {
            match build(job, prime, g) {
                Ok(mut inst) => {
                    let key = inst.descriptor.key();
                    if let Some(extra) = config.golden.get(&key) {
                        inst.descriptor.expected.extend(extra.iter().map(|(k, v)| (k.clone(), *v)));
                    }
                    let p = properties(&inst, config.seed, budget);
                    Outcome {
                        key,
                        descriptor: Some(inst.descriptor.clone()),
                        checks: p.checks,
                        d_sequence: p.d_sequence,
                    }
                }
                Err(e) => Outcome {
                    key: job_key(job, prime, g),
                    descriptor: None,
                    checks: vec![Check::new("construction", false, e.to_string())],
                    d_sequence: None,
                },
            }
        })
        .collect();
    outcomes.sort_by(|a, b| a.key.cmp(&b.key));
    let keys: BTreeSet<&str> = outcomes.iter().map(|o| o.key.as_str()).collect();
    let unmatched_golden = config.golden.keys().filter(|k| !keys.contains(k.as_str())).cloned().collect();
    let mut properties: BTreeMap<String, PassCount> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut failing = Vec::new();
    let mut summaries = Vec::with_capacity(outcomes.len());
    for o in &outcomes {
        let mut failures = 0;
        for c in &o.checks {
            let entry = properties.entry(c.name.clone()).or_default();
            if c.holds {
                entry.pass += 1;
            } else {
                entry.fail += 1;
                failures += 1;
                counterexamples.push(Counterexample {
                    instance: o.key.clone(),
                    check: c.name.clone(),
                    detail: c.detail.clone(),
                    d_sequence: o.d_sequence.clone(),
                });
            }
        }
        if failures > 0 {
            failing.push(o.key.clone());
        }
        summaries.push(InstanceSummary {
            instance: o.key.clone(),
            descriptor: o.descriptor.clone(),
            checks: o.checks.len(),
            failures,
        });
    }
    Aggregate {
        schema: SCHEMA,
        instances: outcomes.len(),
        passed: outcomes.len() - failing.len(),
        failing,
        properties,
        counterexamples,
        unmatched_golden,
        summaries,
        elapsed_us: timings.then(|| start.elapsed().as_micros() as u64),
    }
}
