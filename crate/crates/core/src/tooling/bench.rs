use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::random_instance;
use crate::catalog::{pair_status, status_table, Status};
use crate::error::{Error, Result};
use crate::graph::SandwichInstance;
use crate::poly::{solve, Mode};
use crate::quartet::Quartet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub pair: [Quartet; 2],
    pub n_min: usize,
    pub n_max: usize,
    pub count: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suite {
    pub entries: Vec<SuiteEntry>,
}

impl Suite {
    pub fn from_json(text: &str) -> Result<Suite> {
        let suite: Suite = serde_json::from_str(text)?;
        for e in &suite.entries {
            if e.n_min > e.n_max {
                return Err(Error::Precondition(format!("empty order range {}..={}", e.n_min, e.n_max)));
            }
            pair_status(e.pair[0], e.pair[1])?;
        }
        Ok(suite)
    }
}

/// Every tractable pair, orders 4 to 9, 200 instances each.
pub fn default_suite() -> Suite {
    let entries = status_table()
        .into_iter()
        .filter(|e| matches!(e.status, Status::Poly(_)))
        .enumerate()
        .map(|(i, e)| SuiteEntry {
            pair: e.pair,
            n_min: 4,
            n_max: 9,
            count: 200,
            seed: 1 + i as u64,
        })
        .collect();
    Suite { entries }
}

/// Instances of one entry; orders cycle through the range.
pub fn suite_instances(entry: &SuiteEntry) -> Vec<SandwichInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(entry.seed);
    let span = entry.n_max - entry.n_min + 1;
    (0..entry.count)
        .map(|i| random_instance(entry.n_min + i % span, &mut rng))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub pair: String,
    pub status: String,
    pub instances: usize,
    pub feasible: usize,
    /// Exact search ran out of budget.
    pub unknown: usize,
    /// Polynomial and exact verdicts agree; absent for pairs without a
    /// polynomial solver.
    pub agree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly_ms: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_ms: Option<f64>,
}

struct Sample {
    feasible: bool,
    unknown: bool,
    agree: bool,
    poly_ms: f64,
    exact_ms: f64,
}

fn run_one(inst: &SandwichInstance, pair: [Quartet; 2], poly: bool, budget: u64) -> Result<Sample> {
    let start = Instant::now();
    let fast = if poly {
        Some(solve(inst, pair[0], pair[1], Mode::Poly, budget)?.verdict.is_feasible())
    } else {
        None
    };
    let poly_ms = start.elapsed().as_secs_f64() * 1e3;
    let start = Instant::now();
    let exact = match solve(inst, pair[0], pair[1], Mode::Exact, budget) {
        Ok(out) => Some(out.verdict.is_feasible()),
        Err(Error::BudgetExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    let exact_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(Sample {
        feasible: exact.or(fast).unwrap_or(false),
        unknown: exact.is_none(),
        agree: fast.is_some() && fast == exact,
        poly_ms,
        exact_ms,
    })
}

/// Runs every entry, instances in parallel. Rows are sorted by pair, and
/// timings are only filled in when asked for.
pub fn bench(suite: &Suite, budget: u64, timings: bool) -> Result<Vec<BenchRow>> {
    let mut rows = suite
        .entries
        .iter()
        .map(|entry| {
            let status = pair_status(entry.pair[0], entry.pair[1])?.status;
            let poly = matches!(status, Status::Poly(_));
            let samples = suite_instances(entry)
                .par_iter()
                .map(|inst| run_one(inst, entry.pair, poly, budget))
                .collect::<Result<Vec<Sample>>>()?;
            Ok(BenchRow {
                pair: format!("{},{}", entry.pair[0], entry.pair[1]),
                status: status.label().to_string(),
                instances: samples.len(),
                feasible: samples.iter().filter(|s| s.feasible).count(),
                unknown: samples.iter().filter(|s| s.unknown).count(),
                agree: poly.then(|| samples.iter().filter(|s| s.agree).count()),
                poly_ms: (timings && poly).then(|| samples.iter().map(|s| s.poly_ms).sum()),
                exact_ms: timings.then(|| samples.iter().map(|s| s.exact_ms).sum()),
            })
        })
        .collect::<Result<Vec<BenchRow>>>()?;
    rows.sort_by(|a, b| a.pair.cmp(&b.pair));
    Ok(rows)
}

pub fn render_csv(rows: &[BenchRow]) -> String {
    let timed = rows.iter().any(|r| r.exact_ms.is_some());
    let mut s = String::from("pair,status,instances,feasible,unknown,agree");
    if timed {
        s.push_str(",poly_ms,exact_ms");
    }
    s.push('\n');
    let opt = |x: Option<f64>| x.map(|v| format!("{v:.3}")).unwrap_or_default();
    for r in rows {
        let agree = r.agree.map(|a| a.to_string()).unwrap_or_default();
        write!(s, "\"{}\",{},{},{},{},{}", r.pair, r.status, r.instances, r.feasible, r.unknown, agree).unwrap();
        if timed {
            write!(s, ",{},{}", opt(r.poly_ms), opt(r.exact_ms)).unwrap();
        }
        s.push('\n');
    }
    s
}
