use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::format::GraphDocument;
use crate::error::{Error, Result};
use crate::graph::{SandwichInstance, Verdict};
use crate::poly::{solve, Method, Mode};
use crate::quartet::Quartet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportVerdict {
    Feasible,
    Infeasible,
    /// Budget exhausted or no solver for the requested mode.
    Unknown,
}

impl ReportVerdict {
    /// Process exit code for the verdict.
    pub fn exit_code(self) -> i32 {
        match self {
            ReportVerdict::Feasible => 0,
            ReportVerdict::Infeasible => 1,
            ReportVerdict::Unknown => 2,
        }
    }
}

/// Result of one solve, as printed by the CLI.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub pair: [Quartet; 2],
    pub verdict: ReportVerdict,
    pub witness: Option<GraphDocument>,
    pub method: Option<Method>,
    pub complemented: bool,
    pub nodes: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Solves and packages the outcome. Budget exhaustion and unsupported modes
/// become `Unknown` reports; other errors are returned.
pub fn run(
    inst: &SandwichInstance,
    pair: [Quartet; 2],
    mode: Mode,
    budget: u64,
    timings: bool,
) -> Result<RunReport> {
    let start = Instant::now();
    let result = solve(inst, pair[0], pair[1], mode, budget);
    let elapsed_ms = timings.then(|| start.elapsed().as_secs_f64() * 1e3);
    let report = match result {
        Ok(out) => RunReport {
            pair,
            verdict: if out.verdict.is_feasible() {
                ReportVerdict::Feasible
            } else {
                ReportVerdict::Infeasible
            },
            witness: match &out.verdict {
                Verdict::Feasible(g) => Some(GraphDocument::new(g)),
                Verdict::Infeasible => None,
            },
            method: Some(out.method),
            complemented: out.complemented,
            nodes: out.nodes,
            note: None,
            elapsed_ms,
        },
        Err(e @ (Error::BudgetExceeded(_) | Error::Unsupported(_))) => RunReport {
            pair,
            verdict: ReportVerdict::Unknown,
            witness: None,
            method: None,
            complemented: false,
            nodes: match e {
                Error::BudgetExceeded(b) => b,
                _ => 0,
            },
            note: Some(e.to_string()),
            elapsed_ms,
        },
        Err(e) => return Err(e),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn witness_iff_feasible() {
        let pair = [Quartet::P4, Quartet::C4];
        let yes = run(&SandwichInstance::fixed(Graph::star(3)), pair, Mode::Auto, 10, false).unwrap();
        assert_eq!(yes.verdict, ReportVerdict::Feasible);
        assert!(yes.witness.is_some() && yes.elapsed_ms.is_none());
        let no = run(&SandwichInstance::fixed(Graph::path(4)), pair, Mode::Auto, 10, true).unwrap();
        assert_eq!(no.verdict.exit_code(), 1);
        assert!(no.witness.is_none() && no.elapsed_ms.is_some());
    }

    #[test]
    fn budget_and_unsupported_are_unknown() {
        let inst = SandwichInstance::from_graphs(Graph::empty(7), Graph::complete(7)).unwrap();
        let open = [Quartet::Claw, Quartet::K4];
        let r = run(&inst, open, Mode::Poly, 10, false).unwrap();
        assert_eq!(r.verdict, ReportVerdict::Unknown);
        let hard = [Quartet::C4, Quartet::K4];
        let r = run(&inst, hard, Mode::Exact, 1, false).unwrap();
        assert_eq!(r.verdict, ReportVerdict::Unknown);
        assert!(r.note.unwrap().contains("budget"));
    }
}
