//! Polynomial solvers for the tractable pairs and the dispatcher that routes
//! any pair to them (or to exact search).

mod claw_co_c4;
mod families;
mod partition;
mod toolkit;

pub use claw_co_c4::{hub, solve_claw_co_c4, solve_co_claw_c4, ClawCoC4Witness};
pub use families::{
    solve_claw_co_claw, solve_diamond_closure, solve_k4_cok4, solve_p4_c4, solve_p4_co_diamond, solve_p4_co_small,
    solve_paw_c4, solve_paw_claw, solve_paw_co_claw, solve_paw_co_paw, solve_pseudo_split, RAMSEY_3_3, RAMSEY_3_4,
    RAMSEY_4_4,
};
pub use partition::{
    complete_bipartite_on, complete_bipartite_sandwich, complete_bipartite_sides, pseudo_split_partition,
    split_sandwich, split_witness, PseudoSplitPartition,
};
pub use toolkit::{closure_solve, preprocess_components, strip_universal, Part, Stripped};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::catalog::{is_complement_of, native_pair, pair_status, Algorithm, Status};
use crate::error::{Error, Result};
use crate::exact::solve_exact_with_stats;
use crate::graph::{verify_sandwich, SandwichInstance, Verdict};
use crate::quartet::{ForbiddenFamily, Quartet, Triplet};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Polynomial solver when one exists, otherwise budgeted exact search.
    #[default]
    Auto,
    /// Polynomial solvers only.
    Poly,
    /// Exact search regardless of status.
    Exact,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "auto" => Ok(Mode::Auto),
            "poly" => Ok(Mode::Poly),
            "exact" => Ok(Mode::Exact),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Auto => "auto",
            Mode::Poly => "poly",
            Mode::Exact => "exact",
        })
    }
}

/// Which procedure produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "id", rename_all = "lowercase")]
pub enum Method {
    /// Fewer than four vertices.
    Trivial,
    Poly(Algorithm),
    Exact,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Trivial => f.write_str("trivial"),
            Method::Poly(a) => f.write_str(a.id()),
            Method::Exact => f.write_str("exact"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub method: Method,
    /// The polynomial solver ran on the complemented instance.
    pub complemented: bool,
    /// Search nodes spent by exact search; zero otherwise.
    pub nodes: u64,
}

/// Runs the polynomial algorithm in the orientation it is stated for.
pub fn run_algorithm(algorithm: Algorithm, inst: &SandwichInstance) -> Verdict {
    match algorithm {
        Algorithm::ClosureDiamondK4 => solve_diamond_closure(inst, Quartet::K4),
        Algorithm::ClosureDiamondC4 => solve_diamond_closure(inst, Quartet::C4),
        Algorithm::ClosureDiamondPaw => solve_diamond_closure(inst, Quartet::Paw),
        Algorithm::RamseyBound => solve_k4_cok4(inst),
        Algorithm::UniversalStrip => solve_p4_c4(inst),
        Algorithm::CoComponentSplit => unreachable!("needs the second member"),
        Algorithm::P4CoDiamond => solve_p4_co_diamond(inst),
        Algorithm::PawC4 => solve_paw_c4(inst),
        Algorithm::PawClaw => solve_paw_claw(inst),
        Algorithm::PawCoClaw => solve_paw_co_claw(inst),
        Algorithm::PawCoPaw => solve_paw_co_paw(inst),
        Algorithm::PseudoSplit => solve_pseudo_split(inst),
        Algorithm::ClawCoClaw => solve_claw_co_claw(inst),
        Algorithm::ClawCoC4 => solve_claw_co_c4(inst),
    }
}

fn run_canonical(pair: [Quartet; 2], algorithm: Algorithm, inst: &SandwichInstance) -> Verdict {
    if algorithm == Algorithm::CoComponentSplit {
        let f2 = if pair.contains(&Quartet::CoClaw) {
            Triplet::K3
        } else {
            Triplet::P3
        };
        return solve_p4_co_small(inst, f2);
    }
    run_algorithm(algorithm, inst)
}

/// Decides the sandwich problem for the family `{a, b}`.
pub fn solve(inst: &SandwichInstance, a: Quartet, b: Quartet, mode: Mode, budget: u64) -> Result<Outcome> {
    let family = ForbiddenFamily::pair(a, b)?;
    let entry = pair_status(a, b)?;
    let outcome = if inst.n() <= 3 {
        Outcome {
            verdict: Verdict::Feasible(inst.lower().clone()),
            method: Method::Trivial,
            complemented: false,
            nodes: 0,
        }
    } else {
        match (mode, entry.status) {
            (Mode::Exact, _) | (Mode::Auto, Status::NpComplete(_) | Status::Open) => {
                let (verdict, stats) = solve_exact_with_stats(inst, &family, budget)?;
                Outcome {
                    verdict,
                    method: Method::Exact,
                    complemented: false,
                    nodes: stats.nodes,
                }
            }
            (Mode::Poly, Status::NpComplete(_) | Status::Open) => {
                return Err(Error::Unsupported(format!(
                    "{family} is {}; no polynomial solver",
                    entry.status.label()
                )))
            }
            (_, Status::Poly(algorithm)) => {
                let (pair, _) = native_pair(a, b)?.expect("known pair");
                let complemented = is_complement_of(a, b, pair);
                let verdict = if complemented {
                    run_canonical(pair, algorithm, &inst.complement()).map_witness(|g| g.complement())
                } else {
                    run_canonical(pair, algorithm, inst)
                };
                Outcome {
                    verdict,
                    method: Method::Poly(algorithm),
                    complemented,
                    nodes: 0,
                }
            }
        }
    };
    if let Some(g) = outcome.verdict.witness() {
        assert!(
            verify_sandwich(inst, g, &family)?,
            "{} returned an invalid witness {g:?} for {inst:?}",
            outcome.method
        );
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::DEFAULT_BUDGET;
    use crate::graph::Graph;

    #[test]
    fn complement_routing() {
        // G1 = co-diamond is {diamond, K4}-free after complementing
        let inst = SandwichInstance::fixed(Quartet::Diamond.graph().complement());
        let out = solve(&inst, Quartet::CoDiamond, Quartet::CoK4, Mode::Auto, DEFAULT_BUDGET).unwrap();
        assert!(out.complemented);
        assert_eq!(out.verdict, Verdict::Infeasible);
        let inst = SandwichInstance::fixed(Graph::path(4));
        let out = solve(&inst, Quartet::CoDiamond, Quartet::CoK4, Mode::Auto, DEFAULT_BUDGET).unwrap();
        assert!(out.verdict.is_feasible());
    }

    #[test]
    fn open_pairs_need_exact() {
        let inst = SandwichInstance::from_graphs(Graph::empty(5), Graph::complete(5)).unwrap();
        let out = solve(&inst, Quartet::Claw, Quartet::K4, Mode::Auto, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.method, Method::Exact);
        assert!(matches!(
            solve(&inst, Quartet::Claw, Quartet::K4, Mode::Poly, DEFAULT_BUDGET),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn already_free_lower_is_kept() {
        let inst = SandwichInstance::from_graphs(Graph::star(3), Graph::complete(4)).unwrap();
        let out = solve(&inst, Quartet::P4, Quartet::C4, Mode::Poly, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.verdict, Verdict::Feasible(Graph::star(3)));
    }
}
