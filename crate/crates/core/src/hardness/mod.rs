//! Instance generators for the hard pairs, their gadgets, and brute-force
//! oracles for the source problems.

mod chain;
mod coloring;
mod gadgets;
mod one_in_three;

pub use chain::{
    chain_sandwich_witness, chain_source, matching_chain_source, oracle_chain_sandwich, random_chain_graph,
    CHAIN_OPTIONAL_LIMIT,
};
pub use coloring::{
    check_set_structure, oracle_3col, reduce_3col, three_coloring, three_coloring_witness, ColoringVariant,
    DEFAULT_SET_SIZE, THREE_COLOR_LIMIT,
};
pub use gadgets::{gadget, GadgetKind};
pub use one_in_three::{
    co_matched_sandwich, co_matched_witness, is_co_matched, is_co_matched_with, literal_vertex, one_in_three_model,
    oracle_one_in_three, reduce_one_in_three, Literal, OneInThreeInstance, CO_MATCHED_COMPONENT_LIMIT,
    ONE_IN_THREE_LIMIT,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Graph, SandwichInstance};
use crate::quartet::ForbiddenFamily;

/// Class a generated instance is posed for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "members", rename_all = "kebab-case")]
pub enum Target {
    Family(ForbiddenFamily),
    /// Bipartite graphs where every vertex misses at most one vertex of the
    /// other side.
    CoMatchedBipartite,
}

impl Target {
    pub fn family(&self) -> Option<&ForbiddenFamily> {
        match self {
            Target::Family(f) => Some(f),
            Target::CoMatchedBipartite => None,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Family(fam) => write!(f, "{fam}"),
            Target::CoMatchedBipartite => f.write_str("co-matched-bipartite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionOutput {
    pub instance: SandwichInstance,
    pub family: Target,
    pub meta: BTreeMap<String, Value>,
}

/// Glues `kind` next to `src`: the gadget is fixed, and every pair between a
/// source vertex and an unsealed gadget vertex becomes optional. Source
/// vertices keep their indices; gadget vertices follow.
pub fn wrap_gadget(src: &SandwichInstance, kind: GadgetKind) -> Result<ReductionOutput> {
    let n = src.n();
    let lower = src.lower();
    match kind {
        GadgetKind::P4 | GadgetKind::Pprime => {
            if n < 8 {
                return Err(Error::Precondition(format!("source must have at least 8 vertices, got {n}")));
            }
            if let Some(v) = (0..n).find(|&v| lower.degree(v) == 0) {
                return Err(Error::Precondition(format!("vertex {v} is isolated in the mandatory graph")));
            }
        }
        GadgetKind::Ech4 => {
            if let Some(v) = (0..n).find(|&v| lower.degree(v) != 1) {
                return Err(Error::Precondition(format!(
                    "mandatory edges must form a perfect matching; vertex {v} has degree {}",
                    lower.degree(v)
                )));
            }
        }
        GadgetKind::Ch3 => {}
    }
    let gadget_graph = gadget(kind);
    let total = n + gadget_graph.n();
    let new_lower = lower.disjoint_union(&gadget_graph);
    let mut upper = src.upper().disjoint_union(&gadget_graph);
    let mut cross = 0;
    for x in (0..gadget_graph.n()).filter(|x| !kind.sealed().contains(x)) {
        for v in 0..n {
            upper.add_edge(v, n + x);
            cross += 1;
        }
    }
    let instance = SandwichInstance::from_graphs(new_lower, upper)?;
    debug_assert_eq!(instance.n(), total);
    let mut meta = BTreeMap::new();
    meta.insert("source".into(), json!("wrap"));
    meta.insert("gadget".into(), json!(kind.name()));
    meta.insert("source_order".into(), json!(n));
    meta.insert("cross_pairs".into(), json!(cross));
    meta.insert("gadget_labels".into(), json!(kind.labels()));
    Ok(ReductionOutput {
        instance,
        family: Target::Family(kind.family()),
        meta,
    })
}

fn join(g: &mut Graph, xs: &[usize], ys: &[usize]) {
    for &x in xs {
        for &y in ys {
            g.add_edge(x, y);
        }
    }
}

/// Lifts a solution of the source to a solution of the wrapped instance.
///
/// For the chain gadgets `solution` must be a chain graph and `sides` its
/// bipartition; for the path gadgets it must be a co-matched graph with sides
/// `sides`. The sides decide where the gadget vertices attach:
/// * Ch3: `a1..a3` join the `true` side;
/// * ECh4: `b, b1..b4` join the `true` side and `c` joins the `false` side;
/// * P4 / P′: the `a` vertices join the `true` side and the `b` vertices the
///   `false` side.
pub fn lift_witness(kind: GadgetKind, solution: &Graph, sides: &[bool]) -> Graph {
    let n = solution.n();
    let mut g = solution.disjoint_union(&gadget(kind));
    let at = |xs: &[usize]| xs.iter().map(|&x| n + x).collect::<Vec<_>>();
    let falses: Vec<usize> = (0..n).filter(|&v| !sides[v]).collect();
    let trues: Vec<usize> = (0..n).filter(|&v| sides[v]).collect();
    match kind {
        GadgetKind::Ch3 => join(&mut g, &trues, &at(&[0, 1, 2])),
        GadgetKind::Ech4 => {
            join(&mut g, &trues, &at(&[1, 3, 4, 5, 6]));
            join(&mut g, &falses, &at(&[2]));
        }
        GadgetKind::P4 => {
            join(&mut g, &trues, &at(&[0, 2]));
            join(&mut g, &falses, &at(&[1, 3]));
        }
        GadgetKind::Pprime => {
            join(&mut g, &trues, &at(&[0, 1]));
            join(&mut g, &falses, &at(&[2, 3, 4]));
        }
    }
    g
}
