use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{ReductionOutput, Target};
use crate::error::{Error, Result};
use crate::graph::{Graph, SandwichInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Literal {
        Literal { var, positive: false }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { "" } else { "-" };
        write!(f, "{sign}{}", self.var + 1)
    }
}

/// Formula in which every clause needs exactly one true literal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneInThreeInstance {
    n: usize,
    clauses: Vec<[Literal; 3]>,
}

impl OneInThreeInstance {
    pub fn new(n: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            if let Some(l) = clause.iter().find(|l| l.var >= n) {
                return Err(Error::Precondition(format!(
                    "clause {j} uses variable {} but the formula has {n}",
                    l.var
                )));
            }
        }
        Ok(OneInThreeInstance { n, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().filter(|l| l.holds(assignment)).count() == 1)
    }

    /// DIMACS-like text: `p oneinthree <vars> <clauses>`, then three signed
    /// 1-based literals per line, optionally terminated by `0`. `c` lines are
    /// comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header = None;
        let mut clauses = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let err = |message: String| Error::Parse { line: line_no, message };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens[0] == "p" {
                if tokens.len() != 4 || tokens[1] != "oneinthree" {
                    return Err(err("expected `p oneinthree <vars> <clauses>`".into()));
                }
                let vars = tokens[2].parse().map_err(|_| err(format!("bad variable count `{}`", tokens[2])))?;
                let count: usize = tokens[3].parse().map_err(|_| err(format!("bad clause count `{}`", tokens[3])))?;
                header = Some((vars, count));
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(err("clause before header".into()));
            };
            let mut lits = Vec::new();
            for t in tokens {
                let x: i64 = t.parse().map_err(|_| err(format!("bad literal `{t}`")))?;
                if x == 0 {
                    break;
                }
                let var = x.unsigned_abs() as usize - 1;
                if var >= vars {
                    return Err(err(format!("literal {x} exceeds {vars} variables")));
                }
                lits.push(Literal { var, positive: x > 0 });
            }
            let clause: [Literal; 3] = lits
                .try_into()
                .map_err(|l: Vec<Literal>| err(format!("clause has {} literals, expected 3", l.len())))?;
            clauses.push(clause);
        }
        let (vars, count) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing `p oneinthree` header".into(),
        })?;
        if count != clauses.len() {
            return Err(Error::Parse {
                line: 0,
                message: format!("header announces {count} clauses, found {}", clauses.len()),
            });
        }
        OneInThreeInstance::new(vars, clauses)
    }

    /// Uniform random formula; literals may repeat inside a clause.
    pub fn random(n: usize, m: usize, rng: &mut impl Rng) -> Self {
        assert!(n > 0 || m == 0, "clauses need variables");
        let mut lit = || Literal {
            var: rng.gen_range(0..n),
            positive: rng.gen_bool(0.5),
        };
        let clauses = (0..m).map(|_| [lit(), lit(), lit()]).collect();
        OneInThreeInstance { n, clauses }
    }
}

impl fmt::Display for OneInThreeInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p oneinthree {} {}", self.n, self.clauses.len())?;
        for [a, b, c] in &self.clauses {
            writeln!(f, "{a} {b} {c} 0")?;
        }
        Ok(())
    }
}

pub const ONE_IN_THREE_LIMIT: usize = 20;

/// Exhaustive satisfiability check over all assignments.
pub fn oracle_one_in_three(f: &OneInThreeInstance) -> Result<bool> {
    Ok(one_in_three_model(f)?.is_some())
}

/// First satisfying assignment in binary counting order.
pub fn one_in_three_model(f: &OneInThreeInstance) -> Result<Option<Vec<bool>>> {
    if f.n > ONE_IN_THREE_LIMIT {
        return Err(Error::OracleLimit(format!("{} variables (limit {ONE_IN_THREE_LIMIT})", f.n)));
    }
    Ok((0u32..1 << f.n)
        .map(|bits| (0..f.n).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
        .find(|a| f.is_satisfied_by(a)))
}

/// Offsets of the eight clause vertices.
const C: usize = 0;
const D: usize = 1;
const LIT: usize = 2;
const PARTNER: usize = 5;

/// Vertex of the `k`-th literal of clause `j`.
pub fn literal_vertex(j: usize, k: usize) -> usize {
    8 * j + LIT + k
}

/// The co-matched bipartite sandwich instance for `f`.
///
/// Each literal that occurs at least twice while its negation never occurs
/// gets an extra anchor vertex with mandatory edges to all of its occurrences,
/// so that those occurrences land on the same side.
pub fn reduce_one_in_three(f: &OneInThreeInstance) -> ReductionOutput {
    let m = f.clauses.len();
    let mut occurrences: BTreeMap<Literal, Vec<usize>> = BTreeMap::new();
    for (j, clause) in f.clauses.iter().enumerate() {
        for (k, &l) in clause.iter().enumerate() {
            occurrences.entry(l).or_default().push(literal_vertex(j, k));
        }
    }
    let anchored: Vec<Literal> = occurrences
        .iter()
        .filter(|(l, occ)| occ.len() >= 2 && !occurrences.contains_key(&Literal { var: l.var, positive: !l.positive }))
        .map(|(&l, _)| l)
        .collect();
    let n = 8 * m + anchored.len();

    let mut lower = Graph::empty(n);
    let mut upper = Graph::complete(n);
    let mut labels = Vec::with_capacity(n);
    for j in 0..m {
        let b = 8 * j;
        let idx = j + 1;
        labels.push(format!("c{idx}"));
        labels.push(format!("d{idx}"));
        for name in ["u", "v", "w"] {
            labels.push(format!("{name}{idx}"));
        }
        for name in ["u", "v", "w"] {
            labels.push(format!("p{idx}({name})"));
        }
        lower.add_edge(b + C, b + D);
        for k in 0..3 {
            lower.add_edge(b + LIT + k, b + PARTNER + k);
            upper.remove_edge(b + C, b + LIT + k);
            upper.remove_edge(b + D, b + PARTNER + k);
            for k2 in (0..3).filter(|&k2| k2 != k) {
                upper.remove_edge(b + LIT + k, b + PARTNER + k2);
            }
        }
        for i in 0..m {
            lower.add_edge(b + D, 8 * i + C);
        }
    }
    for (&l, occ) in &occurrences {
        if !l.positive {
            continue;
        }
        if let Some(neg) = occurrences.get(&Literal::neg(l.var)) {
            for &x in occ {
                for &y in neg {
                    lower.add_edge(x, y);
                }
            }
        }
    }
    for (a, l) in anchored.iter().enumerate() {
        let anchor = 8 * m + a;
        labels.push(format!("anchor({l})"));
        for &x in &occurrences[l] {
            lower.add_edge(anchor, x);
        }
    }

    let instance = SandwichInstance::from_graphs(lower, upper).expect("mandatory edges avoid every forbidden set");
    let mut meta = BTreeMap::new();
    meta.insert("source".into(), json!("one-in-three"));
    meta.insert("variables".into(), json!(f.n));
    meta.insert("clauses".into(), json!(m));
    meta.insert("anchors".into(), json!(anchored.len()));
    meta.insert("labels".into(), json!(labels));
    ReductionOutput {
        instance,
        family: Target::CoMatchedBipartite,
        meta,
    }
}

/// The co-matched witness built from a satisfying assignment: the true side
/// holds every `d`, the true literal vertices and the partners of false
/// literals; the graph keeps every permitted pair that crosses.
pub fn co_matched_witness(f: &OneInThreeInstance, out: &ReductionOutput, assignment: &[bool]) -> (Graph, Vec<bool>) {
    let inst = &out.instance;
    let mut side = vec![false; inst.n()];
    for (j, clause) in f.clauses.iter().enumerate() {
        side[8 * j + D] = true;
        for (k, l) in clause.iter().enumerate() {
            if l.holds(assignment) {
                side[8 * j + LIT + k] = true;
            } else {
                side[8 * j + PARTNER + k] = true;
            }
        }
    }
    // anchors sit opposite their occurrences
    for a in 8 * f.clauses.len()..inst.n() {
        let x = inst.lower().neighbors(a).next().expect("anchors have occurrences");
        side[a] = !side[x];
    }
    (crossing_graph(inst, &side), side)
}

fn crossing_graph(inst: &SandwichInstance, side: &[bool]) -> Graph {
    let mut g = Graph::empty(inst.n());
    for u in 0..inst.n() {
        for v in u + 1..inst.n() {
            if side[u] != side[v] && inst.is_allowed(u, v) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Bipartite with sides `side`, and every vertex misses at most one vertex
/// of the other side.
pub fn is_co_matched_with(g: &Graph, side: &[bool]) -> bool {
    let n = g.n();
    (0..n).all(|u| {
        let mut missing = 0;
        for v in (0..n).filter(|&v| v != u) {
            let edge = g.has_edge(u, v);
            if side[u] == side[v] && edge {
                return false;
            }
            if side[u] != side[v] && !edge {
                missing += 1;
            }
        }
        missing <= 1
    })
}

pub const CO_MATCHED_COMPONENT_LIMIT: usize = 24;

/// Whether some bipartition makes `g` co-matched.
pub fn is_co_matched(g: &Graph) -> Result<bool> {
    Ok(co_matched_sandwich(&SandwichInstance::fixed(g.clone()))?.is_some())
}

/// Brute-force co-matched sandwich: tries every side assignment compatible
/// with the mandatory graph's 2-colorings and keeps all permitted crossing
/// pairs. Returns the graph and its sides.
pub fn co_matched_sandwich(inst: &SandwichInstance) -> Result<Option<(Graph, Vec<bool>)>> {
    let n = inst.n();
    let lower = inst.lower();
    let Some(color) = lower.bipartition() else {
        return Ok(None);
    };
    let comps = lower.components();
    if comps.len() > CO_MATCHED_COMPONENT_LIMIT {
        return Err(Error::OracleLimit(format!(
            "{} mandatory components (limit {CO_MATCHED_COMPONENT_LIMIT})",
            comps.len()
        )));
    }
    let mut comp_of = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let flips = comps.len().saturating_sub(1);
    for mask in 0u32..1 << flips {
        let side: Vec<bool> = (0..n)
            .map(|v| color[v] ^ (comp_of[v] > 0 && mask >> (comp_of[v] - 1) & 1 == 1))
            .collect();
        let fine = (0..n).all(|u| (0..n).filter(|&v| side[v] != side[u] && !inst.is_allowed(u, v)).count() <= 1);
        if fine {
            return Ok(Some((crossing_graph(inst, &side), side)));
        }
    }
    Ok(None)
}
