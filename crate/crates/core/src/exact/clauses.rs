use std::collections::HashSet;

use super::Lit;
use crate::graph::SandwichInstance;
use crate::quartet::{scan_quads, ForbiddenFamily, Quartet};

/// An optional pair `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeVariable {
    pub u: usize,
    pub v: usize,
}

/// Pattern-exclusion clauses over the optional pairs of an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseSet {
    variables: Vec<EdgeVariable>,
    clauses: Vec<Vec<Lit>>,
    infeasible: bool,
}

impl ClauseSet {
    pub fn variables(&self) -> &[EdgeVariable] {
        &self.variables
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    /// Some 4-set is forced onto a forbidden pattern by the fixed pairs alone.
    pub fn is_trivially_infeasible(&self) -> bool {
        self.infeasible
    }
}

/// Pair slots of a sorted 4-set `[a,b,c,d]` in mask-bit order.
const SLOTS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// One clause per 4-set and per completion of its open pairs that lands on a
/// family member; fixed pairs are folded in and duplicates dropped.
pub fn compile_clauses(inst: &SandwichInstance, family: &ForbiddenFamily) -> ClauseSet {
    let n = inst.n();
    let variables: Vec<EdgeVariable> = inst.optional_edges().into_iter().map(|(u, v)| EdgeVariable { u, v }).collect();
    let mut index = vec![u32::MAX; n * n];
    for (i, e) in variables.iter().enumerate() {
        index[e.u * n + e.v] = i as u32;
    }

    let mut member = [false; 64];
    for m in 0..64u8 {
        member[m as usize] = family.contains(Quartet::classify(m));
    }

    let mut seen: HashSet<Vec<Lit>> = HashSet::new();
    let mut clauses = Vec::new();
    let mut infeasible = false;
    let mut open: Vec<(usize, u32)> = Vec::with_capacity(6);

    // scan_quads reports the mask of the lower graph; the open bits vary over
    // the optional pairs inside the 4-set.
    scan_quads(inst.lower(), |t, lower_mask| {
        open.clear();
        for (bit, &(i, j)) in SLOTS.iter().enumerate() {
            let var = index[t[i] * n + t[j]];
            if var != u32::MAX {
                open.push((bit, var));
            }
        }
        for choice in 0u32..1 << open.len() {
            let mut mask = lower_mask;
            for (k, &(bit, _)) in open.iter().enumerate() {
                if choice >> k & 1 == 1 {
                    mask |= 1 << bit;
                }
            }
            if !member[mask as usize] {
                continue;
            }
            if open.is_empty() {
                infeasible = true;
                return Some(());
            }
            // forbid this exact completion: some open pair must differ
            let mut clause: Vec<Lit> = open
                .iter()
                .enumerate()
                .map(|(k, &(_, var))| Lit::new(var as usize, choice >> k & 1 == 0))
                .collect();
            clause.sort_unstable();
            if seen.insert(clause.clone()) {
                clauses.push(clause);
            }
        }
        None
    });

    if infeasible {
        clauses.clear();
        clauses.push(Vec::new());
    }
    ClauseSet {
        variables,
        clauses,
        infeasible,
    }
}
