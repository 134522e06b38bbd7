//! Partition-shaped sandwiches: complete bipartite, split and pseudo-split.

use std::collections::VecDeque;

use crate::exact::{solve_two_sat, Lit, TwoSatFormula};
use crate::graph::{Graph, SandwichInstance, Verdict};
use crate::quartet::{ForbiddenFamily, Quartet};

/// Complete bipartite graph between `side == false` and `side == true`.
pub fn complete_bipartite_on(side: &[bool]) -> Graph {
    let mut g = Graph::empty(side.len());
    for u in 0..side.len() {
        for v in u + 1..side.len() {
            if side[u] != side[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Sides for a complete bipartite sandwich: mandatory edges must cross,
/// forbidden pairs must not. Components of that constraint graph are colored
/// by BFS from their smallest vertex, which goes to the `false` side.
#[allow(clippy::needless_range_loop)]
pub fn complete_bipartite_sides(inst: &SandwichInstance) -> Option<Vec<bool>> {
    let n = inst.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for v in 0..n {
                if v == u {
                    continue;
                }
                let want = if inst.is_mandatory(u, v) {
                    !su
                } else if !inst.is_allowed(u, v) {
                    su
                } else {
                    continue;
                };
                match side[v] {
                    None => {
                        side[v] = Some(want);
                        queue.push_back(v);
                    }
                    Some(x) if x != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

/// Complete bipartite graph (one side possibly empty) between the bounds.
pub fn complete_bipartite_sandwich(inst: &SandwichInstance) -> Verdict {
    match complete_bipartite_sides(inst) {
        Some(side) => Verdict::Feasible(complete_bipartite_on(&side)),
        None => Verdict::Infeasible,
    }
}

/// Clique/stable partition, `true` meaning the clique side, with forced
/// members on either side. Mandatory edges may not lie inside the stable side
/// and forbidden pairs may not lie inside the clique.
pub fn split_sandwich(inst: &SandwichInstance, forced_k: &[usize], forced_s: &[usize]) -> Option<Vec<bool>> {
    let n = inst.n();
    let mut f = TwoSatFormula::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if inst.is_mandatory(u, v) {
                f.add_clause(Lit::pos(u), Lit::pos(v));
            } else if !inst.is_allowed(u, v) {
                f.add_clause(Lit::neg(u), Lit::neg(v));
            }
        }
    }
    for &v in forced_k {
        f.add_unit(Lit::pos(v));
    }
    for &v in forced_s {
        f.add_unit(Lit::neg(v));
    }
    solve_two_sat(&f)
}

/// Mandatory graph plus a clique on the `true` side.
pub fn split_witness(inst: &SandwichInstance, in_k: &[bool]) -> Graph {
    let mut g = inst.lower().clone();
    let k: Vec<usize> = (0..inst.n()).filter(|&v| in_k[v]).collect();
    for (i, &u) in k.iter().enumerate() {
        for &v in &k[i + 1..] {
            g.add_edge(u, v);
        }
    }
    g
}

/// Clique `k`, stable set `s`, and an optional five-cycle `c` joined to `k`
/// and anticomplete to `s`. `c` is empty or lists the cycle in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoSplitPartition {
    pub k: Vec<usize>,
    pub s: Vec<usize>,
    pub c: Vec<usize>,
}

impl PseudoSplitPartition {
    /// Clique on `k`, the five-cycle, all `c`-`k` pairs, and the mandatory
    /// `k`-`s` edges.
    pub fn witness(&self, inst: &SandwichInstance) -> Graph {
        let mut g = Graph::empty(inst.n());
        for (i, &u) in self.k.iter().enumerate() {
            for &v in &self.k[i + 1..] {
                g.add_edge(u, v);
            }
            for &v in &self.s {
                if inst.is_mandatory(u, v) {
                    g.add_edge(u, v);
                }
            }
            for &v in &self.c {
                g.add_edge(u, v);
            }
        }
        for i in 0..self.c.len() {
            g.add_edge(self.c[i], self.c[(i + 1) % self.c.len()]);
        }
        g
    }
}

/// The twelve cyclic orders of five labeled vertices, each starting at index 0
/// with its second entry below its last.
fn five_cycles() -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    let rest = [1, 2, 3, 4];
    for a in rest {
        for b in rest {
            for c in rest {
                for d in rest {
                    let p = [0, a, b, c, d];
                    let mut seen = [false; 5];
                    if p.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) && a < d {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// First pseudo-split partition between the bounds: the split case, then
/// every 5-set and cycle order in lexicographic order.
pub fn pseudo_split_partition(inst: &SandwichInstance) -> Option<PseudoSplitPartition> {
    let n = inst.n();
    let all: Vec<usize> = (0..n).collect();
    if let Some(in_k) = split_sandwich(inst, &[], &[]) {
        return Some(partition_from(&all, &in_k, Vec::new()));
    }
    let fam = ForbiddenFamily::pair(Quartet::C4, Quartet::CoC4).unwrap();
    let cycles = five_cycles();
    let mut set = [0usize; 5];
    let mut found = None;
    for_each_five_subset(n, &mut set, 0, 0, &mut |c| {
        for order in &cycles {
            let cyc: Vec<usize> = order.iter().map(|&i| c[i]).collect();
            if let Some(p) = try_cycle(inst, &cyc) {
                let w = p.witness(inst);
                if fam.is_free(&w) && inst.admits(&w) {
                    found = Some(p);
                    return true;
                }
            }
        }
        false
    });
    found
}

fn for_each_five_subset(n: usize, set: &mut [usize; 5], depth: usize, start: usize, f: &mut impl FnMut(&[usize; 5]) -> bool) -> bool {
    if depth == 5 {
        return f(set);
    }
    for v in start..n {
        set[depth] = v;
        if for_each_five_subset(n, set, depth + 1, v + 1, f) {
            return true;
        }
    }
    false
}

fn try_cycle(inst: &SandwichInstance, cyc: &[usize]) -> Option<PseudoSplitPartition> {
    for i in 0..5 {
        for j in i + 1..5 {
            let (u, v) = (cyc[i], cyc[j]);
            let on_cycle = j == i + 1 || (i == 0 && j == 4);
            if on_cycle && !inst.is_allowed(u, v) || !on_cycle && inst.is_mandatory(u, v) {
                return None;
            }
        }
    }
    let rest: Vec<usize> = (0..inst.n()).filter(|v| !cyc.contains(v)).collect();
    let (mut forced_k, mut forced_s) = (Vec::new(), Vec::new());
    for (i, &v) in rest.iter().enumerate() {
        let touches = cyc.iter().any(|&c| inst.is_mandatory(v, c));
        let full = cyc.iter().all(|&c| inst.is_allowed(v, c));
        match (touches, full) {
            (true, false) => return None,
            (true, true) => forced_k.push(i),
            (false, false) => forced_s.push(i),
            (false, true) => {}
        }
    }
    let sub = inst.induced(&rest);
    let in_k = split_sandwich(&sub, &forced_k, &forced_s)?;
    Some(partition_from(&rest, &in_k, cyc.to_vec()))
}

fn partition_from(vertices: &[usize], in_k: &[bool], c: Vec<usize>) -> PseudoSplitPartition {
    let (k, s) = vertices.iter().enumerate().fold((Vec::new(), Vec::new()), |(mut k, mut s), (i, &v)| {
        if in_k[i] {
            k.push(v)
        } else {
            s.push(v)
        }
        (k, s)
    });
    PseudoSplitPartition { k, s, c }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_examples() {
        let edge = SandwichInstance::fixed(Graph::path(2));
        assert_eq!(complete_bipartite_sandwich(&edge), Verdict::Feasible(Graph::path(2)));
        assert_eq!(complete_bipartite_sandwich(&SandwichInstance::fixed(Graph::complete(3))), Verdict::Infeasible);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let inst = SandwichInstance::from_graphs(two_k2.clone(), Graph::complete(4)).unwrap();
        let w = complete_bipartite_sandwich(&inst);
        let w = w.witness().unwrap();
        assert!(two_k2.is_subgraph_of(w) && w.is_bipartite());
    }

    #[test]
    fn split_examples() {
        let k3 = SandwichInstance::fixed(Graph::complete(3));
        let in_k = split_sandwich(&k3, &[], &[]).unwrap();
        assert!(in_k.iter().filter(|&&x| x).count() >= 2);
        assert_eq!(split_witness(&k3, &in_k), Graph::complete(3));
        assert!(split_sandwich(&SandwichInstance::fixed(Graph::cycle(4)), &[], &[]).is_none());
        let p3 = SandwichInstance::from_graphs(Graph::path(3), Graph::complete(3)).unwrap();
        let in_k = split_sandwich(&p3, &[], &[]).unwrap();
        assert!(p3.admits(&split_witness(&p3, &in_k)));
    }

    #[test]
    fn twelve_cycle_orders() {
        let c = five_cycles();
        assert_eq!(c.len(), 12);
    }

    #[test]
    fn pseudo_split_examples() {
        let c5 = SandwichInstance::fixed(Graph::cycle(5));
        let p = pseudo_split_partition(&c5).unwrap();
        assert_eq!(p.c.len(), 5);
        assert_eq!(p.witness(&c5), Graph::cycle(5));
        assert!(pseudo_split_partition(&SandwichInstance::fixed(Graph::cycle(4))).is_none());
    }
}
