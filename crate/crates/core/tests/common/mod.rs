//! Brute-force oracles written independently of the library's detectors and
//! solvers: quartets are told apart by edge count and degree sequence, and
//! sandwich feasibility enumerates every subset of optional edges.

#![allow(dead_code)]

use quartet_sandwich::{Graph, Quartet, SandwichInstance};
use rand::Rng;

/// Isomorphism class of the graph induced on four vertices.
pub fn classify4(g: &Graph, t: [usize; 4]) -> Quartet {
    let mut deg = [0usize; 4];
    let mut m = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(t[i], t[j]) {
                deg[i] += 1;
                deg[j] += 1;
                m += 1;
            }
        }
    }
    deg.sort_unstable();
    match (m, deg) {
        (0, _) => Quartet::CoK4,
        (1, _) => Quartet::CoDiamond,
        (2, [1, 1, 1, 1]) => Quartet::CoC4,
        (2, _) => Quartet::CoPaw,
        (3, [0, 2, 2, 2]) => Quartet::CoClaw,
        (3, [1, 1, 2, 2]) => Quartet::P4,
        (3, _) => Quartet::Claw,
        (4, [2, 2, 2, 2]) => Quartet::C4,
        (4, _) => Quartet::Paw,
        (5, _) => Quartet::Diamond,
        _ => Quartet::K4,
    }
}

pub fn naive_contains(g: &Graph, members: &[Quartet]) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if members.contains(&classify4(g, [a, b, c, d])) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Every graph between the bounds that avoids `members`, in subset order.
pub fn naive_solutions(inst: &SandwichInstance, members: &[Quartet]) -> Vec<Graph> {
    let optional = inst.optional_edges();
    assert!(optional.len() <= 20, "too many optional edges for enumeration");
    let mut out = Vec::new();
    for mask in 0u32..1 << optional.len() {
        let mut g = inst.lower().clone();
        for (i, &(u, v)) in optional.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        if !naive_contains(&g, members) {
            out.push(g);
        }
    }
    out
}

pub fn naive_feasible(inst: &SandwichInstance, members: &[Quartet]) -> bool {
    let optional = inst.optional_edges();
    (0u32..1 << optional.len()).any(|mask| {
        let mut g = inst.lower().clone();
        for (i, &(u, v)) in optional.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        !naive_contains(&g, members)
    })
}

/// Independent witness check: bounds plus naive freeness.
pub fn naive_verify(inst: &SandwichInstance, g: &Graph, members: &[Quartet]) -> bool {
    g.n() == inst.n() && inst.lower().is_subgraph_of(g) && g.is_subgraph_of(inst.upper()) && !naive_contains(g, members)
}

/// Upper density in 0.2..1, lower density in 0..0.8.
pub fn random_instance(rng: &mut impl Rng, n: usize) -> SandwichInstance {
    let p_upper = rng.gen_range(0.2..1.0);
    let p_lower = rng.gen_range(0.0..0.8);
    let mut lower = Graph::empty(n);
    let mut upper = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_upper) {
                upper.add_edge(u, v);
                if rng.gen_bool(p_lower) {
                    lower.add_edge(u, v);
                }
            }
        }
    }
    SandwichInstance::from_graphs(lower, upper).unwrap()
}

/// Instance with at most `max_optional` optional pairs.
pub fn small_instance(rng: &mut impl Rng, n: usize, max_optional: usize) -> SandwichInstance {
    loop {
        let inst = random_instance(rng, n);
        if inst.optional_edges().len() <= max_optional {
            return inst;
        }
    }
}

pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> k & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

/// Connected graphs via rejection; `p` is the edge probability.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let bits: u64 = (0..n * (n - 1) / 2).map(|k| u64::from(rng.gen_bool(p)) << k).sum();
        let g = graph_from_bits(n, bits);
        if g.is_connected() {
            return g;
        }
    }
}
