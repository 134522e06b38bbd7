use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, SandwichInstance};

pub const CHAIN_OPTIONAL_LIMIT: usize = 12;

/// Exhaustive chain-graph sandwich over all subsets of the optional pairs.
pub fn oracle_chain_sandwich(inst: &SandwichInstance) -> Result<bool> {
    Ok(chain_sandwich_witness(inst)?.is_some())
}

/// First chain graph between the bounds, enumerating optional subsets in
/// binary counting order.
pub fn chain_sandwich_witness(inst: &SandwichInstance) -> Result<Option<Graph>> {
    let optional = inst.optional_edges();
    if optional.len() > CHAIN_OPTIONAL_LIMIT {
        return Err(Error::OracleLimit(format!(
            "{} optional pairs (limit {CHAIN_OPTIONAL_LIMIT})",
            optional.len()
        )));
    }
    for mask in 0u32..1 << optional.len() {
        let mut g = inst.lower().clone();
        for (i, &(u, v)) in optional.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        if g.is_chain_graph() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Random chain graph: both sides get a threshold level, and a cross pair is
/// an edge when the levels sum past `n`.
pub fn random_chain_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let level: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=n)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && level[u] + level[v] > n {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Chain-sandwich source on `n` vertices. Half of the sources hide a chain
/// graph between their bounds; the rest sample the bounds freely, so both
/// verdicts occur.
pub fn chain_source(n: usize, rng: &mut impl Rng) -> SandwichInstance {
    let upper = if rng.gen_bool(0.5) {
        let mut g = random_chain_graph(n, rng);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.2) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    } else {
        random_graph(n, 0.6, rng)
    };
    let planted = rng.gen_bool(0.5);
    let hidden = if planted {
        let mut g = random_chain_graph(n, rng);
        for (u, v) in g.edge_vec() {
            if !upper.has_edge(u, v) {
                g.remove_edge(u, v);
            }
        }
        g
    } else {
        upper.clone()
    };
    let mut lower = Graph::empty(n);
    let keep = if planted { 0.6 } else { 0.85 };
    for (u, v) in hidden.edges() {
        if rng.gen_bool(keep) {
            lower.add_edge(u, v);
        }
    }
    SandwichInstance::from_graphs(lower, upper).expect("lower drawn from upper")
}

/// Chain-sandwich source whose mandatory edges form a perfect matching on an
/// even number of vertices.
pub fn matching_chain_source(n: usize, rng: &mut impl Rng) -> Result<SandwichInstance> {
    if n % 2 == 1 {
        return Err(Error::Precondition(format!("a perfect matching needs an even order, got {n}")));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut lower = Graph::empty(n);
    for pair in order.chunks(2) {
        lower.add_edge(pair[0], pair[1]);
    }
    let density = rng.gen_range(0.0..0.5);
    let mut upper = random_graph(n, density, rng);
    for (u, v) in lower.edges() {
        upper.add_edge(u, v);
    }
    SandwichInstance::from_graphs(lower, upper)
}

fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn oracle_examples() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!oracle_chain_sandwich(&SandwichInstance::fixed(two_k2.clone())).unwrap());
        assert!(oracle_chain_sandwich(&SandwichInstance::fixed(Graph::path(3))).unwrap());
        let loose = SandwichInstance::from_graphs(two_k2, Graph::complete(4)).unwrap();
        assert!(oracle_chain_sandwich(&loose).unwrap());
        let big = SandwichInstance::from_graphs(Graph::empty(6), Graph::complete(6)).unwrap();
        assert!(oracle_chain_sandwich(&big).is_err());
    }

    #[test]
    fn generated_sources() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert!(random_chain_graph(6, &mut rng).is_chain_graph());
            let m = matching_chain_source(4, &mut rng).unwrap();
            assert!((0..4).all(|v| m.lower().degree(v) == 1));
        }
        assert!(matching_chain_source(3, &mut rng).is_err());
    }
}
