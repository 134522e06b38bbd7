use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, SandwichInstance};
use crate::quartet::ForbiddenFamily;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlantMode {
    /// Upper graph first, lower graph sampled from it.
    #[default]
    Random,
    /// An F-free graph first, with both bounds sampled around it.
    Planted,
}

impl FromStr for PlantMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(PlantMode::Random),
            "planted" => Ok(PlantMode::Planted),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for PlantMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlantMode::Random => "random",
            PlantMode::Planted => "planted",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenConfig {
    pub n: usize,
    pub mode: PlantMode,
    /// Edge probability of the upper graph (random mode) or of the extra
    /// optional pairs around the hidden graph (planted mode).
    pub upper_density: f64,
    /// Probability that an edge of the upper or hidden graph is mandatory.
    pub lower_density: f64,
    /// Required for planted mode.
    pub family: Option<ForbiddenFamily>,
}

impl GenConfig {
    pub fn random(n: usize) -> Self {
        GenConfig {
            n,
            mode: PlantMode::Random,
            upper_density: 0.5,
            lower_density: 0.5,
            family: None,
        }
    }

    pub fn planted(n: usize, family: ForbiddenFamily) -> Self {
        GenConfig {
            n,
            mode: PlantMode::Planted,
            upper_density: 0.2,
            lower_density: 0.6,
            family: Some(family),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generated {
    pub instance: SandwichInstance,
    /// Planted F-free graph between the bounds.
    pub hidden: Option<Graph>,
}

pub const PLANT_RESTARTS: usize = 64;

/// Deterministic per `(config, seed)`.
pub fn generate_instance(config: &GenConfig, seed: u64) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = config.n;
    for p in [config.upper_density, config.lower_density] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Precondition(format!("density {p} is not a probability")));
        }
    }
    match config.mode {
        PlantMode::Random => {
            let upper = random_graph(n, config.upper_density, &mut rng);
            let lower = subgraph(&upper, config.lower_density, &mut rng);
            Ok(Generated {
                instance: SandwichInstance::from_graphs(lower, upper)?,
                hidden: None,
            })
        }
        PlantMode::Planted => {
            let family = config
                .family
                .as_ref()
                .ok_or_else(|| Error::Precondition("planted mode needs a family".into()))?;
            let hidden = plant_free_graph(n, family, &mut rng)?;
            let lower = subgraph(&hidden, config.lower_density, &mut rng);
            let mut upper = hidden.clone();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(config.upper_density) {
                        upper.add_edge(u, v);
                    }
                }
            }
            Ok(Generated {
                instance: SandwichInstance::from_graphs(lower, upper)?,
                hidden: Some(hidden),
            })
        }
    }
}

/// Random instance with densities drawn per call; mixes feasible and
/// infeasible instances for every pair at small orders.
pub fn random_instance(n: usize, rng: &mut impl Rng) -> SandwichInstance {
    let p_upper = rng.gen_range(0.2..1.0);
    let p_lower = rng.gen_range(0.0..0.8);
    let upper = random_graph(n, p_upper, rng);
    let lower = subgraph(&upper, p_lower, rng);
    SandwichInstance::from_graphs(lower, upper).expect("lower drawn from upper")
}

/// F-free graph by local search: start from a random graph and toggle a
/// random pair of a remaining occurrence until none is left, restarting a
/// bounded number of times. Falls back to random structured graphs
/// (complete multipartite, complete bipartite minus a matching, and their
/// complements).
pub fn plant_free_graph(n: usize, family: &ForbiddenFamily, rng: &mut impl Rng) -> Result<Graph> {
    let steps = 40 * n * n + 100;
    for _ in 0..PLANT_RESTARTS {
        let density = rng.gen_range(0.1..0.9);
        let mut g = random_graph(n, density, rng);
        for _ in 0..steps {
            let Some((_, quad)) = family.find_occurrence(&g) else {
                return Ok(g);
            };
            let pairs: Vec<(usize, usize)> = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .map(|(i, j)| (quad[i], quad[j]))
                .collect();
            let &(u, v) = pairs.choose(rng).unwrap();
            let present = g.has_edge(u, v);
            g.set_edge(u, v, !present);
        }
    }
    let mut candidates = Vec::new();
    for _ in 0..PLANT_RESTARTS {
        let parts = rng.gen_range(1..=4);
        let class: Vec<usize> = (0..n).map(|_| rng.gen_range(0..parts)).collect();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if class[u] != class[v] {
                    g.add_edge(u, v);
                }
            }
        }
        let mut bip = g.clone();
        if parts == 2 {
            let mut used = vec![false; n];
            for u in 0..n {
                let v = (u + 1..n).find(|&v| !used[v] && class[v] != class[u]);
                if let (false, Some(v)) = (used[u], v) {
                    if rng.gen_bool(0.5) {
                        bip.remove_edge(u, v);
                        used[u] = true;
                        used[v] = true;
                    }
                }
            }
        }
        candidates.extend([bip.complement(), bip, g.complement(), g]);
    }
    if let Some(g) = candidates.into_iter().find(|g| family.is_free(g)) {
        return Ok(g);
    }
    Err(Error::Precondition(format!(
        "no {family}-free graph on {n} vertices found after {PLANT_RESTARTS} restarts"
    )))
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
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

fn subgraph(g: &Graph, p: f64, rng: &mut impl Rng) -> Graph {
    let mut h = Graph::empty(g.n());
    for (u, v) in g.edges() {
        if rng.gen_bool(p) {
            h.add_edge(u, v);
        }
    }
    h
}
