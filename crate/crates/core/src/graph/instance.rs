use super::Graph;
use crate::error::{Error, Result};
use crate::quartet::ForbiddenFamily;

/// A pair `lower ⊆ upper` on a shared vertex set: the edges of `lower` are
/// mandatory, the remaining edges of `upper` are optional, every other pair is
/// forbidden.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SandwichInstance {
    lower: Graph,
    upper: Graph,
}

impl SandwichInstance {
    pub fn new(n: usize, mandatory: &[(usize, usize)], optional: &[(usize, usize)]) -> Result<Self> {
        let lower = Graph::from_edges(n, mandatory)?;
        let extra = Graph::from_edges(n, optional)?;
        if let Some((u, v)) = extra.edges().find(|&(u, v)| lower.has_edge(u, v)) {
            return Err(Error::Overlap(u, v));
        }
        let mut upper = lower.clone();
        for (u, v) in extra.edges() {
            upper.add_edge(u, v);
        }
        Ok(SandwichInstance { lower, upper })
    }

    pub fn from_graphs(lower: Graph, upper: Graph) -> Result<Self> {
        if lower.n() != upper.n() {
            return Err(Error::OrderMismatch {
                expected: lower.n(),
                found: upper.n(),
            });
        }
        if let Some((u, v)) = lower.edges().find(|&(u, v)| !upper.has_edge(u, v)) {
            return Err(Error::NotNested(u, v));
        }
        Ok(SandwichInstance { lower, upper })
    }

    /// The instance whose only candidate is `g` itself.
    pub fn fixed(g: Graph) -> Self {
        SandwichInstance {
            lower: g.clone(),
            upper: g,
        }
    }

    pub fn n(&self) -> usize {
        self.lower.n()
    }

    /// The mandatory graph G1.
    pub fn lower(&self) -> &Graph {
        &self.lower
    }

    /// The permitted graph G2.
    pub fn upper(&self) -> &Graph {
        &self.upper
    }

    pub fn mandatory_edges(&self) -> Vec<(usize, usize)> {
        self.lower.edge_vec()
    }

    pub fn optional_edges(&self) -> Vec<(usize, usize)> {
        self.upper.edges().filter(|&(u, v)| !self.lower.has_edge(u, v)).collect()
    }

    pub fn is_mandatory(&self, u: usize, v: usize) -> bool {
        self.lower.has_edge(u, v)
    }

    pub fn is_allowed(&self, u: usize, v: usize) -> bool {
        self.upper.has_edge(u, v)
    }

    pub fn is_optional(&self, u: usize, v: usize) -> bool {
        self.upper.has_edge(u, v) && !self.lower.has_edge(u, v)
    }

    /// `(complement of upper, complement of lower)`; sandwiches of the result
    /// are exactly the complements of sandwiches of `self`.
    pub fn complement(&self) -> SandwichInstance {
        SandwichInstance {
            lower: self.upper.complement(),
            upper: self.lower.complement(),
        }
    }

    /// Sub-instance induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SandwichInstance {
        SandwichInstance {
            lower: self.lower.induced(vertices),
            upper: self.upper.induced(vertices),
        }
    }

    /// `lower ⊆ g ⊆ upper`.
    pub fn admits(&self, g: &Graph) -> bool {
        self.lower.is_subgraph_of(g) && g.is_subgraph_of(&self.upper)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Feasible(Graph),
    Infeasible,
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible(_))
    }

    pub fn witness(&self) -> Option<&Graph> {
        match self {
            Verdict::Feasible(g) => Some(g),
            Verdict::Infeasible => None,
        }
    }

    pub fn map_witness(self, f: impl FnOnce(Graph) -> Graph) -> Verdict {
        match self {
            Verdict::Feasible(g) => Verdict::Feasible(f(g)),
            Verdict::Infeasible => Verdict::Infeasible,
        }
    }
}

/// Checks that `g` lies between the instance's graphs and avoids every member
/// of `family` as an induced subgraph.
pub fn verify_sandwich(inst: &SandwichInstance, g: &Graph, family: &ForbiddenFamily) -> Result<bool> {
    if g.n() != inst.n() {
        return Err(Error::OrderMismatch {
            expected: inst.n(),
            found: g.n(),
        });
    }
    Ok(inst.admits(g) && family.is_free(g))
}
