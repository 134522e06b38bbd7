//! Generic reductions: component splitting, universal-vertex stripping,
//! forced completion, and the join/union glue used to reassemble witnesses.

use crate::catalog::{closure_route, closure_rule, PatternFamily};
use crate::error::{Error, Result};
use crate::graph::{Graph, SandwichInstance, Verdict};
use crate::quartet::ForbiddenFamily;

/// Sub-instance on `vertices` of a larger instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub vertices: Vec<usize>,
    pub instance: SandwichInstance,
}

/// One part per component of the mandatory graph. Optional edges between
/// components are dropped, which is safe when every family member is connected.
pub fn preprocess_components(inst: &SandwichInstance, family: &ForbiddenFamily) -> Result<Vec<Part>> {
    if !family.all_connected() {
        return Err(Error::Precondition(format!("{family} has a disconnected member")));
    }
    Ok(split_components(inst))
}

pub(crate) fn split_components(inst: &SandwichInstance) -> Vec<Part> {
    inst.lower()
        .components()
        .into_iter()
        .map(|vertices| Part {
            instance: inst.induced(&vertices),
            vertices,
        })
        .collect()
}

/// Disjoint union of part witnesses on `n` vertices.
pub(crate) fn union_of(n: usize, parts: &[(Vec<usize>, Graph)]) -> Graph {
    let mut g = Graph::empty(n);
    for (vertices, w) in parts {
        g.embed(vertices, w);
    }
    g
}

/// Union of part witnesses plus every edge between different parts.
pub(crate) fn join_of(n: usize, parts: &[(Vec<usize>, Graph)]) -> Graph {
    let mut g = union_of(n, parts);
    for (i, (a, _)) in parts.iter().enumerate() {
        for (b, _) in &parts[i + 1..] {
            for &u in a {
                for &v in b {
                    g.add_edge(u, v);
                }
            }
        }
    }
    g
}

/// Solves each part independently; the first infeasible part decides.
pub(crate) fn solve_parts(
    n: usize,
    parts: Vec<Part>,
    mut solve: impl FnMut(&SandwichInstance) -> Verdict,
    join: bool,
) -> Verdict {
    let mut pieces = Vec::with_capacity(parts.len());
    for part in parts {
        match solve(&part.instance) {
            Verdict::Feasible(w) => pieces.push((part.vertices, w)),
            Verdict::Infeasible => return Verdict::Infeasible,
        }
    }
    Verdict::Feasible(if join { join_of(n, &pieces) } else { union_of(n, &pieces) })
}

/// Result of repeatedly deleting vertices that are universal in the permitted graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stripped {
    pub core: SandwichInstance,
    /// Vertex `i` of `core` is `kept[i]`.
    pub kept: Vec<usize>,
    /// Removed vertices in removal order.
    pub removed: Vec<usize>,
    n: usize,
}

impl Stripped {
    /// Lifts a core witness back, joining every removed vertex to all others.
    pub fn reattach(&self, core_witness: &Graph) -> Graph {
        let mut g = Graph::empty(self.n);
        g.embed(&self.kept, core_witness);
        for &u in &self.removed {
            for v in 0..self.n {
                if v != u {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// Strips universal vertices of the permitted graph; valid when no member of
/// the family has a universal vertex.
pub fn strip_universal(inst: &SandwichInstance, family: &ForbiddenFamily) -> Result<Stripped> {
    if family.any_universal_vertex() {
        return Err(Error::Precondition(format!("{family} has a member with a universal vertex")));
    }
    Ok(strip_unchecked(inst))
}

pub(crate) fn strip_unchecked(inst: &SandwichInstance) -> Stripped {
    let n = inst.n();
    let upper = inst.upper();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| upper.degree(v)).collect();
    let mut remaining = n;
    let mut removed = Vec::new();
    while let Some(u) = (0..n).find(|&u| alive[u] && degree[u] + 1 == remaining) {
        alive[u] = false;
        remaining -= 1;
        removed.push(u);
        for v in upper.neighbors(u) {
            degree[v] -= 1;
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    Stripped {
        core: inst.induced(&kept),
        kept,
        removed,
        n,
    }
}

/// Forced completion: repair occurrences with their unique completions until
/// none remain. Complement families run on the complemented instance.
pub fn closure_solve(inst: &SandwichInstance, family: &PatternFamily) -> Result<Verdict> {
    match closure_route(family) {
        None => Err(Error::UnregisteredFamily(family.to_string())),
        Some(false) => Ok(close_directly(inst, family)),
        Some(true) => {
            let co = close_directly(&inst.complement(), &family.complement());
            Ok(co.map_witness(|g| g.complement()))
        }
    }
}

fn close_directly(inst: &SandwichInstance, family: &PatternFamily) -> Verdict {
    let mut g = inst.lower().clone();
    while let Some((member, labeling)) = family.find_occurrence(&g) {
        let rule = closure_rule(family, member).expect("registered family");
        let Some(completion) = rule.completion else {
            return Verdict::Infeasible;
        };
        for (i, j) in completion.edges() {
            let (u, v) = (labeling[i], labeling[j]);
            if !inst.is_allowed(u, v) {
                return Verdict::Infeasible;
            }
            g.add_edge(u, v);
        }
    }
    Verdict::Feasible(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quartet::{Pattern, Quartet, Triplet};

    fn fam(ps: &[Pattern]) -> PatternFamily {
        PatternFamily::new(ps)
    }

    #[test]
    fn components_split() {
        let inst = SandwichInstance::from_graphs(
            Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
            Graph::complete(4),
        )
        .unwrap();
        let f = ForbiddenFamily::pair(Quartet::Paw, Quartet::C4).unwrap();
        let parts = preprocess_components(&inst, &f).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[1].vertices, vec![2, 3]);
        assert_eq!(parts[1].instance.mandatory_edges(), vec![(0, 1)]);
        let co_claw = ForbiddenFamily::single(Quartet::CoClaw);
        assert!(preprocess_components(&inst, &co_claw).is_err());
    }

    #[test]
    fn stripping() {
        let f = ForbiddenFamily::pair(Quartet::P4, Quartet::C4).unwrap();
        let s = strip_universal(&SandwichInstance::fixed(Graph::complete(5)), &f).unwrap();
        assert_eq!(s.core.n(), 0);
        let s = strip_universal(&SandwichInstance::fixed(Graph::cycle(5)), &f).unwrap();
        assert_eq!(s.removed, Vec::<usize>::new());
        let s = strip_universal(&SandwichInstance::fixed(Graph::star(3)), &f).unwrap();
        assert_eq!((s.removed.clone(), s.kept.clone()), (vec![0], vec![1, 2, 3]));
        assert_eq!(s.reattach(&Graph::empty(3)), Graph::star(3));
        let claw = ForbiddenFamily::single(Quartet::Claw);
        assert!(strip_universal(&SandwichInstance::fixed(Graph::star(3)), &claw).is_err());
    }

    #[test]
    fn closure_examples() {
        let p3 = Pattern::Triplet(Triplet::P3);
        let inst = SandwichInstance::from_graphs(Graph::path(3), Graph::complete(3)).unwrap();
        assert_eq!(closure_solve(&inst, &fam(&[p3])).unwrap(), Verdict::Feasible(Graph::complete(3)));

        let dc = fam(&[Pattern::Quartet(Quartet::Diamond), Pattern::Quartet(Quartet::C4)]);
        assert_eq!(closure_solve(&SandwichInstance::fixed(Graph::cycle(4)), &dc).unwrap(), Verdict::Infeasible);

        let pk = fam(&[Pattern::Quartet(Quartet::P4), Pattern::Triplet(Triplet::K3)]);
        let inst = SandwichInstance::from_graphs(Graph::complete(3), Graph::complete(3)).unwrap();
        assert_eq!(closure_solve(&inst, &pk).unwrap(), Verdict::Infeasible);

        let co_p3 = fam(&[Pattern::Triplet(Triplet::CoP3)]);
        let inst = SandwichInstance::from_graphs(Quartet::Paw.graph(), Graph::complete(4)).unwrap();
        assert_eq!(closure_solve(&inst, &co_p3).unwrap(), Verdict::Feasible(Graph::complete(4)));

        let claw = fam(&[Pattern::Quartet(Quartet::Claw)]);
        assert!(closure_solve(&inst, &claw).is_err());
    }
}
