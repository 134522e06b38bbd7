//! One solver per tractable pair, each in the orientation listed in the catalog.

use super::partition::{complete_bipartite_sandwich, pseudo_split_partition};
use super::toolkit::{closure_solve, solve_parts, split_components, strip_unchecked, Part};
use crate::catalog::PatternFamily;
use crate::exact::solve_exact;
use crate::graph::{Graph, SandwichInstance, Verdict};
use crate::quartet::{ForbiddenFamily, Pattern, Quartet, Triplet};

/// No graph on this many vertices avoids both K4 and an independent 4-set.
pub const RAMSEY_4_4: usize = 18;
pub const RAMSEY_3_4: usize = 9;
pub const RAMSEY_3_3: usize = 6;

fn family(a: Quartet, b: Quartet) -> ForbiddenFamily {
    ForbiddenFamily::pair(a, b).expect("distinct quartets")
}

fn exact(inst: &SandwichInstance, f: &ForbiddenFamily) -> Verdict {
    solve_exact(inst, f, u64::MAX).expect("unbounded search cannot run out of budget")
}

fn co_components(inst: &SandwichInstance) -> Vec<Part> {
    inst.upper()
        .complement()
        .components()
        .into_iter()
        .map(|vertices| Part {
            instance: inst.induced(&vertices),
            vertices,
        })
        .collect()
}

/// Family whose members are all fatal or close to K4: feasible iff forced
/// completion succeeds.
pub fn solve_diamond_closure(inst: &SandwichInstance, other: Quartet) -> Verdict {
    let fam = PatternFamily::new(&[Pattern::Quartet(Quartet::Diamond), Pattern::Quartet(other)]);
    closure_solve(inst, &fam).expect("diamond families are registered")
}

pub fn solve_k4_cok4(inst: &SandwichInstance) -> Verdict {
    if inst.n() >= RAMSEY_4_4 {
        return Verdict::Infeasible;
    }
    exact(inst, &family(Quartet::K4, Quartet::CoK4))
}

/// Trivially perfect sandwich: split into mandatory components, otherwise
/// peel a universal vertex of the permitted graph.
pub fn solve_p4_c4(inst: &SandwichInstance) -> Verdict {
    let n = inst.n();
    if n <= 1 {
        return Verdict::Feasible(inst.lower().clone());
    }
    let parts = split_components(inst);
    if parts.len() > 1 {
        return solve_parts(n, parts, solve_p4_c4, false);
    }
    let Some(u) = (0..n).find(|&u| inst.upper().is_universal(u)) else {
        return Verdict::Infeasible;
    };
    let rest: Vec<usize> = (0..n).filter(|&v| v != u).collect();
    solve_p4_c4(&inst.induced(&rest)).map_witness(|w| {
        let mut g = Graph::empty(n);
        g.embed(&rest, &w);
        for v in rest {
            g.add_edge(u, v);
        }
        g
    })
}

/// `{P4, K1 + F2}` for `F2` in {K3, P3}: closure for `{P4, F2}`, else recurse on
/// the co-components of the permitted graph and join the results.
pub fn solve_p4_co_small(inst: &SandwichInstance, f2: Triplet) -> Verdict {
    assert!(matches!(f2, Triplet::K3 | Triplet::P3), "F2 must be K3 or P3");
    let n = inst.n();
    if n <= 1 {
        return Verdict::Feasible(inst.lower().clone());
    }
    let fam = PatternFamily::new(&[Pattern::Quartet(Quartet::P4), Pattern::Triplet(f2)]);
    if let Verdict::Feasible(g) = closure_solve(inst, &fam).expect("registered") {
        return Verdict::Feasible(g);
    }
    let parts = co_components(inst);
    if parts.len() == 1 {
        return Verdict::Infeasible;
    }
    solve_parts(n, parts, |p| solve_p4_co_small(p, f2), true)
}

pub fn solve_p4_co_diamond(inst: &SandwichInstance) -> Verdict {
    let n = inst.n();
    let lower = inst.lower();
    if lower.edge_count() == 0 {
        return Verdict::Feasible(lower.clone());
    }
    let co_p3 = PatternFamily::new(&[Pattern::Triplet(Triplet::CoP3)]);
    for u in (0..n).filter(|&u| lower.degree(u) == 0) {
        let rest: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        if let Verdict::Feasible(h) = closure_solve(&inst.induced(&rest), &co_p3).expect("registered") {
            let mut g = Graph::empty(n);
            g.embed(&rest, &h);
            return Verdict::Feasible(g);
        }
    }
    if let Verdict::Feasible(h) = complete_bipartite_sandwich(&inst.complement()) {
        return Verdict::Feasible(h.complement());
    }
    let parts = co_components(inst);
    if parts.len() == 1 {
        return Verdict::Infeasible;
    }
    solve_parts(n, parts, solve_p4_co_diamond, true)
}

/// `{paw, C4}` per mandatory component: the component itself, or the clique
/// on it minus all pairs among vertices that touch a forbidden pair.
pub fn solve_paw_c4(inst: &SandwichInstance) -> Verdict {
    let fam = family(Quartet::Paw, Quartet::C4);
    solve_parts(inst.n(), split_components(inst), |p| paw_c4_component(p, &fam), false)
}

fn paw_c4_component(inst: &SandwichInstance, fam: &ForbiddenFamily) -> Verdict {
    if fam.is_free(inst.lower()) {
        return Verdict::Feasible(inst.lower().clone());
    }
    let n = inst.n();
    let upper = inst.upper();
    let touched: Vec<usize> = (0..n).filter(|&u| upper.degree(u) + 1 < n).collect();
    if touched.iter().any(|&u| touched.iter().any(|&v| inst.is_mandatory(u, v))) {
        return Verdict::Infeasible;
    }
    let mut g = Graph::complete(n);
    for &u in &touched {
        for &v in &touched {
            if u < v {
                g.remove_edge(u, v);
            }
        }
    }
    Verdict::Feasible(g)
}

/// `{paw, claw}` per mandatory component: the mandatory or the permitted graph.
pub fn solve_paw_claw(inst: &SandwichInstance) -> Verdict {
    let fam = family(Quartet::Paw, Quartet::Claw);
    solve_parts(
        inst.n(),
        split_components(inst),
        |p| {
            if fam.is_free(p.lower()) {
                Verdict::Feasible(p.lower().clone())
            } else if fam.is_free(p.upper()) {
                Verdict::Feasible(p.upper().clone())
            } else {
                Verdict::Infeasible
            }
        },
        false,
    )
}

pub fn solve_paw_co_claw(inst: &SandwichInstance) -> Verdict {
    if inst.lower().is_triangle_free() {
        return Verdict::Feasible(inst.lower().clone());
    }
    let co_p3 = PatternFamily::new(&[Pattern::Triplet(Triplet::CoP3)]);
    closure_solve(inst, &co_p3).expect("registered")
}

/// `{paw, co-paw}`: exhaustive up to five vertices; beyond that a solution is
/// complete multipartite or complete bipartite, or the complement of one.
pub fn solve_paw_co_paw(inst: &SandwichInstance) -> Verdict {
    if inst.n() <= 5 {
        return exact(inst, &family(Quartet::Paw, Quartet::CoPaw));
    }
    let co_p3 = PatternFamily::new(&[Pattern::Triplet(Triplet::CoP3)]);
    let direct = |i: &SandwichInstance| -> Verdict {
        match closure_solve(i, &co_p3).expect("registered") {
            Verdict::Infeasible => complete_bipartite_sandwich(i),
            found => found,
        }
    };
    match direct(inst) {
        Verdict::Infeasible => direct(&inst.complement()).map_witness(|g| g.complement()),
        found => found,
    }
}

/// `{C4, co-C4}` via the clique / stable set / five-cycle partition.
pub fn solve_pseudo_split(inst: &SandwichInstance) -> Verdict {
    match pseudo_split_partition(inst) {
        Some(p) => Verdict::Feasible(p.witness(inst)),
        None => Verdict::Infeasible,
    }
}

/// `{claw, co-claw}`: from ten vertices on, a solution must have maximum
/// degree two or be the complement of one, so one of the bounds works.
pub fn solve_claw_co_claw(inst: &SandwichInstance) -> Verdict {
    let fam = family(Quartet::Claw, Quartet::CoClaw);
    if inst.n() < 10 {
        return exact(inst, &fam);
    }
    if fam.is_free(inst.lower()) {
        Verdict::Feasible(inst.lower().clone())
    } else if fam.is_free(inst.upper()) {
        Verdict::Feasible(inst.upper().clone())
    } else {
        Verdict::Infeasible
    }
}

/// Strip-then-solve used by the `{claw, co-C4}` solver on complemented input.
pub(crate) fn strip_and(inst: &SandwichInstance, core: impl FnOnce(&SandwichInstance) -> Verdict) -> Verdict {
    let stripped = strip_unchecked(inst);
    core(&stripped.core).map_witness(|w| stripped.reattach(&w))
}
