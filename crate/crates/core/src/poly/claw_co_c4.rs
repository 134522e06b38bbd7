//! `{claw, co-C4}` through its complement `{co-claw, C4}`.
//!
//! After stripping universal vertices, a `{co-claw, C4}`-free graph containing
//! a triangle either has one of two small shapes or is organised around a hub
//! edge `vw`: private neighborhoods `N_v`, `N_w` and a common neighborhood
//! split into a clique `R` and a stable set `S`. The split of the common
//! neighborhood is a 2-SAT problem.

use super::families::strip_and;
use crate::exact::{solve_two_sat, Lit, TwoSatFormula};
use crate::graph::{Graph, SandwichInstance, Verdict};
use crate::quartet::{ForbiddenFamily, Quartet};

/// Hub decomposition of a `{co-claw, C4}`-free witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClawCoC4Witness {
    pub v: usize,
    pub w: usize,
    pub n_v: Vec<usize>,
    pub n_w: Vec<usize>,
    pub r: Vec<usize>,
    pub s: Vec<usize>,
}

impl ClawCoC4Witness {
    /// Hub edge, spokes to private and common neighbors, clique `R` joined to
    /// `N_v ∪ N_w`, and every permitted `R`-`S` pair.
    pub fn graph(&self, inst: &SandwichInstance) -> Graph {
        let mut g = Graph::empty(inst.n());
        g.add_edge(self.v, self.w);
        for &x in self.n_v.iter().chain(&self.r).chain(&self.s) {
            g.add_edge(self.v, x);
        }
        for &x in self.n_w.iter().chain(&self.r).chain(&self.s) {
            g.add_edge(self.w, x);
        }
        for (i, &x) in self.r.iter().enumerate() {
            for &y in &self.r[i + 1..] {
                g.add_edge(x, y);
            }
            for &y in self.n_v.iter().chain(&self.n_w) {
                g.add_edge(x, y);
            }
            for &y in &self.s {
                if inst.is_allowed(x, y) {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }
}

fn target() -> ForbiddenFamily {
    ForbiddenFamily::pair(Quartet::CoClaw, Quartet::C4).unwrap()
}

pub fn solve_claw_co_c4(inst: &SandwichInstance) -> Verdict {
    solve_co_claw_c4(&inst.complement()).map_witness(|g| g.complement())
}

/// `{co-claw, C4}` sandwich.
pub fn solve_co_claw_c4(inst: &SandwichInstance) -> Verdict {
    strip_and(inst, |core| match core_witness(core) {
        Some(g) => Verdict::Feasible(g),
        None => Verdict::Infeasible,
    })
}

fn core_witness(inst: &SandwichInstance) -> Option<Graph> {
    let fam = target();
    let lower = inst.lower();
    if lower.is_triangle_free() && ForbiddenFamily::single(Quartet::C4).is_free(lower) {
        return Some(lower.clone());
    }
    let ok = |g: &Graph| inst.admits(g) && fam.is_free(g);
    let upper = inst.upper();
    for (a, b) in upper.edges() {
        for c in upper.neighbors(b).filter(|&c| c > b && upper.has_edge(a, c)) {
            if let Some(g) = triangle_shape(inst, [a, b, c]).filter(ok) {
                return Some(g);
            }
        }
    }
    for (a, b) in upper.edges() {
        if let Some(g) = edge_shape(inst, a, b).filter(ok) {
            return Some(g);
        }
    }
    for (v, w) in upper.edges() {
        if let Some(h) = hub(inst, v, w) {
            let g = h.graph(inst);
            if ok(&g) {
                return Some(g);
            }
        }
    }
    None
}

fn outside_independent(inst: &SandwichInstance, inside: &[usize]) -> Option<Vec<usize>> {
    let rest: Vec<usize> = (0..inst.n()).filter(|v| !inside.contains(v)).collect();
    let independent = rest.iter().all(|&x| rest.iter().all(|&y| !inst.is_mandatory(x, y)));
    independent.then_some(rest)
}

/// A triangle with every other vertex pendant to exactly one of its corners.
fn triangle_shape(inst: &SandwichInstance, t: [usize; 3]) -> Option<Graph> {
    let rest = outside_independent(inst, &t)?;
    let mut g = Graph::empty(inst.n());
    g.add_edge(t[0], t[1]);
    g.add_edge(t[0], t[2]);
    g.add_edge(t[1], t[2]);
    for x in rest {
        let forced: Vec<usize> = t.iter().copied().filter(|&c| inst.is_mandatory(x, c)).collect();
        let corner = match forced.as_slice() {
            [c] => *c,
            [] => t.iter().copied().find(|&c| inst.is_allowed(x, c))?,
            _ => return None,
        };
        g.add_edge(x, corner);
    }
    Some(g)
}

/// An edge with every other vertex attached to one or both of its ends.
fn edge_shape(inst: &SandwichInstance, a: usize, b: usize) -> Option<Graph> {
    let rest = outside_independent(inst, &[a, b])?;
    let mut g = Graph::empty(inst.n());
    g.add_edge(a, b);
    for x in rest {
        let mut attached = false;
        for c in [a, b] {
            if inst.is_mandatory(x, c) {
                g.add_edge(x, c);
                attached = true;
            }
        }
        if !attached {
            let c = [a, b].into_iter().find(|&c| inst.is_allowed(x, c))?;
            g.add_edge(x, c);
        }
    }
    Some(g)
}

/// Hub decomposition around the permitted edge `vw`, if its 2-SAT model is
/// satisfiable.
pub fn hub(inst: &SandwichInstance, v: usize, w: usize) -> Option<ClawCoC4Witness> {
    let n = inst.n();
    let (mut n_v, mut n_w, mut x) = (Vec::new(), Vec::new(), Vec::new());
    for u in (0..n).filter(|&u| u != v && u != w) {
        match (inst.is_allowed(u, v), inst.is_allowed(u, w)) {
            (true, true) => x.push(u),
            (true, false) => n_v.push(u),
            (false, true) => n_w.push(u),
            (false, false) => return None,
        }
    }
    if n_v.is_empty() || n_w.is_empty() {
        return None;
    }
    let private: Vec<usize> = n_v.iter().chain(&n_w).copied().collect();
    if private.iter().any(|&a| private.iter().any(|&b| inst.is_mandatory(a, b))) {
        return None;
    }

    // variable i: x[i] joins the clique R
    let mut f = TwoSatFormula::new(x.len());
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if !inst.is_allowed(x[i], x[j]) {
                f.add_clause(Lit::neg(i), Lit::neg(j));
            }
            if inst.is_mandatory(x[i], x[j]) {
                f.add_clause(Lit::pos(i), Lit::pos(j));
            }
        }
        if private.iter().any(|&p| !inst.is_allowed(x[i], p)) {
            f.add_unit(Lit::neg(i));
        }
        if private.iter().any(|&p| inst.is_mandatory(x[i], p)) {
            f.add_unit(Lit::pos(i));
        }
    }
    for z in 0..x.len() {
        let missing: Vec<usize> = (0..x.len()).filter(|&i| i != z && !inst.is_allowed(x[i], x[z])).collect();
        for (k, &i) in missing.iter().enumerate() {
            for &j in &missing[k + 1..] {
                f.add_clause(Lit::neg(i), Lit::neg(j));
            }
        }
    }
    let in_r = solve_two_sat(&f)?;
    let (r, s) = x.iter().zip(&in_r).fold((Vec::new(), Vec::new()), |(mut r, mut s), (&u, &flag)| {
        if flag {
            r.push(u)
        } else {
            s.push(u)
        }
        (r, s)
    });
    Some(ClawCoC4Witness { v, w, n_v, n_w, r, s })
}
