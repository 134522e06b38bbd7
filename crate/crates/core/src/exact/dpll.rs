use super::clauses::{compile_clauses, ClauseSet};
use super::Lit;
use crate::error::{Error, Result};
use crate::graph::{verify_sandwich, SandwichInstance, Verdict};
use crate::quartet::ForbiddenFamily;

/// Node budget used when the caller does not choose one.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Decisions plus flipped decisions.
    pub nodes: u64,
    pub propagations: u64,
}

const UNSET: i8 = -1;

struct Search<'a> {
    clauses: &'a [Vec<Lit>],
    occurs: Vec<Vec<u32>>,
    value: Vec<i8>,
    n_true: Vec<u32>,
    n_false: Vec<u32>,
    /// Number of unsatisfied clauses mentioning each variable.
    activity: Vec<u32>,
    trail: Vec<Lit>,
    head: usize,
    /// (trail length before the decision, decision literal, already flipped)
    levels: Vec<(usize, Lit, bool)>,
    stats: SearchStats,
}

impl<'a> Search<'a> {
    fn new(num_vars: usize, clauses: &'a [Vec<Lit>]) -> Self {
        let mut occurs = vec![Vec::new(); 2 * num_vars];
        let mut activity = vec![0; num_vars];
        for (c, clause) in clauses.iter().enumerate() {
            for &l in clause {
                occurs[l.index()].push(c as u32);
                activity[l.var()] += 1;
            }
        }
        Search {
            clauses,
            occurs,
            value: vec![UNSET; num_vars],
            n_true: vec![0; clauses.len()],
            n_false: vec![0; clauses.len()],
            activity,
            trail: Vec::new(),
            head: 0,
            levels: Vec::new(),
            stats: SearchStats::default(),
        }
    }

    fn lit_value(&self, l: Lit) -> i8 {
        match self.value[l.var()] {
            UNSET => UNSET,
            v => (l.holds(v == 1)) as i8,
        }
    }

    fn enqueue(&mut self, l: Lit) {
        self.value[l.var()] = l.is_positive() as i8;
        self.trail.push(l);
    }

    /// Processes the queue; false on conflict.
    fn propagate(&mut self) -> bool {
        while self.head < self.trail.len() {
            let l = self.trail[self.head];
            self.head += 1;
            self.stats.propagations += 1;
            for k in 0..self.occurs[l.index()].len() {
                let c = self.occurs[l.index()][k] as usize;
                self.n_true[c] += 1;
                if self.n_true[c] == 1 {
                    for &m in &self.clauses[c] {
                        self.activity[m.var()] -= 1;
                    }
                }
            }
            let mut conflict = false;
            for k in 0..self.occurs[(!l).index()].len() {
                let c = self.occurs[(!l).index()][k] as usize;
                self.n_false[c] += 1;
                if conflict || self.n_true[c] > 0 {
                    continue;
                }
                let len = self.clauses[c].len() as u32;
                if self.n_false[c] == len {
                    conflict = true;
                } else if self.n_false[c] + 1 == len {
                    // the last non-false literal may already be queued
                    let open = self.clauses[c].iter().copied().find(|&m| self.lit_value(m) != 0);
                    if let Some(m) = open {
                        if self.lit_value(m) == UNSET {
                            self.enqueue(m);
                        }
                    }
                }
            }
            if conflict {
                return false;
            }
        }
        true
    }

    /// Undoes the trail down to `len`.
    fn backtrack(&mut self, len: usize) {
        while self.trail.len() > len {
            let l = self.trail.pop().unwrap();
            if self.trail.len() < self.head {
                for k in 0..self.occurs[l.index()].len() {
                    let c = self.occurs[l.index()][k] as usize;
                    self.n_true[c] -= 1;
                    if self.n_true[c] == 0 {
                        for &m in &self.clauses[c] {
                            self.activity[m.var()] += 1;
                        }
                    }
                }
                for &c in &self.occurs[(!l).index()] {
                    self.n_false[c as usize] -= 1;
                }
            }
            self.value[l.var()] = UNSET;
        }
        self.head = self.head.min(len);
    }

    /// Unassigned variable in the most unsatisfied clauses, lowest index on ties.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for (v, &a) in self.activity.iter().enumerate() {
            if self.value[v] == UNSET && a > 0 && best.is_none_or(|(b, _)| a > b) {
                best = Some((a, v));
            }
        }
        best.map(|(_, v)| v)
    }

    fn run(&mut self, budget: u64) -> Result<Option<Vec<bool>>> {
        for c in 0..self.clauses.len() {
            match self.clauses[c].as_slice() {
                [] => return Ok(None),
                [l] => match self.lit_value(*l) {
                    UNSET => self.enqueue(*l),
                    0 => return Ok(None),
                    _ => {}
                },
                _ => {}
            }
        }
        let mut ok = self.propagate();
        loop {
            if !ok {
                // chronological backtracking to the latest unflipped decision
                loop {
                    let Some((len, lit, flipped)) = self.levels.pop() else {
                        return Ok(None);
                    };
                    self.backtrack(len);
                    if !flipped {
                        self.bump(budget)?;
                        self.levels.push((len, !lit, true));
                        self.enqueue(!lit);
                        break;
                    }
                }
                ok = self.propagate();
                continue;
            }
            let Some(v) = self.pick() else {
                // every clause is satisfied; remaining edges stay absent
                return Ok(Some(self.value.iter().map(|&x| x == 1).collect()));
            };
            self.bump(budget)?;
            let lit = Lit::neg(v);
            self.levels.push((self.trail.len(), lit, false));
            self.enqueue(lit);
            ok = self.propagate();
        }
    }

    fn bump(&mut self, budget: u64) -> Result<()> {
        self.stats.nodes += 1;
        if self.stats.nodes > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        Ok(())
    }
}

/// Solves a compiled clause set; `Ok(None)` means unsatisfiable.
pub fn solve_clauses(set: &ClauseSet, budget: u64) -> Result<(Option<Vec<bool>>, SearchStats)> {
    if set.is_trivially_infeasible() {
        return Ok((None, SearchStats::default()));
    }
    let mut search = Search::new(set.variables().len(), set.clauses());
    let outcome = search.run(budget)?;
    Ok((outcome, search.stats))
}

/// Complete search for an F-free graph between the instance's bounds.
pub fn solve_exact(inst: &SandwichInstance, family: &ForbiddenFamily, budget: u64) -> Result<Verdict> {
    Ok(solve_exact_with_stats(inst, family, budget)?.0)
}

pub fn solve_exact_with_stats(
    inst: &SandwichInstance,
    family: &ForbiddenFamily,
    budget: u64,
) -> Result<(Verdict, SearchStats)> {
    let set = compile_clauses(inst, family);
    let (assignment, stats) = solve_clauses(&set, budget)?;
    let Some(values) = assignment else {
        return Ok((Verdict::Infeasible, stats));
    };
    let mut g = inst.lower().clone();
    for (e, present) in set.variables().iter().zip(values) {
        if present {
            g.add_edge(e.u, e.v);
        }
    }
    assert!(
        verify_sandwich(inst, &g, family)?,
        "exact search produced an invalid witness for {family}"
    );
    Ok((Verdict::Feasible(g), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::quartet::Quartet;

    #[test]
    fn cycle_is_its_own_witness() {
        let inst = SandwichInstance::fixed(Graph::cycle(5));
        let fam = ForbiddenFamily::pair(Quartet::Paw, Quartet::CoPaw).unwrap();
        assert_eq!(solve_exact(&inst, &fam, 100).unwrap(), Verdict::Feasible(Graph::cycle(5)));
    }

    #[test]
    fn forced_co_claw_is_infeasible() {
        let inst = SandwichInstance::new(4, &[(0, 1), (0, 2), (1, 2)], &[]).unwrap();
        let fam = ForbiddenFamily::single(Quartet::CoClaw);
        assert_eq!(solve_exact(&inst, &fam, 100).unwrap(), Verdict::Infeasible);
    }

    #[test]
    fn diamond_closes_to_k4() {
        let inst = SandwichInstance::from_graphs(Quartet::Diamond.graph(), Graph::complete(4)).unwrap();
        let fam = ForbiddenFamily::pair(Quartet::Diamond, Quartet::C4).unwrap();
        assert_eq!(solve_exact(&inst, &fam, 100).unwrap(), Verdict::Feasible(Graph::complete(4)));
    }

    #[test]
    fn budget_is_reported() {
        let inst = SandwichInstance::from_graphs(Graph::empty(8), Graph::complete(8)).unwrap();
        let fam = ForbiddenFamily::pair(Quartet::K4, Quartet::CoK4).unwrap();
        assert_eq!(solve_exact(&inst, &fam, 1), Err(Error::BudgetExceeded(1)));
    }
}
