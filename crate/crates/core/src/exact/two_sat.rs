use super::Lit;

/// Clauses of one or two literals over variables `0..num_vars`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    num_vars: usize,
    clauses: Vec<(Lit, Lit)>,
}

impl TwoSatFormula {
    pub fn new(num_vars: usize) -> Self {
        TwoSatFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(a.var() < self.num_vars && b.var() < self.num_vars, "literal out of range");
        self.clauses.push((a, b));
    }

    pub fn add_unit(&mut self, a: Lit) {
        self.add_clause(a, a);
    }

    /// `a` and `b` not both true.
    pub fn add_at_most_one(&mut self, a: Lit, b: Lit) {
        self.add_clause(!a, !b);
    }

    pub fn add_implication(&mut self, a: Lit, b: Lit) {
        self.add_clause(!a, b);
    }

    pub fn add_equal(&mut self, a: Lit, b: Lit) {
        self.add_implication(a, b);
        self.add_implication(b, a);
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|&(a, b)| a.holds(assignment[a.var()]) || b.holds(assignment[b.var()]))
    }
}

/// Satisfying assignment via strongly connected components of the implication
/// graph, or `None`. Each variable takes the value whose literal comes later in
/// topological order.
pub fn solve_two_sat(f: &TwoSatFormula) -> Option<Vec<bool>> {
    let nodes = 2 * f.num_vars;
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in &f.clauses {
        adj[(!a).index()].push(b.index());
        adj[(!b).index()].push(a.index());
    }
    let comp = tarjan(&adj);
    (0..f.num_vars)
        .map(|v| {
            let (p, n) = (comp[Lit::pos(v).index()], comp[Lit::neg(v).index()]);
            (p != n).then_some(p < n)
        })
        .collect()
}

/// Component ids in reverse topological order (sinks first), iteratively.
fn tarjan(adj: &[Vec<usize>]) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![NONE; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![NONE; n];
    let mut stack = Vec::new();
    let mut calls: Vec<(usize, usize)> = Vec::new();
    let (mut next_index, mut next_comp) = (0, 0);

    for root in 0..n {
        if index[root] != NONE {
            continue;
        }
        calls.push((root, 0));
        while let Some(&mut (v, ref mut edge)) = calls.last_mut() {
            if *edge == 0 && index[v] == NONE {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adj[v].get(*edge) {
                *edge += 1;
                if index[w] == NONE {
                    calls.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            calls.pop();
            if let Some(&(parent, _)) = calls.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}
