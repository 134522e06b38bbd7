use std::collections::VecDeque;

use super::Graph;

impl Graph {
    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&(0..self.n()).collect::<Vec<_>>())
    }

    /// Components of the subgraph induced by `vertices` (given in any order).
    pub fn components_within(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let mut inside = vec![false; self.n()];
        for &v in vertices {
            inside[v] = true;
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for &s in &sorted {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Two-coloring of every vertex (`false` for the first side), or `None`
    /// if the graph has an odd cycle. The smallest vertex of each component
    /// gets `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Bipartite with no induced 2K2, i.e. the neighborhoods of the vertices on
    /// one side are totally ordered by inclusion.
    pub fn is_chain_graph(&self) -> bool {
        let Some(side) = self.bipartition() else {
            return false;
        };
        // Every induced 2K2 has one endpoint of each edge on the `false` side,
        // so comparing those neighborhoods suffices.
        let left: Vec<usize> = (0..self.n()).filter(|&v| !side[v]).collect();
        let rows: Vec<Vec<usize>> = left.iter().map(|&u| self.neighbors(u).collect()).collect();
        for i in 0..left.len() {
            for j in i + 1..left.len() {
                let (a, b) = (&rows[i], &rows[j]);
                let a_in_b = a.iter().all(|x| self.has_edge(left[j], *x));
                let b_in_a = b.iter().all(|x| self.has_edge(left[i], *x));
                if !a_in_b && !b_in_a {
                    return false;
                }
            }
        }
        true
    }
}
