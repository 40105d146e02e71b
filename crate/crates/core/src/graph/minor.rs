use super::{blocks, is_two_connected, Graph};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Minor containment under the default size cap.
pub fn contains_minor(g: &Graph, h: &Graph) -> Result<bool> {
    contains_minor_with(g, h, &Budget::default())
}

/// True iff `h` is a minor of `g`: there are disjoint connected vertex sets
/// of `g`, one per vertex of `h`, with an edge of `g` between the sets of
/// every adjacent pair of `h`.
///
/// Exhaustive branch-set assignment with symmetry breaking between twin
/// vertices of `h`. When `h` is 2-connected only the blocks of `g` are
/// searched.
pub fn contains_minor_with(g: &Graph, h: &Graph, budget: &Budget) -> Result<bool> {
    let cap = budget.minor_max_vertices.min(64);
    if g.n() > cap {
        return Err(Error::BudgetExceeded {
            resource: "minor search vertex count",
            limit: cap as u64,
        });
    }
    if h.n() == 0 {
        return Ok(true);
    }
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Ok(false);
    }
    if is_two_connected(h) {
        Ok(blocks(g)
            .iter()
            .filter(|b| b.graph.n() >= h.n() && b.graph.edge_count() >= h.edge_count())
            .any(|b| BranchSearch::new(&b.graph, h).run()))
    } else {
        Ok(BranchSearch::new(g, h).run())
    }
}

struct BranchSearch {
    n: usize,
    masks: Vec<u64>,
    order: Vec<usize>,
    h_edges: Vec<(usize, usize)>,
    /// Previous label in the same twin class, if any.
    prev_twin: Vec<Option<usize>>,
    sets: Vec<u64>,
}

impl BranchSearch {
    fn new(g: &Graph, h: &Graph) -> Self {
        let k = h.n();
        let mut prev_twin = vec![None; k];
        for b in 0..k {
            prev_twin[b] = (0..b).rev().find(|&a| are_twins(h, a, b));
        }
        BranchSearch {
            n: g.n(),
            masks: g.adjacency_masks(),
            order: bfs_order(g),
            h_edges: h.edges().to_vec(),
            prev_twin,
            sets: vec![0; k],
        }
    }

    fn run(&mut self) -> bool {
        self.assign(0)
    }

    fn assign(&mut self, depth: usize) -> bool {
        let empty = self.sets.iter().filter(|&&s| s == 0).count();
        if empty > self.n - depth {
            return false;
        }
        if depth == self.n {
            return self.is_model();
        }
        let v = self.order[depth];
        if self.assign(depth + 1) {
            return true;
        }
        for label in 0..self.sets.len() {
            if self.sets[label] == 0 {
                if let Some(prev) = self.prev_twin[label] {
                    if self.sets[prev] == 0 {
                        continue;
                    }
                }
            }
            self.sets[label] |= 1 << v;
            let found = self.assign(depth + 1);
            self.sets[label] &= !(1 << v);
            if found {
                return true;
            }
        }
        false
    }

    fn is_model(&self) -> bool {
        self.sets.iter().all(|&s| s != 0 && self.connected(s))
            && self
                .h_edges
                .iter()
                .all(|&(a, b)| self.neighborhood(self.sets[a]) & self.sets[b] != 0)
    }

    fn neighborhood(&self, set: u64) -> u64 {
        let mut out = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.masks[v];
        }
        out
    }

    fn connected(&self, set: u64) -> bool {
        let mut reached = 1u64 << set.trailing_zeros();
        loop {
            let grown = (reached | self.neighborhood(reached)) & set;
            if grown == reached {
                return reached == set;
            }
            reached = grown;
        }
    }
}

/// Swapping `a` and `b` is an automorphism of `h`.
fn are_twins(h: &Graph, a: usize, b: usize) -> bool {
    let na: Vec<usize> = h.neighbors(a).iter().copied().filter(|&x| x != b).collect();
    let nb: Vec<usize> = h.neighbors(b).iter().copied().filter(|&x| x != a).collect();
    na == nb
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> Graph {
        Graph::complete_bipartite(2, 3)
    }

    #[test]
    fn graph_is_its_own_minor() {
        assert!(contains_minor(&Graph::complete(4), &Graph::complete(4)).unwrap());
        assert!(contains_minor(&k23(), &k23()).unwrap());
    }

    #[test]
    fn k23_has_no_k4_minor() {
        assert!(!contains_minor(&k23(), &Graph::complete(4)).unwrap());
    }

    #[test]
    fn wheel_contains_k4() {
        assert!(contains_minor(&Graph::wheel(5), &Graph::complete(4)).unwrap());
        assert!(contains_minor(&Graph::wheel(3), &Graph::complete(4)).unwrap());
    }

    #[test]
    fn cycles_and_trees_are_k4_free() {
        assert!(!contains_minor(&Graph::cycle(8), &Graph::complete(4)).unwrap());
        assert!(!contains_minor(&Graph::star(6), &Graph::complete(4)).unwrap());
        assert!(contains_minor(&Graph::cycle(8), &Graph::cycle(3)).unwrap());
    }

    #[test]
    fn subdivided_k4_still_contains_k4() {
        // K4 with every edge subdivided once.
        let mut edges = Vec::new();
        let mut next = 4;
        for &(u, v) in Graph::complete(4).edges() {
            edges.push((u, next));
            edges.push((next, v));
            next += 1;
        }
        let g = Graph::new(next, edges).unwrap();
        assert!(contains_minor(&g, &Graph::complete(4)).unwrap());
        assert!(!contains_minor(&g, &Graph::complete(5)).unwrap());
    }

    #[test]
    fn disconnected_pattern() {
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(contains_minor(&Graph::path(4), &two_edges).unwrap());
        assert!(!contains_minor(&Graph::path(3), &two_edges).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let budget = Budget {
            minor_max_vertices: 5,
            ..Budget::default()
        };
        let err = contains_minor_with(&Graph::cycle(6), &Graph::complete(4), &budget).unwrap_err();
        assert!(err.is_budget());
    }
}
