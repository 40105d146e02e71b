use super::Graph;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Isomorphism test under the default vertex cap.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    is_isomorphic_with(g1, g2, &Budget::default())
}

pub fn is_isomorphic_with(g1: &Graph, g2: &Graph, budget: &Budget) -> Result<bool> {
    let n = g1.n().max(g2.n());
    if n > budget.iso_max_vertices {
        return Err(Error::BudgetExceeded {
            resource: "isomorphism vertex count",
            limit: budget.iso_max_vertices as u64,
        });
    }
    Ok(find_isomorphism(g1, g2).is_some())
}

/// Backtracking search for a bijection `map` with `uv ∈ E(g1) ⇔ map[u]map[v] ∈ E(g2)`.
///
/// Candidates are pruned by a vertex colour (degree plus sorted neighbour
/// degrees) and by adjacency to already mapped vertices. Uncapped; callers
/// enforce size limits.
pub(crate) fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.n();
    if n != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let colors1 = colors(g1);
    let colors2 = colors(g2);
    let mut sorted1 = colors1.clone();
    let mut sorted2 = colors2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return None;
    }

    let order = search_order(g1);
    let matrix2 = adjacency_matrix(g2);
    let mut search = IsoSearch {
        g1,
        matrix2,
        n,
        colors1,
        colors2,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.assign(0) {
        Some(search.map)
    } else {
        None
    }
}

fn colors(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            let mut c: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            c.sort_unstable();
            c.insert(0, g.degree(v));
            c
        })
        .collect()
}

fn adjacency_matrix(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut m = vec![false; n * n];
    for &(u, v) in g.edges() {
        m[u * n + v] = true;
        m[v * n + u] = true;
    }
    m
}

/// Greedy order maximizing connections to already ordered vertices.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct IsoSearch<'a> {
    g1: &'a Graph,
    matrix2: Vec<bool>,
    n: usize,
    colors1: Vec<Vec<usize>>,
    colors2: Vec<Vec<usize>>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn assign(&mut self, depth: usize) -> bool {
        if depth == self.n {
            return true;
        }
        let v = self.order[depth];
        for c in 0..self.n {
            if self.used[c] || self.colors1[v] != self.colors2[c] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                self.g1.has_edge(u, v) == self.matrix2[self.map[u] * self.n + c]
            });
            if !consistent {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            if self.assign(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let c5 = Graph::cycle(5);
        let relabelled = c5.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert!(is_isomorphic(&c5, &relabelled).unwrap());
    }

    #[test]
    fn c6_is_not_two_triangles() {
        let two = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert!(!is_isomorphic(&Graph::cycle(6), &two).unwrap());
    }

    #[test]
    fn mapping_is_an_isomorphism() {
        let g = Graph::wheel(5);
        let h = g.relabel(&[5, 4, 3, 2, 1, 0]).unwrap();
        let map = find_isomorphism(&g, &h).unwrap();
        for &(u, v) in g.edges() {
            assert!(h.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let big = Graph::cycle(17);
        assert!(is_isomorphic(&big, &big).unwrap_err().is_budget());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let len = pairs.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                let edges = pairs.iter().zip(&mask).filter(|(_, &m)| m).map(|(e, _)| *e);
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn reflexive_under_random_relabelling(
            g in arb_graph(9),
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = g.relabel(&perm).unwrap();
            prop_assert!(is_isomorphic(&g, &g).unwrap());
            prop_assert!(is_isomorphic(&g, &h).unwrap());
        }

        #[test]
        fn symmetric_on_random_pairs(a in arb_graph(7), b in arb_graph(7)) {
            prop_assert_eq!(is_isomorphic(&a, &b).unwrap(), is_isomorphic(&b, &a).unwrap());
        }
    }
}
