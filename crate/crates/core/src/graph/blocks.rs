use super::Graph;

/// A block of a graph together with the map from its local vertex ids back
/// to the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    /// `vertices[local] = host vertex`, sorted ascending.
    pub vertices: Vec<usize>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.graph.n() == 2
    }
}

/// Block decomposition (maximal 2-connected subgraphs, bridges and isolated
/// vertices). Every edge, and therefore every cycle, lies in exactly one block.
pub fn blocks(g: &Graph) -> Vec<Block> {
    let n = g.n();
    let mut state = Tarjan {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        edge_stack: Vec::new(),
        out: Vec::new(),
    };
    for root in 0..n {
        if state.disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            state.disc[root] = state.time;
            state.time += 1;
            state.out.push(vec![root]);
            continue;
        }
        state.visit(root, usize::MAX);
    }
    let mut result: Vec<Block> = state
        .out
        .into_iter()
        .map(|mut vertices| {
            vertices.sort_unstable();
            vertices.dedup();
            Block {
                graph: g.induced(&vertices),
                vertices,
            }
        })
        .collect();
    result.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    result
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for &w in self.g.neighbors(u) {
            if self.disc[w] == usize::MAX {
                self.edge_stack.push((u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut vertices = Vec::new();
                    while let Some((a, b)) = self.edge_stack.pop() {
                        vertices.push(a);
                        vertices.push(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.out.push(vertices);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.edge_stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// True iff `g` has at least three vertices, is connected and has no cut
/// vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.n() < 3 {
        return false;
    }
    let bs = blocks(g);
    bs.len() == 1 && bs[0].vertices.len() == g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_census_bruteforce;

    #[test]
    fn bowtie_splits_at_cut_vertex() {
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let bs = blocks(&g);
        assert_eq!(bs.len(), 2);
        assert_eq!(bs[0].vertices, vec![0, 1, 2]);
        assert_eq!(bs[1].vertices, vec![2, 3, 4]);
        assert!(!is_two_connected(&g));
    }

    #[test]
    fn cycle_is_one_block() {
        let bs = blocks(&Graph::cycle(5));
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].graph, Graph::cycle(5));
        assert!(is_two_connected(&Graph::cycle(4)));
    }

    #[test]
    fn path_edges_are_bridges() {
        let bs = blocks(&Graph::path(3));
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(Block::is_bridge));
        assert!(!is_two_connected(&Graph::path(3)));
    }

    #[test]
    fn isolated_vertices_and_small_graphs() {
        let bs = blocks(&Graph::empty(2));
        assert_eq!(bs.len(), 2);
        assert!(!is_two_connected(&Graph::complete(2)));
        assert!(!is_two_connected(&Graph::empty(0)));
        let disconnected = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert!(!is_two_connected(&disconnected));
    }

    #[test]
    fn block_censuses_add_up() {
        // Two K4s sharing vertex 3, plus a pendant triangle hanging off a bridge.
        let mut edges: Vec<(usize, usize)> = Graph::complete(4).edges().to_vec();
        edges.extend(Graph::complete(4).edges().iter().map(|&(u, v)| (u + 3, v + 3)));
        edges.extend([(6, 7), (7, 8), (8, 9), (7, 9)]);
        let g = Graph::new(10, edges).unwrap();
        let whole = cycle_census_bruteforce(&g).unwrap();
        let parts = blocks(&g)
            .iter()
            .map(|b| cycle_census_bruteforce(&b.graph).unwrap())
            .fold(crate::graph::CycleCensus::default(), |a, b| a + b);
        assert!(whole.same_counts(&parts));
        assert_eq!(blocks(&g).len(), 4);
    }
}
