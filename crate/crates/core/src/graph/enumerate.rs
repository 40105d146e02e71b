use std::collections::HashMap;

use super::iso::find_isomorphism;
use super::Graph;
use crate::error::{Error, Result};
use crate::exec::{self, Jobs};

/// Largest order accepted by [`graphs_by_edge_subsets`].
pub const EDGE_SUBSET_MAX_VERTICES: usize = 8;

/// An isomorphism invariant: edge count, then per-vertex (degree, sorted
/// neighbour degrees, triangles through the vertex), sorted.
pub fn graph_invariant(g: &Graph) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let nbrs = g.neighbors(v);
            let triangles = nbrs
                .iter()
                .enumerate()
                .map(|(i, &a)| nbrs[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
                .sum();
            let mut row: Vec<usize> = nbrs.iter().map(|&w| g.degree(w)).collect();
            row.sort_unstable();
            row.insert(0, triangles);
            row.insert(0, g.degree(v));
            row
        })
        .collect();
    rows.sort();
    rows.insert(0, vec![g.edge_count()]);
    rows
}

/// One representative per isomorphism class of graphs on `n` vertices.
///
/// Every graph on `n` vertices minus its last vertex is some graph on `n - 1`
/// vertices, so extending each smaller representative by a new vertex with
/// every possible neighbourhood reaches all classes; duplicates are removed
/// by invariant bucketing plus an exact isomorphism test.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let mut reps = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut buckets: HashMap<Vec<Vec<usize>>, Vec<usize>> = HashMap::new();
        let mut next: Vec<Graph> = Vec::new();
        for base in &reps {
            let old = size - 1;
            for mask in 0u64..(1u64 << old) {
                let edges = base
                    .edges()
                    .iter()
                    .copied()
                    .chain((0..old).filter(|&v| mask >> v & 1 == 1).map(|v| (v, old)));
                let candidate = Graph::new(size, edges).expect("extension of a simple graph");
                let key = graph_invariant(&candidate);
                let bucket = buckets.entry(key).or_default();
                if bucket
                    .iter()
                    .all(|&i| find_isomorphism(&next[i], &candidate).is_none())
                {
                    bucket.push(next.len());
                    next.push(candidate);
                }
            }
        }
        reps = next;
    }
    reps
}

#[derive(Default)]
struct ClassSet {
    buckets: HashMap<Vec<Vec<usize>>, Vec<usize>>,
    reps: Vec<Graph>,
}

impl ClassSet {
    fn insert(&mut self, key: Vec<Vec<usize>>, g: Graph) {
        let reps = &self.reps;
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().all(|&i| find_isomorphism(&reps[i], &g).is_none()) {
            bucket.push(self.reps.len());
            self.reps.push(g);
        }
    }
}

/// One representative per isomorphism class of graphs on `n` vertices, by
/// deduplicating all `2^(n choose 2)` labelled graphs.
///
/// The edge subsets are split into chunks that are deduplicated
/// independently (in parallel when enabled) and then merged in chunk order,
/// so the result does not depend on `jobs`.
pub fn graphs_by_edge_subsets(n: usize, jobs: Jobs) -> Result<Vec<Graph>> {
    if n > EDGE_SUBSET_MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "edge-subset enumeration is limited to {EDGE_SUBSET_MAX_VERTICES} vertices"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    let chunk_bits = pairs.len().min(8);
    let chunk_len = total >> chunk_bits;
    let chunks: Vec<u64> = (0..1u64 << chunk_bits).collect();
    let partial = exec::map(&chunks, jobs, |&c| {
        let mut set = ClassSet::default();
        for mask in c * chunk_len..(c + 1) * chunk_len {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e);
            let g = Graph::new(n, edges).expect("distinct pairs");
            set.insert(graph_invariant(&g), g);
        }
        set.reps
    });
    let mut merged = ClassSet::default();
    for g in partial.into_iter().flatten() {
        merged.insert(graph_invariant(&g), g);
    }
    Ok(merged.reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes_by_edge_subsets(n: usize) -> usize {
        graphs_by_edge_subsets(n, Jobs::Auto).unwrap().len()
    }

    #[test]
    fn class_counts_match_known_values() {
        // Unlabelled graphs on n vertices: 1, 1, 2, 4, 11, 34, 156, 1044.
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(graphs_up_to_isomorphism(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn extension_agrees_with_edge_subset_dedup() {
        for n in 0..=6 {
            assert_eq!(classes_by_edge_subsets(n), graphs_up_to_isomorphism(n).len());
        }
        assert_eq!(
            graphs_by_edge_subsets(5, Jobs::SEQUENTIAL).unwrap(),
            graphs_by_edge_subsets(5, Jobs::Auto).unwrap()
        );
        assert!(graphs_by_edge_subsets(9, Jobs::Auto).is_err());
    }
}
