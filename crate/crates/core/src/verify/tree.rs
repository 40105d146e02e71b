use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::census::subtree_parity_counts;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::outerplanar::DualTree;

/// A tree on nodes `0..n`, optionally with a parity weight per node.
///
/// Without weights a subtree is odd when it has an odd number of nodes;
/// with weights, when its weight sum is odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    odd: Option<Vec<bool>>,
}

impl Tree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Tree> {
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        if n == 0 {
            return Err(Error::InvalidGraph("a tree has at least one node".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidGraph(format!(
                "a tree on {n} nodes has {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        let g = Graph::new(n, edges.iter().copied())?;
        if !g.is_connected() {
            return Err(Error::InvalidGraph("tree edges do not connect all nodes".into()));
        }
        Ok(Tree { n, edges, odd: None })
    }

    /// Attaches parity weights (`true` = odd).
    pub fn with_parities(mut self, odd: Vec<bool>) -> Result<Tree> {
        if odd.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "{} parities for {} nodes",
                odd.len(),
                self.n
            )));
        }
        self.odd = Some(odd);
        Ok(self)
    }

    /// The dual tree with face-length parities as weights.
    pub fn from_dual(tree: &DualTree) -> Tree {
        Tree {
            n: tree.node_count(),
            edges: {
                let mut e: Vec<_> = tree.tree_edges.iter().map(|e| (e.a.min(e.b), e.a.max(e.b))).collect();
                e.sort_unstable();
                e
            },
            odd: Some(tree.nodes.iter().map(|f| f.len() % 2 == 1).collect()),
        }
    }

    pub fn path(n: usize) -> Result<Tree> {
        Tree::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn star(leaves: usize) -> Tree {
        Tree {
            n: leaves + 1,
            edges: (1..=leaves).map(|i| (0, i)).collect(),
            odd: None,
        }
    }

    /// Decodes a Prüfer sequence over `0..len + 2`.
    pub fn from_prufer(seq: &[usize]) -> Result<Tree> {
        let n = seq.len() + 2;
        if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidParameter(format!("Prüfer entry {bad} out of range 0..{n}")));
        }
        let mut degree = vec![1usize; n];
        for &x in seq {
            degree[x] += 1;
        }
        let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &x in seq {
            let leaf = *leaves.iter().next().expect("a leaf always remains");
            leaves.remove(&leaf);
            edges.push((leaf, x));
            degree[x] -= 1;
            if degree[x] == 1 {
                leaves.insert(x);
            }
        }
        let last: Vec<usize> = leaves.into_iter().collect();
        edges.push((last[0], last[1]));
        Tree::new(n, edges)
    }

    pub fn to_prufer(&self) -> Vec<usize> {
        if self.n < 3 {
            return Vec::new();
        }
        let adj = self.adjacency();
        let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; self.n];
        let mut leaves: std::collections::BTreeSet<usize> = (0..self.n).filter(|&v| degree[v] == 1).collect();
        let mut seq = Vec::with_capacity(self.n - 2);
        for _ in 0..self.n - 2 {
            let leaf = *leaves.iter().next().expect("a leaf always remains");
            leaves.remove(&leaf);
            removed[leaf] = true;
            let parent = *adj[leaf].iter().find(|&&w| !removed[w]).expect("leaf has a neighbour");
            seq.push(parent);
            degree[parent] -= 1;
            if degree[parent] == 1 {
                leaves.insert(parent);
            }
        }
        seq
    }

    /// Uniform random labelled tree on `n` nodes.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Tree> {
        match n {
            0 => Err(Error::InvalidParameter("a tree has at least one node".into())),
            1 => Tree::new(1, []),
            2 => Tree::new(2, [(0, 1)]),
            _ => {
                let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
                Tree::from_prufer(&seq)
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_weighted(&self) -> bool {
        self.odd.is_some()
    }

    pub fn parities(&self) -> Vec<bool> {
        self.odd.clone().unwrap_or_else(|| vec![true; self.n])
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("tree edges are simple")
    }

    /// Isomorphism-invariant encoding (unweighted), rooted at a centre.
    pub fn canonical_form(&self) -> String {
        let adj = self.adjacency();
        centers(&adj)
            .into_iter()
            .map(|c| encode(&adj, c, usize::MAX))
            .min()
            .unwrap_or_default()
    }
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| encode(adj, w, v)).collect();
    children.sort();
    format!("({})", children.concat())
}

/// Subtrees counted by parity of order, or of weight sum for weighted trees.
pub fn subtree_parity_census(t: &Tree) -> (BigUint, BigUint) {
    let counts = subtree_parity_counts(&t.adjacency(), &t.parities());
    (counts.odd, counts.even)
}

/// Subset-enumeration oracle for [`subtree_parity_census`].
pub fn subtree_parity_census_bruteforce(t: &Tree, budget: &Budget) -> Result<(BigUint, BigUint)> {
    if t.n > 30 || (1u64 << t.n) > budget.cycle_steps {
        return Err(Error::BudgetExceeded {
            resource: "cycle_steps",
            limit: budget.cycle_steps,
        });
    }
    let odd = t.parities();
    let mut masks = vec![0u64; t.n];
    for &(u, v) in &t.edges {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    let (mut o, mut e) = (0u64, 0u64);
    for set in 1u64..(1 << t.n) {
        let start = set.trailing_zeros() as usize;
        let mut reached = 1u64 << start;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = masks[v] & set & !reached;
            reached |= new;
            frontier |= new;
        }
        if reached != set {
            continue;
        }
        let weight = (0..t.n).filter(|&v| set >> v & 1 == 1 && odd[v]).count();
        if weight % 2 == 1 {
            o += 1;
        } else {
            e += 1;
        }
    }
    Ok((o.into(), e.into()))
}

/// Maximum independent set size by the take/skip tree DP.
pub fn tree_independence_number(t: &Tree) -> usize {
    let adj = t.adjacency();
    let mut parent = vec![usize::MAX; t.n];
    let mut order = Vec::with_capacity(t.n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut take = vec![1usize; t.n];
    let mut skip = vec![0usize; t.n];
    for &v in order.iter().rev() {
        for &w in adj[v].iter().filter(|&&w| w != v && parent[w] == v) {
            take[v] += skip[w];
            skip[v] += take[w].max(skip[w]);
        }
    }
    take[0].max(skip[0])
}

/// One representative per isomorphism class of trees on `n` nodes, grown
/// leaf by leaf from the classes on `n - 1` nodes.
pub fn trees_up_to_isomorphism(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Tree> = BTreeMap::new();
    let single = Tree::new(1, []).expect("single node");
    level.insert(single.canonical_form(), single);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..t.n {
                let mut edges = t.edges.clone();
                edges.push((v, size - 1));
                let grown = Tree::new(size, edges).expect("adding a leaf keeps a tree");
                next.entry(grown.canonical_form()).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::independence_number_bruteforce;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    #[test]
    fn small_censuses() {
        let single = Tree::new(1, []).unwrap();
        assert_eq!(subtree_parity_census(&single), (1u32.into(), 0u32.into()));
        let p3 = Tree::path(3).unwrap();
        assert_eq!(subtree_parity_census(&p3), (4u32.into(), 2u32.into()));
    }

    #[test]
    fn independence_examples() {
        assert_eq!(tree_independence_number(&Tree::new(1, []).unwrap()), 1);
        assert_eq!(tree_independence_number(&Tree::path(3).unwrap()), 2);
        assert_eq!(tree_independence_number(&Tree::star(6)), 6);
        assert_eq!(tree_independence_number(&Tree::path(6).unwrap()), 3);
    }

    #[test]
    fn class_counts() {
        let expected = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (n, &count) in expected.iter().enumerate().skip(1) {
            assert_eq!(trees_up_to_isomorphism(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn class_counts_agree_with_prufer_enumeration() {
        for n in 3..=7usize {
            let mut seen = BTreeSet::new();
            let total = n.pow(n as u32 - 2);
            for code in 0..total {
                let mut x = code;
                let seq: Vec<usize> = (0..n - 2)
                    .map(|_| {
                        let d = x % n;
                        x /= n;
                        d
                    })
                    .collect();
                seen.insert(Tree::from_prufer(&seq).unwrap().canonical_form());
            }
            assert_eq!(seen.len(), trees_up_to_isomorphism(n).len());
        }
    }

    #[test]
    fn rejects_non_trees() {
        assert!(Tree::new(3, [(0, 1)]).is_err());
        assert!(Tree::new(4, [(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(Tree::new(0, []).is_err());
        assert!(Tree::from_prufer(&[5]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = Tree::path(3).unwrap().with_parities(vec![true, false, true]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<Tree>(&s).unwrap(), t);
        assert_eq!(serde_json::to_string(&Tree::path(2).unwrap()).unwrap(), r#"{"n":2,"edges":[[0,1]]}"#);
    }

    proptest! {
        #[test]
        fn prufer_round_trip(n in 3usize..20, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = Tree::random(n, &mut rng).unwrap();
            prop_assert_eq!(Tree::from_prufer(&t.to_prufer()).unwrap(), t);
        }

        #[test]
        fn dp_matches_oracles(n in 1usize..16, seed in any::<u64>(), weights in any::<u16>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = Tree::random(n, &mut rng).unwrap();
            prop_assert_eq!(
                subtree_parity_census(&t),
                subtree_parity_census_bruteforce(&t, &Budget::default()).unwrap()
            );
            prop_assert_eq!(
                tree_independence_number(&t),
                independence_number_bruteforce(&t.to_graph()).unwrap()
            );
            let w = t.clone().with_parities((0..n).map(|i| weights >> i & 1 == 1).collect()).unwrap();
            prop_assert_eq!(
                subtree_parity_census(&w),
                subtree_parity_census_bruteforce(&w, &Budget::default()).unwrap()
            );
        }
    }
}
