//! Structural recognition: claws, forbidden minors, outerplanar embeddings
//! and classification of claw-free 2-connected K4-minor-free graphs.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::families::{canonical_attach, FamilySpec};
use crate::graph::{blocks, is_two_connected, Graph};
use crate::outerplanar::OuterplanarGraph;

/// A centre with three pairwise non-adjacent neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl fmt::Display for Claw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.leaves;
        write!(f, "[{}; {a},{b},{c}]", self.center)
    }
}

/// The lexicographically first induced `K_{1,3}`, if any.
pub fn claw_witness(g: &Graph) -> Option<Claw> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some(Claw { center: v, leaves: [a, b, c] });
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    claw_witness(g).is_none()
}

/// Undirected multigraph used by the series-parallel reduction.
#[derive(Debug, Clone)]
pub struct Multigraph {
    adj: Vec<BTreeMap<usize, usize>>,
    alive: Vec<bool>,
}

impl Multigraph {
    pub fn from_graph(g: &Graph) -> Self {
        let mut m = Multigraph {
            adj: vec![BTreeMap::new(); g.n()],
            alive: vec![true; g.n()],
        };
        for &(u, v) in g.edges() {
            m.add_edge(u, v);
        }
        m
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        *self.adj[u].entry(v).or_insert(0) += 1;
        if u != v {
            *self.adj[v].entry(u).or_insert(0) += 1;
        }
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.adj[u].get(&v).copied().unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn edge_count(&self) -> usize {
        let mut twice = 0;
        for (v, nb) in self.adj.iter().enumerate() {
            for (&u, &m) in nb {
                twice += if u == v { 2 * m } else { m };
            }
        }
        twice / 2
    }

    fn remove_vertex(&mut self, v: usize) -> Vec<usize> {
        let nb: Vec<usize> = self.adj[v].keys().copied().filter(|&u| u != v).collect();
        for &u in &nb {
            self.adj[u].remove(&v);
        }
        self.adj[v].clear();
        self.alive[v] = false;
        nb
    }

    /// Applies loop deletion, parallel-edge collapse, deletion of vertices of
    /// degree at most one and suppression of degree-two vertices until none
    /// applies. The graph has no `K4` minor iff nothing is left.
    pub fn reduce_series_parallel(&mut self) {
        let mut work: Vec<usize> = (0..self.adj.len()).filter(|&v| self.alive[v]).collect();
        while let Some(v) = work.pop() {
            if !self.alive[v] {
                continue;
            }
            self.adj[v].remove(&v);
            let nb: Vec<usize> = self.adj[v].keys().copied().collect();
            for &u in &nb {
                self.adj[v].insert(u, 1);
                self.adj[u].insert(v, 1);
            }
            match nb.len() {
                0 | 1 => {
                    let freed = self.remove_vertex(v);
                    work.extend(freed);
                }
                2 => {
                    let (a, b) = (nb[0], nb[1]);
                    self.remove_vertex(v);
                    self.add_edge(a, b);
                    work.extend([a, b]);
                }
                _ => {}
            }
        }
    }
}

/// Series-parallel reduction test; exact and polynomial.
pub fn is_k4_minor_free(g: &Graph) -> bool {
    let mut m = Multigraph::from_graph(g);
    m.reduce_series_parallel();
    m.edge_count() == 0
}

pub fn is_k23_minor_free(g: &Graph) -> Result<bool> {
    is_k23_minor_free_with(g, &Budget::default())
}

/// A 2-connected graph has no `K_{2,3}` minor iff it is `K4` or outerplanar;
/// a graph has one iff some block does.
pub fn is_k23_minor_free_with(g: &Graph, budget: &Budget) -> Result<bool> {
    for block in blocks(g) {
        let h = &block.graph;
        if h.n() < 5 {
            continue;
        }
        if find_outerplanar_embedding_with(h, budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An outerplanar embedding of a 2-connected graph: `order[p]` is the
/// graph vertex at boundary position `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub outerplanar: OuterplanarGraph,
    pub order: Vec<usize>,
}

impl Embedding {
    /// Boundary position of every graph vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }
}

pub fn find_outerplanar_embedding(g: &Graph) -> Result<Option<Embedding>> {
    find_outerplanar_embedding_with(g, &Budget::default())
}

/// Finds the Hamiltonian cycle bounding the outer face, if `g` is
/// 2-connected and outerplanar.
///
/// In a 2-connected outerplanar graph on at least four vertices an edge
/// `uv` lies on the outer cycle iff `g - {u, v}` is connected. Candidate
/// boundary edges are picked out this way; the answer is then confirmed by
/// checking that they form a Hamiltonian cycle and that the remaining edges
/// nest. Each edge test is charged to `embedding_states`.
pub fn find_outerplanar_embedding_with(g: &Graph, budget: &Budget) -> Result<Option<Embedding>> {
    let n = g.n();
    if n < 3 || g.edge_count() > 2 * n - 3 || !is_two_connected(g) {
        return Ok(None);
    }
    if g.edge_count() as u64 > budget.embedding_states {
        return Err(Error::BudgetExceeded {
            resource: "embedding_states",
            limit: budget.embedding_states,
        });
    }
    let mut boundary_adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        if n == 3 || connected_without(g, u, v) {
            boundary_adj[u].push(v);
            boundary_adj[v].push(u);
        }
    }
    if boundary_adj.iter().any(|nb| nb.len() != 2) {
        return Ok(None);
    }
    let mut order = Vec::with_capacity(n);
    let (mut prev, mut cur) = (usize::MAX, 0);
    loop {
        order.push(cur);
        let next = if boundary_adj[cur][0] != prev {
            boundary_adj[cur][0]
        } else {
            boundary_adj[cur][1]
        };
        prev = cur;
        cur = next;
        if cur == 0 {
            break;
        }
        if order.len() > n {
            return Ok(None);
        }
    }
    if order.len() != n {
        return Ok(None);
    }
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let chords = g
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u], pos[v]))
        .filter(|&(i, j)| i.abs_diff(j) != 1 && i.abs_diff(j) != n - 1);
    match OuterplanarGraph::new(n, chords) {
        Ok(outerplanar) => Ok(Some(Embedding { outerplanar, order })),
        Err(Error::InvalidOuterplanar(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn connected_without(g: &Graph, a: usize, b: usize) -> bool {
    let n = g.n();
    let Some(start) = (0..n).find(|&v| v != a && v != b) else {
        return true;
    };
    let mut seen = vec![false; n];
    seen[a] = true;
    seen[b] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n - 2
}

/// Family of a claw-free 2-connected graph without a `K4` minor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Classification {
    Cycle { t: usize },
    Zd { d: usize },
    ZdStar { d: usize },
    St { t: usize, attach: Vec<usize> },
    NotApplicable { reason: String },
}

impl Classification {
    pub fn is_applicable(&self) -> bool {
        !matches!(self, Classification::NotApplicable { .. })
    }

    /// The generator spec for the class; a cycle is `S_t` with nothing attached.
    pub fn family_spec(&self) -> Option<FamilySpec> {
        match self {
            Classification::Cycle { t } => Some(FamilySpec::S { t: *t, attach: Vec::new() }),
            Classification::Zd { d } => Some(FamilySpec::Z { d: *d }),
            Classification::ZdStar { d } => Some(FamilySpec::ZStar { d: *d }),
            Classification::St { t, attach } => Some(FamilySpec::S { t: *t, attach: attach.clone() }),
            Classification::NotApplicable { .. } => None,
        }
    }

    fn not_applicable(reason: impl Into<String>) -> Self {
        Classification::NotApplicable { reason: reason.into() }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Cycle { t } => write!(f, "cycle C_{t}"),
            Classification::Zd { d } => write!(f, "Z_{d}"),
            Classification::ZdStar { d } => write!(f, "Z*_{d}"),
            Classification::St { t, attach } => write!(f, "S_{t} attach {attach:?}"),
            Classification::NotApplicable { reason } => write!(f, "not applicable: {reason}"),
        }
    }
}

pub fn classify_claw_free_k4_free(g: &Graph) -> Classification {
    classify_claw_free_k4_free_with(g, &Budget::default())
}

/// Identifies `g` as a cycle, `Z_d`, `Z*_d` or `S_t`, or explains which
/// hypothesis fails. Every positive answer is confirmed by an explicit
/// isomorphism onto the generated family member.
pub fn classify_claw_free_k4_free_with(g: &Graph, budget: &Budget) -> Classification {
    if !is_two_connected(g) {
        return Classification::not_applicable("not 2-connected");
    }
    if let Some(claw) = claw_witness(g) {
        return Classification::not_applicable(format!("not claw-free: witness {claw}"));
    }
    if !is_k4_minor_free(g) {
        return Classification::not_applicable("not K4-minor-free");
    }
    let embedding = match find_outerplanar_embedding_with(g, budget) {
        Ok(Some(e)) => e,
        Ok(None) => return Classification::not_applicable("no outerplanar embedding"),
        Err(e) => return Classification::not_applicable(e.to_string()),
    };
    let og = &embedding.outerplanar;
    let n = og.boundary_len();
    if og.chords().is_empty() {
        return Classification::Cycle { t: n };
    }

    let z = if n % 2 == 1 {
        Classification::Zd { d: (n - 1) / 2 }
    } else {
        Classification::ZdStar { d: n / 2 }
    };
    let s = s_candidate(og);
    let tree = og.dual_tree();
    let adjacent_triangles = tree
        .tree_edges
        .iter()
        .any(|e| tree.nodes[e.a].len() == 3 && tree.nodes[e.b].len() == 3);
    let candidates = if adjacent_triangles { [Some(z), s] } else { [s, Some(z)] };

    for candidate in candidates.into_iter().flatten() {
        let Some(spec) = candidate.family_spec() else {
            continue;
        };
        let Ok(target) = spec.generate() else {
            continue;
        };
        if certify(g, &embedding, &target) {
            return candidate;
        }
    }
    Classification::not_applicable("no family matched")
}

/// Reads off `S_t` by peeling ears: degree-two boundary vertices whose two
/// neighbours are joined by a chord.
fn s_candidate(og: &OuterplanarGraph) -> Option<Classification> {
    let n = og.boundary_len();
    let g = og.to_graph();
    let mut ears = Vec::new();
    for p in 0..n {
        let before = (p + n - 1) % n;
        let after = (p + 1) % n;
        if g.degree(p) == 2 && og.chord_index(before, after).is_some() && n - ears.len() > 3 {
            ears.push(p);
        }
    }
    let core: Vec<usize> = (0..n).filter(|p| ears.binary_search(p).is_err()).collect();
    let t = core.len();
    if t < 3 {
        return None;
    }
    let mut attach = Vec::with_capacity(ears.len());
    for &p in &ears {
        let before = (p + n - 1) % n;
        let i = core.binary_search(&before).ok()?;
        attach.push(i);
    }
    Some(Classification::St { t, attach: canonical_attach(t, &attach) })
}

/// Checks that a boundary isomorphism onto `target` is a graph isomorphism
/// of `g`.
fn certify(g: &Graph, embedding: &Embedding, target: &OuterplanarGraph) -> bool {
    let Some(map) = embedding.outerplanar.boundary_isomorphism(target) else {
        return false;
    };
    let pos = embedding.positions();
    let h = target.to_graph();
    g.edge_count() == h.edge_count()
        && g.edges().iter().all(|&(u, v)| h.has_edge(map[pos[u]], map[pos[v]]))
}
