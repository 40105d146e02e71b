//! The canonical model of a 2-connected outerplanar embedding: a boundary
//! cycle `0, 1, ..., n-1` plus a set of pairwise non-crossing chords.
//!
//! Non-crossing chords form a laminar family of boundary intervals, so faces
//! and the dual tree come out of a single interval-nesting pass.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(value: usize) -> Parity {
        if value % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A broken invariant of a boundary + chords description. Chord indices refer
/// to positions in the submitted chord list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BoundaryTooShort { boundary: usize },
    OutOfRange { chord: usize },
    Adjacent { chord: usize },
    Duplicate { first: usize, second: usize },
    Crossing { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BoundaryTooShort { boundary } => {
                write!(f, "boundary length {boundary} is below 3")
            }
            Violation::OutOfRange { chord } => write!(f, "chord {chord} has an endpoint off the boundary"),
            Violation::Adjacent { chord } => {
                write!(f, "chord {chord} joins vertices adjacent on the boundary")
            }
            Violation::Duplicate { first, second } => write!(f, "chords {first} and {second} coincide"),
            Violation::Crossing { first, second } => write!(f, "chords {first} and {second} cross"),
        }
    }
}

/// Checks every invariant of a boundary length and chord list. An empty
/// result means the pair describes a valid [`OuterplanarGraph`].
pub fn validate(boundary: usize, chords: &[(usize, usize)]) -> Vec<Violation> {
    let mut violations = Vec::new();
    if boundary < 3 {
        violations.push(Violation::BoundaryTooShort { boundary });
    }
    let normalized: Vec<(usize, usize)> = chords.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let mut usable = vec![true; chords.len()];
    for (idx, &(i, j)) in normalized.iter().enumerate() {
        if j >= boundary {
            violations.push(Violation::OutOfRange { chord: idx });
            usable[idx] = false;
        } else if j - i < 2 || (i == 0 && j == boundary - 1) {
            violations.push(Violation::Adjacent { chord: idx });
            usable[idx] = false;
        }
    }
    for a in 0..normalized.len() {
        for b in a + 1..normalized.len() {
            if !usable[a] || !usable[b] {
                continue;
            }
            let (i, j) = normalized[a];
            let (k, l) = normalized[b];
            if (i, j) == (k, l) {
                violations.push(Violation::Duplicate { first: a, second: b });
            } else if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                violations.push(Violation::Crossing { first: a, second: b });
            }
        }
    }
    violations
}

/// A 2-connected outerplanar graph in canonical embedding form.
///
/// Vertices `0..boundary_len` appear in this order along the outer cycle;
/// chords are stored as sorted `(i, j)` pairs with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "OuterplanarJson", try_from = "OuterplanarJson")]
pub struct OuterplanarGraph {
    boundary_len: usize,
    chords: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct OuterplanarJson {
    boundary: usize,
    chords: Vec<[usize; 2]>,
}

impl From<OuterplanarGraph> for OuterplanarJson {
    fn from(og: OuterplanarGraph) -> Self {
        OuterplanarJson {
            boundary: og.boundary_len,
            chords: og.chords.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

impl TryFrom<OuterplanarJson> for OuterplanarGraph {
    type Error = Error;

    fn try_from(raw: OuterplanarJson) -> Result<Self> {
        OuterplanarGraph::new(raw.boundary, raw.chords.into_iter().map(|[i, j]| (i, j)))
    }
}

impl fmt::Display for OuterplanarGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "boundary {} chords {:?}", self.boundary_len, self.chords)
    }
}

impl OuterplanarGraph {
    pub fn new(boundary: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let chords: Vec<(usize, usize)> = chords.into_iter().collect();
        let violations = validate(boundary, &chords);
        if !violations.is_empty() {
            return Err(Error::InvalidOuterplanar(violations));
        }
        let mut chords: Vec<(usize, usize)> = chords.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        chords.sort_unstable();
        Ok(OuterplanarGraph {
            boundary_len: boundary,
            chords,
        })
    }

    /// The chordless cycle `C_n`.
    pub fn cycle(boundary: usize) -> Result<Self> {
        OuterplanarGraph::new(boundary, [])
    }

    pub fn boundary_len(&self) -> usize {
        self.boundary_len
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn vertex_count(&self) -> usize {
        self.boundary_len
    }

    pub fn edge_count(&self) -> usize {
        self.boundary_len + self.chords.len()
    }

    pub fn is_boundary_edge(&self, u: usize, v: usize) -> bool {
        let n = self.boundary_len;
        let (a, b) = (u.min(v), u.max(v));
        b < n && (b - a == 1 || (a == 0 && b == n - 1))
    }

    pub fn chord_index(&self, u: usize, v: usize) -> Option<usize> {
        self.chords.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.is_boundary_edge(u, v) || self.chord_index(u, v).is_some()
    }

    /// Boundary edges `(k, k+1 mod n)` for `k = 0..n`, as `(min, max)` pairs.
    pub fn boundary_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.boundary_len;
        (0..n).map(move |k| {
            let (a, b) = (k, (k + 1) % n);
            (a.min(b), a.max(b))
        })
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(
            self.boundary_len,
            self.boundary_edges().chain(self.chords.iter().copied()),
        )
        .expect("valid outerplanar description is a simple graph")
    }

    pub fn faces(&self) -> Vec<Face> {
        self.decompose().faces
    }

    pub fn dual_tree(&self) -> DualTree {
        let decomposition = self.decompose();
        let tree_edges = self
            .chords
            .iter()
            .enumerate()
            .map(|(idx, &chord)| {
                let inner = decomposition.chord_face[idx];
                DualEdge {
                    a: decomposition.parent[inner].expect("chord faces have a parent"),
                    b: inner,
                    chord,
                }
            })
            .collect();
        DualTree {
            nodes: decomposition.faces,
            tree_edges,
        }
    }

    pub fn boundary_parity(&self) -> Parity {
        Parity::of(self.boundary_len)
    }

    /// Chord parity under the proper 2-colouring `i ↦ i mod 2` of an even
    /// boundary: a chord is odd iff it joins two vertices of the same colour.
    pub fn chord_parity(&self, chord: (usize, usize)) -> Result<Parity> {
        if self.boundary_parity() == Parity::Odd {
            return Err(Error::OddBoundary);
        }
        let (i, j) = chord;
        if self.chord_index(i, j).is_none() {
            return Err(Error::EdgeNotFound(i.min(j), i.max(j)));
        }
        Ok(if i % 2 == j % 2 { Parity::Odd } else { Parity::Even })
    }

    /// Numbers of odd and even chords; requires an even boundary.
    pub fn chord_parity_counts(&self) -> Result<(usize, usize)> {
        if self.boundary_parity() == Parity::Odd {
            return Err(Error::OddBoundary);
        }
        let odd = self.chords.iter().filter(|&&(i, j)| i % 2 == j % 2).count();
        Ok((odd, self.chords.len() - odd))
    }

    pub fn dual_tree_shape(&self) -> DualShape {
        self.dual_tree().shape()
    }

    /// Boundary positions of `other` indexed by boundary positions of `self`,
    /// when some rotation or reflection of the boundary carries the chord set
    /// of `self` onto that of `other`.
    ///
    /// A 2-connected outerplanar graph has exactly one Hamiltonian cycle, so
    /// this is an isomorphism test between the underlying graphs.
    pub fn boundary_isomorphism(&self, other: &OuterplanarGraph) -> Option<Vec<usize>> {
        let n = self.boundary_len;
        if n != other.boundary_len || self.chords.len() != other.chords.len() {
            return None;
        }
        for reflect in [false, true] {
            for shift in 0..n {
                let map: Vec<usize> = (0..n)
                    .map(|p| {
                        let q = if reflect { (n - p) % n } else { p };
                        (q + shift) % n
                    })
                    .collect();
                if self
                    .chords
                    .iter()
                    .all(|&(i, j)| other.chord_index(map[i], map[j]).is_some())
                {
                    return Some(map);
                }
            }
        }
        None
    }

    /// DOT rendering with boundary positions as labels; chords dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.boundary_len {
            let _ = writeln!(out, "  {v} [label=\"{v}\"];");
        }
        for (a, b) in self.boundary_edges() {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        for &(a, b) in &self.chords {
            let _ = writeln!(out, "  {a} -- {b} [style=dashed];");
        }
        out.push_str("}\n");
        out
    }

    /// Interval nesting pass. Face 0 is the face on the boundary edge
    /// `(n-1, 0)`; face `1 + c` is the face just inside chord `c`.
    pub(crate) fn decompose(&self) -> Decomposition {
        let n = self.boundary_len;
        let m = self.chords.len();
        // Children of each interval, keyed by start vertex.
        let mut parent = vec![None; m + 1];
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&c| (self.chords[c].0, std::cmp::Reverse(self.chords[c].1)));
        let mut stack: Vec<usize> = vec![0];
        let interval = |node: usize| -> (usize, usize) {
            if node == 0 {
                (0, n - 1)
            } else {
                self.chords[node - 1]
            }
        };
        for c in order {
            let node = c + 1;
            let (_, j) = self.chords[c];
            while interval(*stack.last().unwrap()).1 < j {
                stack.pop();
            }
            let top = *stack.last().unwrap();
            parent[node] = Some(top);
            children[top].push(node);
            stack.push(node);
        }

        let mut faces = Vec::with_capacity(m + 1);
        let mut boundary_face = vec![0; n];
        for node in 0..=m {
            let (start, end) = interval(node);
            let mut by_start: Vec<(usize, usize)> = children[node]
                .iter()
                .map(|&ch| (self.chords[ch - 1].0, self.chords[ch - 1].1))
                .collect();
            by_start.sort_unstable();
            let mut vertices = Vec::new();
            let mut k = start;
            let mut next_child = by_start.iter().peekable();
            while k < end {
                vertices.push(k);
                match next_child.peek() {
                    Some(&&(s, e)) if s == k => {
                        next_child.next();
                        k = e;
                    }
                    _ => {
                        boundary_face[k] = node;
                        k += 1;
                    }
                }
            }
            vertices.push(end);
            if node == 0 {
                boundary_face[n - 1] = 0;
            }
            faces.push(Face { vertices });
        }
        Decomposition {
            faces,
            parent,
            chord_face: (1..=m).collect(),
            boundary_face,
        }
    }
}

/// Every outerplanar graph on a labelled `boundary`-cycle with at most
/// `max_chords` chords, in lexicographic order of chord sets.
pub fn dissections(boundary: usize, max_chords: usize) -> Vec<OuterplanarGraph> {
    fn rec(
        idx: usize,
        candidates: &[(usize, usize)],
        max_chords: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if idx == candidates.len() {
            out.push(current.clone());
            return;
        }
        rec(idx + 1, candidates, max_chords, current, out);
        let (i, j) = candidates[idx];
        if current.len() < max_chords && current.iter().all(|&c| !crosses(c, (i, j))) {
            current.push((i, j));
            rec(idx + 1, candidates, max_chords, current, out);
            current.pop();
        }
    }
    if boundary < 3 {
        return Vec::new();
    }
    let candidates: Vec<(usize, usize)> = (0..boundary)
        .flat_map(|i| (i + 2..boundary).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j == boundary - 1))
        .collect();
    let mut out = Vec::new();
    rec(0, &candidates, max_chords, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter()
        .map(|chords| OuterplanarGraph { boundary_len: boundary, chords })
        .collect()
}

fn crosses((i, j): (usize, usize), (k, l): (usize, usize)) -> bool {
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// Identifies boundary edge `edge_a` of `a` with boundary edge `edge_b` of
/// `b` (first endpoints together, second endpoints together). The result is
/// again 2-connected outerplanar, with the identified edge as a chord.
///
/// The new boundary runs around `a` starting at `edge_a.1` and ending at
/// `edge_a.0`, then through the vertices of `b` other than the identified
/// ones.
pub fn glue(
    a: &OuterplanarGraph,
    edge_a: (usize, usize),
    b: &OuterplanarGraph,
    edge_b: (usize, usize),
) -> Result<OuterplanarGraph> {
    for (g, (u, v)) in [(a, edge_a), (b, edge_b)] {
        if !g.is_boundary_edge(u, v) || u == v {
            return Err(Error::InvalidParameter(format!(
                "({u}, {v}) is not a boundary edge of {g}"
            )));
        }
    }
    let na = a.boundary_len;
    let nb = b.boundary_len;
    let walk_a = boundary_walk(na, edge_a.1, edge_a.0);
    let walk_b = boundary_walk(nb, edge_b.0, edge_b.1);
    let mut pos_a = vec![0; na];
    for (p, &v) in walk_a.iter().enumerate() {
        pos_a[v] = p;
    }
    let mut pos_b = vec![0; nb];
    pos_b[edge_b.0] = pos_a[edge_a.0];
    pos_b[edge_b.1] = pos_a[edge_a.1];
    for (i, &v) in walk_b[1..nb - 1].iter().enumerate() {
        pos_b[v] = na + i;
    }
    let chords = a
        .chords
        .iter()
        .map(|&(i, j)| (pos_a[i], pos_a[j]))
        .chain(b.chords.iter().map(|&(i, j)| (pos_b[i], pos_b[j])))
        .chain(std::iter::once((0, na - 1)));
    OuterplanarGraph::new(na + nb - 2, chords)
}

/// All boundary vertices starting at `from` and moving away from its
/// neighbour `away`, so that the walk ends at `away`.
fn boundary_walk(n: usize, from: usize, away: usize) -> Vec<usize> {
    let step = if (from + 1) % n == away { n - 1 } else { 1 };
    (0..n).map(|i| (from + i * step) % n).collect()
}

pub(crate) struct Decomposition {
    pub faces: Vec<Face>,
    pub parent: Vec<Option<usize>>,
    /// Face directly inside each chord.
    pub chord_face: Vec<usize>,
    /// Face containing boundary edge `(k, k+1 mod n)`.
    pub boundary_face: Vec<usize>,
}

/// A finite face, listed as the cyclic sequence of its boundary vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualEdge {
    pub a: usize,
    pub b: usize,
    /// The chord shared by faces `a` and `b`.
    pub chord: (usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualShape {
    Path,
    Star,
    Other,
}

/// Finite faces as nodes, shared chords as edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualTree {
    pub nodes: Vec<Face>,
    pub tree_edges: Vec<DualEdge>,
}

impl DualTree {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for e in &self.tree_edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        adj
    }

    /// Every node has degree at most 2.
    pub fn is_path(&self) -> bool {
        self.adjacency().iter().all(|a| a.len() <= 2)
    }

    /// At least three nodes, one of them adjacent to all others.
    pub fn is_star(&self) -> bool {
        let k = self.nodes.len();
        k >= 3 && self.adjacency().iter().any(|a| a.len() == k - 1)
    }

    /// Index of the centre node of a star.
    pub fn star_center(&self) -> Option<usize> {
        if !self.is_star() {
            return None;
        }
        let k = self.nodes.len();
        self.adjacency().iter().position(|a| a.len() == k - 1)
    }

    /// `Path` takes precedence, so trees with at most three nodes are paths.
    pub fn shape(&self) -> DualShape {
        if self.is_path() {
            DualShape::Path
        } else if self.is_star() {
            DualShape::Star
        } else {
            DualShape::Other
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::{enumerate_cycles, is_two_connected};

    fn og(n: usize, chords: &[(usize, usize)]) -> OuterplanarGraph {
        OuterplanarGraph::new(n, chords.iter().copied()).unwrap()
    }

    fn rotations(face: &Face) -> Vec<Vec<usize>> {
        let k = face.len();
        (0..k)
            .map(|s| {
                let mut v = face.vertices.clone();
                v.rotate_left(s);
                v
            })
            .collect()
    }

    #[test]
    fn validation_examples() {
        assert!(validate(6, &[(0, 2), (2, 4)]).is_empty());
        assert_eq!(
            validate(6, &[(0, 3), (1, 4)]),
            vec![Violation::Crossing { first: 0, second: 1 }]
        );
        assert_eq!(validate(5, &[(0, 4)]), vec![Violation::Adjacent { chord: 0 }]);
        assert_eq!(validate(5, &[(1, 2)]), vec![Violation::Adjacent { chord: 0 }]);
        assert_eq!(validate(5, &[(1, 7)]), vec![Violation::OutOfRange { chord: 0 }]);
        assert_eq!(
            validate(6, &[(0, 3), (3, 0)]),
            vec![Violation::Duplicate { first: 0, second: 1 }]
        );
        assert_eq!(validate(2, &[]), vec![Violation::BoundaryTooShort { boundary: 2 }]);
        // Sharing an endpoint is not a crossing.
        assert!(validate(8, &[(0, 4), (4, 7), (0, 2)]).is_empty());
    }

    #[test]
    fn json_reports_chord_indices() {
        let text = r#"{"boundary":6,"chords":[[0,3],[1,4]]}"#;
        let err = serde_json::from_str::<OuterplanarGraph>(text).unwrap_err().to_string();
        assert!(err.contains("chords 0 and 1 cross"), "{err}");
        let ok: OuterplanarGraph = serde_json::from_str(r#"{"boundary":6,"chords":[[2,0]]}"#).unwrap();
        assert_eq!(serde_json::to_string(&ok).unwrap(), r#"{"boundary":6,"chords":[[0,2]]}"#);
    }

    #[test]
    fn to_graph_examples() {
        assert_eq!(og(4, &[]).to_graph(), Graph::cycle(4));
        let diamond = og(4, &[(0, 2)]).to_graph();
        assert_eq!(diamond.edge_count(), 5);
        assert!(diamond.has_edge(0, 2) && !diamond.has_edge(1, 3));
    }

    #[test]
    fn faces_examples() {
        let hex = og(6, &[]).faces();
        assert_eq!(hex, vec![Face { vertices: vec![0, 1, 2, 3, 4, 5] }]);

        let split = og(6, &[(0, 3)]).faces();
        assert_eq!(split.len(), 2);
        assert!(split.iter().any(|f| f.vertices == vec![0, 1, 2, 3]));
        assert!(split.iter().any(|f| rotations(f).contains(&vec![3, 4, 5, 0])));

        let fan = og(5, &[(1, 3), (0, 3)]).faces();
        assert_eq!(fan.len(), 3);
        assert!(fan.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn dual_tree_of_two_chords_at_a_vertex_is_a_path() {
        let tree = og(6, &[(0, 2), (0, 4)]).dual_tree();
        assert_eq!(tree.node_count(), 3);
        assert!(tree.is_path());
        let adj = tree.adjacency();
        let center = adj.iter().position(|a| a.len() == 2).unwrap();
        let mut verts = tree.nodes[center].vertices.clone();
        verts.sort_unstable();
        assert_eq!(verts, vec![0, 2, 3, 4]);
    }

    #[test]
    fn chord_parity_examples() {
        let g = og(6, &[(0, 2)]);
        assert_eq!(g.chord_parity((0, 2)).unwrap(), Parity::Odd);
        let h = og(6, &[(0, 3)]);
        assert_eq!(h.chord_parity((0, 3)).unwrap(), Parity::Even);
        assert_eq!(h.chord_parity((0, 2)).unwrap_err(), Error::EdgeNotFound(0, 2));
        let odd = og(7, &[(0, 3)]);
        assert_eq!(odd.chord_parity((0, 3)).unwrap_err(), Error::OddBoundary);
        assert_eq!(odd.boundary_parity(), Parity::Odd);
        assert_eq!(h.boundary_parity(), Parity::Even);
    }

    #[test]
    fn shapes() {
        assert_eq!(og(6, &[]).dual_tree_shape(), DualShape::Path);
        assert_eq!(og(5, &[(0, 2)]).dual_tree_shape(), DualShape::Path);
        // Inner triangle 0-2-4 with three ears.
        let star = og(6, &[(0, 2), (2, 4), (0, 4)]).dual_tree();
        assert_eq!(star.shape(), DualShape::Star);
        assert_eq!(star.nodes[star.star_center().unwrap()].len(), 3);
    }

    #[test]
    fn boundary_isomorphism_finds_reflections() {
        let a = og(6, &[(0, 2)]);
        let b = og(6, &[(3, 5)]);
        let map = a.boundary_isomorphism(&b).unwrap();
        let ga = a.to_graph();
        let gb = b.to_graph();
        for &(u, v) in ga.edges() {
            assert!(gb.has_edge(map[u], map[v]));
        }
        assert!(a.boundary_isomorphism(&og(6, &[(0, 3)])).is_none());
    }

    /// Brute-force check of the face and parity invariants on every chord set
    /// of small polygons.
    #[test]
    fn invariants_on_all_small_dissections() {
        for n in 3..=8 {
            for chords in all_dissections(n) {
                let g = og(n, &chords);
                let faces = g.faces();
                let total: usize = faces.iter().map(Face::len).sum();
                assert_eq!(total, n + 2 * chords.len());
                let tree = g.dual_tree();
                assert_eq!(tree.node_count(), chords.len() + 1);
                assert_eq!(tree.tree_edges.len(), chords.len());
                assert!(is_two_connected(&g.to_graph()));
                // Consecutive face vertices are joined by an edge of the graph.
                for f in &faces {
                    for i in 0..f.len() {
                        let (a, b) = (f.vertices[i], f.vertices[(i + 1) % f.len()]);
                        assert!(g.contains_edge(a, b), "{g}: face {:?}", f.vertices);
                    }
                }
                if n % 2 == 0 {
                    let cycles = enumerate_cycles(&g.to_graph()).unwrap();
                    for &(i, j) in &chords {
                        let arc = j - i;
                        let chord_odd = g.chord_parity((i, j)).unwrap() == Parity::Odd;
                        let both_arcs_even = arc % 2 == 0 && (n - arc) % 2 == 0;
                        // Chord plus either arc: the cycles through the chord
                        // that use only boundary edges otherwise.
                        let side_cycles: Vec<_> = cycles
                            .iter()
                            .filter(|c| {
                                c.contains_edge(i, j)
                                    && c.edges().filter(|&(a, b)| a != i || b != j).all(|(a, b)| g.is_boundary_edge(a, b))
                            })
                            .collect();
                        assert_eq!(side_cycles.len(), 2);
                        let both_odd = side_cycles.iter().all(|c| c.is_odd());
                        assert_eq!(chord_odd, both_arcs_even);
                        assert_eq!(chord_odd, both_odd);
                    }
                }
            }
        }
    }

    pub(crate) fn all_dissections(n: usize) -> Vec<Vec<(usize, usize)>> {
        dissections(n, usize::MAX).into_iter().map(|g| g.chords).collect()
    }

    #[test]
    fn glue_two_triangles() {
        let t = og(3, &[]);
        let diamond = glue(&t, (0, 1), &t, (1, 2)).unwrap();
        assert_eq!(diamond.boundary_len(), 4);
        assert_eq!(diamond.chords(), &[(0, 2)]);
        assert!(glue(&t, (0, 1), &og(6, &[(0, 3)]), (0, 3)).is_err());
    }

    #[test]
    fn dissection_counts() {
        // Dissections of a convex n-gon (little Schröder numbers): 1, 3, 11, 45.
        assert_eq!(all_dissections(3).len(), 1);
        assert_eq!(all_dissections(4).len(), 3);
        assert_eq!(all_dissections(5).len(), 11);
        assert_eq!(all_dissections(6).len(), 45);
    }
}
