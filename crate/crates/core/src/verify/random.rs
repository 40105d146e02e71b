use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::outerplanar::OuterplanarGraph;

/// Attempts per request before giving up.
pub const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryParity {
    #[default]
    Any,
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualShapeConstraint {
    #[default]
    Any,
    Path,
    Star,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraints {
    pub parity: BoundaryParity,
    pub shape: DualShapeConstraint,
    pub all_odd_faces: bool,
}

impl fmt::Display for BoundaryParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryParity::Any => "any",
            BoundaryParity::Even => "even",
            BoundaryParity::Odd => "odd",
        })
    }
}

impl FromStr for BoundaryParity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(BoundaryParity::Any),
            "even" => Ok(BoundaryParity::Even),
            "odd" => Ok(BoundaryParity::Odd),
            _ => Err(Error::InvalidParameter(format!("unknown parity `{s}`"))),
        }
    }
}

/// A random 2-connected outerplanar graph with `n` boundary vertices and
/// `chord_count` chords. Deterministic in `seed`.
///
/// Face lengths are drawn first (each at least 3, summing to
/// `n + 2 * chord_count`), then a dual tree of the requested shape, and the
/// faces are glued polygon by polygon along free edges of their parents. The
/// boundary is finally rotated and possibly reflected at random.
pub fn random_outerplanar(
    n: usize,
    chord_count: usize,
    constraints: Constraints,
    seed: u64,
) -> Result<OuterplanarGraph> {
    check_feasible(n, chord_count, constraints)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(g) = attempt(n, chord_count, constraints, &mut rng)? {
            return Ok(g);
        }
    }
    Err(Error::Infeasible(format!(
        "no instance with boundary {n} and {chord_count} chords found in {MAX_ATTEMPTS} attempts"
    )))
}

fn check_feasible(n: usize, c: usize, k: Constraints) -> Result<()> {
    let fail = |why: &str| Err(Error::Infeasible(format!("boundary {n}, {c} chords: {why}")));
    if n < 3 {
        return fail("boundary needs at least 3 vertices");
    }
    if c > n - 3 {
        return fail("at most boundary - 3 chords fit");
    }
    match k.parity {
        BoundaryParity::Even if n % 2 == 1 => return fail("boundary parity is odd"),
        BoundaryParity::Odd if n % 2 == 0 => return fail("boundary parity is even"),
        _ => {}
    }
    if k.shape == DualShapeConstraint::Star && c < 2 {
        return fail("a star dual tree needs at least 2 chords");
    }
    if k.all_odd_faces && (n - c - 3) % 2 == 1 {
        return fail("odd faces force boundary - chords to be odd");
    }
    if k.shape == DualShapeConstraint::Star && star_center_min(c, k.all_odd_faces) + c > n {
        return fail("the centre of a star dual needs one edge per leaf");
    }
    Ok(())
}

/// Smallest centre face of a star dual with `c` leaves.
fn star_center_min(c: usize, odd: bool) -> usize {
    let m = c.max(3);
    if odd && m % 2 == 0 {
        m + 1
    } else {
        m
    }
}

fn attempt<R: Rng>(n: usize, c: usize, k: Constraints, rng: &mut R) -> Result<Option<OuterplanarGraph>> {
    let faces = c + 1;
    let parent: Vec<usize> = (0..faces)
        .map(|i| match (i, k.shape) {
            (0, _) => 0,
            (_, DualShapeConstraint::Path) => i - 1,
            (_, DualShapeConstraint::Star) => 0,
            (_, DualShapeConstraint::Any) => rng.gen_range(0..i),
        })
        .collect();
    let mut children = vec![0usize; faces];
    for i in 1..faces {
        children[parent[i]] += 1;
    }
    let step = if k.all_odd_faces { 2 } else { 1 };
    let mut len: Vec<usize> = (0..faces)
        .map(|i| {
            let need = (children[i] + usize::from(i != 0)).max(3);
            if k.all_odd_faces && need % 2 == 0 {
                need + 1
            } else {
                need
            }
        })
        .collect();
    let used: usize = len.iter().sum();
    let total = n + 2 * c;
    if used > total || (total - used) % step != 0 {
        return Ok(None);
    }
    for _ in 0..(total - used) / step {
        let f = rng.gen_range(0..faces);
        len[f] += step;
    }

    // Glue faces in index order; each parent precedes its children.
    let mut boundary: Vec<usize> = (0..len[0]).collect();
    let mut next_vertex = len[0];
    let mut free: Vec<Vec<(usize, usize)>> = vec![Vec::new(); faces];
    free[0] = (0..len[0]).map(|i| (i, (i + 1) % len[0])).collect();
    let mut chords = Vec::with_capacity(c);
    for i in 1..faces {
        let p = parent[i];
        if free[p].is_empty() {
            return Ok(None);
        }
        let pick = rng.gen_range(0..free[p].len());
        let (u, v) = free[p].swap_remove(pick);
        chords.push((u, v));
        let added: Vec<usize> = (next_vertex..next_vertex + len[i] - 2).collect();
        next_vertex += added.len();
        let at = boundary.iter().position(|&x| x == u).expect("free edges lie on the boundary");
        boundary.splice(at + 1..at + 1, added.iter().copied());
        let mut walk = vec![u];
        walk.extend(&added);
        walk.push(v);
        free[i] = walk.windows(2).map(|w| (w[0], w[1])).collect();
    }

    let shift = rng.gen_range(0..n);
    let reflect = rng.gen_bool(0.5);
    let mut pos = vec![0; n];
    for (p, &v) in boundary.iter().enumerate() {
        let p = if reflect { (n - p) % n } else { p };
        pos[v] = (p + shift) % n;
    }
    let og = OuterplanarGraph::new(n, chords.iter().map(|&(u, v)| (pos[u], pos[v])))?;
    Ok(Some(og))
}

/// `G(n, p)` with `p` given in parts per thousand.
pub fn random_graph(n: usize, per_mille: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..1000) < per_mille {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are simple")
}

/// A uniformly random relabelling of `g`.
pub fn shuffle_labels(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng);
    g.relabel(&perm).expect("a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::Parity;
    use proptest::prelude::*;

    fn with(parity: BoundaryParity, shape: DualShapeConstraint, all_odd_faces: bool) -> Constraints {
        Constraints { parity, shape, all_odd_faces }
    }

    #[test]
    fn even_instance() {
        let g = random_outerplanar(12, 4, with(BoundaryParity::Even, DualShapeConstraint::Any, false), 1).unwrap();
        assert_eq!(g.boundary_len(), 12);
        assert_eq!(g.chords().len(), 4);
        assert_eq!(g.boundary_parity(), Parity::Even);
    }

    #[test]
    fn full_triangulation() {
        let g = random_outerplanar(9, 6, with(BoundaryParity::Any, DualShapeConstraint::Any, true), 3).unwrap();
        assert!(g.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn deterministic() {
        let k = Constraints::default();
        assert_eq!(random_outerplanar(14, 5, k, 42).unwrap(), random_outerplanar(14, 5, k, 42).unwrap());
        assert_eq!(random_graph(8, 400, 5), random_graph(8, 400, 5));
    }

    #[test]
    fn infeasible_requests() {
        let k = Constraints::default();
        assert!(random_outerplanar(2, 0, k, 0).is_err());
        assert!(random_outerplanar(6, 4, k, 0).is_err());
        assert!(random_outerplanar(7, 1, with(BoundaryParity::Even, DualShapeConstraint::Any, false), 0).is_err());
        assert!(random_outerplanar(8, 1, with(BoundaryParity::Any, DualShapeConstraint::Star, false), 0).is_err());
        assert!(matches!(
            random_outerplanar(8, 2, with(BoundaryParity::Any, DualShapeConstraint::Any, true), 0),
            Err(Error::Infeasible(_))
        ));
    }

    proptest! {
        #[test]
        fn constraints_hold(n in 3usize..24, c_frac in 0.0f64..1.0, seed in any::<u64>(),
                            shape in 0usize..3, odd in any::<bool>()) {
            let c = ((n - 3) as f64 * c_frac) as usize;
            let shape = [DualShapeConstraint::Any, DualShapeConstraint::Path, DualShapeConstraint::Star][shape];
            let k = with(BoundaryParity::Any, shape, odd);
            match random_outerplanar(n, c, k, seed) {
                Ok(g) => {
                    prop_assert_eq!(g.boundary_len(), n);
                    prop_assert_eq!(g.chords().len(), c);
                    let tree = g.dual_tree();
                    if shape == DualShapeConstraint::Path {
                        prop_assert!(tree.is_path());
                    }
                    if shape == DualShapeConstraint::Star {
                        prop_assert!(tree.is_star());
                    }
                    if odd {
                        prop_assert!(g.faces().iter().all(|f| f.len() % 2 == 1));
                    }
                }
                Err(e) => {
                    prop_assert!(matches!(e, Error::Infeasible(_)));
                    let star_short = shape == DualShapeConstraint::Star
                        && (c < 2 || star_center_min(c, odd) + c > n);
                    prop_assert!(star_short || (odd && (n - c - 3) % 2 == 1));
                }
            }
        }
    }
}
