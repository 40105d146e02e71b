//! Generators for the named graph families, each with a fixed boundary
//! labelling, and closed-form censuses where they are known.
//!
//! * `R_k` (odd `k >= 3`): a `k`-cycle with a 4-cycle glued on every edge.
//!   Boundary `v_0 a_0 b_0 v_1 a_1 b_1 ...`, so `v_i = 3i`; chords are the
//!   inner cycle edges.
//! * `L_n` (`n >= 1`): the path `v_0 ... v_2n` closed into a cycle, with
//!   nested chords `v_i v_{2n-i}` for `i = 1..n-1`. Innermost face is the
//!   triangle `v_{n-1} v_n v_{n+1}`.
//! * `H_q` (`q >= 4`, `q ≡ 0 mod 4`): two copies of `L_q` identified along
//!   their edges `v_{q-1} v_q`.
//! * `T_n` (odd `n >= 3`): `R_n` and `L_n` identified along the outer edge
//!   `a_0 b_0` of a 4-cycle and the closing edge `v_0 v_2n`.
//! * `S_t` (`t >= 3`): the cycle `v_0 ... v_{t-1}` with a triangle
//!   `v_i v_{i+1} r_i` for every `i` in the attach set; `r_i` follows `v_i`
//!   on the boundary.
//! * `Z_d` (`d >= 1`): `L_d` plus chords `v_i v_{2d-1-i}` for `i = 0..d-2`.
//! * `Z*_d` (`d >= 2`): `Z_d` with `v_d` removed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::CycleCensus;
use crate::outerplanar::{glue, OuterplanarGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    R,
    L,
    H,
    T,
    S,
    Z,
    ZStar,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::R,
        Family::L,
        Family::H,
        Family::T,
        Family::S,
        Family::Z,
        Family::ZStar,
    ];

    /// Human-readable parameter constraint, echoed in usage errors.
    pub fn constraint(self) -> &'static str {
        match self {
            Family::R => "R takes an odd k >= 3",
            Family::L => "L takes n >= 1",
            Family::H => "H takes q >= 4 with q ≡ 0 (mod 4)",
            Family::T => "T takes an odd n >= 3",
            Family::S => "S takes t >= 3 and an attach set within 0..t",
            Family::Z => "Z takes d >= 1",
            Family::ZStar => "Zstar takes d >= 2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::R => "R",
            Family::L => "L",
            Family::H => "H",
            Family::T => "T",
            Family::S => "S",
            Family::Z => "Z",
            Family::ZStar => "Zstar",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(Family::R),
            "L" | "l" => Ok(Family::L),
            "H" | "h" => Ok(Family::H),
            "T" | "t" => Ok(Family::T),
            "S" | "s" => Ok(Family::S),
            "Z" | "z" => Ok(Family::Z),
            "Zstar" | "ZStar" | "zstar" | "Z*" => Ok(Family::ZStar),
            other => Err(Error::InvalidParameter(format!(
                "unknown family `{other}` (expected R, L, H, T, S, Z or Zstar)"
            ))),
        }
    }
}

/// A family member: the family plus its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    R { k: usize },
    L { n: usize },
    H { q: usize },
    T { n: usize },
    S { t: usize, attach: Vec<usize> },
    Z { d: usize },
    ZStar { d: usize },
}

impl FamilySpec {
    /// Builds and validates a spec; `attach` is only meaningful for `S`.
    pub fn new(family: Family, param: usize, attach: &[usize]) -> Result<Self> {
        let spec = match family {
            Family::R => FamilySpec::R { k: param },
            Family::L => FamilySpec::L { n: param },
            Family::H => FamilySpec::H { q: param },
            Family::T => FamilySpec::T { n: param },
            Family::S => {
                let mut attach = attach.to_vec();
                attach.sort_unstable();
                attach.dedup();
                FamilySpec::S { t: param, attach }
            }
            Family::Z => FamilySpec::Z { d: param },
            Family::ZStar => FamilySpec::ZStar { d: param },
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn family(&self) -> Family {
        match self {
            FamilySpec::R { .. } => Family::R,
            FamilySpec::L { .. } => Family::L,
            FamilySpec::H { .. } => Family::H,
            FamilySpec::T { .. } => Family::T,
            FamilySpec::S { .. } => Family::S,
            FamilySpec::Z { .. } => Family::Z,
            FamilySpec::ZStar { .. } => Family::ZStar,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            FamilySpec::R { k } => *k >= 3 && k % 2 == 1,
            FamilySpec::L { n } => *n >= 1,
            FamilySpec::H { q } => *q >= 4 && q % 4 == 0,
            FamilySpec::T { n } => *n >= 3 && n % 2 == 1,
            FamilySpec::S { t, attach } => *t >= 3 && attach.iter().all(|&i| i < *t),
            FamilySpec::Z { d } => *d >= 1,
            FamilySpec::ZStar { d } => *d >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "{self} violates the family constraint: {}",
                self.family().constraint()
            )))
        }
    }

    pub fn generate(&self) -> Result<OuterplanarGraph> {
        match self {
            FamilySpec::R { k } => gen_r(*k),
            FamilySpec::L { n } => gen_l(*n),
            FamilySpec::H { q } => gen_h(*q),
            FamilySpec::T { n } => gen_t(*n),
            FamilySpec::S { t, attach } => gen_s(*t, attach),
            FamilySpec::Z { d } => gen_z(*d),
            FamilySpec::ZStar { d } => gen_z_star(*d),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::R { k } => write!(f, "R({k})"),
            FamilySpec::L { n } => write!(f, "L({n})"),
            FamilySpec::H { q } => write!(f, "H({q})"),
            FamilySpec::T { n } => write!(f, "T({n})"),
            FamilySpec::S { t, attach } => write!(f, "S({t}, {attach:?})"),
            FamilySpec::Z { d } => write!(f, "Z({d})"),
            FamilySpec::ZStar { d } => write!(f, "Zstar({d})"),
        }
    }
}

pub fn gen_r(k: usize) -> Result<OuterplanarGraph> {
    FamilySpec::R { k }.validate()?;
    let n = 3 * k;
    let chords = (0..k - 1).map(|i| (3 * i, 3 * i + 3)).chain([(0, 3 * (k - 1))]);
    OuterplanarGraph::new(n, chords)
}

/// The outer edge `a_0 b_0` of the 4-cycle on `v_0 v_1` in [`gen_r`].
pub fn r_outer_edge(_k: usize) -> (usize, usize) {
    (1, 2)
}

pub fn gen_l(n: usize) -> Result<OuterplanarGraph> {
    FamilySpec::L { n }.validate()?;
    OuterplanarGraph::new(2 * n + 1, (1..n).map(|i| (i, 2 * n - i)))
}

/// The closing edge `v_0 v_2n` of [`gen_l`].
pub fn l_closing_edge(n: usize) -> (usize, usize) {
    (0, 2 * n)
}

/// The edge `v_{n-1} v_n` of the innermost triangle of [`gen_l`].
pub fn l_apex_edge(n: usize) -> (usize, usize) {
    (n - 1, n)
}

pub fn gen_h(q: usize) -> Result<OuterplanarGraph> {
    FamilySpec::H { q }.validate()?;
    let half = gen_l(q)?;
    let e = l_apex_edge(q);
    glue(&half, e, &half, e)
}

pub fn gen_t(n: usize) -> Result<OuterplanarGraph> {
    FamilySpec::T { n }.validate()?;
    glue(&gen_r(n)?, r_outer_edge(n), &gen_l(n)?, l_closing_edge(n))
}

pub fn gen_s(t: usize, attach: &[usize]) -> Result<OuterplanarGraph> {
    let spec = FamilySpec::new(Family::S, t, attach)?;
    let FamilySpec::S { attach, .. } = spec else {
        unreachable!()
    };
    let mut position = Vec::with_capacity(t);
    let mut next = 0;
    for i in 0..t {
        position.push(next);
        next += if attach.binary_search(&i).is_ok() { 2 } else { 1 };
    }
    let n = next;
    let chords = attach.iter().map(|&i| (position[i], position[(i + 1) % t]));
    OuterplanarGraph::new(n, chords)
}

fn z_chords(d: usize) -> Vec<(usize, usize)> {
    (1..d)
        .map(|i| (i, 2 * d - i))
        .chain((0..d.saturating_sub(1)).map(|i| (i, 2 * d - 1 - i)))
        .collect()
}

pub fn gen_z(d: usize) -> Result<OuterplanarGraph> {
    FamilySpec::Z { d }.validate()?;
    OuterplanarGraph::new(2 * d + 1, z_chords(d))
}

pub fn gen_z_star(d: usize) -> Result<OuterplanarGraph> {
    FamilySpec::ZStar { d }.validate()?;
    let relabel = |v: usize| if v > d { v - 1 } else { v };
    let chords = z_chords(d)
        .into_iter()
        .filter(|&c| c != (d - 1, d + 1))
        .map(|(i, j)| (relabel(i), relabel(j)));
    OuterplanarGraph::new(2 * d, chords)
}

fn binom2(n: usize) -> BigUint {
    BigUint::from(n * n.saturating_sub(1) / 2)
}

fn pow2(e: usize) -> BigUint {
    BigUint::from(1u32) << e
}

/// Closed-form census where one is known (`R`, `L`, `H`, `T`).
pub fn expected_census(spec: &FamilySpec) -> Option<CycleCensus> {
    match *spec {
        FamilySpec::R { k } => Some(CycleCensus::new(pow2(k), k)),
        FamilySpec::L { n } => Some(CycleCensus::new(n, binom2(n))),
        FamilySpec::H { q } => Some(CycleCensus::new(2 * q, 2 * q * q - q)),
        FamilySpec::T { n } => {
            let half = pow2(n - 1);
            let odd = pow2(n) + n + &half * (n - 1) + 1u32;
            let even = BigUint::from(n) + binom2(n) + half + (n - 1);
            Some(CycleCensus::new(odd, even))
        }
        FamilySpec::S { .. } | FamilySpec::Z { .. } | FamilySpec::ZStar { .. } => None,
    }
}

/// Lexicographically least image of an attach set under the rotations and
/// reflections of the `t`-cycle. Edge `i` joins `v_i` and `v_{i+1}`.
pub fn canonical_attach(t: usize, attach: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for reflect in [false, true] {
        for shift in 0..t {
            let mut image: Vec<usize> = attach
                .iter()
                .map(|&i| {
                    let base = if reflect { (2 * t - 1 - i) % t } else { i };
                    (base + shift) % t
                })
                .collect();
            image.sort_unstable();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census_outerplanar;
    use crate::outerplanar::{DualShape, Parity};

    #[test]
    fn r3_construction() {
        let g = gen_r(3).unwrap();
        assert_eq!(g.boundary_len(), 9);
        assert_eq!(g.to_graph().edge_count(), 12);
        let mut lens: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 4, 4, 4]);
        let tree = g.dual_tree();
        let center = tree.star_center().unwrap();
        assert_eq!(tree.nodes[center].len(), 3);
    }

    #[test]
    fn l4_matches_the_figure() {
        let g = gen_l(4).unwrap();
        assert_eq!(g.boundary_len(), 9);
        assert_eq!(g.chords(), &[(1, 7), (2, 6), (3, 5)]);
        assert_eq!(gen_l(1).unwrap(), OuterplanarGraph::cycle(3).unwrap());
    }

    #[test]
    fn z4_matches_the_figure() {
        let g = gen_z(4).unwrap();
        let mut expected = vec![(1, 7), (2, 6), (3, 5), (0, 7), (1, 6), (2, 5)];
        expected.sort_unstable();
        assert_eq!(g.chords(), expected.as_slice());
        assert!(g.faces().iter().all(|f| f.len() == 3));
        assert!(gen_z_star(4).unwrap().faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn small_z_members() {
        assert_eq!(gen_z(1).unwrap(), OuterplanarGraph::cycle(3).unwrap());
        assert_eq!(gen_z(2).unwrap().chords(), &[(0, 3), (1, 3)]);
        assert_eq!(gen_z_star(2).unwrap(), OuterplanarGraph::new(4, [(0, 2)]).unwrap());
        assert_eq!(census_outerplanar(&gen_z(2).unwrap()), CycleCensus::new(4u32, 2u32));
        assert_eq!(census_outerplanar(&gen_z_star(2).unwrap()), CycleCensus::new(2u32, 1u32));
    }

    #[test]
    fn s_members() {
        let fig5 = gen_s(7, &[0, 1, 3, 5]).unwrap();
        assert_eq!(fig5.boundary_len(), 11);
        assert_eq!(fig5.chords().len(), 4);
        let sun = gen_s(3, &[0, 1, 2]).unwrap();
        assert_eq!(sun.boundary_len(), 6);
        assert!(sun.faces().iter().all(|f| f.len() == 3));
        assert_eq!(sun.dual_tree_shape(), DualShape::Star);
        assert_eq!(gen_s(5, &[]).unwrap(), OuterplanarGraph::cycle(5).unwrap());
        assert_eq!(census_outerplanar(&gen_s(5, &[]).unwrap()), CycleCensus::new(1u32, 0u32));
        // Attaching on the wrap-around edge.
        assert!(gen_s(4, &[3]).unwrap().chord_index(0, 3).is_some());
    }

    #[test]
    fn parameter_errors() {
        assert!(gen_r(4).is_err());
        assert!(gen_r(1).is_err());
        assert!(gen_l(0).is_err());
        assert!(gen_h(6).is_err());
        assert!(gen_h(0).is_err());
        assert!(gen_t(4).is_err());
        assert!(gen_s(2, &[]).is_err());
        assert!(gen_s(4, &[4]).is_err());
        assert!(gen_z(0).is_err());
        assert!(gen_z_star(1).is_err());
        let msg = FamilySpec::new(Family::H, 6, &[]).unwrap_err().to_string();
        assert!(msg.contains("q ≡ 0 (mod 4)"), "{msg}");
    }

    #[test]
    fn odd_chord_counts() {
        for q in [4, 8, 12] {
            let (odd, even) = gen_h(q).unwrap().chord_parity_counts().unwrap();
            assert_eq!((odd, even), (1, 2 * (q - 1)));
        }
        for n in [3, 5, 7, 11] {
            let g = gen_t(n).unwrap();
            assert_eq!(g.boundary_parity(), Parity::Even);
            let (odd, even) = g.chord_parity_counts().unwrap();
            assert_eq!((odd, even), (n + 1, n - 1));
        }
    }

    #[test]
    fn dual_shapes() {
        assert_eq!(gen_l(4).unwrap().dual_tree_shape(), DualShape::Path);
        assert_eq!(gen_r(5).unwrap().dual_tree_shape(), DualShape::Star);
        assert_eq!(gen_t(3).unwrap().dual_tree_shape(), DualShape::Other);
        assert_eq!(gen_h(8).unwrap().dual_tree_shape(), DualShape::Path);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(expected_census(&FamilySpec::R { k: 9 }), Some(CycleCensus::new(512u32, 9u32)));
        assert_eq!(expected_census(&FamilySpec::T { n: 5 }), Some(CycleCensus::new(102u32, 35u32)));
        assert_eq!(expected_census(&FamilySpec::T { n: 3 }), Some(CycleCensus::new(20u32, 12u32)));
        assert_eq!(expected_census(&FamilySpec::L { n: 1 }), Some(CycleCensus::new(1u32, 0u32)));
        assert_eq!(expected_census(&FamilySpec::H { q: 8 }), Some(CycleCensus::new(16u32, 120u32)));
        assert_eq!(expected_census(&FamilySpec::Z { d: 3 }), None);
    }

    #[test]
    fn canonical_attach_is_dihedral_minimum() {
        assert_eq!(canonical_attach(7, &[0, 1, 3, 5]), vec![0, 1, 3, 5]);
        assert_eq!(canonical_attach(7, &[2, 4, 6, 0]), vec![0, 1, 3, 5]);
        assert_eq!(canonical_attach(5, &[3]), vec![0]);
        assert_eq!(canonical_attach(6, &[1, 4]), vec![0, 3]);
        assert_eq!(canonical_attach(6, &[]), Vec::<usize>::new());
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("Q".parse::<Family>().is_err());
    }
}
