//! Polynomial-time odd/even cycle counting.
//!
//! In a 2-connected outerplanar graph every cycle bounds the union of the
//! faces of exactly one nonempty subtree of the dual tree, and vice versa.
//! Gluing two faces along a chord removes that chord twice from the combined
//! boundary walk, so the cycle length has the parity of the summed face
//! lengths. Counting cycles by parity is therefore counting subtrees of a
//! parity-weighted tree by weight parity, done here with a rooted product
//! over `Z/2`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{blocks, cycle_census_bruteforce_with, CycleCensus, Graph};
use crate::outerplanar::OuterplanarGraph;
use crate::recognition::find_outerplanar_embedding_with;

/// Number of connected node sets by weight parity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct ParityCount {
    pub even: BigUint,
    pub odd: BigUint,
}

impl ParityCount {
    /// The empty selection: one way, even weight.
    fn unit() -> Self {
        ParityCount {
            even: BigUint::one(),
            odd: BigUint::zero(),
        }
    }

    fn single(odd: bool) -> Self {
        if odd {
            ParityCount {
                even: BigUint::zero(),
                odd: BigUint::one(),
            }
        } else {
            ParityCount::unit()
        }
    }

    /// Convolution over `Z/2`.
    fn mul(&self, other: &ParityCount) -> ParityCount {
        ParityCount {
            even: &self.even * &other.even + &self.odd * &other.odd,
            odd: &self.even * &other.odd + &self.odd * &other.even,
        }
    }

    fn add(&self, other: &ParityCount) -> ParityCount {
        ParityCount {
            even: &self.even + &other.even,
            odd: &self.odd + &other.odd,
        }
    }
}

/// Subtree counts of a tree with odd/even node weights.
///
/// `counts[v]` is the number of subtrees whose topmost node is `v` when the
/// tree is hung from `root`, split by weight parity. The `blocked` node and
/// everything behind it are ignored. Returns the visited nodes in preorder
/// alongside the counts.
pub(crate) fn hanging_counts(
    adj: &[Vec<usize>],
    odd: &[bool],
    root: usize,
    blocked: Option<usize>,
) -> (Vec<usize>, Vec<ParityCount>) {
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    let mut order = Vec::with_capacity(k);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if parent[w] == usize::MAX && Some(w) != blocked {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut counts = vec![ParityCount::default(); k];
    for &v in order.iter().rev() {
        let mut acc = ParityCount::single(odd[v]);
        for &w in &adj[v] {
            if w != root && parent[w] == v && Some(w) != blocked {
                acc = acc.mul(&ParityCount::unit().add(&counts[w]));
            }
        }
        counts[v] = acc;
    }
    (order, counts)
}

/// Subtree parity census of a weighted tree given by adjacency lists.
pub(crate) fn subtree_parity_counts(adj: &[Vec<usize>], odd: &[bool]) -> ParityCount {
    if adj.is_empty() {
        return ParityCount::default();
    }
    let (order, counts) = hanging_counts(adj, odd, 0, None);
    order
        .iter()
        .fold(ParityCount::default(), |acc, &v| acc.add(&counts[v]))
}

fn face_weights(og: &OuterplanarGraph) -> (Vec<Vec<usize>>, Vec<bool>) {
    let tree = og.dual_tree();
    let odd = tree.nodes.iter().map(|f| f.len() % 2 == 1).collect();
    (tree.adjacency(), odd)
}

/// Exact odd/even cycle counts of a 2-connected outerplanar graph, in time
/// polynomial in the number of faces. The histogram is left empty.
pub fn census_outerplanar(og: &OuterplanarGraph) -> CycleCensus {
    let (adj, odd) = face_weights(og);
    let counts = subtree_parity_counts(&adj, &odd);
    CycleCensus::new(counts.odd, counts.even)
}

/// Cycles through one edge, by parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCycleCounts {
    pub edge: (usize, usize),
    pub through_odd: BigUint,
    pub through_even: BigUint,
}

impl EdgeCycleCounts {
    pub fn new(edge: (usize, usize), through_odd: impl Into<BigUint>, through_even: impl Into<BigUint>) -> Self {
        EdgeCycleCounts {
            edge,
            through_odd: through_odd.into(),
            through_even: through_even.into(),
        }
    }
}

/// Counts the cycles through `edge` by parity.
///
/// A boundary edge lies on exactly one face, so its cycles are the subtrees
/// containing that face. A chord separates two faces, and it lies on a cycle
/// iff the subtree contains exactly one of them.
pub fn census_through_edge(og: &OuterplanarGraph, edge: (usize, usize)) -> Result<EdgeCycleCounts> {
    let (u, v) = (edge.0.min(edge.1), edge.0.max(edge.1));
    let decomposition = og.decompose();
    let (adj, odd) = face_weights(og);
    let counts = if og.is_boundary_edge(u, v) {
        let k = if v - u == 1 { u } else { og.boundary_len() - 1 };
        let face = decomposition.boundary_face[k];
        let (_, counts) = hanging_counts(&adj, &odd, face, None);
        counts[face].clone()
    } else if let Some(c) = og.chord_index(u, v) {
        let inner = decomposition.chord_face[c];
        let outer = decomposition.parent[inner].expect("chord faces have a parent");
        let (_, inside) = hanging_counts(&adj, &odd, inner, Some(outer));
        let (_, outside) = hanging_counts(&adj, &odd, outer, Some(inner));
        inside[inner].add(&outside[outer])
    } else {
        return Err(Error::EdgeNotFound(u, v));
    };
    Ok(EdgeCycleCounts {
        edge: (u, v),
        through_odd: counts.odd,
        through_even: counts.even,
    })
}

/// Census of the graph obtained by identifying the reference edges of two
/// graphs.
///
/// A cycle of the glued graph either stays inside one part (the identified
/// edge belongs to both, so such cycles are already counted in the part
/// totals) or crosses the identified edge's endpoints, combining a cycle
/// through the edge on each side with the edge itself dropped. Dropping the
/// edge from both sides changes the length by 2, so parities add.
pub fn glue_census(
    census1: &CycleCensus,
    edge1: &EdgeCycleCounts,
    census2: &CycleCensus,
    edge2: &EdgeCycleCounts,
) -> CycleCensus {
    let odd = &census1.odd
        + &census2.odd
        + &edge1.through_odd * &edge2.through_even
        + &edge1.through_even * &edge2.through_odd;
    let even = &census1.even
        + &census2.even
        + &edge1.through_odd * &edge2.through_odd
        + &edge1.through_even * &edge2.through_even;
    CycleCensus::new(odd, even)
}

/// Census of an arbitrary graph, summed over its blocks.
pub fn census_graph(g: &Graph) -> Result<CycleCensus> {
    census_graph_with(g, &Budget::default())
}

/// Blocks with at most two vertices carry no cycles. A 2-connected block is
/// counted by the dual-tree method when it has an outerplanar embedding and
/// by brute-force enumeration otherwise.
pub fn census_graph_with(g: &Graph, budget: &Budget) -> Result<CycleCensus> {
    let mut total = CycleCensus::default();
    for block in blocks(g) {
        if block.graph.n() < 3 {
            continue;
        }
        let part = match find_outerplanar_embedding_with(&block.graph, budget) {
            Ok(Some(embedding)) => census_outerplanar(&embedding.outerplanar),
            Ok(None) => cycle_census_bruteforce_with(&block.graph, budget)?.without_lengths(),
            Err(e) if e.is_budget() => {
                cycle_census_bruteforce_with(&block.graph, budget)?.without_lengths()
            }
            Err(e) => return Err(e),
        };
        total = total + part;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RatioDirection {
    /// odd / even
    OddOverEven,
    /// even / odd
    EvenOverOdd,
}

/// An exact ratio of two counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ratio {
    /// Reduced fraction with a positive denominator.
    Finite { numerator: BigUint, denominator: BigUint },
    /// Positive numerator over zero.
    Infinite,
    /// Zero over zero.
    Undefined,
}

impl Ratio {
    pub fn new(numerator: impl Into<BigUint>, denominator: impl Into<BigUint>) -> Ratio {
        let numerator = numerator.into();
        let denominator = denominator.into();
        if denominator.is_zero() {
            return if numerator.is_zero() {
                Ratio::Undefined
            } else {
                Ratio::Infinite
            };
        }
        let g = numerator.gcd(&denominator);
        Ratio::Finite {
            numerator: numerator / &g,
            denominator: denominator / g,
        }
    }

    pub fn integer(value: impl Into<BigUint>) -> Ratio {
        Ratio::new(value, 1u32)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ratio::Finite { .. })
    }

    /// `|self - other|` for finite ratios.
    pub fn abs_diff(&self, other: &Ratio) -> Option<Ratio> {
        match (self, other) {
            (
                Ratio::Finite { numerator: a, denominator: b },
                Ratio::Finite { numerator: c, denominator: d },
            ) => {
                let left = a * d;
                let right = c * b;
                let diff = if left >= right { left - right } else { right - left };
                Some(Ratio::new(diff, b * d))
            }
            _ => None,
        }
    }

    /// Decimal rendering with `digits` significant digits (half-up rounding).
    pub fn to_decimal(&self, digits: usize) -> String {
        match self {
            Ratio::Infinite => "inf".into(),
            Ratio::Undefined => "undefined".into(),
            Ratio::Finite { numerator, denominator } => {
                decimal_significant(numerator, denominator, digits.max(1))
            }
        }
    }
}

fn pow10(e: usize) -> BigUint {
    BigUint::from(10u32).pow(e as u32)
}

/// `floor(num * 10^shift / den)` for a signed shift.
fn scaled(num: &BigUint, den: &BigUint, shift: i64) -> BigUint {
    if shift >= 0 {
        num * pow10(shift as usize) / den
    } else {
        num / (den * pow10((-shift) as usize))
    }
}

fn decimal_significant(num: &BigUint, den: &BigUint, digits: usize) -> String {
    if num.is_zero() {
        return "0".into();
    }
    let low = pow10(digits - 1);
    let high = pow10(digits);
    let int_digits = (num / den).to_string().len() as i64;
    let mut shift = digits as i64 - int_digits;
    while scaled(num, den, shift) >= high {
        shift -= 1;
    }
    while scaled(num, den, shift) < low {
        shift += 1;
    }
    // Half-up rounding: floor(x + 1/2) = floor((2 num 10^s + den) / (2 den)).
    let two = BigUint::from(2u32);
    let mut rounded = if shift >= 0 {
        (&two * num * pow10(shift as usize) + den) / (&two * den)
    } else {
        let d = den * pow10((-shift) as usize);
        (&two * num + &d) / (&two * &d)
    };
    if rounded >= high {
        rounded /= 10u32;
        shift -= 1;
    }
    let mantissa = rounded.to_string();
    // value = mantissa * 10^-shift; exponent of the leading digit:
    let exponent = mantissa.len() as i64 - 1 - shift;
    if !(-6..15).contains(&exponent) {
        let (head, tail) = mantissa.split_at(1);
        return if tail.is_empty() {
            format!("{head}e{exponent}")
        } else {
            format!("{head}.{tail}e{exponent}")
        };
    }
    if shift <= 0 {
        format!("{mantissa}{}", "0".repeat((-shift) as usize))
    } else {
        let shift = shift as usize;
        if mantissa.len() > shift {
            let (int, frac) = mantissa.split_at(mantissa.len() - shift);
            format!("{int}.{frac}")
        } else {
            format!("0.{}{mantissa}", "0".repeat(shift - mantissa.len()))
        }
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Ratio::Undefined, _) | (_, Ratio::Undefined) => None,
            (Ratio::Infinite, Ratio::Infinite) => Some(Ordering::Equal),
            (Ratio::Infinite, _) => Some(Ordering::Greater),
            (_, Ratio::Infinite) => Some(Ordering::Less),
            (
                Ratio::Finite { numerator: a, denominator: b },
                Ratio::Finite { numerator: c, denominator: d },
            ) => Some((a * d).cmp(&(c * b))),
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Finite { numerator, denominator } => write!(f, "{numerator}/{denominator}"),
            Ratio::Infinite => f.write_str("inf"),
            Ratio::Undefined => f.write_str("undefined"),
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn ratio(census: &CycleCensus, direction: RatioDirection) -> Ratio {
    match direction {
        RatioDirection::OddOverEven => Ratio::new(census.odd.clone(), census.even.clone()),
        RatioDirection::EvenOverOdd => Ratio::new(census.even.clone(), census.odd.clone()),
    }
}
