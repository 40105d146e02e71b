use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Graph;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// A simple cycle in canonical form: the smallest vertex first, followed by
/// the smaller of its two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Canonicalizes any rotation or reversal of a vertex sequence.
    ///
    /// # Panics
    ///
    /// Panics if fewer than three vertices are given.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        assert!(vertices.len() >= 3, "a cycle has at least 3 vertices");
        let start = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(i, _)| i)
            .unwrap();
        vertices.rotate_left(start);
        if vertices[1] > vertices[vertices.len() - 1] {
            vertices[1..].reverse();
        }
        Cycle(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    /// Consecutive pairs including the closing pair, each as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| {
            let (a, b) = (self.0[i], self.0[(i + 1) % n]);
            (a.min(b), a.max(b))
        })
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges().any(|f| f == e)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Numbers of odd and even cycles, with an optional length histogram.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleCensus {
    pub odd: BigUint,
    pub even: BigUint,
    pub by_length: Option<BTreeMap<usize, BigUint>>,
}

impl CycleCensus {
    pub fn new(odd: impl Into<BigUint>, even: impl Into<BigUint>) -> Self {
        CycleCensus {
            odd: odd.into(),
            even: even.into(),
            by_length: None,
        }
    }

    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut histogram: BTreeMap<usize, BigUint> = BTreeMap::new();
        let mut census = CycleCensus::default();
        for len in lengths {
            *histogram.entry(len).or_default() += 1u32;
            if len % 2 == 1 {
                census.odd += 1u32;
            } else {
                census.even += 1u32;
            }
        }
        census.by_length = Some(histogram);
        census
    }

    /// Total number of cycles (the cycle count of the graph).
    pub fn total(&self) -> BigUint {
        &self.odd + &self.even
    }

    /// Compares odd and even counts only, ignoring the histogram.
    pub fn same_counts(&self, other: &CycleCensus) -> bool {
        self.odd == other.odd && self.even == other.even
    }

    pub fn without_lengths(mut self) -> Self {
        self.by_length = None;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.odd.is_zero() && self.even.is_zero()
    }
}

impl fmt::Display for CycleCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(odd={}, even={})", self.odd, self.even)
    }
}

impl Add for CycleCensus {
    type Output = CycleCensus;

    /// Component-wise sum. The histogram survives only if both sides have one.
    fn add(self, rhs: CycleCensus) -> CycleCensus {
        let by_length = match (self.by_length, rhs.by_length) {
            (Some(mut a), Some(b)) => {
                for (len, count) in b {
                    *a.entry(len).or_default() += count;
                }
                Some(a)
            }
            _ => None,
        };
        CycleCensus {
            odd: self.odd + rhs.odd,
            even: self.even + rhs.even,
            by_length,
        }
    }
}

impl std::iter::Sum for CycleCensus {
    fn sum<I: Iterator<Item = CycleCensus>>(iter: I) -> Self {
        iter.fold(
            CycleCensus {
                by_length: Some(BTreeMap::new()),
                ..CycleCensus::default()
            },
            |acc, c| acc + c,
        )
    }
}

#[derive(Serialize, Deserialize)]
struct CensusJson {
    odd: String,
    even: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    by_length: Option<BTreeMap<usize, String>>,
}

impl Serialize for CycleCensus {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CensusJson {
            odd: self.odd.to_string(),
            even: self.even.to_string(),
            by_length: self.by_length.as_ref().map(|h| {
                h.iter().map(|(len, count)| (*len, count.to_string())).collect()
            }),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycleCensus {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CensusJson::deserialize(deserializer)?;
        let parse = |s: &str| {
            s.parse::<BigUint>()
                .map_err(|_| D::Error::custom(format!("`{s}` is not a decimal natural")))
        };
        let by_length = match raw.by_length {
            None => None,
            Some(h) => {
                let mut out = BTreeMap::new();
                for (len, count) in h {
                    if len < 3 {
                        return Err(D::Error::custom("cycle lengths start at 3"));
                    }
                    out.insert(len, parse(&count)?);
                }
                Some(out)
            }
        };
        Ok(CycleCensus {
            odd: parse(&raw.odd)?,
            even: parse(&raw.even)?,
            by_length,
        })
    }
}

/// Every simple cycle of `g`, each exactly once in canonical form, under the
/// default budget.
pub fn enumerate_cycles(g: &Graph) -> Result<Vec<Cycle>> {
    enumerate_cycles_with(g, &Budget::default())
}

/// Backtracking from each root over vertices larger than the root; a cycle is
/// recorded when the path returns to the root, in the orientation whose second
/// vertex is the smaller root neighbour.
pub fn enumerate_cycles_with(g: &Graph, budget: &Budget) -> Result<Vec<Cycle>> {
    let mut search = CycleSearch {
        g,
        on_path: vec![false; g.n()],
        path: Vec::with_capacity(g.n()),
        steps: 0,
        limit: budget.cycle_steps,
        out: Vec::new(),
    };
    for root in 0..g.n() {
        search.path.push(root);
        search.on_path[root] = true;
        search.extend(root)?;
        search.on_path[root] = false;
        search.path.pop();
    }
    Ok(search.out)
}

struct CycleSearch<'a> {
    g: &'a Graph,
    on_path: Vec<bool>,
    path: Vec<usize>,
    steps: u64,
    limit: u64,
    out: Vec<Cycle>,
}

impl CycleSearch<'_> {
    fn extend(&mut self, root: usize) -> Result<()> {
        let v = *self.path.last().unwrap();
        for &w in self.g.neighbors(v) {
            if w == root {
                if self.path.len() >= 3 && self.path[1] < v {
                    self.out.push(Cycle(self.path.clone()));
                }
            } else if w > root && !self.on_path[w] {
                self.steps += 1;
                if self.steps > self.limit {
                    return Err(Error::BudgetExceeded {
                        resource: "cycle enumeration steps",
                        limit: self.limit,
                    });
                }
                self.on_path[w] = true;
                self.path.push(w);
                self.extend(root)?;
                self.path.pop();
                self.on_path[w] = false;
            }
        }
        Ok(())
    }
}

pub fn cycle_census_bruteforce(g: &Graph) -> Result<CycleCensus> {
    cycle_census_bruteforce_with(g, &Budget::default())
}

pub fn cycle_census_bruteforce_with(g: &Graph, budget: &Budget) -> Result<CycleCensus> {
    let cycles = enumerate_cycles_with(g, budget)?;
    Ok(CycleCensus::from_lengths(cycles.iter().map(Cycle::len)))
}
