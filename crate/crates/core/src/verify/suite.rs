use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exec::{self, Jobs};
use crate::families::{FamilySpec, Family};
use crate::graph::Graph;
use crate::outerplanar::{dissections, OuterplanarGraph};

use super::checks::{
    check_classical_bounds, check_classical_bounds_of, check_dual_path_sharpness, check_jamison,
    check_odd_chords_sharpness, check_prop_dual_path, check_prop_dual_star, check_star_convergence,
    check_thm_odd_chords, check_thm_odd_faces, CheckReport, Outcome, Subject,
};
use super::random::{random_graph, random_outerplanar, BoundaryParity, Constraints, DualShapeConstraint};
use super::tree::{trees_up_to_isomorphism, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Jamison,
    OddFaces,
    OddChords,
    DualPath,
    DualStar,
    Classical,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Jamison,
        Suite::OddFaces,
        Suite::OddChords,
        Suite::DualPath,
        Suite::DualStar,
        Suite::Classical,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Jamison => "jamison",
            Suite::OddFaces => "odd_faces",
            Suite::OddChords => "odd_chords",
            Suite::DualPath => "dual_path",
            Suite::DualStar => "dual_star",
            Suite::Classical => "classical",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown suite `{s}` (expected jamison, odd_faces, odd_chords, dual_path, dual_star, classical or all)"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Random instances per suite, on top of the exhaustive small ones.
    pub count: usize,
    pub seed: u64,
    pub jobs: Jobs,
    pub budget: Budget,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            count: 100,
            seed: 0,
            jobs: Jobs::Auto,
            budget: Budget::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub precondition_skipped: usize,
}

impl SuiteSummary {
    pub fn of(reports: &[CheckReport]) -> SuiteSummary {
        let count = |o: Outcome| reports.iter().filter(|r| r.outcome == o).count();
        SuiteSummary {
            checked: reports.len(),
            passed: count(Outcome::Pass),
            failed: count(Outcome::Fail),
            precondition_skipped: count(Outcome::PreconditionViolated),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteRun {
    /// Sorted by check name, then instance descriptor.
    pub reports: Vec<CheckReport>,
    pub summary: SuiteSummary,
}

enum Instance {
    Tree(Tree),
    Outer(OuterplanarGraph),
    Graph(Graph),
    Family(FamilySpec),
    Convergence(Vec<OuterplanarGraph>),
    OddChordsSharpness(usize),
    DualPathSharpness(usize),
}

/// Runs the named suite: exhaustive small instances plus `count` random
/// ones. Instances are generated sequentially from `seed` and checked in
/// parallel, so the output does not depend on `jobs`.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteRun {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    let mut work = Vec::new();
    for s in suites {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for instance in instances(s, config.count, &mut rng) {
            work.push((s, instance));
        }
    }
    let budget = config.budget;
    let mut reports = exec::map(&work, config.jobs, |(s, instance)| check(*s, instance, &budget));
    reports.sort_by(|a, b| (&a.check, &a.instance).cmp(&(&b.check, &b.instance)));
    let summary = SuiteSummary::of(&reports);
    SuiteRun { reports, summary }
}

fn check(suite: Suite, instance: &Instance, budget: &Budget) -> CheckReport {
    match (suite, instance) {
        (_, Instance::Tree(t)) => check_jamison(t),
        (_, Instance::Convergence(seq)) => check_star_convergence(seq),
        (_, Instance::OddChordsSharpness(n)) => check_odd_chords_sharpness(*n),
        (_, Instance::DualPathSharpness(n)) => check_dual_path_sharpness(*n),
        (Suite::OddFaces, Instance::Outer(og)) => check_thm_odd_faces(og),
        (Suite::OddChords, Instance::Outer(og)) => check_thm_odd_chords(og),
        (Suite::DualPath, Instance::Outer(og)) => check_prop_dual_path(og),
        (Suite::DualStar, Instance::Outer(og)) => check_prop_dual_star(og, budget),
        (_, Instance::Outer(og)) => {
            check_classical_bounds_of(Subject::outerplanar(og), &og.to_graph(), budget)
        }
        (_, Instance::Graph(g)) => check_classical_bounds(g, budget),
        (_, Instance::Family(spec)) => {
            let subject = Subject::named(spec.to_string(), Value::String(spec.to_string()));
            match spec.generate() {
                Ok(og) => check_classical_bounds_of(subject, &og.to_graph(), budget),
                Err(e) => CheckReport::precondition("classical", &subject, e.to_string()),
            }
        }
    }
}

fn pick_chords<R: Rng>(rng: &mut R, n: usize, min: usize, odd_faces: bool) -> Option<usize> {
    let options: Vec<usize> = (min..=n.saturating_sub(3))
        .filter(|&c| !odd_faces || (n - c - 3) % 2 == 0)
        .collect();
    if options.is_empty() {
        None
    } else {
        Some(options[rng.gen_range(0..options.len())])
    }
}

fn random_outer<R: Rng>(
    rng: &mut R,
    count: usize,
    sizes: std::ops::RangeInclusive<usize>,
    min_chords: usize,
    constraints: Constraints,
) -> Vec<Instance> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut n = rng.gen_range(sizes.clone());
        match constraints.parity {
            BoundaryParity::Even if n % 2 == 1 => n += 1,
            BoundaryParity::Odd if n % 2 == 0 => n += 1,
            _ => {}
        }
        let Some(c) = pick_chords(rng, n, min_chords, constraints.all_odd_faces) else {
            continue;
        };
        if let Ok(og) = random_outerplanar(n, c, constraints, rng.gen()) {
            out.push(Instance::Outer(og));
        }
    }
    out
}

/// Stars with one odd leaf per step, `a + b` running over `2..=12`.
pub fn star_sequence() -> Vec<OuterplanarGraph> {
    (2..=12usize)
        .map(|s| {
            let chords: Vec<(usize, usize)> = (0..s).map(|i| (2 * i, 2 * i + 2)).collect();
            OuterplanarGraph::new(2 * s + 2, chords).expect("fan chords are valid")
        })
        .collect()
}

fn exhaustive_outer(sizes: impl IntoIterator<Item = usize>) -> Vec<Instance> {
    sizes
        .into_iter()
        .flat_map(|n| dissections(n, usize::MAX))
        .map(Instance::Outer)
        .collect()
}

fn instances<R: Rng>(suite: Suite, count: usize, rng: &mut R) -> Vec<Instance> {
    let constraints = |parity, shape, all_odd_faces| Constraints { parity, shape, all_odd_faces };
    match suite {
        Suite::Jamison => {
            let mut out: Vec<Instance> = (1..=10)
                .flat_map(trees_up_to_isomorphism)
                .map(Instance::Tree)
                .collect();
            for _ in 0..count {
                let n = rng.gen_range(1..=15);
                out.push(Instance::Tree(Tree::random(n, rng).expect("n >= 1")));
            }
            out
        }
        Suite::OddFaces => {
            let mut out = exhaustive_outer(3..=7);
            let k = constraints(BoundaryParity::Any, DualShapeConstraint::Any, true);
            out.extend(random_outer(rng, count, 5..=16, 1, k));
            out
        }
        Suite::OddChords => {
            let mut out = exhaustive_outer([4, 6, 8]);
            let k = constraints(BoundaryParity::Even, DualShapeConstraint::Any, false);
            out.extend(random_outer(rng, count, 4..=16, 1, k));
            out.push(Instance::OddChordsSharpness(11));
            out
        }
        Suite::DualPath => {
            let mut out = exhaustive_outer([4, 6, 8]);
            let k = constraints(BoundaryParity::Even, DualShapeConstraint::Path, false);
            out.extend(random_outer(rng, count, 4..=18, 0, k));
            out.push(Instance::DualPathSharpness(4));
            out.push(Instance::DualPathSharpness(10));
            out
        }
        Suite::DualStar => {
            let mut out = exhaustive_outer(5..=8);
            let even = count - count / 4;
            let k = constraints(BoundaryParity::Even, DualShapeConstraint::Star, false);
            out.extend(random_outer(rng, even, 6..=18, 2, k));
            let k = constraints(BoundaryParity::Odd, DualShapeConstraint::Star, false);
            out.extend(random_outer(rng, count - even, 5..=15, 2, k));
            out.push(Instance::Convergence(star_sequence()));
            out
        }
        Suite::Classical => {
            let mut out = Vec::new();
            let families: [(Family, &[usize]); 6] = [
                (Family::R, &[3, 5, 7]),
                (Family::L, &[1, 2, 3, 4, 5, 6]),
                (Family::H, &[4, 8]),
                (Family::T, &[3, 5]),
                (Family::Z, &[1, 2, 3, 4, 5]),
                (Family::ZStar, &[2, 3, 4, 5]),
            ];
            for (family, params) in families {
                for &p in params {
                    out.push(Instance::Family(FamilySpec::new(family, p, &[]).expect("valid parameters")));
                }
            }
            for t in 3..=6 {
                let attach: Vec<usize> = (0..t).filter(|_| rng.gen_bool(0.5)).collect();
                out.push(Instance::Family(FamilySpec::new(Family::S, t, &attach).expect("valid attach set")));
            }
            for _ in 0..count / 2 {
                let n = rng.gen_range(1..=9);
                out.push(Instance::Graph(random_graph(n, rng.gen_range(100..900), rng.gen())));
            }
            let k = constraints(BoundaryParity::Any, DualShapeConstraint::Any, false);
            out.extend(random_outer(rng, count - count / 2, 3..=14, 0, k));
            out
        }
        Suite::All => Suite::EACH
            .into_iter()
            .flat_map(|s| instances(s, count, rng))
            .collect(),
    }
}
