use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::budget::Budget;
use crate::census::{census_graph_with, census_outerplanar, ratio, Ratio, RatioDirection};
use crate::families::gen_t;
use crate::graph::{circuit_rank, cycle_census_bruteforce_with, CycleCensus, Graph};
use crate::outerplanar::{OuterplanarGraph, Parity};

use super::tree::{subtree_parity_census, tree_independence_number, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    PreconditionViolated,
}

/// Result of one checker on one instance. Values are exact; failures embed
/// the instance as JSON.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub outcome: Outcome,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance_json: Option<Value>,
}

/// What a check was run on: a descriptor plus its JSON form.
#[derive(Debug, Clone, PartialEq)]
pub struct Subject {
    pub descriptor: String,
    pub json: Value,
}

impl Subject {
    pub fn named(descriptor: impl Into<String>, json: Value) -> Subject {
        Subject { descriptor: descriptor.into(), json }
    }

    pub fn tree(t: &Tree) -> Subject {
        Subject::named(
            format!("tree n={} edges={:?}", t.n(), t.edges()),
            serde_json::to_value(t).expect("trees serialize"),
        )
    }

    pub fn outerplanar(og: &OuterplanarGraph) -> Subject {
        Subject::named(og.to_string(), serde_json::to_value(og).expect("graphs serialize"))
    }

    pub fn graph(g: &Graph) -> Subject {
        Subject::named(
            format!("graph n={} edges={:?}", g.n(), g.edges()),
            serde_json::to_value(g).expect("graphs serialize"),
        )
    }
}

impl CheckReport {
    pub fn verdict(
        check: &str,
        subject: &Subject,
        ok: bool,
        lhs: impl ToString,
        rhs: impl ToString,
        detail: impl Into<String>,
    ) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            instance: subject.descriptor.clone(),
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            pass: ok,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            detail: detail.into(),
            instance_json: (!ok).then(|| subject.json.clone()),
        }
    }

    pub fn precondition(check: &str, subject: &Subject, reason: impl Into<String>) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            instance: subject.descriptor.clone(),
            outcome: Outcome::PreconditionViolated,
            pass: false,
            lhs: String::new(),
            rhs: String::new(),
            detail: reason.into(),
            instance_json: None,
        }
    }

    pub fn is_failure(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

fn binom2(n: usize) -> BigUint {
    BigUint::from(n * n.saturating_sub(1) / 2)
}

fn pair(c: &CycleCensus) -> String {
    format!("({}, {})", c.odd, c.even)
}

/// Odd minus even subtrees equals the independence number.
pub fn check_jamison(t: &Tree) -> CheckReport {
    const NAME: &str = "jamison";
    let subject = Subject::tree(t);
    if t.is_weighted() {
        return CheckReport::precondition(NAME, &subject, "tree carries parity weights");
    }
    let (odd, even) = subtree_parity_census(t);
    let diff = BigInt::from(odd) - BigInt::from(even);
    let alpha = tree_independence_number(t);
    let ok = diff == BigInt::from(alpha);
    CheckReport::verdict(NAME, &subject, ok, diff, alpha, "")
}

/// Bounds for graphs whose finite faces are all odd, with `|F|` counting the
/// infinite face:
/// `(|F|-1)/(2 c_e) + 1 <= c_o/c_e <= (|F|-2)/c_e + 1`, `1 <= c_o/c_e <= 2`
/// and `c_o - c_e = α(T_G)`.
pub fn check_thm_odd_faces(og: &OuterplanarGraph) -> CheckReport {
    const NAME: &str = "odd_faces";
    let subject = Subject::outerplanar(og);
    let faces = og.faces();
    if faces.iter().any(|f| f.len() % 2 == 0) {
        return CheckReport::precondition(NAME, &subject, "some finite face is even");
    }
    if faces.len() < 2 {
        return CheckReport::precondition(NAME, &subject, "fewer than 3 faces");
    }
    let census = census_outerplanar(og);
    let (co, ce) = (&census.odd, &census.even);
    let f = BigUint::from(faces.len() + 1);
    let one = BigUint::from(1u32);
    let alpha = tree_independence_number(&Tree::from_dual(&og.dual_tree()));

    let mut broken = Vec::new();
    if &f - &one + ce * 2u32 > co * 2u32 {
        broken.push("lower bound");
    }
    if co + 2u32 > &f + ce {
        broken.push("upper bound");
    }
    if co < ce || co > &(ce * 2u32) {
        broken.push("1 <= ratio <= 2");
    }
    if co < ce || co - ce != BigUint::from(alpha) {
        broken.push("c_o - c_e = alpha");
    }
    let lower = Ratio::new(&f - &one + ce * 2u32, ce * 2u32);
    let upper = Ratio::new(&f - 2u32 + ce, ce.clone());
    let mut detail = format!("|F| = {f}, alpha = {alpha}");
    if !broken.is_empty() {
        detail = format!("{detail}; violated: {}", broken.join(", "));
    }
    CheckReport::verdict(
        NAME,
        &subject,
        broken.is_empty(),
        ratio(&census, RatioDirection::OddOverEven),
        format!("[{lower}, {upper}]"),
        detail,
    )
}

/// With an even boundary and at least one even chord, `c_o/c_e <= k` for
/// `k` odd chords.
pub fn check_thm_odd_chords(og: &OuterplanarGraph) -> CheckReport {
    const NAME: &str = "odd_chords";
    let subject = Subject::outerplanar(og);
    let Ok((odd, even)) = og.chord_parity_counts() else {
        return CheckReport::precondition(NAME, &subject, "odd boundary");
    };
    if even == 0 {
        return CheckReport::precondition(NAME, &subject, "no even chord");
    }
    let census = census_outerplanar(og);
    let ok = census.odd <= &census.even * odd;
    CheckReport::verdict(
        NAME,
        &subject,
        ok,
        ratio(&census, RatioDirection::OddOverEven),
        odd,
        format!("{odd} odd chords, {even} even chords"),
    )
}

/// Even boundary with a path dual: `c_o = a(b+2)`,
/// `c_e = C(b,2) + C(a,2) + 2b + 1` and `c_o/c_e <= 2`.
pub fn check_prop_dual_path(og: &OuterplanarGraph) -> CheckReport {
    const NAME: &str = "dual_path";
    let subject = Subject::outerplanar(og);
    let Ok((a, b)) = og.chord_parity_counts() else {
        return CheckReport::precondition(NAME, &subject, "odd boundary");
    };
    if !og.dual_tree().is_path() {
        return CheckReport::precondition(NAME, &subject, "dual tree is not a path");
    }
    let census = census_outerplanar(og);
    let expected = CycleCensus::new(a * (b + 2), binom2(b) + binom2(a) + (2 * b + 1));
    let ok = census.same_counts(&expected) && census.odd <= &census.even * 2u32;
    CheckReport::verdict(
        NAME,
        &subject,
        ok,
        pair(&census),
        pair(&expected),
        format!("a = {a}, b = {b}, ratio = {}", ratio(&census, RatioDirection::OddOverEven)),
    )
}

/// Star dual with an odd leaf face: `(2^{a+b-1} + a, 2^{a+b-1} + b)`.
///
/// For an even boundary `a` and `b` count odd and even chords. For an odd
/// boundary they count odd and even leaf faces, which gives the same form
/// since the centre then has the parity of `a + 1`; the census is also
/// compared with the oracle.
pub fn check_prop_dual_star(og: &OuterplanarGraph, budget: &Budget) -> CheckReport {
    const NAME: &str = "dual_star";
    let subject = Subject::outerplanar(og);
    let tree = og.dual_tree();
    let Some(center) = tree.star_center().filter(|_| tree.is_star()) else {
        return CheckReport::precondition(NAME, &subject, "dual tree is not a star");
    };
    let leaves = (0..tree.node_count()).filter(|&v| v != center);
    let odd_leaves = leaves.clone().filter(|&v| tree.nodes[v].len() % 2 == 1).count();
    if odd_leaves == 0 {
        return CheckReport::precondition(NAME, &subject, "no odd leaf face");
    }
    let (a, b) = match og.boundary_parity() {
        Parity::Even => og.chord_parity_counts().expect("even boundary"),
        Parity::Odd => (odd_leaves, leaves.count() - odd_leaves),
    };
    let census = census_outerplanar(og);
    let base = BigUint::from(1u32) << (a + b - 1);
    let expected = CycleCensus::new(&base + a, &base + b);
    let mut ok = census.same_counts(&expected);
    let mut detail = format!("a = {a}, b = {b}, {} boundary", og.boundary_parity());
    if og.boundary_parity() == Parity::Odd {
        match cycle_census_bruteforce_with(&og.to_graph(), budget) {
            Ok(oracle) => {
                ok &= oracle.same_counts(&census);
                detail.push_str(&format!(", oracle {}", pair(&oracle)));
            }
            Err(e) => return CheckReport::precondition(NAME, &subject, e.to_string()),
        }
    }
    CheckReport::verdict(NAME, &subject, ok, pair(&census), pair(&expected), detail)
}

/// `μ <= ν <= 2^μ - 1` for circuit rank `μ` and cycle count `ν`.
pub fn check_classical_bounds(g: &Graph, budget: &Budget) -> CheckReport {
    check_classical_bounds_of(Subject::graph(g), g, budget)
}

/// As [`check_classical_bounds`], reported under a given descriptor.
pub fn check_classical_bounds_of(subject: Subject, g: &Graph, budget: &Budget) -> CheckReport {
    const NAME: &str = "classical";
    let census = match census_graph_with(g, budget) {
        Ok(c) => c,
        Err(e) => return CheckReport::precondition(NAME, &subject, e.to_string()),
    };
    let mu = circuit_rank(g);
    let nu = census.total();
    let upper = (BigUint::from(1u32) << mu) - 1u32;
    let ok = BigUint::from(mu) <= nu && nu <= upper;
    CheckReport::verdict(NAME, &subject, ok, &nu, format!("[{mu}, {upper}]"), "")
}

/// `T_n` has `n + 1` odd chords, at least one even chord and ratio at
/// least `n` once `n >= 11`, while respecting the bound `n + 1`.
pub fn check_odd_chords_sharpness(n: usize) -> CheckReport {
    const NAME: &str = "odd_chords_sharpness";
    let subject = Subject::named(format!("T({n})"), Value::from(n));
    let og = match gen_t(n) {
        Ok(og) => og,
        Err(e) => return CheckReport::precondition(NAME, &subject, e.to_string()),
    };
    let (odd, even) = og.chord_parity_counts().expect("T has an even boundary");
    let census = census_outerplanar(&og);
    let ok = odd == n + 1
        && even >= 1
        && census.odd >= &census.even * n
        && census.odd <= &census.even * odd;
    let subject = Subject::outerplanar(&og);
    CheckReport::verdict(
        NAME,
        &subject,
        ok,
        ratio(&census, RatioDirection::OddOverEven),
        format!("[{n}, {odd}]"),
        format!("{odd} odd chords, {even} even chords"),
    )
}

/// An even cycle with one odd chord has ratio exactly 2.
pub fn check_dual_path_sharpness(boundary: usize) -> CheckReport {
    const NAME: &str = "dual_path_sharpness";
    let subject = Subject::named(format!("C_{boundary} + chord (0, 2)"), Value::from(boundary));
    if boundary < 4 || boundary % 2 == 1 {
        return CheckReport::precondition(NAME, &subject, "needs an even boundary of length >= 4");
    }
    let og = OuterplanarGraph::new(boundary, [(0, 2)]).expect("a valid chord");
    let census = census_outerplanar(&og);
    let r = ratio(&census, RatioDirection::OddOverEven);
    CheckReport::verdict(NAME, &Subject::outerplanar(&og), r == Ratio::integer(2u32), r, 2, "")
}

/// `|c_o/c_e - 1|` strictly decreases along the given sequence.
pub fn check_star_convergence(instances: &[OuterplanarGraph]) -> CheckReport {
    const NAME: &str = "star_convergence";
    let subject = Subject::named(
        format!("{} star instances", instances.len()),
        serde_json::to_value(instances).expect("graphs serialize"),
    );
    let deviations: Vec<Option<Ratio>> = instances
        .iter()
        .map(|og| ratio(&census_outerplanar(og), RatioDirection::OddOverEven).abs_diff(&Ratio::integer(1u32)))
        .collect();
    let ok = deviations.iter().all(Option::is_some)
        && deviations.windows(2).all(|w| w[1] < w[0]);
    let shown: Vec<String> = deviations
        .iter()
        .map(|d| d.as_ref().map_or_else(|| "inf".to_string(), Ratio::to_string))
        .collect();
    CheckReport::verdict(NAME, &subject, ok, shown.join(" > "), "strictly decreasing", "")
}
