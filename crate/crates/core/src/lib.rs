//! Exact odd/even cycle counting for outerplanar graphs.
//!
//! A 2-connected outerplanar graph is modelled by its boundary cycle and a
//! set of non-crossing chords ([`OuterplanarGraph`]). Its cycles correspond
//! one-to-one to the nonempty subtrees of the dual tree, so the number of odd
//! and even cycles is computed by a parity dynamic program over that tree
//! ([`census::census_outerplanar`]). Every fast path has a brute-force oracle
//! in [`graph`] that it is tested against.
//!
//! Module map:
//!
//! * [`graph`]: simple graphs, cycle enumeration, blocks, minors, isomorphism.
//! * [`outerplanar`]: boundary + chords model, faces, dual tree, chord parity.
//! * [`census`]: dual-tree counting, per-edge counts, edge gluing, ratios.
//! * [`families`]: generators for the named graph families.
//! * [`recognition`]: claw-freeness, K4/K2,3 minor tests, embedding search,
//!   structural classification of claw-free K4-minor-free graphs.
//! * [`verify`]: checkers for the bounds and identities, random instances,
//!   divergence sweeps and suite runners.
//! * [`exec`]: order-preserving parallel map used by sweeps and suites.

pub mod budget;
pub mod census;
pub mod error;
pub mod exec;
pub mod families;
pub mod graph;
pub mod outerplanar;
pub mod recognition;
pub mod verify;

pub use budget::Budget;
pub use census::{census_graph, census_outerplanar, census_through_edge, glue_census, ratio, Ratio};
pub use error::{Error, Result};
pub use graph::{Cycle, CycleCensus, Graph};
pub use outerplanar::{DualTree, Face, OuterplanarGraph, Parity};
