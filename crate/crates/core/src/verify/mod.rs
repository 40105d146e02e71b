//! Executable checks of the bounds and identities, random instance
//! generation, divergence sweeps and suite runners.
//!
//! Every checker returns a [`CheckReport`] with outcome pass, fail or
//! precondition-violated; comparisons are exact.

mod checks;
mod random;
mod suite;
mod sweep;
mod tree;

pub use checks::{
    check_classical_bounds, check_classical_bounds_of, check_dual_path_sharpness, check_jamison,
    check_odd_chords_sharpness, check_prop_dual_path, check_prop_dual_star, check_star_convergence,
    check_thm_odd_chords, check_thm_odd_faces, CheckReport, Outcome, Subject,
};
pub use random::{
    random_graph, random_outerplanar, shuffle_labels, BoundaryParity, Constraints, DualShapeConstraint,
    MAX_ATTEMPTS,
};
pub use suite::{run_suite, star_sequence, Suite, SuiteConfig, SuiteRun, SuiteSummary};
pub use sweep::{designated_direction, divergence_sweep, param_range, SweepRow, SweepTable};
pub use tree::{
    subtree_parity_census, subtree_parity_census_bruteforce, tree_independence_number,
    trees_up_to_isomorphism, Tree,
};
