//! Exact arithmetic for the sigma-irregularity of trees.
//!
//! The sigma index of a graph is the sum over edges of the squared difference
//! of the endpoint degrees. For trees of order `n` and maximum degree `delta`
//! this crate provides:
//!
//! - the linear-programming upper bound `lambda*n + mu*(n-1)` together with
//!   its dual certificate and exact slack table ([`certificate`]),
//! - the penalty function that measures a tree's distance from the LP optimum
//!   and the exact decomposition `sigma = lambda*n + mu*(n-1) - penalty`,
//! - the extremal constructions for the residues `n = 1 (mod delta)` and
//!   `n = 0 (mod delta)` ([`construct`]),
//! - exhaustive enumeration of free trees with optional degree caps, and
//!   brute-force sigma-maximization over them ([`enumerate`], [`search`]),
//! - computational verification of the slack-table lemmas ([`lemmas`]).
//!
//! All certificate arithmetic is exact: rationals are arbitrary precision,
//! and every comparison in the lemma sweeps is integral. Nothing in this
//! crate uses floating point.

pub mod canonical;
pub mod certificate;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod graph6;
pub mod lemmas;
pub mod oracle;
pub mod profile;
pub mod rational;
pub mod search;
pub mod tree;

pub use canonical::{automorphism_order, canonical_form, centers, CanonicalForm};
pub use certificate::{
    certificate, exact_sigma_max, lp_optimum, penalty, sigma_via_decomposition, DualCertificate,
    LpOptimum, SigmaMax,
};
pub use construct::{tt0_opt, tt0_opt_positions, tt1_opt};
pub use enumerate::enumerate_free_trees;
pub use error::Error;
pub use graph6::{parse_graph6, write_graph6};
pub use profile::DegreeProfile;
pub use rational::Rational;
pub use search::{residue_scan, search_sigma_max, BoundStatus, DegreeFilter, SearchReport};
pub use tree::Tree;
