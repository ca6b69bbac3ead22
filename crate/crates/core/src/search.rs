//! Brute-force sigma maximization over enumerated trees, reported against
//! the LP bound, plus the residue scan that tabulates whole congruence
//! windows of n for a fixed delta.

use crate::canonical::{canonical_form, CanonicalForm};
use crate::certificate::lp_optimum;
use crate::enumerate::enumerate_free_trees;
use crate::error::{Error, Result};
use crate::graph6::write_graph6;
use crate::rational::{rat, Rational};
use crate::tree::Tree;
use serde::Serialize;

/// Refuse enumeration beyond this order unless explicitly overridden.
pub const SEARCH_GUARD_MAX_N: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeFilter {
    /// Trees whose maximum degree equals delta.
    Exact,
    /// Trees whose maximum degree is at most delta.
    AtMost,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum BoundStatus {
    Tight,
    Gap {
        #[serde(with = "crate::rational::serde_string")]
        gap: Rational,
    },
}

/// One extremal tree, identified up to isomorphism and re-checkable offline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalTree {
    pub canonical: CanonicalForm,
    pub graph6: String,
    /// Sorted set of distinct degrees occurring in the tree.
    pub degree_set: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub delta: usize,
    pub degree_filter: DegreeFilter,
    /// Number of isomorphism classes satisfying the degree filter.
    pub tree_count: u64,
    pub sigma_max: u64,
    pub extremal_trees: Vec<ExtremalTree>,
    #[serde(with = "crate::rational::serde_string")]
    pub bound: Rational,
    pub bound_status: BoundStatus,
}

/// Exact sigma maximum over all trees of order `n` whose maximum degree
/// matches the filter, with every extremal isomorphism class retained.
pub fn search_sigma_max(
    n: usize,
    delta: usize,
    degree_filter: DegreeFilter,
    override_size_guard: bool,
) -> Result<SearchReport> {
    if n > SEARCH_GUARD_MAX_N && !override_size_guard {
        return Err(Error::SizeGuard {
            n,
            guard: SEARCH_GUARD_MAX_N,
        });
    }
    // also rejects delta < 4 and n <= delta (no qualifying trees)
    let opt = lp_optimum(n, delta)?;
    let bound = opt.sigma_bound;

    let mut tree_count = 0u64;
    let mut sigma_max = 0u64;
    let mut extremal: Vec<Tree> = Vec::new();
    for tree in enumerate_free_trees(n, Some(delta)) {
        if degree_filter == DegreeFilter::Exact && tree.max_degree() != delta {
            continue;
        }
        tree_count += 1;
        let s = tree.sigma();
        if extremal.is_empty() || s > sigma_max {
            sigma_max = s;
            extremal.clear();
            extremal.push(tree);
        } else if s == sigma_max {
            extremal.push(tree);
        }
    }
    if tree_count == 0 {
        return Err(Error::domain(format!(
            "no tree of order {n} matches the degree filter at delta {delta}"
        )));
    }

    let mut extremal_trees: Vec<ExtremalTree> = extremal
        .iter()
        .map(|t| ExtremalTree {
            canonical: canonical_form(t),
            graph6: write_graph6(t),
            degree_set: t.degree_set(),
        })
        .collect();
    extremal_trees.sort_by(|a, b| a.canonical.cmp(&b.canonical));

    let sigma_rat = rat(sigma_max as i64);
    debug_assert!(sigma_rat <= bound, "search exceeded the LP bound");
    let bound_status = if sigma_rat == bound {
        BoundStatus::Tight
    } else {
        BoundStatus::Gap {
            gap: &bound - &sigma_rat,
        }
    };

    Ok(SearchReport {
        n,
        delta,
        degree_filter,
        tree_count,
        sigma_max,
        extremal_trees,
        bound,
        bound_status,
    })
}

/// One report per order in the windows `delta*k + 1 ..= delta*k + delta` for
/// each `k` in the range, always with the exact-degree filter. Covers each
/// residue class of n modulo delta exactly once per k.
pub fn residue_scan(
    delta: usize,
    k_min: usize,
    k_max: usize,
    override_size_guard: bool,
) -> Result<Vec<SearchReport>> {
    if k_min < 1 || k_min > k_max {
        return Err(Error::domain(format!(
            "scan needs 1 <= k_min <= k_max, got {k_min}..{k_max}"
        )));
    }
    let n_max = delta * k_max + delta;
    if n_max > SEARCH_GUARD_MAX_N && !override_size_guard {
        return Err(Error::SizeGuard {
            n: n_max,
            guard: SEARCH_GUARD_MAX_N,
        });
    }
    let mut reports = Vec::new();
    for k in k_min..=k_max {
        for n in delta * k + 1..=delta * k + delta {
            reports.push(search_sigma_max(n, delta, DegreeFilter::Exact, true)?);
        }
    }
    Ok(reports)
}
