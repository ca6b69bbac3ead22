//! Degree profiles: the vertex-degree counts `n_i` and edge degree-pair
//! multiplicities `m_{i,j}` of a tree, together with the handshake
//! identities that tie them to the order.

use crate::error::{Error, Result};
use crate::rational::{frac, rat, Rational};
use crate::tree::Tree;
use serde::Serialize;
use std::collections::BTreeMap;

/// The complete degree-pair structure of a tree.
///
/// `pair_counts` is keyed by ordered pairs `(i, j)` with `i <= j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub n: usize,
    /// Maximum degree of the underlying tree (0 for the one-vertex tree).
    pub delta: usize,
    /// Serialized as sorted `[degree, count]` pairs.
    #[serde(serialize_with = "degree_entries")]
    pub degree_counts: BTreeMap<usize, u64>,
    /// Serialized as sorted `[i, j, count]` triples (tuple keys do not
    /// survive JSON object encoding).
    #[serde(serialize_with = "pair_entries")]
    pub pair_counts: BTreeMap<(usize, usize), u64>,
}

fn degree_entries<S: serde::Serializer>(
    map: &BTreeMap<usize, u64>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(map.iter().map(|(&i, &c)| (i, c)))
}

fn pair_entries<S: serde::Serializer>(
    map: &BTreeMap<(usize, usize), u64>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(map.iter().map(|(&(i, j), &m)| (i, j, m)))
}

impl DegreeProfile {
    pub fn of_tree(tree: &Tree) -> DegreeProfile {
        let deg = tree.degrees();
        let mut degree_counts = BTreeMap::new();
        for &d in &deg {
            if d > 0 {
                *degree_counts.entry(d).or_insert(0u64) += 1;
            }
        }
        let mut pair_counts = BTreeMap::new();
        for (u, v) in tree.edges() {
            let (i, j) = if deg[u] <= deg[v] {
                (deg[u], deg[v])
            } else {
                (deg[v], deg[u])
            };
            *pair_counts.entry((i, j)).or_insert(0u64) += 1;
        }
        DegreeProfile {
            n: tree.n(),
            delta: tree.max_degree(),
            degree_counts,
            pair_counts,
        }
    }

    pub fn n_count(&self, i: usize) -> u64 {
        self.degree_counts.get(&i).copied().unwrap_or(0)
    }

    /// `m_{i,j}`; the key is normalized so argument order does not matter.
    pub fn m_count(&self, i: usize, j: usize) -> u64 {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.pair_counts.get(&key).copied().unwrap_or(0)
    }

    /// Sigma computed from the profile alone: sum of `m_{i,j} (i-j)^2`.
    pub fn sigma_from_pairs(&self) -> u64 {
        self.pair_counts
            .iter()
            .map(|(&(i, j), &m)| m * (j - i) as u64 * (j - i) as u64)
            .sum()
    }

    /// Checks the handshake identities, exactly:
    ///
    /// - sum of `n_i` equals `n`,
    /// - sum of `i * n_i` equals `2n - 2`,
    /// - for every degree `i`: edges incident to degree-`i` vertices, counted
    ///   with multiplicity at `(i, i)` edges, total `i * n_i`,
    /// - sum of `m_{i,j}` equals `n - 1`,
    /// - sum of `(1/i + 1/j) m_{i,j}` equals `n` in exact rationals.
    ///
    /// The one-vertex tree has no edges and is out of scope here.
    pub fn verify_identities(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Degenerate(
                "degree identities need at least one edge (n >= 2)".into(),
            ));
        }
        let n = self.n as u64;

        let vertex_total: u64 = self.degree_counts.values().sum();
        if vertex_total != n {
            return Err(identity_violation(format!(
                "sum of n_i is {vertex_total}, expected n = {n}"
            )));
        }

        let degree_total: u64 = self.degree_counts.iter().map(|(&i, &c)| i as u64 * c).sum();
        if degree_total != 2 * n - 2 {
            return Err(identity_violation(format!(
                "sum of i*n_i is {degree_total}, expected 2n-2 = {}",
                2 * n - 2
            )));
        }

        for (&i, &count) in &self.degree_counts {
            let mut incident = 0u64;
            for (&(p, q), &m) in &self.pair_counts {
                if p == i && q == i {
                    incident += 2 * m;
                } else if p == i || q == i {
                    incident += m;
                }
            }
            if incident != i as u64 * count {
                return Err(identity_violation(format!(
                    "edges incident to degree-{i} vertices total {incident}, \
                     expected i*n_i = {}",
                    i as u64 * count
                )));
            }
        }

        let edge_total: u64 = self.pair_counts.values().sum();
        if edge_total != n - 1 {
            return Err(identity_violation(format!(
                "sum of m_ij is {edge_total}, expected n-1 = {}",
                n - 1
            )));
        }

        let weighted: Rational = self
            .pair_counts
            .iter()
            .map(|(&(i, j), &m)| {
                (frac(1, i as i64) + frac(1, j as i64)) * rat(m as i64)
            })
            .sum();
        if weighted != rat(self.n as i64) {
            return Err(identity_violation(format!(
                "sum of (1/i+1/j) m_ij is {weighted}, expected n = {n}"
            )));
        }

        Ok(())
    }
}

fn identity_violation(detail: String) -> Error {
    Error::Domain(format!("degree identity violated: {detail}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile_of(n: usize, edges: &[(usize, usize)]) -> DegreeProfile {
        DegreeProfile::of_tree(&Tree::from_edges(n, edges).unwrap())
    }

    #[test]
    fn star_profile() {
        let p = profile_of(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(p.n_count(1), 4);
        assert_eq!(p.n_count(4), 1);
        assert_eq!(p.m_count(1, 4), 4);
        assert_eq!(p.m_count(4, 1), 4);
        assert_eq!(p.pair_counts.len(), 1);
        p.verify_identities().unwrap();
    }

    #[test]
    fn path_profile() {
        let p = profile_of(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p.n_count(1), 2);
        assert_eq!(p.n_count(2), 2);
        assert_eq!(p.m_count(1, 2), 2);
        assert_eq!(p.m_count(2, 2), 1);
        p.verify_identities().unwrap();
    }

    #[test]
    fn double_star_profile() {
        let p = profile_of(
            8,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (4, 7)],
        );
        assert_eq!(p.m_count(1, 4), 6);
        assert_eq!(p.m_count(4, 4), 1);
        assert_eq!(p.n_count(2), 0);
        assert_eq!(p.delta, 4);
        p.verify_identities().unwrap();
    }

    #[test]
    fn sigma_restatement_matches_edgewise() {
        let t = Tree::from_edges(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (1, 6), (3, 7), (3, 8)],
        )
        .unwrap();
        let p = DegreeProfile::of_tree(&t);
        assert_eq!(p.sigma_from_pairs(), t.sigma());
        assert_eq!(p.sigma_from_pairs(), 62);
    }

    #[test]
    fn identities_hold_for_pseudorandom_trees() {
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..500 {
            let n = 2 + (next() % 60) as usize;
            let parents: Vec<usize> = (1..n).map(|i| (next() % i as u64) as usize).collect();
            let t = Tree::from_parents(&parents).unwrap();
            let p = DegreeProfile::of_tree(&t);
            p.verify_identities().unwrap();
            assert_eq!(p.sigma_from_pairs(), t.sigma());
        }
    }

    #[test]
    fn one_vertex_tree_is_degenerate() {
        let p = DegreeProfile::of_tree(&Tree::from_edges(1, &[]).unwrap());
        assert_eq!(p.delta, 0);
        assert!(matches!(p.verify_identities(), Err(Error::Degenerate(_))));
    }
}
