//! Labeled trees on dense vertex ids `0..n-1`.

use crate::error::{Error, Result};

/// An undirected labeled tree.
///
/// Invariants, enforced by every constructor:
/// - exactly `n - 1` edges,
/// - connected (hence acyclic),
/// - adjacency symmetric, no self-loops, no duplicate neighbors,
/// - neighbor lists sorted ascending.
///
/// Degrees are always recomputed from adjacency, never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds and validates a tree from an edge list on vertices `0..n-1`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::domain("a tree has at least one vertex"));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "graph has {} edges, expected n-1 = {}",
                edges.len(),
                n - 1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::NotATree(format!(
                    "edge ({u},{v}) references a vertex out of range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NotATree(format!("duplicate edge at vertex {v}")));
            }
        }
        let tree = Tree { n, adj };
        if !tree.is_connected() {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(tree)
    }

    /// Builds a tree from a parent list: `parent[i]` is the parent of vertex
    /// `i + 1`, so vertex 0 is the root. Used by the enumeration modules,
    /// which produce parent arrays by construction.
    pub fn from_parents(parents: &[usize]) -> Result<Tree> {
        let n = parents.len() + 1;
        let edges: Vec<(usize, usize)> =
            parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
        Tree::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Maximum degree; 0 for the one-vertex tree.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted set of distinct vertex degrees.
    pub fn degree_set(&self) -> Vec<usize> {
        let mut set: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        set.sort_unstable();
        set.dedup();
        set
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n.saturating_sub(1));
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The sigma index: sum over edges of the squared degree difference.
    pub fn sigma(&self) -> u64 {
        let deg = self.degrees();
        let mut total = 0u64;
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    let d = deg[u].abs_diff(deg[v]) as u64;
                    total += d * d;
                }
            }
        }
        total
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_two_vertices_has_sigma_zero() {
        let t = Tree::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(t.sigma(), 0);
        assert_eq!(t.max_degree(), 1);
    }

    #[test]
    fn star_on_five_vertices() {
        let t = Tree::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let mut degs = t.degrees();
        degs.sort_unstable();
        assert_eq!(degs, [1, 1, 1, 1, 4]);
        // each of the 4 edges contributes (4-1)^2
        assert_eq!(t.sigma(), 36);
    }

    #[test]
    fn one_vertex_tree_is_accepted() {
        let t = Tree::from_edges(1, &[]).unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(t.max_degree(), 0);
        assert_eq!(t.sigma(), 0);
    }

    #[test]
    fn wrong_edge_count_is_rejected() {
        let e = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap_err();
        assert!(e.to_string().contains("4 edges, expected n-1 = 3"), "{e}");
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        // right edge count, but a triangle plus two isolated-ish vertices
        let e = Tree::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap_err();
        assert!(e.to_string().contains("disconnected"), "{e}");
    }

    #[test]
    fn self_loops_and_duplicates_are_rejected() {
        assert!(Tree::from_edges(3, &[(0, 0), (1, 2)]).is_err());
        assert!(Tree::from_edges(3, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn neighbor_lists_are_sorted() {
        let t = Tree::from_edges(4, &[(2, 0), (3, 0), (0, 1)]).unwrap();
        assert_eq!(t.neighbors(0), &[1, 2, 3]);
    }

    #[test]
    fn from_parents_builds_a_path() {
        // parents of vertices 1,2,3
        let t = Tree::from_parents(&[0, 1, 2]).unwrap();
        assert_eq!(t.sigma(), 2); // P4: two (1,2) edges contribute 1 each
    }

    #[test]
    fn sigma_matches_direct_recount_on_a_caterpillar() {
        let t = Tree::from_edges(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (1, 6), (3, 7), (3, 8)],
        )
        .unwrap();
        let deg = t.degrees();
        let direct: u64 = t
            .edges()
            .iter()
            .map(|&(u, v)| {
                let d = deg[u].abs_diff(deg[v]) as u64;
                d * d
            })
            .sum();
        assert_eq!(t.sigma(), direct);
        assert_eq!(t.sigma(), 62); // two degree-4 hubs joined by a 2-vertex chain
    }
}
