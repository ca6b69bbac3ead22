//! Canonical forms for free trees.
//!
//! The encoding is the classical nested-parenthesis form: a rooted tree
//! encodes as `(` followed by its child encodings sorted descending `)`,
//! and a free tree is rooted at its center. For bicentral trees the
//! lexicographically smaller of the two center-rooted encodings is taken.
//! Two trees have equal encodings iff they are isomorphic.

use crate::tree::Tree;
use num::BigUint;
use num::One;
use serde::{Deserialize, Serialize};

/// Relabeling-invariant encoding of a free tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(pub String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// The one or two central vertices (vertices minimizing eccentricity),
/// found by repeatedly stripping leaves.
pub fn centers(tree: &Tree) -> Vec<usize> {
    let n = tree.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = tree.degrees();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &u in tree.neighbors(v) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Children of each vertex when the tree is rooted at `root`, in a
/// post-order-friendly order: `order` lists vertices so that every child
/// appears before its parent.
fn rooted_structure(tree: &Tree, root: usize) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = tree.n();
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![root];
    let mut visited = vec![false; n];
    visited[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in tree.neighbors(v) {
            if !visited[u] {
                visited[u] = true;
                parent[u] = v;
                children[v].push(u);
                stack.push(u);
            }
        }
    }
    order.reverse(); // children now precede parents
    (children, order)
}

/// Nested-parenthesis encoding of the tree rooted at `root`, with child
/// encodings sorted descending at every vertex.
pub fn rooted_encoding(tree: &Tree, root: usize) -> String {
    let (children, order) = rooted_structure(tree, root);
    let mut enc: Vec<String> = vec![String::new(); tree.n()];
    for &v in &order {
        let mut parts: Vec<&str> = children[v].iter().map(|&c| enc[c].as_str()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut s = String::with_capacity(2 + parts.iter().map(|p| p.len()).sum::<usize>());
        s.push('(');
        for p in parts {
            s.push_str(p);
        }
        s.push(')');
        enc[v] = s;
    }
    enc.swap_remove(root)
}

/// Canonical form of a free tree: rooted encoding at the center, taking the
/// lexicographically smaller of the two encodings when the tree is bicentral.
pub fn canonical_form(tree: &Tree) -> CanonicalForm {
    let cs = centers(tree);
    let enc = match cs.as_slice() {
        [c] => rooted_encoding(tree, *c),
        [c1, c2] => {
            let e1 = rooted_encoding(tree, *c1);
            let e2 = rooted_encoding(tree, *c2);
            if e1 <= e2 {
                e1
            } else {
                e2
            }
        }
        _ => unreachable!("a tree has one or two centers"),
    };
    CanonicalForm(enc)
}

fn factorial(k: usize) -> BigUint {
    let mut out = BigUint::one();
    for i in 2..=k {
        out *= BigUint::from(i);
    }
    out
}

/// Automorphism count of the tree rooted at `root`: the product over all
/// vertices of the factorials of the multiplicities of identical child
/// encodings.
fn rooted_automorphisms(tree: &Tree, root: usize) -> (String, BigUint) {
    let (children, order) = rooted_structure(tree, root);
    let mut enc: Vec<String> = vec![String::new(); tree.n()];
    let mut aut = BigUint::one();
    for &v in &order {
        let mut parts: Vec<&str> = children[v].iter().map(|&c| enc[c].as_str()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut run = 1usize;
        for w in 1..=parts.len() {
            if w < parts.len() && parts[w] == parts[w - 1] {
                run += 1;
            } else {
                aut *= factorial(run);
                run = 1;
            }
        }
        let mut s = String::with_capacity(2 + parts.iter().map(|p| p.len()).sum::<usize>());
        s.push('(');
        for p in parts {
            s.push_str(p);
        }
        s.push(')');
        enc[v] = s;
    }
    (enc.swap_remove(root), aut)
}

/// Order of the automorphism group of the free tree.
///
/// Unicentral trees take the rooted count at the center. Bicentral trees
/// split at the central edge: the group is the product of the two halves'
/// rooted counts, doubled when the halves are isomorphic (the swap).
pub fn automorphism_order(tree: &Tree) -> BigUint {
    let cs = centers(tree);
    match cs.as_slice() {
        [c] => rooted_automorphisms(tree, *c).1,
        [c1, c2] => {
            let (half1, half2) = split_at_edge(tree, *c1, *c2);
            let (e1, a1) = rooted_automorphisms(&half1, 0);
            let (e2, a2) = rooted_automorphisms(&half2, 0);
            let mut total = a1 * a2;
            if e1 == e2 {
                total *= BigUint::from(2u32);
            }
            total
        }
        _ => unreachable!(),
    }
}

/// The two components of `tree` minus edge `(a, b)`, each re-labeled with its
/// endpoint of the removed edge as vertex 0.
fn split_at_edge(tree: &Tree, a: usize, b: usize) -> (Tree, Tree) {
    let build = |start: usize, banned: usize| -> Tree {
        let n = tree.n();
        let mut map = vec![usize::MAX; n];
        let mut order = vec![start];
        map[start] = 0;
        let mut next_id = 1usize;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in tree.neighbors(v) {
                if (v == start && u == banned) || (v == banned && u == start) {
                    continue;
                }
                if map[u] == usize::MAX {
                    map[u] = next_id;
                    next_id += 1;
                    order.push(u);
                }
            }
        }
        let mut edges = Vec::new();
        for &v in &order {
            for &u in tree.neighbors(v) {
                if (v == a && u == b) || (v == b && u == a) {
                    continue;
                }
                if map[u] != usize::MAX && map[v] < map[u] {
                    edges.push((map[v], map[u]));
                }
            }
        }
        Tree::from_edges(next_id, &edges).expect("component of a tree is a tree")
    };
    (build(a, b), build(b, a))
}
