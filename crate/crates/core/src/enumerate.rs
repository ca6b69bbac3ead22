//! Exhaustive generation of free trees of a given order, one representative
//! per isomorphism class, optionally restricted to a maximum-degree cap.
//!
//! The generator walks canonical level sequences of rooted trees in
//! decreasing lexicographic order (the classic successor rule) and keeps
//! exactly those sequences whose root is the canonical root of the underlying
//! free tree: the unique center, or the lex-greater end of the central edge.
//! A degree cap is enforced during generation by jumping past every sequence
//! that shares the violating prefix.

use crate::tree::Tree;

/// Iterator over free trees of order `n`, one per isomorphism class.
///
/// With a cap, yields exactly the classes whose maximum degree is at most
/// `max_degree`. Yield order is deterministic (decreasing lexicographic in
/// the canonical level sequence, so paths come first and stars last).
pub fn enumerate_free_trees(n: usize, max_degree: Option<usize>) -> FreeTrees {
    FreeTrees {
        // levels 0,1,...,n-1: the path, the lex-greatest canonical sequence
        seq: (0..n).collect(),
        cap: max_degree.unwrap_or(n.max(1) - 1).min(n.max(1) - 1),
        exhausted: n == 0,
        child_counts: vec![0; n],
        last_at_level: vec![0; n],
    }
}

pub struct FreeTrees {
    seq: Vec<usize>,
    cap: usize,
    exhausted: bool,
    child_counts: Vec<usize>,
    last_at_level: Vec<usize>,
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        while !self.exhausted {
            if let Some(i) = self.first_degree_violation() {
                self.exhausted = !prune_jump(&mut self.seq, i);
                continue;
            }
            let tree = self.is_free_canonical().then(|| self.build_tree());
            self.exhausted = !successor(&mut self.seq);
            if tree.is_some() {
                return tree;
            }
        }
        None
    }
}

impl FreeTrees {
    /// Earliest position whose arrival pushes some vertex past the cap.
    /// A vertex's degree is its child count plus one for its parent edge.
    fn first_degree_violation(&mut self) -> Option<usize> {
        let n = self.seq.len();
        self.child_counts[..n].fill(0);
        for i in 1..n {
            let level = self.seq[i];
            let parent = self.last_at_level[level - 1];
            self.child_counts[parent] += 1;
            let degree = self.child_counts[parent] + usize::from(parent != 0);
            if degree > self.cap {
                return Some(i);
            }
            self.last_at_level[level] = i;
        }
        None
    }

    /// Whether the current canonical rooted sequence is rooted at the
    /// canonical root of its free tree. With `h1` the height and `h2` the
    /// deepest level outside the first root subtree: `h2 = h1` means the root
    /// is the unique center; `h2 = h1 - 1` means the root and its first child
    /// are the two centers, and the rooting at the lex-greater side (ties
    /// accepted, they are the same rooted tree) is kept; anything else means
    /// the center lies strictly inside the first subtree.
    fn is_free_canonical(&self) -> bool {
        let seq = &self.seq;
        let n = seq.len();
        if n <= 1 {
            return true;
        }
        let h1 = *seq.iter().max().unwrap();
        let c = (2..n).find(|&i| seq[i] == 1).unwrap_or(n);
        let h2 = seq[c..].iter().copied().max().unwrap_or(0);
        if h2 == h1 {
            return true;
        }
        if h2 + 1 < h1 {
            return false;
        }
        let rerooted = reroot_at_first_child(seq, c);
        seq[..] >= rerooted[..]
    }

    fn build_tree(&self) -> Tree {
        let seq = &self.seq;
        let n = seq.len();
        let mut last_at_level = vec![0usize; n];
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            edges.push((last_at_level[seq[i] - 1], i));
            last_at_level[seq[i]] = i;
        }
        Tree::from_edges(n, &edges).expect("level sequence describes a tree")
    }
}

/// Advances to the next canonical rooted level sequence in decreasing
/// lexicographic order; `false` when the input was the last one (the star).
fn successor(seq: &mut [usize]) -> bool {
    let n = seq.len();
    step_at(seq, n.max(1) - 1)
}

/// Jump rule for a degree violation at position `i`: every canonical
/// sequence sharing the current prefix through the rightmost position
/// `p <= i` of level two or more still contains the violation (the positions
/// after `p` are all level-one root children), so the walk may resume at the
/// greatest sequence that differs at or before `p`.
fn prune_jump(seq: &mut [usize], i: usize) -> bool {
    step_at(seq, i)
}

/// Core successor step: with `p` the rightmost position at or before `limit`
/// holding a level of two or more, shallows that vertex by one and repeats
/// the block starting at its new parent cyclically to the end. Produces the
/// lexicographically greatest canonical sequence smaller than the current
/// one at or before position `p`. `false` when no such `p` exists.
fn step_at(seq: &mut [usize], limit: usize) -> bool {
    let Some(p) = (0..=limit.min(seq.len() - 1)).rev().find(|&k| seq[k] >= 2) else {
        return false;
    };
    let q = (0..p).rev().find(|&k| seq[k] == seq[p] - 1).expect("level p-1 exists");
    let period = p - q;
    for k in p..seq.len() {
        seq[k] = seq[k - period];
    }
    true
}

/// Canonical level sequence of the same tree rooted at the first child
/// (position 1). The first root subtree occupies positions `1..c`. The new
/// root keeps its own child blocks (levels shifted down by one) and gains
/// the old root's remainder as one more block; blocks merge in decreasing
/// order, which preserves canonicality because each block is unchanged
/// inside.
fn reroot_at_first_child(seq: &[usize], c: usize) -> Vec<usize> {
    let n = seq.len();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut start = 2;
    for i in 3..=c {
        if i == c || seq[i] == 2 {
            if start < i {
                blocks.push(seq[start..i].iter().map(|&l| l - 1).collect());
            }
            start = i;
        }
    }
    let mut old_root_block = Vec::with_capacity(n - c + 1);
    old_root_block.push(1);
    old_root_block.extend(seq[c..].iter().map(|&l| l + 1));
    blocks.push(old_root_block);
    blocks.sort_unstable_by(|a, b| b.cmp(a));

    let mut out = Vec::with_capacity(n);
    out.push(0);
    for block in blocks {
        out.extend_from_slice(&block);
    }
    debug_assert_eq!(out.len(), n);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_form;
    use std::collections::BTreeSet;

    // free trees per order, a classical count table
    const FREE_COUNTS: [usize; 12] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];

    #[test]
    fn counts_without_filter() {
        for (i, &expect) in FREE_COUNTS.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                enumerate_free_trees(n, None).count(),
                expect,
                "free tree count at n={n}"
            );
        }
    }

    #[test]
    fn yields_are_pairwise_non_isomorphic() {
        for n in 1..=10 {
            let mut seen = BTreeSet::new();
            let mut total = 0usize;
            for t in enumerate_free_trees(n, None) {
                assert_eq!(t.n(), n);
                assert!(seen.insert(canonical_form(&t).0), "duplicate class at n={n}");
                total += 1;
            }
            assert_eq!(seen.len(), total);
        }
    }

    #[test]
    fn degree_cap_filters() {
        // only the path has maximum degree two
        assert_eq!(enumerate_free_trees(5, Some(2)).count(), 1);
        assert_eq!(enumerate_free_trees(12, Some(2)).count(), 1);
        // cap n-1 changes nothing
        assert_eq!(enumerate_free_trees(8, Some(7)).count(), 23);
        // cap below the path's needs
        assert_eq!(enumerate_free_trees(3, Some(1)).count(), 0);
        assert_eq!(enumerate_free_trees(2, Some(1)).count(), 1);
        assert_eq!(enumerate_free_trees(1, Some(0)).count(), 1);

        for t in enumerate_free_trees(9, Some(3)) {
            assert!(t.max_degree() <= 3);
        }
    }

    #[test]
    fn capped_counts_cross_checked() {
        // per-cap class counts, frozen from an independent generator
        assert_eq!(enumerate_free_trees(13, Some(2)).count(), 1);
        assert_eq!(enumerate_free_trees(13, Some(3)).count(), 265);
        assert_eq!(enumerate_free_trees(13, Some(4)).count(), 802);
        assert_eq!(enumerate_free_trees(14, Some(4)).count(), 1858);
        let exact4: usize = enumerate_free_trees(13, Some(4))
            .filter(|t| t.max_degree() == 4)
            .count();
        assert_eq!(exact4, 537);
        let exact4: usize = enumerate_free_trees(14, Some(4))
            .filter(|t| t.max_degree() == 4)
            .count();
        assert_eq!(exact4, 1306);
    }

    #[test]
    fn capped_equals_posthoc_filter() {
        for n in 2..=11 {
            for cap in 2..n {
                let pruned: Vec<String> = enumerate_free_trees(n, Some(cap))
                    .map(|t| canonical_form(&t).0)
                    .collect();
                let mut filtered: Vec<String> = enumerate_free_trees(n, None)
                    .filter(|t| t.max_degree() <= cap)
                    .map(|t| canonical_form(&t).0)
                    .collect();
                let mut sorted = pruned.clone();
                sorted.sort();
                filtered.sort();
                assert_eq!(sorted, filtered, "n={n} cap={cap}");
                assert_eq!(pruned.len(), sorted.len());
            }
        }
    }

    #[test]
    fn small_inventories() {
        let n4: Vec<Tree> = enumerate_free_trees(4, None).collect();
        assert_eq!(n4.len(), 2);
        let forms: BTreeSet<String> = n4.iter().map(|t| canonical_form(t).0).collect();
        let path4 = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star4 = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(forms.contains(&canonical_form(&path4).0));
        assert!(forms.contains(&canonical_form(&star4).0));
    }

    #[test]
    fn trailing_orders_zero_and_larger() {
        assert_eq!(enumerate_free_trees(0, None).count(), 0);
        // one more row beyond the frozen table
        assert_eq!(enumerate_free_trees(13, None).count(), 1301);
    }
}
