//! Slow, independent cross-checks for the production enumerator: labeled
//! tree generation from Prüfer sequences deduplicated by canonical form, the
//! labeled-count identity (every class's orbit sizes must sum to n^(n-2)),
//! and the classical counting recurrences for rooted and free trees.

use crate::canonical::{automorphism_order, canonical_form};
use crate::error::{Error, Result};
use crate::tree::Tree;
use num::bigint::BigUint;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::collections::BinaryHeap;

/// Decodes a Prüfer sequence into the tree on `seq.len() + 2` vertices.
/// Every entry must be a valid vertex label.
pub fn prufer_decode(seq: &[usize]) -> Result<Tree> {
    let n = seq.len() + 2;
    for &s in seq {
        if s >= n {
            return Err(Error::domain(format!(
                "Prüfer entry {s} out of range for n={n}"
            )));
        }
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let std::cmp::Reverse(u) = leaves.pop().expect("a leaf remains");
        edges.push((u, s));
        degree[u] -= 1;
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(u) = leaves.pop().expect("two vertices remain");
    let std::cmp::Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    Tree::from_edges(n, &edges)
}

/// One entry per isomorphism class of trees on `n` vertices, found by
/// decoding all `n^(n-2)` Prüfer sequences: a representative and the number
/// of labeled trees in the class. Feasible only for small `n`; this is the
/// oracle the fast generator is validated against.
pub fn prufer_classes(n: usize) -> Vec<(Tree, BigUint)> {
    assert!(n >= 1, "prufer_classes needs n >= 1");
    if n == 1 {
        return vec![(Tree::from_edges(1, &[]).unwrap(), BigUint::one())];
    }
    if n == 2 {
        return vec![(Tree::from_edges(2, &[(0, 1)]).unwrap(), BigUint::one())];
    }
    let mut classes: BTreeMap<String, (Tree, BigUint)> = BTreeMap::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let tree = prufer_decode(&seq).expect("in-range sequence decodes");
        let key = canonical_form(&tree).0;
        classes
            .entry(key)
            .and_modify(|(_, c)| *c += 1u32)
            .or_insert((tree, BigUint::one()));

        // odometer over base-n digits
        let mut pos = 0;
        loop {
            if pos == seq.len() {
                let out = classes.into_values().collect();
                return out;
            }
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
    }
}

/// Sums `n! / |Aut(t)|` (the number of labeled trees in each class) over the
/// given representatives and returns it alongside `n^(n-2)`. Equality proves
/// the collection hits every isomorphism class exactly once.
pub fn labeled_count_identity<'a>(
    n: usize,
    classes: impl IntoIterator<Item = &'a Tree>,
) -> (BigUint, BigUint) {
    let factorial = (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k);
    let mut total = BigUint::zero();
    for tree in classes {
        assert_eq!(tree.n(), n, "class of the wrong order");
        let aut = automorphism_order(tree);
        let orbit = &factorial / &aut;
        debug_assert_eq!(&orbit * &aut, factorial, "|Aut| divides n!");
        total += orbit;
    }
    let cayley = if n >= 2 {
        BigUint::from(n).pow(n as u32 - 2)
    } else {
        BigUint::one()
    };
    (total, cayley)
}

/// Rooted tree counts `a(1..=n_max)` from the Euler-transform recurrence
/// `(n-1) a(n) = sum over k of (sum of d*a(d) over d | k) * a(n-k)`.
pub fn rooted_tree_counts(n_max: usize) -> Vec<BigUint> {
    let mut a: Vec<BigUint> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        if n == 1 {
            a.push(BigUint::one());
            continue;
        }
        let mut acc = BigUint::zero();
        for k in 1..n {
            let mut divisor_sum = BigUint::zero();
            for d in 1..=k {
                if k % d == 0 {
                    divisor_sum += BigUint::from(d) * &a[d - 1];
                }
            }
            acc += divisor_sum * &a[n - k - 1];
        }
        let n_minus_1 = BigUint::from(n - 1);
        debug_assert!((&acc % &n_minus_1).is_zero());
        a.push(acc / n_minus_1);
    }
    a
}

/// Free (unrooted) tree counts `t(1..=n_max)` from rooted counts by the
/// dissimilarity identity: `2 t(n) = 2 a(n) - sum a(i) a(n-i) + [n even] a(n/2)`.
pub fn free_tree_counts(n_max: usize) -> Vec<BigUint> {
    let a = rooted_tree_counts(n_max);
    let mut t = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut twice: BigUint = &a[n - 1] * 2u32;
        let mut cross = BigUint::zero();
        for i in 1..n {
            cross += &a[i - 1] * &a[n - i - 1];
        }
        if n % 2 == 0 {
            twice += &a[n / 2 - 1];
        }
        assert!(twice >= cross, "dissimilarity identity went negative");
        twice -= cross;
        debug_assert!((&twice % 2u32).is_zero());
        t.push(twice / 2u32);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_free_trees;
    use std::collections::BTreeSet;

    #[test]
    fn decode_small_sequences() {
        // [] on two vertices: the edge
        let t = prufer_decode(&[]).unwrap();
        assert_eq!(t.n(), 2);
        // constant sequence: a star at that vertex
        let t = prufer_decode(&[3, 3, 3]).unwrap();
        assert_eq!(t.degree(3), 4);
        assert_eq!(t.max_degree(), 4);
        // out of range rejected
        assert!(prufer_decode(&[5, 0]).is_err());
    }

    #[test]
    fn decode_is_bijective_on_labeled_trees() {
        // n=5: all 125 sequences decode to distinct labeled trees
        let mut seen = BTreeSet::new();
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    let t = prufer_decode(&[a, b, c]).unwrap();
                    assert!(seen.insert(t.edges()));
                }
            }
        }
        assert_eq!(seen.len(), 125);
    }

    #[test]
    fn classes_match_fast_generator() {
        for n in 1..=8 {
            let slow: BTreeSet<String> = prufer_classes(n)
                .iter()
                .map(|(t, _)| canonical_form(t).0)
                .collect();
            let fast: BTreeSet<String> = enumerate_free_trees(n, None)
                .map(|t| canonical_form(&t).0)
                .collect();
            assert_eq!(slow, fast, "class sets differ at n={n}");
        }
    }

    #[test]
    fn orbit_sizes_sum_to_cayley() {
        for n in 2..=8 {
            let classes = prufer_classes(n);
            // the decoder already counted each class's labeled trees
            let direct = classes
                .iter()
                .fold(BigUint::zero(), |acc, (_, c)| acc + c);
            assert_eq!(direct, BigUint::from(n).pow(n as u32 - 2));
            // and the automorphism formula agrees
            let trees: Vec<Tree> = classes.into_iter().map(|(t, _)| t).collect();
            let (total, cayley) = labeled_count_identity(n, &trees);
            assert_eq!(total, cayley, "orbit identity at n={n}");
        }
    }

    #[test]
    fn per_class_orbit_matches_automorphisms() {
        let factorial = (1u64..=7).fold(BigUint::one(), |acc, k| acc * k);
        for (tree, count) in prufer_classes(7) {
            assert_eq!(count * automorphism_order(&tree), factorial);
        }
    }

    #[test]
    fn counting_recurrences() {
        let rooted = rooted_tree_counts(10);
        let expect: Vec<u64> = vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719];
        assert_eq!(
            rooted,
            expect.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>()
        );

        let free = free_tree_counts(18);
        let expect: Vec<u64> = vec![
            1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867,
        ];
        assert_eq!(
            free,
            expect.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn generator_matches_recurrence_beyond_the_frozen_table() {
        let free = free_tree_counts(14);
        assert_eq!(
            enumerate_free_trees(14, None).count(),
            usize::try_from(&free[13]).unwrap()
        );
    }
}
