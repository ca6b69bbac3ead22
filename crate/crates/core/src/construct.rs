//! Extremal constructions: the caterpillar family that attains the bound at
//! `n = delta*k + 1` and the one-subdivision family for `n = delta*k + delta`.

use crate::error::{Error, Result};
use crate::tree::Tree;

/// The order-`delta*k+1` caterpillar: path `v_1 .. v_{2k+1}` with `delta - 2`
/// pendant vertices on each even-indexed path vertex. Every even vertex has
/// degree `delta`, interior odd vertices have degree 2, and its penalty
/// against the `delta` certificate is exactly zero.
pub fn tt1_opt(k: usize, delta: usize) -> Result<Tree> {
    if k < 1 {
        return Err(Error::domain(format!("tt1_opt requires k >= 1, got {k}")));
    }
    if delta < 4 {
        return Err(Error::domain(format!(
            "tt1_opt requires delta >= 4, got {delta}"
        )));
    }
    let spine = 2 * k + 1;
    let n = delta * k + 1;
    let mut edges = Vec::with_capacity(n - 1);
    for v in 0..spine - 1 {
        edges.push((v, v + 1));
    }
    let mut next = spine;
    // even path vertices v_2, v_4, ..., v_2k carry labels 1, 3, ..., 2k-1
    for hub in (1..spine).step_by(2) {
        for _ in 0..delta - 2 {
            edges.push((hub, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Tree::from_edges(n, &edges)
}

/// Admissible subdivision positions for `tt0_opt(k, ..)`: odd `i` with
/// `3 <= i <= 2k - 1`. Empty for `k = 1`.
pub fn tt0_opt_positions(k: usize) -> Vec<usize> {
    (3..=2 * k.max(1) - 1).step_by(2).collect()
}

/// A member of the order-`delta*k+delta` family: `tt1_opt(k, delta)` with the
/// path edge `v_position v_{position+1}` subdivided and `delta - 2` pendants
/// attached to the subdivision vertex. The new vertex has degree `delta` and
/// its edge toward `v_{position+1}` is the single `(delta, delta)` edge; the
/// penalty is exactly `F(delta, delta)`.
pub fn tt0_opt(k: usize, delta: usize, position: usize) -> Result<Tree> {
    if k == 1 {
        return Err(Error::domain(
            "family empty for k=1: no odd position in [3, 1]",
        ));
    }
    if k < 1 {
        return Err(Error::domain(format!("tt0_opt requires k >= 1, got {k}")));
    }
    if delta < 4 {
        return Err(Error::domain(format!(
            "tt0_opt requires delta >= 4, got {delta}"
        )));
    }
    if position % 2 == 0 || position < 3 || position > 2 * k - 1 {
        return Err(Error::domain(format!(
            "position must be odd in [3, {}], got {position}",
            2 * k - 1
        )));
    }
    let base = tt1_opt(k, delta)?;
    let n = delta * k + delta;
    // path vertex v_i carries label i-1
    let (a, b) = (position - 1, position);
    let mut edges: Vec<(usize, usize)> = base
        .edges()
        .into_iter()
        .filter(|&e| e != (a, b))
        .collect();
    let w = base.n();
    edges.push((a, w));
    edges.push((w, b));
    let mut next = w + 1;
    for _ in 0..delta - 2 {
        edges.push((w, next));
        next += 1;
    }
    debug_assert_eq!(next, n);
    Tree::from_edges(n, &edges)
}
