// SPDX-License-Identifier: Apache-2.0

use super::FusionRing;
use crate::exactnum::{Scalar, QZ};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature<I: Scalar> {
    weight: Option<QZ<I>>,
    self_dual: bool,
    is_unit: bool,
    // sorted multiset of Σ_c N(x, y, c) over y
    row_sizes: Vec<u64>,
    // sorted multiset of N(x, y, c) over all y, c
    entries: Vec<u64>,
    square_self: u64,
}

fn signature<I: Scalar>(r: &FusionRing<I>, x: usize, match_weights: bool) -> Signature<I> {
    let n = r.len();
    let mut row_sizes: Vec<u64> = (0..n).map(|y| r.product_size(x, y)).collect();
    row_sizes.sort_unstable();
    let mut entries: Vec<u64> = (0..n)
        .flat_map(|y| r.fuse(x, y).iter().map(|&(_, m)| m))
        .collect();
    entries.sort_unstable();
    Signature {
        weight: match_weights.then(|| r.weight(x).clone()),
        self_dual: r.dual(x) == x,
        is_unit: r.unit() == x,
        row_sizes,
        entries,
        square_self: r.n(x, x, x),
    }
}

/// A bijection `f` with `N1(x, y, z) = N2(f x, f y, f z)` that preserves
/// unit and duals (and weights when `match_weights`), or `None`.
///
/// `result[x]` is the image of label `x` of `r1`.
pub fn ring_isomorphic<I: Scalar>(
    r1: &FusionRing<I>,
    r2: &FusionRing<I>,
    match_weights: bool,
) -> Option<Vec<usize>> {
    let n = r1.len();
    if n != r2.len() {
        return None;
    }
    let s1: Vec<Signature<I>> = (0..n).map(|x| signature(r1, x, match_weights)).collect();
    let s2: Vec<Signature<I>> = (0..n).map(|x| signature(r2, x, match_weights)).collect();
    {
        let (mut a, mut b) = (s1.clone(), s2.clone());
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| s1[x] == s2[y]).collect())
        .collect();

    // Most constrained labels first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (candidates[x].len(), x));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(r1, r2, &order, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn consistent<I: Scalar>(
    r1: &FusionRing<I>,
    r2: &FusionRing<I>,
    map: &[usize],
    assigned: &[usize],
    x: usize,
) -> bool {
    let fx = map[x];
    let d = r1.dual(x);
    if map[d] != usize::MAX && map[d] != r2.dual(fx) {
        return false;
    }
    for &y in assigned {
        for &z in assigned {
            let (fy, fz) = (map[y], map[z]);
            if r1.n(x, y, z) != r2.n(fx, fy, fz)
                || r1.n(y, x, z) != r2.n(fy, fx, fz)
                || r1.n(y, z, x) != r2.n(fy, fz, fx)
            {
                return false;
            }
        }
    }
    true
}

fn extend<I: Scalar>(
    r1: &FusionRing<I>,
    r2: &FusionRing<I>,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let assigned: Vec<usize> = order[..=depth].to_vec();
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(r1, r2, map, &assigned, x)
            && extend(r1, r2, order, candidates, depth + 1, map, used)
        {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}
