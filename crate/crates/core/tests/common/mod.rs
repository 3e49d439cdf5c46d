//! Independent oracles shared by the integration tests. Nothing here calls
//! into the code paths it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use octant_cover::coloring::{Color, Coloring};
use octant_cover::geom::{OrderedPointSet, PointId};

/// Every apex in `[0, n]^2` and every time `0..=n`: a wedge holding at least
/// `m` points of `P_t` must show `d` colors. Returns the failing
/// `(a, b, t)` triples.
pub fn naive_verify(set: &OrderedPointSet, coloring: &Coloring, m: usize, d: usize) -> Vec<(u32, u32, u32)> {
    let n = set.len() as u32;
    let max_rank = set.iter().map(|p| p.x.max(p.y)).max().unwrap_or(0);
    let mut bad = Vec::new();
    for a in 0..=max_rank.max(n) {
        for b in 0..=max_rank.max(n) {
            for t in 0..=set.iter().map(|p| p.time).max().unwrap_or(0) {
                let inside: Vec<Color> = set
                    .iter()
                    .filter(|p| p.time <= t && p.x <= a && p.y <= b)
                    .map(|p| coloring.get(p.id).unwrap())
                    .collect();
                if inside.len() >= m && inside.iter().collect::<BTreeSet<_>>().len() < d {
                    bad.push((a, b, t));
                }
            }
        }
    }
    bad
}

/// Pairs `{p, q}` such that some apex in `[0, max rank]^2` at some time
/// holds exactly `p` and `q`.
pub fn brute_force_edges(set: &OrderedPointSet) -> BTreeSet<(PointId, PointId)> {
    let max_rank = set.iter().map(|p| p.x.max(p.y)).max().unwrap_or(0);
    let mut edges = BTreeSet::new();
    for a in 0..=max_rank {
        for b in 0..=max_rank {
            let mut inside: Vec<PointId> = Vec::new();
            for p in set.iter() {
                if p.x <= a && p.y <= b {
                    inside.push(p.id);
                    if inside.len() == 2 {
                        edges.insert((inside[0].min(inside[1]), inside[0].max(inside[1])));
                    }
                    if inside.len() > 2 {
                        break;
                    }
                }
            }
        }
    }
    edges
}

/// `m(k)` evaluated in plain `u128` arithmetic (valid for `k <= 4`).
pub fn threshold_u128(k: u32) -> u128 {
    let mut m: u128 = 12;
    if k == 1 {
        return 1;
    }
    for _ in 3..=k {
        m = 144 * (m * m - m) + 1;
    }
    m
}

/// `12^e` by repeated multiplication.
pub fn pow12(e: u32) -> u128 {
    (0..e).fold(1u128, |acc, _| acc * 12)
}

/// Triangle membership from its three vertices by orientation signs:
/// corner `(cu, cv)`, `(cu - s, cv)` and `(cu, cv - s)`.
pub fn triangle_contains(cu: &BigRational, cv: &BigRational, s: &BigRational, u: &BigRational, v: &BigRational) -> bool {
    let verts = [
        (cu.clone(), cv.clone()),
        (cu - s, cv.clone()),
        (cu.clone(), cv - s),
    ];
    let orient = |(ax, ay): &(BigRational, BigRational), (bx, by): &(BigRational, BigRational)| {
        (bx - ax) * (v - ay) - (by - ay) * (u - ax)
    };
    let zero = BigRational::from_integer(0.into());
    let o: Vec<BigRational> = (0..3).map(|i| orient(&verts[i], &verts[(i + 1) % 3])).collect();
    o.iter().all(|x| *x >= zero) || o.iter().all(|x| *x <= zero)
}

/// Exhaustive check: does some coloring with `k` colors pass `(m, d)`?
pub fn brute_force_feasible(set: &OrderedPointSet, k: u32, m: usize, d: usize) -> bool {
    let n = set.len() as u32;
    (0..k.pow(n)).any(|mut code| {
        let c: Coloring = set
            .ids()
            .map(|id| {
                let col = code % k + 1;
                code /= k;
                (id, col)
            })
            .collect();
        naive_verify(set, &c, m, d).is_empty()
    })
}
