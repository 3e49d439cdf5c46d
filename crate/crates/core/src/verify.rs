//! Exhaustive checkers for the wedge condition.
//!
//! `verify` works on the ordered planar set; `verify3d` works directly on
//! rank-space points with octants and shares no traversal code with it, so
//! the two can be compared against each other.
//!
//! Only the first `m` arrivals of each wedge are inspected: later contents
//! are supersets, so the size-`m` prefix is the binding case.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::geom::{canonical_apexes, OrderedPointSet, Point3, PointId, Rank, WedgeApex};
use crate::{Error, Result};

/// A wedge whose first `m` arrivals carry fewer than `d` colors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub apex: WedgeApex,
    /// Arrival time of the `m`-th point of the wedge.
    pub time: Rank,
    /// Ids of the first `m` arrivals.
    pub witness: Vec<PointId>,
    pub distinct_colors_found: usize,
}

/// An octant holding at least `m` points but fewer than `d` colors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation3 {
    pub apex: [Rank; 3],
    pub witness: Vec<PointId>,
    pub distinct_colors_found: usize,
}

fn check_params(m: usize, d: usize) -> Result<()> {
    if d == 0 || m < d {
        return Err(Error::Domain(format!("need m >= d >= 1, got m={m}, d={d}")));
    }
    Ok(())
}

fn distinct(colors: impl Iterator<Item = Color>) -> usize {
    colors.collect::<BTreeSet<_>>().len()
}

/// All violations of the `(m, d)` wedge condition, sorted by apex.
pub fn verify(set: &OrderedPointSet, coloring: &Coloring, m: usize, d: usize) -> Result<Vec<Violation>> {
    check_params(m, d)?;
    let colors = coloring.colors_in_order(set)?;
    if set.len() < m {
        return Ok(Vec::new());
    }
    let pts = set.points();
    let ys = set.y_ranks();
    let mut out: Vec<Violation> = set
        .x_ranks()
        .par_iter()
        .flat_map_iter(|&a| {
            let left: Vec<usize> = (0..pts.len()).filter(|&i| pts[i].x <= a).collect();
            let mut found = Vec::new();
            if left.len() < m {
                return found;
            }
            for &b in &ys {
                let first: Vec<usize> = left.iter().copied().filter(|&i| pts[i].y <= b).take(m).collect();
                if first.len() < m {
                    continue;
                }
                let k = distinct(first.iter().map(|&i| colors[i]));
                if k < d {
                    found.push(Violation {
                        apex: WedgeApex::new(a, b),
                        time: pts[first[m - 1]].time,
                        witness: first.iter().map(|&i| pts[i].id).collect(),
                        distinct_colors_found: k,
                    });
                }
            }
            found
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All octant violations over rank-space points, sorted by apex.
pub fn verify3d(points: &[Point3], coloring: &Coloring, m: usize, d: usize) -> Result<Vec<Violation3>> {
    check_params(m, d)?;
    for p in points {
        coloring.color_of(p.id)?;
    }
    let axis = |f: fn(&Point3) -> Rank| points.iter().map(f).collect::<BTreeSet<Rank>>();
    let (xs, ys, zs) = (axis(|p| p.x), axis(|p| p.y), axis(|p| p.z));
    let mut out = Vec::new();
    for &a in &xs {
        for &b in &ys {
            for &c in &zs {
                let mut inside: Vec<&Point3> =
                    points.iter().filter(|p| p.x <= a && p.y <= b && p.z <= c).collect();
                if inside.len() < m {
                    continue;
                }
                let k = distinct(inside.iter().filter_map(|p| coloring.get(p.id)));
                if k < d {
                    inside.sort_by_key(|p| p.id);
                    out.push(Violation3 {
                        apex: [a, b, c],
                        witness: inside.iter().map(|p| p.id).collect(),
                        distinct_colors_found: k,
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Smallest `m` in `[d, n + 1]` for which `verify(set, coloring, m, d)`
/// passes; `n + 1` means the coloring passes only vacuously.
pub fn empirical_min_threshold(set: &OrderedPointSet, coloring: &Coloring, d: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::Domain("d must be positive".into()));
    }
    let colors = coloring.colors_in_order(set)?;
    let pts = set.points();
    let needed = canonical_apexes(set)
        .par_iter()
        .map(|apex| {
            let mut seen = BTreeSet::new();
            let mut size = 0;
            for (p, &c) in pts.iter().zip(&colors) {
                if apex.contains(p) {
                    size += 1;
                    seen.insert(c);
                    if seen.len() >= d {
                        return size;
                    }
                }
            }
            size + 1
        })
        .max()
        .unwrap_or(0);
    Ok(needed.max(d))
}
