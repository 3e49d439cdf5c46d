//! Exact geometric ground: rank-space reduction, projection to an ordered
//! planar set, and wedge containment.
//!
//! Wedge and octant traces depend only on the per-axis orders of the points,
//! so raw rational coordinates are replaced by ranks once, up front. Ties on
//! an axis are broken by ascending input id, which realizes a consistent
//! infinitesimal perturbation without any epsilon arithmetic.

use std::collections::HashSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type PointId = usize;
pub type Rank = u32;
pub type Rational = BigRational;

/// An input point with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPoint3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub id: PointId,
}

impl RawPoint3 {
    pub fn new(id: PointId, x: Rational, y: Rational, z: Rational) -> Self {
        RawPoint3 { x, y, z, id }
    }

    pub fn from_ints(id: PointId, x: i64, y: i64, z: i64) -> Self {
        let r = |v: i64| Rational::from_integer(v.into());
        RawPoint3::new(id, r(x), r(y), r(z))
    }

    pub fn coord(&self, axis: usize) -> &Rational {
        match axis {
            0 => &self.x,
            1 => &self.y,
            _ => &self.z,
        }
    }
}

/// A point in rank space. Within one set every axis holds distinct ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point3 {
    pub x: Rank,
    pub y: Rank,
    pub z: Rank,
    pub id: PointId,
}

impl Point3 {
    pub fn new(id: PointId, x: Rank, y: Rank, z: Rank) -> Self {
        Point3 { x, y, z, id }
    }

    pub fn coord(&self, axis: usize) -> Rank {
        match axis {
            0 => self.x,
            1 => self.y,
            _ => self.z,
        }
    }
}

/// A projected point: planar ranks plus its arrival time (the z-rank).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderedPoint2 {
    pub x: Rank,
    pub y: Rank,
    pub time: Rank,
    pub id: PointId,
}

impl OrderedPoint2 {
    pub fn new(id: PointId, x: Rank, y: Rank, time: Rank) -> Self {
        OrderedPoint2 { x, y, time, id }
    }

    /// Both coordinates of `self` strictly below those of `other`.
    pub fn is_sw_of(&self, other: &OrderedPoint2) -> bool {
        self.x < other.x && self.y < other.y
    }

    pub fn is_ne_of(&self, other: &OrderedPoint2) -> bool {
        other.is_sw_of(self)
    }
}

/// Closed wedge `{p : p.x <= a, p.y <= b}`, a translate of the quadrant
/// containing `(-inf, -inf)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WedgeApex {
    pub a: Rank,
    pub b: Rank,
}

impl WedgeApex {
    pub fn new(a: Rank, b: Rank) -> Self {
        WedgeApex { a, b }
    }

    pub fn contains(&self, p: &OrderedPoint2) -> bool {
        p.x <= self.a && p.y <= self.b
    }
}

/// Closed octant `{p : p <= apex}` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctantApex {
    pub a: [Rational; 3],
}

impl OctantApex {
    pub fn new(a1: Rational, a2: Rational, a3: Rational) -> Self {
        OctantApex { a: [a1, a2, a3] }
    }

    pub fn from_ints(a1: i64, a2: i64, a3: i64) -> Self {
        let r = |v: i64| Rational::from_integer(v.into());
        OctantApex::new(r(a1), r(a2), r(a3))
    }

    pub fn contains(&self, p: &RawPoint3) -> bool {
        p.x <= self.a[0] && p.y <= self.a[1] && p.z <= self.a[2]
    }
}

/// Planar points with distinct x-ranks, distinct y-ranks and strictly
/// increasing arrival times, stored in time order.
///
/// A set produced by [`project`] has times exactly `1..=n`. Subsets taken
/// with [`OrderedPointSet::subset`] keep their original ranks and times.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedPointSet {
    points: Vec<OrderedPoint2>,
}

impl OrderedPointSet {
    pub fn new(mut points: Vec<OrderedPoint2>) -> Result<Self> {
        points.sort_by_key(|p| p.time);
        check_distinct(points.iter().map(|p| p.x), "x")?;
        check_distinct(points.iter().map(|p| p.y), "y")?;
        check_distinct(points.iter().map(|p| p.time), "time")?;
        check_distinct(points.iter().map(|p| p.id), "id")?;
        Ok(OrderedPointSet { points })
    }

    /// Point `i` gets x-rank `xs[i]`, y-rank `ys[i]`, time `i + 1` and id `i`.
    pub fn from_ranks(xs: &[Rank], ys: &[Rank]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidPointSet(format!(
                "{} x-ranks but {} y-ranks",
                xs.len(),
                ys.len()
            )));
        }
        let points = xs
            .iter()
            .zip(ys)
            .enumerate()
            .map(|(i, (&x, &y))| OrderedPoint2::new(i, x, y, i as Rank + 1))
            .collect();
        OrderedPointSet::new(points)
    }

    pub fn points(&self) -> &[OrderedPoint2] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, OrderedPoint2> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = PointId> + '_ {
        self.points.iter().map(|p| p.id)
    }

    pub fn find(&self, id: PointId) -> Option<&OrderedPoint2> {
        self.points.iter().find(|p| p.id == id)
    }

    /// The time-ordered subsequence of points satisfying `keep`.
    pub fn subset(&self, mut keep: impl FnMut(&OrderedPoint2) -> bool) -> OrderedPointSet {
        OrderedPointSet {
            points: self.points.iter().filter(|p| keep(p)).copied().collect(),
        }
    }

    /// The time-ordered subsequence of points whose id is in `ids`.
    pub fn subset_ids(&self, ids: &[PointId]) -> OrderedPointSet {
        let wanted: HashSet<PointId> = ids.iter().copied().collect();
        self.subset(|p| wanted.contains(&p.id))
    }

    /// The time prefix `P_t`.
    pub fn prefix(&self, t: Rank) -> &[OrderedPoint2] {
        let end = self.points.partition_point(|p| p.time <= t);
        &self.points[..end]
    }

    /// Sorted x-ranks present in the set.
    pub fn x_ranks(&self) -> Vec<Rank> {
        let mut xs: Vec<Rank> = self.points.iter().map(|p| p.x).collect();
        xs.sort_unstable();
        xs
    }

    pub fn y_ranks(&self) -> Vec<Rank> {
        let mut ys: Vec<Rank> = self.points.iter().map(|p| p.y).collect();
        ys.sort_unstable();
        ys
    }

    /// Lift back to rank space, using the arrival time as the z-rank.
    pub fn to_point3(&self) -> Vec<Point3> {
        self.points
            .iter()
            .map(|p| Point3::new(p.id, p.x, p.y, p.time))
            .collect()
    }
}

impl<'a> IntoIterator for &'a OrderedPointSet {
    type Item = &'a OrderedPoint2;
    type IntoIter = std::slice::Iter<'a, OrderedPoint2>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

fn check_distinct<T: Eq + std::hash::Hash + std::fmt::Debug>(
    values: impl Iterator<Item = T>,
    what: &str,
) -> Result<()> {
    let mut seen = HashSet::new();
    for v in values {
        if !seen.insert(v) {
            return Err(Error::InvalidPointSet(format!("repeated {what} value")));
        }
    }
    Ok(())
}

/// 1-based ranks of `keys`; the smallest key gets rank 1. Keys must be totally
/// ordered without ties (callers append the id to break them).
pub(crate) fn ranks_of<K: Ord>(keys: &[K]) -> Vec<Rank> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&i, &j| keys[i].cmp(&keys[j]));
    let mut ranks = vec![0; keys.len()];
    for (r, i) in order.into_iter().enumerate() {
        ranks[i] = r as Rank + 1;
    }
    ranks
}

/// Replace coordinates by per-axis order statistics. Ties on an axis go to
/// the smaller id first. Output is in input order.
pub fn rank_reduce(points: &[RawPoint3]) -> Vec<Point3> {
    let axis_ranks = |axis: usize| {
        let keys: Vec<(&Rational, PointId)> = points.iter().map(|p| (p.coord(axis), p.id)).collect();
        ranks_of(&keys)
    };
    let (xs, ys, zs) = (axis_ranks(0), axis_ranks(1), axis_ranks(2));
    points
        .iter()
        .enumerate()
        .map(|(i, p)| Point3::new(p.id, xs[i], ys[i], zs[i]))
        .collect()
}

/// Project rank-space points to the `z = 0` plane, keeping the z-order as
/// arrival time `1..=n`.
pub fn project(points: &[Point3]) -> Result<OrderedPointSet> {
    check_distinct(points.iter().map(|p| p.x), "x")?;
    check_distinct(points.iter().map(|p| p.y), "y")?;
    check_distinct(points.iter().map(|p| p.z), "z")?;
    let zs: Vec<Rank> = points.iter().map(|p| p.z).collect();
    let times = ranks_of(&zs);
    let projected = points
        .iter()
        .zip(times)
        .map(|(p, t)| OrderedPoint2::new(p.id, p.x, p.y, t))
        .collect();
    OrderedPointSet::new(projected)
}

/// Points of `P_t` inside the closed wedge, in time order.
pub fn wedge_contents(set: &OrderedPointSet, apex: WedgeApex, t: Rank) -> Vec<OrderedPoint2> {
    set.prefix(t).iter().filter(|p| apex.contains(p)).copied().collect()
}

/// Every apex `(a, b)` with `a` an x-rank and `b` a y-rank of the set.
///
/// Any wedge's trace on the set equals the trace of the canonical apex whose
/// coordinates are snapped down to the largest ranks not exceeding them.
pub fn canonical_apexes(set: &OrderedPointSet) -> Vec<WedgeApex> {
    let ys = set.y_ranks();
    set.x_ranks()
        .into_iter()
        .flat_map(|a| ys.iter().map(move |&b| WedgeApex::new(a, b)))
        .collect()
}

/// The smallest wedge containing both points.
pub fn min_wedge(p: &OrderedPoint2, q: &OrderedPoint2) -> WedgeApex {
    WedgeApex::new(p.x.max(q.x), p.y.max(q.y))
}
