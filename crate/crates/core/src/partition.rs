//! Split an ordered planar set into important points and their regions.
//!
//! Points are processed in arrival order. A point is important when no
//! earlier important point lies strictly SW of it; otherwise it belongs to
//! the region of the earliest such important point. The regions themselves
//! (the staircase-shaped remainder of the NE quadrant of each important
//! point) are never materialized: the owner rule decides membership exactly.

use std::collections::BTreeMap;

use crate::geom::{OrderedPointSet, PointId};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    important: Vec<PointId>,
    owner: BTreeMap<PointId, PointId>,
    owned: BTreeMap<PointId, Vec<PointId>>,
}

impl Partition {
    /// Important points in time order.
    pub fn important(&self) -> &[PointId] {
        &self.important
    }

    pub fn is_important(&self, id: PointId) -> bool {
        self.owned.contains_key(&id)
    }

    /// The important point whose region holds `id`; `None` for important points.
    pub fn owner(&self, id: PointId) -> Option<PointId> {
        self.owner.get(&id).copied()
    }

    pub fn owners(&self) -> &BTreeMap<PointId, PointId> {
        &self.owner
    }

    /// The points of the region of `p`, in time order.
    pub fn owned_set(&self, p: PointId) -> Result<&[PointId]> {
        self.owned
            .get(&p)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownPoint(p))
    }
}

pub fn build_partition(set: &OrderedPointSet) -> Partition {
    // (index into set, id) of important points, in time order
    let mut important: Vec<usize> = Vec::new();
    let mut owner = BTreeMap::new();
    let mut owned: BTreeMap<PointId, Vec<PointId>> = BTreeMap::new();
    let pts = set.points();
    for (i, q) in pts.iter().enumerate() {
        match important.iter().map(|&j| &pts[j]).find(|p| p.is_sw_of(q)) {
            Some(p) => {
                owner.insert(q.id, p.id);
                owned.entry(p.id).or_default().push(q.id);
            }
            None => {
                important.push(i);
                owned.insert(q.id, Vec::new());
            }
        }
    }
    Partition {
        important: important.into_iter().map(|i| pts[i].id).collect(),
        owner,
        owned,
    }
}
