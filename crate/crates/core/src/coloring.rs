//! Recursive k-good coloring of ordered planar point sets.
//!
//! With `k >= 3` colors the set is partitioned into important points and
//! their regions. The important points are colored recursively with the
//! first `k - 2` colors plus a placeholder [`RED`]; the red points are then
//! recolored with the last two colors by the base 2-colorer; finally every
//! region is colored recursively with the `k - 1` colors other than the
//! final color of its important point. Two colors are delegated to a
//! [`TwoColorer`], one color is constant.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::backtrack::prefix_search;
use crate::geom::{OrderedPointSet, PointId};
use crate::partition::build_partition;
use crate::{Error, Result};

pub type Color = u32;

/// Placeholder color used while the important points are being colored.
/// Never part of a user palette and never in a finished coloring.
pub const RED: Color = Color::MAX;

/// Wedge size from which a base 2-coloring must show both colors.
pub const BASE_THRESHOLD: usize = 12;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Total map from point ids to colors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    assignment: BTreeMap<PointId, Color>,
}

impl Coloring {
    pub fn new() -> Self {
        Coloring::default()
    }

    pub fn constant(set: &OrderedPointSet, color: Color) -> Self {
        set.ids().map(|id| (id, color)).collect()
    }

    pub fn get(&self, id: PointId) -> Option<Color> {
        self.assignment.get(&id).copied()
    }

    pub fn color_of(&self, id: PointId) -> Result<Color> {
        self.get(id).ok_or(Error::MissingColor(id))
    }

    pub fn set(&mut self, id: PointId, color: Color) {
        self.assignment.insert(id, color);
    }

    /// Overwrite with every assignment of `other`.
    pub fn merge(&mut self, other: Coloring) {
        self.assignment.extend(other.assignment);
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (PointId, Color)> + '_ {
        self.assignment.iter().map(|(&id, &c)| (id, c))
    }

    pub fn colors_used(&self) -> BTreeSet<Color> {
        self.assignment.values().copied().collect()
    }

    /// Colors of the set's points in time order; fails if one is missing.
    pub fn colors_in_order(&self, set: &OrderedPointSet) -> Result<Vec<Color>> {
        set.ids().map(|id| self.color_of(id)).collect()
    }
}

impl FromIterator<(PointId, Color)> for Coloring {
    fn from_iter<I: IntoIterator<Item = (PointId, Color)>>(iter: I) -> Self {
        Coloring {
            assignment: iter.into_iter().collect(),
        }
    }
}

/// Ordered list of distinct user colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Palette(Vec<Color>);

impl Palette {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::Domain("palette must hold at least one color".into()));
        }
        if colors.contains(&RED) {
            return Err(Error::Domain(format!("color {RED} is reserved")));
        }
        if colors.iter().collect::<BTreeSet<_>>().len() != colors.len() {
            return Err(Error::Domain("palette colors must be distinct".into()));
        }
        Ok(Palette(colors))
    }

    /// The palette `1, 2, ..., k`.
    pub fn first(k: usize) -> Result<Self> {
        Palette::new((1..=k as Color).collect())
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Strategy for 2-coloring a set so that every wedge reaching
/// [`BASE_THRESHOLD`] points shows both colors among its first twelve
/// arrivals. Implementations must be deterministic.
pub trait TwoColorer: Sync {
    fn two_color(&self, set: &OrderedPointSet, a: Color, b: Color) -> Result<Coloring>;
}

/// Exhaustive prefix-pruned backtracking; see [`base_two_color_search`].
#[derive(Clone, Copy, Debug)]
pub struct ExhaustiveTwoColorer {
    pub node_budget: u64,
}

impl Default for ExhaustiveTwoColorer {
    fn default() -> Self {
        ExhaustiveTwoColorer {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl TwoColorer for ExhaustiveTwoColorer {
    fn two_color(&self, set: &OrderedPointSet, a: Color, b: Color) -> Result<Coloring> {
        base_two_color_search(set, a, b, self.node_budget)
    }
}

/// Two-color `set` with `a`, `b` so that every wedge with at least twelve
/// points has both colors among its first twelve.
///
/// Such a coloring always exists, so running out of budget is reported as
/// [`Error::BudgetExhausted`] and an exhausted tree as a contract violation.
pub fn base_two_color_search(
    set: &OrderedPointSet,
    a: Color,
    b: Color,
    node_budget: u64,
) -> Result<Coloring> {
    if node_budget == 0 {
        return Err(Error::Domain("node budget must be positive".into()));
    }
    if a == b {
        return Err(Error::Domain("base colors must differ".into()));
    }
    prefix_search(set, &[a, b], BASE_THRESHOLD, 2, node_budget)?
        .coloring
        .ok_or_else(|| {
            Error::Contract(format!(
                "no 12-good 2-coloring found for a set of {} points",
                set.len()
            ))
        })
}

/// Proven upper bound on the wedge size that forces all `k` colors:
/// `m(1) = 1`, `m(2) = 12`, `m(k) = 144 (m(k-1)^2 - m(k-1)) + 1`.
pub fn threshold(k: u32) -> Result<BigUint> {
    match k {
        0 => Err(Error::Domain("threshold needs k >= 1".into())),
        1 => Ok(BigUint::one()),
        _ => {
            let mut m = BigUint::from(BASE_THRESHOLD);
            for _ in 3..=k {
                m = BigUint::from(144u32) * (&m * &m - &m) + 1u32;
            }
            Ok(m)
        }
    }
}

/// `12^(2^(k-1) + 2^(k-2) - 2)`, the closed-form bound dominating [`threshold`].
pub fn closed_form_bound(k: u32) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::Domain("closed-form bound needs k >= 2".into()));
    }
    if k > 33 {
        return Err(Error::Domain(format!("k = {k} is too large to evaluate")));
    }
    let exponent = (1u64 << (k - 1)) + (1u64 << (k - 2)) - 2;
    let exponent = u32::try_from(exponent)
        .map_err(|_| Error::Domain(format!("k = {k} is too large to evaluate")))?;
    Ok(BigUint::from(12u32).pow(exponent))
}

/// `threshold(k)` as a machine integer, saturating at `usize::MAX`.
pub fn threshold_usize(k: u32) -> Result<usize> {
    let t = threshold(k)?;
    Ok(usize::try_from(&t).unwrap_or(usize::MAX))
}

/// Color `set` with `palette` so that every wedge reaching `threshold(k)`
/// points sees all `k` colors among its first `threshold(k)` arrivals.
pub fn color_set(set: &OrderedPointSet, palette: &Palette, base: &dyn TwoColorer) -> Result<Coloring> {
    color_recursive(set, palette.colors(), base)
}

fn color_recursive(set: &OrderedPointSet, palette: &[Color], base: &dyn TwoColorer) -> Result<Coloring> {
    let k = palette.len();
    if set.is_empty() {
        return Ok(Coloring::new());
    }
    match k {
        0 => Err(Error::Domain("empty palette".into())),
        1 => Ok(Coloring::constant(set, palette[0])),
        2 => base.two_color(set, palette[0], palette[1]),
        _ => {
            let partition = build_partition(set);
            let important = set.subset_ids(partition.important());

            let mut inner: Vec<Color> = palette[..k - 2].to_vec();
            inner.push(RED);
            let mut coloring = color_recursive(&important, &inner, base)?;

            let reds = important.subset(|p| coloring.get(p.id) == Some(RED));
            if !reds.is_empty() {
                let recolored = base.two_color(&reds, palette[k - 2], palette[k - 1])?;
                coloring.merge(recolored);
            }

            let regions: Vec<(OrderedPointSet, Vec<Color>)> = partition
                .important()
                .iter()
                .map(|&p| {
                    let owned = set.subset_ids(partition.owned_set(p)?);
                    let own = coloring.color_of(p)?;
                    let rest: Vec<Color> = palette.iter().copied().filter(|&c| c != own).collect();
                    Ok((owned, rest))
                })
                .filter(|r: &Result<(OrderedPointSet, Vec<Color>)>| r.as_ref().map_or(true, |(s, _)| !s.is_empty()))
                .collect::<Result<_>>()?;
            let colored: Vec<Coloring> = regions
                .par_iter()
                .map(|(owned, rest)| color_recursive(owned, rest, base))
                .collect::<Result<_>>()?;
            for c in colored {
                coloring.merge(c);
            }
            Ok(coloring)
        }
    }
}
