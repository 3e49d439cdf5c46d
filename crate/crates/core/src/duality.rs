//! Primal side: decompose covers by octant translates (and by homothets of a
//! right triangle) into `k` coverings.
//!
//! A target `x` lies in the octant with apex `a` iff `-a` lies in the
//! octant with apex `-x`. The negated apexes are colored as a point set;
//! each color class of octants then covers every target whose coverage
//! reaches the coloring threshold.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::coloring::{color_set, threshold, Color, Palette, TwoColorer};
use crate::geom::{project, ranks_of, OctantApex, Point3, Rank, RawPoint3, Rational};
use crate::{Error, Result};

/// A finite family of octant translates and a finite set of target points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInstance {
    pub octants: Vec<OctantApex>,
    pub targets: Vec<RawPoint3>,
}

impl CoverInstance {
    pub fn new(octants: Vec<OctantApex>, targets: Vec<RawPoint3>) -> Result<Self> {
        if octants.is_empty() {
            return Err(Error::Domain("cover has no octants".into()));
        }
        if targets.is_empty() {
            return Err(Error::Domain("cover has no targets".into()));
        }
        Ok(CoverInstance { octants, targets })
    }
}

/// Class (color `1..=k`) of every octant, indexed like `CoverInstance::octants`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub class_of: Vec<Color>,
}

impl Decomposition {
    /// Classes holding at least one octant that contains target `t`.
    pub fn classes_covering(&self, cover: &CoverInstance, t: usize) -> BTreeSet<Color> {
        let x = &cover.targets[t];
        cover
            .octants
            .iter()
            .zip(&self.class_of)
            .filter(|(o, _)| o.contains(x))
            .map(|(_, &c)| c)
            .collect()
    }

    /// Targets not covered by every class `1..=k`.
    pub fn deficient_targets(&self, cover: &CoverInstance, k: usize) -> Vec<usize> {
        (0..cover.targets.len())
            .filter(|&t| self.classes_covering(cover, t).len() < k)
            .collect()
    }

    /// Smallest `c` such that every target covered at least `c` times is
    /// covered by all `k` classes.
    pub fn empirical_min_coverage(&self, cover: &CoverInstance, k: usize) -> usize {
        self.deficient_targets(cover, k)
            .into_iter()
            .map(|t| coverage(cover, &cover.targets[t]) + 1)
            .max()
            .unwrap_or(1)
    }
}

fn coverage(cover: &CoverInstance, x: &RawPoint3) -> usize {
    cover.octants.iter().filter(|o| o.contains(x)).count()
}

/// Number of octants containing target `target` (closed containment).
pub fn coverage_count(cover: &CoverInstance, target: usize) -> Result<usize> {
    let x = cover
        .targets
        .get(target)
        .ok_or_else(|| Error::Domain(format!("no target with index {target}")))?;
    Ok(coverage(cover, x))
}

/// The negated apexes, with `id` equal to the octant index.
pub fn dual_points(cover: &CoverInstance) -> Vec<RawPoint3> {
    cover
        .octants
        .iter()
        .enumerate()
        .map(|(i, o)| RawPoint3::new(i, -o.a[0].clone(), -o.a[1].clone(), -o.a[2].clone()))
        .collect()
}

/// Dual points and negated targets reduced to one common rank space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualRanks {
    /// One point per octant, `id` = octant index.
    pub points: Vec<Point3>,
    /// Rank-space octant apex for every target.
    pub target_apexes: Vec<[Rank; 3]>,
}

/// Rank-reduce the dual points together with the negated targets. On a tie
/// the dual point is ranked below the target, so every closed containment
/// `x <= a` survives as `rank(-a) <= rank(-x)`.
pub fn joint_rank_reduce(cover: &CoverInstance) -> DualRanks {
    let duals = dual_points(cover);
    let n = duals.len();
    let mut ranks: Vec<Vec<Rank>> = Vec::with_capacity(3);
    for axis in 0..3 {
        let mut keys: Vec<(Rational, u8, usize)> = duals
            .iter()
            .map(|p| (p.coord(axis).clone(), 0, p.id))
            .collect();
        keys.extend(
            cover
                .targets
                .iter()
                .enumerate()
                .map(|(i, x)| (-x.coord(axis).clone(), 1, i)),
        );
        ranks.push(ranks_of(&keys));
    }
    let points = (0..n)
        .map(|i| Point3::new(i, ranks[0][i], ranks[1][i], ranks[2][i]))
        .collect();
    let target_apexes = (0..cover.targets.len())
        .map(|t| [ranks[0][n + t], ranks[1][n + t], ranks[2][n + t]])
        .collect();
    DualRanks { points, target_apexes }
}

/// Split the octants into `k` classes. Every target whose coverage reaches
/// `threshold(k)` is checked to be covered by all classes before returning.
pub fn decompose_cover(cover: &CoverInstance, k: usize, base: &dyn TwoColorer) -> Result<Decomposition> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    if cover.octants.is_empty() {
        return Err(Error::Domain("cover has no octants".into()));
    }
    let dual = joint_rank_reduce(cover);
    let set = project(&dual.points)?;
    let coloring = color_set(&set, &Palette::first(k)?, base)?;
    let class_of = (0..cover.octants.len())
        .map(|i| coloring.color_of(i))
        .collect::<Result<Vec<_>>>()?;
    let decomposition = Decomposition { class_of };

    let guarantee = threshold(k as u32)?;
    for t in decomposition.deficient_targets(cover, k) {
        let c = coverage(cover, &cover.targets[t]);
        if BigUint::from(c) >= guarantee && !guarantee.is_zero() {
            return Err(Error::Contract(format!(
                "target {t} is covered {c} times but misses a class"
            )));
        }
    }
    Ok(decomposition)
}

/// Homothet of `T0 = {(u, v) : u <= 0, v <= 0, u + v >= -1}` with its
/// right-angle corner at `(corner_u, corner_v)` and ratio `scale`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleHomothet {
    pub corner_u: Rational,
    pub corner_v: Rational,
    pub scale: Rational,
}

impl TriangleHomothet {
    pub fn new(corner_u: Rational, corner_v: Rational, scale: Rational) -> Result<Self> {
        check_scale(&scale)?;
        Ok(TriangleHomothet {
            corner_u,
            corner_v,
            scale,
        })
    }

    pub fn contains(&self, u: &Rational, v: &Rational) -> bool {
        u <= &self.corner_u
            && v <= &self.corner_v
            && u + v >= &self.corner_u + &self.corner_v - &self.scale
    }
}

fn check_scale(scale: &Rational) -> Result<()> {
    if *scale <= Rational::zero() {
        return Err(Error::Domain(format!("homothety ratio must be positive, got {scale}")));
    }
    Ok(())
}

/// The octant whose trace on the plane `x + y + z = 0` is the homothet:
/// `(u, v)` lies in `t` iff `(u, v, -u - v)` lies in the octant.
pub fn triangle_to_octant(t: &TriangleHomothet) -> Result<OctantApex> {
    check_scale(&t.scale)?;
    let c = &t.scale - &t.corner_u - &t.corner_v;
    Ok(OctantApex::new(t.corner_u.clone(), t.corner_v.clone(), c))
}

/// Lift a planar point onto the chart plane `x + y + z = 0`.
pub fn lift(id: usize, u: &Rational, v: &Rational) -> RawPoint3 {
    RawPoint3::new(id, u.clone(), v.clone(), -(u + v))
}

/// Split a family of homothets into `k` classes, each covering every target
/// whose coverage reaches `threshold(k)`.
pub fn decompose_triangle_cover(
    homothets: &[TriangleHomothet],
    targets: &[(Rational, Rational)],
    k: usize,
    base: &dyn TwoColorer,
) -> Result<Decomposition> {
    let octants = homothets.iter().map(triangle_to_octant).collect::<Result<Vec<_>>>()?;
    let lifted = targets.iter().enumerate().map(|(i, (u, v))| lift(i, u, v)).collect();
    decompose_cover(&CoverInstance::new(octants, lifted)?, k, base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::ExhaustiveTwoColorer;

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn coverage_examples() {
        let origin = RawPoint3::from_ints(0, 0, 0, 0);
        let c = CoverInstance::new(vec![OctantApex::from_ints(1, 1, 1)], vec![origin.clone()]).unwrap();
        assert_eq!(coverage_count(&c, 0).unwrap(), 1);
        let c = CoverInstance::new(vec![OctantApex::from_ints(1, 1, -1)], vec![origin.clone()]).unwrap();
        assert_eq!(coverage_count(&c, 0).unwrap(), 0);
        let c = CoverInstance::new(vec![OctantApex::from_ints(0, 0, 0)], vec![origin]).unwrap();
        assert_eq!(coverage_count(&c, 0).unwrap(), 1);
        assert!(coverage_count(&c, 1).is_err());
    }

    #[test]
    fn empty_cover_rejected() {
        assert!(CoverInstance::new(vec![], vec![RawPoint3::from_ints(0, 0, 0, 0)]).is_err());
    }

    #[test]
    fn one_class_keeps_everything() {
        let c = CoverInstance::new(
            vec![OctantApex::from_ints(1, 2, 3), OctantApex::from_ints(3, 2, 1)],
            vec![RawPoint3::from_ints(0, 0, 0, 0)],
        )
        .unwrap();
        let d = decompose_cover(&c, 1, &ExhaustiveTwoColorer::default()).unwrap();
        assert_eq!(d.class_of, vec![1, 1]);
        assert!(d.deficient_targets(&c, 1).is_empty());
    }

    #[test]
    fn nested_twelve_fold_cover_splits() {
        let octants = (1..=12).map(|i| OctantApex::from_ints(i, i, i)).collect();
        let c = CoverInstance::new(octants, vec![RawPoint3::from_ints(0, 0, 0, 0)]).unwrap();
        let d = decompose_cover(&c, 2, &ExhaustiveTwoColorer::default()).unwrap();
        assert_eq!(d.classes_covering(&c, 0), BTreeSet::from([1, 2]));
    }

    #[test]
    fn ties_keep_closed_containment() {
        // target sits exactly on every apex coordinate
        let octants = vec![OctantApex::from_ints(0, 0, 0), OctantApex::from_ints(0, 5, 0)];
        let c = CoverInstance::new(octants, vec![RawPoint3::from_ints(0, 0, 0, 0)]).unwrap();
        let dr = joint_rank_reduce(&c);
        let t = dr.target_apexes[0];
        for p in &dr.points {
            assert!(p.x <= t[0] && p.y <= t[1] && p.z <= t[2]);
        }
    }

    #[test]
    fn triangle_map_examples() {
        let t0 = TriangleHomothet::new(r(0), r(0), r(1)).unwrap();
        assert_eq!(triangle_to_octant(&t0).unwrap(), OctantApex::from_ints(0, 0, 1));
        let t = TriangleHomothet::new(r(0), r(0), r(7)).unwrap();
        assert_eq!(triangle_to_octant(&t).unwrap(), OctantApex::from_ints(0, 0, 7));
        let t = TriangleHomothet::new(r(2), r(3), r(1)).unwrap();
        let o = triangle_to_octant(&t).unwrap();
        assert_eq!(o, OctantApex::from_ints(2, 3, -4));
        assert_eq!(lift(0, &r(2), &r(3)), RawPoint3::from_ints(0, 2, 3, -5));
        assert!(o.contains(&lift(0, &r(2), &r(3))));
    }

    #[test]
    fn non_positive_scale_rejected() {
        assert!(TriangleHomothet::new(r(0), r(0), r(0)).is_err());
        let bad = TriangleHomothet {
            corner_u: r(0),
            corner_v: r(0),
            scale: r(-1),
        };
        assert!(triangle_to_octant(&bad).is_err());
    }

    #[test]
    fn single_homothet_one_class() {
        let t = TriangleHomothet::new(r(0), r(0), r(1)).unwrap();
        let d = decompose_triangle_cover(&[t], &[(r(0), r(0))], 1, &ExhaustiveTwoColorer::default()).unwrap();
        assert_eq!(d.class_of, vec![1]);
    }
}
