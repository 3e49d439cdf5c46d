mod common;

use std::collections::BTreeSet;

use num_rational::BigRational;
use octant_cover::backtrack::prefix_search;
use octant_cover::coloring::{color_set, threshold, threshold_usize, Coloring, ExhaustiveTwoColorer, Palette, RED};
use octant_cover::duality::{dual_points, joint_rank_reduce, CoverInstance};
use octant_cover::geom::*;
use octant_cover::io::{emit_points, parse_points};
use octant_cover::partition::build_partition;
use octant_cover::search::min_feasible_threshold;
use octant_cover::verify::{empirical_min_threshold, verify, verify3d};
use octant_cover::wedgegraph::{build_wedge_graph, four_color, verify_weak};
use proptest::prelude::*;

fn ordered_set(max_n: usize) -> impl Strategy<Value = OrderedPointSet> {
    (1..=max_n).prop_flat_map(|n| {
        let ranks: Vec<Rank> = (1..=n as Rank).collect();
        (Just(ranks.clone()).prop_shuffle(), Just(ranks).prop_shuffle())
            .prop_map(|(xs, ys)| OrderedPointSet::from_ranks(&xs, &ys).unwrap())
    })
}

fn colored_set(max_n: usize, k: u32) -> impl Strategy<Value = (OrderedPointSet, Coloring)> {
    ordered_set(max_n).prop_flat_map(move |s| {
        let n = s.len();
        (Just(s), prop::collection::vec(1..=k, n)).prop_map(|(s, cols)| {
            let c: Coloring = s.ids().zip(cols).collect();
            (s, c)
        })
    })
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn raw_points(max_n: usize) -> impl Strategy<Value = Vec<RawPoint3>> {
    prop::collection::vec((small_rational(), small_rational(), small_rational()), 1..=max_n).prop_map(|v| {
        v.into_iter()
            .enumerate()
            .map(|(i, (x, y, z))| RawPoint3::new(i, x, y, z))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_reduce_is_idempotent(pts in raw_points(12)) {
        let once = rank_reduce(&pts);
        let as_raw: Vec<RawPoint3> = once
            .iter()
            .map(|p| RawPoint3::from_ints(p.id, p.x as i64, p.y as i64, p.z as i64))
            .collect();
        prop_assert_eq!(rank_reduce(&as_raw), once);
    }

    #[test]
    fn rank_reduce_preserves_untied_order(pts in raw_points(12)) {
        let ranks = rank_reduce(&pts);
        for i in 0..pts.len() {
            for j in 0..pts.len() {
                for axis in 0..3 {
                    let (a, b) = (pts[i].coord(axis), pts[j].coord(axis));
                    if a != b {
                        prop_assert_eq!(a < b, ranks[i].coord(axis) < ranks[j].coord(axis));
                    }
                }
            }
        }
    }

    #[test]
    fn arbitrary_apex_snaps_to_canonical(s in ordered_set(8), a in 0u32..10, b in 0u32..10) {
        let t = s.len() as Rank;
        let trace = wedge_contents(&s, WedgeApex::new(a, b), t);
        let snap = |v: u32, ranks: Vec<Rank>| ranks.into_iter().filter(|&r| r <= v).max();
        match (snap(a, s.x_ranks()), snap(b, s.y_ranks())) {
            (Some(ca), Some(cb)) => {
                prop_assert!(canonical_apexes(&s).contains(&WedgeApex::new(ca, cb)));
                prop_assert_eq!(wedge_contents(&s, WedgeApex::new(ca, cb), t), trace);
            }
            _ => prop_assert!(trace.is_empty()),
        }
    }

    #[test]
    fn wedge_contents_is_monotone(s in ordered_set(10), a in 0u32..11, b in 0u32..11, t in 0u32..11) {
        let base: BTreeSet<PointId> = wedge_contents(&s, WedgeApex::new(a, b), t).iter().map(|p| p.id).collect();
        for (da, db, dt) in [(1, 0, 0), (0, 1, 0), (0, 0, 1)] {
            let bigger: BTreeSet<PointId> = wedge_contents(&s, WedgeApex::new(a + da, b + db), t + dt)
                .iter()
                .map(|p| p.id)
                .collect();
            prop_assert!(base.is_subset(&bigger));
        }
    }

    #[test]
    fn partition_invariants(s in ordered_set(24)) {
        let part = build_partition(&s);
        prop_assert_eq!(build_partition(&s), part.clone());
        let important: Vec<&OrderedPoint2> = part.important().iter().map(|&id| s.find(id).unwrap()).collect();
        for q in s.iter() {
            // earliest important point strictly SW of q and earlier than q
            let expected = important.iter().find(|p| p.time < q.time && p.is_sw_of(q)).map(|p| p.id);
            if part.is_important(q.id) {
                prop_assert!(expected.is_none());
                prop_assert!(part.owner(q.id).is_none());
            } else {
                let o = part.owner(q.id).unwrap();
                prop_assert_eq!(Some(o), expected);
                let owner = s.find(o).unwrap();
                prop_assert!(owner.is_sw_of(q));
                prop_assert!(owner.time < q.time);
                prop_assert!(part.owned_set(o).unwrap().contains(&q.id));
            }
        }
        let owned_total: usize = part.important().iter().map(|&p| part.owned_set(p).unwrap().len()).sum();
        prop_assert_eq!(owned_total + part.important().len(), s.len());
    }

    #[test]
    fn partition_is_prefix_consistent(s in ordered_set(20), cut in 0usize..20) {
        let full = build_partition(&s);
        let t = (cut % s.len()) as Rank + 1;
        let prefix = s.subset(|p| p.time <= t);
        let part = build_partition(&prefix);
        for p in prefix.iter() {
            prop_assert_eq!(part.owner(p.id), full.owner(p.id));
        }
    }

    #[test]
    fn coloring_guarantee_and_structure(s in ordered_set(60), k in 1usize..=4) {
        let base = ExhaustiveTwoColorer::default();
        let palette = Palette::first(k).unwrap();
        let c = color_set(&s, &palette, &base).unwrap();
        prop_assert_eq!(c.len(), s.len());
        prop_assert!(!c.colors_used().contains(&RED));
        prop_assert!(c.colors_used().iter().all(|col| (1..=k as u32).contains(col)));
        let m = threshold_usize(k as u32).unwrap();
        prop_assert!(verify(&s, &c, m.max(k), k).unwrap().is_empty());
        prop_assert_eq!(color_set(&s, &palette, &base).unwrap(), c.clone());
        if k >= 3 {
            let part = build_partition(&s);
            for (q, o) in part.owners() {
                prop_assert_ne!(c.get(*q), c.get(*o));
            }
        }
    }

    #[test]
    fn verify_agrees_with_naive_oracle((s, c) in colored_set(7, 3), m in 1usize..=8, d in 1usize..=3) {
        prop_assume!(m >= d);
        prop_assert_eq!(verify(&s, &c, m, d).unwrap().is_empty(), common::naive_verify(&s, &c, m, d).is_empty());
    }

    #[test]
    fn verify_is_monotone((s, c) in colored_set(12, 3), m in 1usize..=6, d in 1usize..=3) {
        prop_assume!(m >= d);
        if verify(&s, &c, m, d).unwrap().is_empty() {
            prop_assert!(verify(&s, &c, m + 1, d).unwrap().is_empty());
            if d > 1 {
                prop_assert!(verify(&s, &c, m, d - 1).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn empirical_threshold_matches_linear_scan((s, c) in colored_set(10, 3), d in 1usize..=3) {
        let scan = (d..=s.len() + 1).find(|&m| verify(&s, &c, m, d).unwrap().is_empty()).unwrap_or(d);
        prop_assert_eq!(empirical_min_threshold(&s, &c, d).unwrap(), scan);
    }

    #[test]
    fn planar_and_spatial_verifiers_agree((s, c) in colored_set(9, 3), m in 1usize..=5, d in 1usize..=3) {
        prop_assume!(m >= d);
        let planar: BTreeSet<(Rank, Rank, Rank)> = verify(&s, &c, m, d)
            .unwrap()
            .iter()
            .map(|v| (v.apex.a, v.apex.b, v.time))
            .collect();
        let mut spatial: std::collections::BTreeMap<(Rank, Rank), Rank> = Default::default();
        for v in verify3d(&s.to_point3(), &c, m, d).unwrap() {
            let e = spatial.entry((v.apex[0], v.apex[1])).or_insert(v.apex[2]);
            *e = (*e).min(v.apex[2]);
        }
        let spatial: BTreeSet<(Rank, Rank, Rank)> = spatial.into_iter().map(|((a, b), t)| (a, b, t)).collect();
        prop_assert_eq!(planar, spatial);
    }

    #[test]
    fn wedge_graph_pipeline(s in ordered_set(40)) {
        let g = build_wedge_graph(&s);
        prop_assert_eq!(&g.edges, &common::brute_force_edges(&s));
        if s.len() >= 3 {
            prop_assert!(g.edges.len() <= 3 * s.len() - 6);
        }
        let c = four_color(&g).unwrap();
        prop_assert!(c.colors_used().iter().all(|&x| (1..=4).contains(&x)));
        prop_assert!(g.edges.iter().all(|&(p, q)| c.get(p) != c.get(q)));
        prop_assert!(verify_weak(&s, &c).unwrap().is_empty());
    }

    #[test]
    fn min_threshold_monotonicity(s in ordered_set(6)) {
        let t = |c, d| min_feasible_threshold(&s, c, d, 1_000_000).unwrap().threshold;
        prop_assert!(t(3, 2) <= t(2, 2));
        prop_assert!(t(4, 2) <= t(3, 2));
        prop_assert!(t(3, 2) <= t(3, 3));
        prop_assert!(t(2, 1) <= t(2, 2));
        prop_assert!(t(2, 2) <= 12);
    }

    #[test]
    fn min_threshold_is_tight(s in ordered_set(5), c in 2u32..=3) {
        let m = min_feasible_threshold(&s, c as usize, 2, 1_000_000).unwrap().threshold;
        prop_assert!(common::brute_force_feasible(&s, c, m, 2));
        if m > 2 {
            prop_assert!(!common::brute_force_feasible(&s, c, m - 1, 2));
        }
    }

    #[test]
    fn base_search_matches_contract(s in ordered_set(40)) {
        let out = prefix_search(&s, &[1, 2], 12, 2, 10_000_000).unwrap();
        let c = out.coloring.unwrap();
        prop_assert!(verify(&s, &c, 12, 2).unwrap().is_empty());
    }

    #[test]
    fn dualization_identity(
        apexes in prop::collection::vec((small_rational(), small_rational(), small_rational()), 1..8),
        targets in prop::collection::vec((small_rational(), small_rational(), small_rational()), 1..8),
    ) {
        let octants: Vec<OctantApex> = apexes.into_iter().map(|(a, b, c)| OctantApex::new(a, b, c)).collect();
        let targets: Vec<RawPoint3> = targets.into_iter().enumerate().map(|(i, (x, y, z))| RawPoint3::new(i, x, y, z)).collect();
        let cover = CoverInstance::new(octants.clone(), targets.clone()).unwrap();
        let duals = dual_points(&cover);
        let ranks = joint_rank_reduce(&cover);
        for (i, o) in octants.iter().enumerate() {
            for (t, x) in targets.iter().enumerate() {
                let primal = o.contains(x);
                let neg = OctantApex::new(-x.x.clone(), -x.y.clone(), -x.z.clone());
                prop_assert_eq!(primal, neg.contains(&duals[i]));
                // rank reduction keeps every containment, in both directions
                let p = ranks.points[i];
                let a = ranks.target_apexes[t];
                prop_assert_eq!(primal, p.x <= a[0] && p.y <= a[1] && p.z <= a[2]);
            }
        }
    }

    #[test]
    fn point_files_round_trip(pts in raw_points(10)) {
        prop_assert_eq!(parse_points(&emit_points(&pts)).unwrap(), pts);
    }
}

#[test]
fn threshold_dominated_by_closed_form() {
    use octant_cover::coloring::closed_form_bound;
    for k in 2..=8 {
        assert!(threshold(k).unwrap() <= closed_form_bound(k).unwrap(), "k={k}");
    }
}
