//! The graph of point pairs that some wedge isolates at some time, and its
//! proper 4-coloring.
//!
//! A pair is isolable iff its minimal wedge holds no third point at the
//! arrival of the later of the two: every wedge containing both contains the
//! minimal one, and contents only grow with time. The graph is planar (SW-NE
//! pairs drawn as segments, NW-SE pairs as reverse-L polylines), so four
//! colors always suffice; they are found by exact backtracking.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::geom::{min_wedge, OrderedPointSet, PointId};
use crate::verify::{verify, Violation};
use crate::{Error, Result};

const FOUR_COLOR_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WedgeGraph {
    /// Vertex ids, in time order.
    pub vertices: Vec<PointId>,
    /// Unordered pairs, stored as `(smaller id, larger id)`.
    pub edges: BTreeSet<(PointId, PointId)>,
}

impl WedgeGraph {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_edge(&self, p: PointId, q: PointId) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }
}

pub fn build_wedge_graph(set: &OrderedPointSet) -> WedgeGraph {
    let pts = set.points();
    let mut edges = BTreeSet::new();
    for (j, q) in pts.iter().enumerate() {
        for p in &pts[..j] {
            let w = min_wedge(p, q);
            // pts[..=j] is the prefix at q's arrival
            let crowded = pts[..=j]
                .iter()
                .any(|r| r.id != p.id && r.id != q.id && w.contains(r));
            if !crowded {
                edges.insert((p.id.min(q.id), p.id.max(q.id)));
            }
        }
    }
    WedgeGraph {
        vertices: set.ids().collect(),
        edges,
    }
}

/// Proper coloring with colors `1..=4`. Vertices are taken in DSatur order
/// (most distinctly-colored neighbours first, ties by degree, then by
/// position) and colored by backtracking.
pub fn four_color(graph: &WedgeGraph) -> Result<Coloring> {
    let n = graph.n();
    let index: std::collections::HashMap<PointId, usize> =
        graph.vertices.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(p, q) in &graph.edges {
        let (i, j) = match (index.get(&p), index.get(&q)) {
            (Some(&i), Some(&j)) if i != j => (i, j),
            _ => return Err(Error::Domain(format!("edge ({p}, {q}) is not between two vertices"))),
        };
        adj[i].push(j);
        adj[j].push(i);
    }

    let mut color = vec![0u8; n];
    let mut nodes = 0u64;
    if !dsatur(&adj, &mut color, &mut nodes)? {
        return Err(Error::Contract(
            "wedge graph is not 4-colorable; the planarity argument failed".into(),
        ));
    }
    Ok(graph
        .vertices
        .iter()
        .zip(&color)
        .map(|(&id, &c)| (id, c as Color))
        .collect())
}

fn dsatur(adj: &[Vec<usize>], color: &mut [u8], nodes: &mut u64) -> Result<bool> {
    let pick = (0..adj.len())
        .filter(|&v| color[v] == 0)
        .max_by_key(|&v| {
            let sat: BTreeSet<u8> = adj[v].iter().map(|&u| color[u]).filter(|&c| c != 0).collect();
            (sat.len(), adj[v].len(), std::cmp::Reverse(v))
        });
    let Some(v) = pick else {
        return Ok(true);
    };
    for c in 1..=4u8 {
        if adj[v].iter().any(|&u| color[u] == c) {
            continue;
        }
        *nodes += 1;
        if *nodes > FOUR_COLOR_BUDGET {
            return Err(Error::BudgetExhausted {
                budget: FOUR_COLOR_BUDGET,
            });
        }
        color[v] = c;
        if dsatur(adj, color, nodes)? {
            return Ok(true);
        }
    }
    color[v] = 0;
    Ok(false)
}

/// Every wedge with at least two points shows two colors.
pub fn verify_weak(set: &OrderedPointSet, coloring: &Coloring) -> Result<Vec<Violation>> {
    verify(set, coloring, 2, 2)
}
