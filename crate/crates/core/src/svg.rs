//! Static SVG figures of ordered point sets in rank coordinates.
//!
//! Rank `r` is drawn at `MARGIN + r * CELL`; the y axis points up.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::coloring::{Color, Coloring};
use crate::geom::{OrderedPointSet, PointId, Rank};
use crate::partition::Partition;
use crate::wedgegraph::WedgeGraph;

const CELL: f64 = 40.0;
const MARGIN: f64 = 20.0;

const FILLS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

fn fill(color: Color) -> &'static str {
    FILLS[(color as usize).wrapping_sub(1) % FILLS.len()]
}

struct Canvas {
    extent: Rank,
    body: String,
}

impl Canvas {
    fn new(set: &OrderedPointSet) -> Self {
        let extent = set.iter().map(|p| p.x.max(p.y)).max().unwrap_or(0) + 1;
        Canvas {
            extent,
            body: String::new(),
        }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + x * CELL
    }

    fn py(&self, y: f64) -> f64 {
        MARGIN + (self.extent as f64 - y) * CELL
    }

    fn points(&mut self, set: &OrderedPointSet, coloring: Option<&Coloring>) {
        for p in set {
            let color = coloring.and_then(|c| c.get(p.id));
            let (cx, cy) = (self.px(p.x as f64), self.py(p.y as f64));
            writeln!(
                self.body,
                r#"<circle class="point" data-id="{}" cx="{cx}" cy="{cy}" r="6" fill="{}" stroke="black"/>"#,
                p.id,
                color.map_or("white", fill)
            )
            .unwrap();
            writeln!(
                self.body,
                r#"<text x="{}" y="{}" font-size="10">{}</text>"#,
                cx + 8.0,
                cy - 8.0,
                p.time
            )
            .unwrap();
        }
    }

    fn finish(self) -> String {
        let size = 2.0 * MARGIN + self.extent as f64 * CELL;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body
        )
    }
}

/// Regions of the partition as staircase outlines, with the points labelled
/// by arrival time. Region cells are the unit squares `(i, i+1) x (j, j+1)`
/// of the rank grid, each owned by the earliest important point SW of it.
pub fn render_partition(set: &OrderedPointSet, partition: &Partition) -> String {
    let mut canvas = Canvas::new(set);
    let e = canvas.extent;
    let important: Vec<_> = partition
        .important()
        .iter()
        .filter_map(|&id| set.find(id))
        .collect();
    let owner_of_cell = |i: Rank, j: Rank| -> Option<PointId> {
        important.iter().find(|p| p.x <= i && p.y <= j).map(|p| p.id)
    };
    let mut regions: BTreeMap<PointId, Vec<String>> = BTreeMap::new();
    for p in &important {
        regions.insert(p.id, Vec::new());
    }
    for i in 0..e {
        for j in 0..e {
            let Some(o) = owner_of_cell(i, j) else { continue };
            let (x0, x1) = (canvas.px(i as f64), canvas.px(i as f64 + 1.0));
            let (y0, y1) = (canvas.py(j as f64), canvas.py(j as f64 + 1.0));
            let seg = regions.get_mut(&o).expect("owner is important");
            // left and bottom edges of the cell border another region or nothing
            if i == 0 || owner_of_cell(i - 1, j) != Some(o) {
                seg.push(format!("M{x0} {y0}V{y1}"));
            }
            if j == 0 || owner_of_cell(i, j - 1) != Some(o) {
                seg.push(format!("M{x0} {y0}H{x1}"));
            }
        }
    }
    for (idx, (id, segs)) in regions.iter().enumerate() {
        writeln!(
            canvas.body,
            r#"<path class="region" data-owner="{id}" d="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
            segs.join(""),
            FILLS[idx % FILLS.len()]
        )
        .unwrap();
    }
    let coloring: Coloring = set
        .iter()
        .map(|p| {
            let region = partition.owner(p.id).unwrap_or(p.id);
            let idx = regions.keys().position(|&k| k == region).unwrap_or(0);
            (p.id, idx as Color + 1)
        })
        .collect();
    canvas.points(set, Some(&coloring));
    canvas.finish()
}

pub fn render_coloring(set: &OrderedPointSet, coloring: &Coloring) -> String {
    let mut canvas = Canvas::new(set);
    canvas.points(set, Some(coloring));
    canvas.finish()
}

/// Edges between comparable points as straight segments; edges between
/// incomparable points as reverse-L polylines hugging the top and right
/// sides of their bounding rectangle.
pub fn render_wedge_graph(set: &OrderedPointSet, graph: &WedgeGraph, coloring: Option<&Coloring>) -> String {
    let mut canvas = Canvas::new(set);
    for &(a, b) in &graph.edges {
        let (Some(p), Some(q)) = (set.find(a), set.find(b)) else { continue };
        let (lo, hi) = if p.x < q.x { (p, q) } else { (q, p) };
        let (x1, y1) = (canvas.px(lo.x as f64), canvas.py(lo.y as f64));
        let (x2, y2) = (canvas.px(hi.x as f64), canvas.py(hi.y as f64));
        if lo.y < hi.y {
            writeln!(
                canvas.body,
                r#"<line class="edge" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>"#
            )
            .unwrap();
        } else {
            // lo is NW of hi: along the top side, then down the right side
            let inset = 0.15 * CELL;
            writeln!(
                canvas.body,
                r#"<polyline class="edge" points="{x1},{y1} {},{} {x2},{y2}" fill="none" stroke="black"/>"#,
                x2 - inset,
                y1 + inset
            )
            .unwrap();
        }
    }
    canvas.points(set, coloring);
    canvas.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::build_partition;
    use crate::wedgegraph::build_wedge_graph;

    #[test]
    fn one_point_one_region() {
        let s = OrderedPointSet::from_ranks(&[1], &[1]).unwrap();
        let svg = render_partition(&s, &build_partition(&s));
        assert_eq!(svg.matches(r#"class="region""#).count(), 1);
    }

    #[test]
    fn nested_example_has_one_populated_region() {
        let s = OrderedPointSet::from_ranks(&[1, 3, 2], &[1, 3, 2]).unwrap();
        let svg = render_partition(&s, &build_partition(&s));
        assert_eq!(svg.matches(r#"class="region""#).count(), 1);
        assert_eq!(svg.matches(r#"class="point""#).count(), 3);
        assert_eq!(svg, render_partition(&s, &build_partition(&s)));
    }

    #[test]
    fn wedge_graph_edges() {
        let s = OrderedPointSet::from_ranks(&[1, 2], &[2, 1]).unwrap();
        let svg = render_wedge_graph(&s, &build_wedge_graph(&s), None);
        assert_eq!(svg.matches(r#"class="edge""#).count(), 1);
        assert!(svg.contains("<polyline"));
        let s = OrderedPointSet::from_ranks(&[1, 2], &[1, 2]).unwrap();
        let svg = render_wedge_graph(&s, &build_wedge_graph(&s), None);
        assert!(svg.contains("<line"));
    }
}
