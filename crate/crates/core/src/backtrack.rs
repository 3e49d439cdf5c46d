//! Exact backtracking over colorings in arrival order.
//!
//! The constraint is the prefix form of the wedge condition: every wedge
//! trace that reaches `m` points must show at least `d` distinct colors
//! among its first `m` arrivals. Assigning points in time order, a wedge's
//! first `m` arrivals are fully colored exactly when its `m`-th point is
//! assigned, so each node only checks the size-`m` traces through the point
//! just colored. Among the colors that survive the check, the one that
//! leaves the fewest nearly-complete deficient traces is tried first.

use crate::coloring::{Color, Coloring};
use crate::geom::{OrderedPointSet, Rank};
use crate::{Error, Result};

/// Result of a completed (not budget-exhausted) search.
#[derive(Clone, Debug)]
pub struct Outcome {
    /// `None` when the whole tree was exhausted: no coloring exists.
    pub coloring: Option<Coloring>,
    pub nodes: u64,
}

/// A trace through the current point: its size and the color mask of the
/// other points in it.
#[derive(Clone, Copy, Debug)]
struct Trace {
    size: usize,
    mask: u64,
}

struct Frame {
    order: Vec<u8>,
    next: usize,
    max_used: i32,
}

/// Search for a coloring of `set` with `colors` such that every wedge whose
/// content reaches `m` points has at least `d` distinct colors among its
/// first `m` arrivals. Colors are interchangeable, so point `i` never opens
/// more than one new color beyond those used before it.
///
/// Fails with [`Error::BudgetExhausted`] after `budget` assignments.
pub fn prefix_search(
    set: &OrderedPointSet,
    colors: &[Color],
    m: usize,
    d: usize,
    budget: u64,
) -> Result<Outcome> {
    if colors.is_empty() || colors.len() > 64 {
        return Err(Error::Domain(format!(
            "palette size {} outside 1..=64",
            colors.len()
        )));
    }
    if m == 0 {
        return Err(Error::Domain("threshold m must be positive".into()));
    }
    let pts = set.points();
    let n = pts.len();
    let earlier_by_x: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut e: Vec<usize> = (0..i).collect();
            e.sort_by_key(|&j| pts[j].x);
            e
        })
        .collect();

    let mut assign = vec![0u8; n];
    let mut stack: Vec<Frame> = Vec::with_capacity(n);
    let mut traces = Vec::new();
    let mut nodes = 0u64;
    let mut depth = 0usize;
    loop {
        if depth == n {
            let mut coloring = Coloring::new();
            for (p, &c) in pts.iter().zip(&assign) {
                coloring.set(p.id, colors[c as usize]);
            }
            return Ok(Outcome { coloring: Some(coloring), nodes });
        }
        if stack.len() == depth {
            let max_used = stack.last().map_or(-1, |f| f.max_used.max(assign[depth - 1] as i32));
            traces.clear();
            collect_traces(set, &earlier_by_x[depth], depth, &assign, m, &mut traces);
            let allowed = (colors.len() as i32).min(max_used + 2) as u8;
            let order = rank_colors(&traces, allowed, m, d);
            stack.push(Frame { order, next: 0, max_used });
        }
        let frame = stack.last_mut().expect("frame for current depth");
        if frame.next < frame.order.len() {
            assign[depth] = frame.order[frame.next];
            frame.next += 1;
            nodes += 1;
            if nodes > budget {
                return Err(Error::BudgetExhausted { budget });
            }
            depth += 1;
        } else {
            stack.pop();
            if depth == 0 {
                return Ok(Outcome { coloring: None, nodes });
            }
            depth -= 1;
        }
    }
}

/// Viable color indices below `allowed`, best first.
fn rank_colors(traces: &[Trace], allowed: u8, m: usize, d: usize) -> Vec<u8> {
    let mut scored: Vec<(u128, u8)> = Vec::with_capacity(allowed as usize);
    'colors: for c in 0..allowed {
        let bit = 1u64 << c;
        let mut penalty = 0u128;
        for t in traces {
            if ((t.mask | bit).count_ones() as usize) < d {
                if t.size == m {
                    continue 'colors;
                }
                penalty = penalty.saturating_add(1u128 << (2 * t.size).min(120));
            }
        }
        scored.push((penalty, c));
    }
    scored.sort();
    scored.into_iter().map(|(_, c)| c).collect()
}

/// All distinct traces of size `<= m` that contain point `i` at its arrival.
fn collect_traces(
    set: &OrderedPointSet,
    earlier_by_x: &[usize],
    i: usize,
    assign: &[u8],
    m: usize,
    out: &mut Vec<Trace>,
) {
    let pts = set.points();
    let q = pts[i];
    let mut base_size = 1usize;
    let mut base_mask = 0u64;
    // earlier points left of the current apex and above q, sorted by y
    let mut above: Vec<(Rank, u64)> = Vec::with_capacity(m + 1);

    let emit = |base_size: usize, base_mask: u64, above: &[(Rank, u64)], from: usize, out: &mut Vec<Trace>| {
        let mut size = base_size;
        let mut mask = base_mask;
        if from == 0 && size <= m {
            out.push(Trace { size, mask });
        }
        for (k, &(_, bit)) in above.iter().enumerate() {
            size += 1;
            mask |= bit;
            if size > m {
                break;
            }
            if k + 1 >= from {
                out.push(Trace { size, mask });
            }
        }
    };

    let mut rest = earlier_by_x.iter().peekable();
    while let Some(&&j) = rest.peek() {
        if pts[j].x > q.x {
            break;
        }
        rest.next();
        let bit = 1u64 << assign[j];
        if pts[j].y < q.y {
            base_size += 1;
            base_mask |= bit;
        } else {
            insert_above(&mut above, pts[j].y, bit, m);
        }
    }
    if base_size > m {
        return;
    }
    emit(base_size, base_mask, &above, 0, out);
    for &j in rest {
        let bit = 1u64 << assign[j];
        let from = if pts[j].y < q.y {
            base_size += 1;
            base_mask |= bit;
            0
        } else {
            match insert_above(&mut above, pts[j].y, bit, m) {
                Some(pos) => pos + 1,
                None => continue,
            }
        };
        if base_size > m {
            return;
        }
        if base_size + from.saturating_sub(1) <= m {
            emit(base_size, base_mask, &above, from, out);
        }
    }
}

/// Insert keeping `above` sorted by y and at most `m` long. Returns the
/// insertion position, or `None` if the point fell off the end.
fn insert_above(above: &mut Vec<(Rank, u64)>, y: Rank, bit: u64, m: usize) -> Option<usize> {
    let pos = above.partition_point(|&(v, _)| v < y);
    if pos >= m {
        return None;
    }
    above.insert(pos, (y, bit));
    above.truncate(m);
    Some(pos)
}
