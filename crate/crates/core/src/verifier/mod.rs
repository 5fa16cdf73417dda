//! Communication graphs and the checks every construction is measured against.

mod brute;
mod coverage;

pub use brute::{candidate_angles, feasible_by_bruteforce, BRUTE_FORCE_LIMIT, CANDIDATE_NUDGE};
pub use coverage::{covers_far_field, covers_plane};

use crate::assignment::OrientationAssignment;
use crate::error::Result;
use crate::geometry::{Point, EPS};

/// Directed graph on the point ids: `a -> b` iff the wedge at `a` covers `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommGraph {
    pub n: usize,
    pub out_edges: Vec<Vec<usize>>,
}

impl CommGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut out_edges = vec![Vec::new(); n];
        for (a, b) in edges {
            out_edges[a].push(b);
        }
        for list in &mut out_edges {
            list.sort_unstable();
            list.dedup();
        }
        CommGraph { n, out_edges }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.out_edges[a].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.out_edges.iter().map(Vec::len).sum()
    }
}

pub fn build_comm_graph(
    points: &[Point],
    assignment: &OrientationAssignment,
    r_override: Option<f64>,
) -> Result<CommGraph> {
    assignment.check_covers(points)?;
    let r = r_override.unwrap_or(assignment.guaranteed_radius);
    let mut out_edges = vec![Vec::new(); points.len()];
    for a in points {
        let w = assignment.wedge(a, r)?;
        for b in points {
            if b.id != a.id && w.contains(b, EPS) {
                out_edges[a.id].push(b.id);
            }
        }
    }
    Ok(CommGraph {
        n: points.len(),
        out_edges,
    })
}

/// Strongly connected components (iterative Tarjan), in reverse topological order.
pub fn strongly_connected_components(g: &CommGraph) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    // (node, position in its edge list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for start in 0..n {
        if index[start] != UNSEEN {
            continue;
        }
        call.push((start, 0));
        index[start] = next;
        low[start] = next;
        next += 1;
        stack.push(start);
        on_stack[start] = true;

        while let Some(&(v, pos)) = call.last() {
            if let Some(&w) = g.out_edges[v].get(pos) {
                if let Some(top) = call.last_mut() {
                    top.1 += 1;
                }
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps
}

pub fn strongly_connected(g: &CommGraph) -> bool {
    g.n <= 1 || strongly_connected_components(g).len() == 1
}

/// Directionally covered pairs with their lengths, sorted by length.
/// The communication graph at radius `r` is exactly the prefix with length `<= r + EPS`.
pub fn covered_pairs(
    points: &[Point],
    assignment: &OrientationAssignment,
) -> Result<Vec<(f64, usize, usize)>> {
    assignment.check_covers(points)?;
    let mut pairs = Vec::new();
    for a in points {
        let w = assignment.wedge(a, f64::INFINITY)?;
        for b in points {
            if b.id != a.id && w.covers_direction(b, EPS) {
                pairs.push((a.dist(b), a.id, b.id));
            }
        }
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    Ok(pairs)
}

/// Smallest pairwise distance at which the fixed orientation becomes strongly
/// connected, or `None` when it never does.
///
/// Edges only appear at covered-pair lengths, so the search runs over those.
pub fn min_strong_radius(points: &[Point], assignment: &OrientationAssignment) -> Result<Option<f64>> {
    let n = points.len();
    if n <= 1 {
        return Ok(Some(0.0));
    }
    let pairs = covered_pairs(points, assignment)?;
    let strong_at = |k: usize| {
        let limit = pairs[k].0 + EPS;
        let end = pairs.partition_point(|p| p.0 <= limit);
        let g = CommGraph::from_edges(n, pairs[..end].iter().map(|&(_, a, b)| (a, b)));
        strongly_connected(&g)
    };
    if pairs.is_empty() || !strong_at(pairs.len() - 1) {
        return Ok(None);
    }
    let (mut lo, mut hi) = (0, pairs.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if strong_at(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(Some(pairs[lo].0))
}

/// Strong connectivity of the assignment at radius `r`.
pub fn strong_at_radius(points: &[Point], assignment: &OrientationAssignment, r: f64) -> Result<bool> {
    Ok(strongly_connected(&build_comm_graph(points, assignment, Some(r))?))
}
