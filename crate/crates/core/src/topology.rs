//! Unit disk graph and the degree-bounded Euclidean minimum spanning tree.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::geometry::{ccw_angle_between, direction, Point, EPS};

/// Maximum vertex degree allowed in the spanning tree.
pub const MAX_TREE_DEGREE: usize = 5;

/// Checks that ids match positions, coordinates are finite and no two points coincide.
pub fn validate_points(points: &[Point]) -> Result<()> {
    for (position, p) in points.iter().enumerate() {
        if p.id != position {
            return Err(Error::InvalidIds { position, id: p.id });
        }
        if !p.x.is_finite() || !p.y.is_finite() {
            return Err(Error::NonFiniteCoordinate(p.id));
        }
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x.total_cmp(&points[b].x).then(a.cmp(&b)));
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if points[j].x - points[i].x > EPS {
                break;
            }
            if points[i].dist(&points[j]) <= EPS {
                return Err(Error::DuplicatePoint(i.min(j), i.max(j)));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Udg {
    pub n: usize,
    /// Unordered pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Udg {
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }
}

pub fn build_udg(points: &[Point]) -> Result<Udg> {
    validate_points(points)?;
    let n = points.len();
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    let cell = |p: &Point| (p.x.floor() as i64, p.y.floor() as i64);
    for p in points {
        grid.entry(cell(p)).or_default().push(p.id);
    }
    let mut adj = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for p in points {
        let (cx, cy) = cell(p);
        for gx in cx - 1..=cx + 1 {
            for gy in cy - 1..=cy + 1 {
                let Some(bucket) = grid.get(&(gx, gy)) else {
                    continue;
                };
                for &j in bucket {
                    if j > p.id && p.dist(&points[j]) <= 1.0 + EPS {
                        edges.push((p.id, j));
                        adj[p.id].push(j);
                        adj[j].push(p.id);
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Udg { n, edges, adj })
}

pub fn is_connected(g: &Udg) -> bool {
    if g.n <= 1 {
        return true;
    }
    let mut seen = vec![false; g.n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                queue.push_back(u);
            }
        }
    }
    count == g.n
}

/// Spanning tree with parent links. `parent[root] == root`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootedTree {
    pub root: usize,
    pub parent: Vec<usize>,
    pub children: Vec<Vec<usize>>,
}

impl RootedTree {
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(v != self.root)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.len()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Tree edges as `(parent, child)` pairs in preorder.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.preorder()
            .into_iter()
            .filter(|&v| v != self.root)
            .map(|v| (self.parent[v], v))
            .collect()
    }

    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.children[v].iter().rev());
        }
        out
    }

    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        for v in self.preorder() {
            for &c in &self.children[v] {
                depth[c] = depth[v] + 1;
            }
        }
        depth
    }

    pub fn total_length(&self, points: &[Point]) -> f64 {
        self.edges()
            .iter()
            .map(|&(a, b)| points[a].dist(&points[b]))
            .sum()
    }

    /// Builds a rooted tree from an undirected adjacency, ordering children
    /// counterclockwise from the direction back to the parent.
    fn from_adjacency(points: &[Point], root: usize, adj: &[Vec<usize>]) -> Self {
        let n = points.len();
        let mut parent = vec![usize::MAX; n];
        let mut children = vec![Vec::new(); n];
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let reference = if v == root {
                0.0
            } else {
                direction(&points[v], &points[parent[v]]).unwrap_or(0.0)
            };
            let mut kids: Vec<(f64, usize)> = adj[v]
                .iter()
                .filter(|&&u| parent[u] == usize::MAX)
                .map(|&u| {
                    let d = direction(&points[v], &points[u]).unwrap_or(0.0);
                    (ccw_angle_between(reference, d), u)
                })
                .collect();
            kids.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            for &(_, u) in &kids {
                parent[u] = v;
                queue.push_back(u);
            }
            children[v] = kids.into_iter().map(|(_, u)| u).collect();
        }
        RootedTree {
            root,
            parent,
            children,
        }
    }
}

/// Highest point, ties broken by smallest id.
pub fn highest_point(points: &[Point]) -> usize {
    let mut best = 0;
    for p in points.iter().skip(1) {
        if p.y > points[best].y {
            best = p.id;
        }
    }
    best
}

fn edge_key(d: f64, a: usize, b: usize) -> (f64, usize, usize) {
    (d, a.min(b), a.max(b))
}

fn key_less(x: (f64, usize, usize), y: (f64, usize, usize)) -> bool {
    x.0.total_cmp(&y.0)
        .then(x.1.cmp(&y.1))
        .then(x.2.cmp(&y.2))
        .is_lt()
}

/// Euclidean MST with maximum degree five, rooted at the highest point.
///
/// Prim's algorithm over the complete graph with lexicographic tie-breaking on
/// `(length, smaller id, larger id)`. A degree above five can only arise from
/// exact 60° ties; such vertices are repaired by exchanging an incident edge
/// for another edge of the same length.
pub fn bounded_degree_mst(points: &[Point]) -> Result<RootedTree> {
    if points.is_empty() {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    let udg = build_udg(points)?;
    if !is_connected(&udg) {
        return Err(Error::DisconnectedInput);
    }
    let n = points.len();
    let root = highest_point(points);

    let mut in_tree = vec![false; n];
    let mut best: Vec<(f64, usize)> = vec![(f64::INFINITY, usize::MAX); n];
    let mut adj = vec![Vec::new(); n];
    in_tree[root] = true;
    for v in 0..n {
        if v != root {
            best[v] = (points[root].dist(&points[v]), root);
        }
    }
    for _ in 1..n {
        let mut pick = usize::MAX;
        for v in 0..n {
            if in_tree[v] {
                continue;
            }
            if pick == usize::MAX
                || key_less(
                    edge_key(best[v].0, v, best[v].1),
                    edge_key(best[pick].0, pick, best[pick].1),
                )
            {
                pick = v;
            }
        }
        let via = best[pick].1;
        in_tree[pick] = true;
        adj[pick].push(via);
        adj[via].push(pick);
        for v in 0..n {
            if in_tree[v] {
                continue;
            }
            let d = points[pick].dist(&points[v]);
            if key_less(edge_key(d, v, pick), edge_key(best[v].0, v, best[v].1)) {
                best[v] = (d, pick);
            }
        }
    }
    repair_degree(points, &mut adj);
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(RootedTree::from_adjacency(points, root, &adj))
}

fn component_without(adj: &[Vec<usize>], start: usize, cut: (usize, usize)) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if (v, u) == cut || (u, v) == cut || seen[u] {
                continue;
            }
            seen[u] = true;
            stack.push(u);
        }
    }
    seen
}

fn remove_edge(adj: &mut [Vec<usize>], a: usize, b: usize) {
    adj[a].retain(|&x| x != b);
    adj[b].retain(|&x| x != a);
}

fn repair_degree(points: &[Point], adj: &mut [Vec<usize>]) {
    let n = points.len();
    loop {
        let Some(v) = (0..n).find(|&v| adj[v].len() > MAX_TREE_DEGREE) else {
            return;
        };
        let mut swapped = false;
        let mut nbrs = adj[v].clone();
        nbrs.sort_unstable();
        'outer: for &u in &nbrs {
            let len = points[v].dist(&points[u]);
            let side = component_without(adj, u, (v, u));
            for a in (0..n).filter(|&a| side[a]) {
                if adj[a].len() >= MAX_TREE_DEGREE {
                    continue;
                }
                for b in (0..n).filter(|&b| !side[b] && b != v) {
                    if adj[b].len() >= MAX_TREE_DEGREE {
                        continue;
                    }
                    let d = points[a].dist(&points[b]);
                    if (d - len).abs() <= EPS * len.max(1.0) && d <= 1.0 + EPS {
                        remove_edge(adj, v, u);
                        adj[a].push(b);
                        adj[b].push(a);
                        swapped = true;
                        break 'outer;
                    }
                }
            }
        }
        if !swapped {
            // no equal-length exchange exists; leave the tree as built
            return;
        }
    }
}

/// Height of every node: 0 for leaves, otherwise one more than the tallest child.
pub fn tree_heights(t: &RootedTree) -> Vec<usize> {
    let mut height = vec![0; t.len()];
    for v in t.preorder().into_iter().rev() {
        height[v] = t.children[v]
            .iter()
            .map(|&c| height[c] + 1)
            .max()
            .unwrap_or(0);
    }
    height
}
