//! 90° antennas: strong connectivity at radius 7.
//!
//! The spanning tree is consumed bottom-up in subtrees of at least four
//! nodes. In each subtree four representatives (always including the subtree
//! root) are oriented with the four-point rule, so together they see every
//! direction; every other member points at its closest representative. The
//! at most three nodes left at the top point at the root of an adjacent group.

use std::collections::VecDeque;
use std::f64::consts::FRAC_PI_2;

use crate::assignment::OrientationAssignment;
use crate::error::{Error, Result};
use crate::fourpoint::{orient_four_any, search_thetas};
use crate::geometry::{classify_quad, direction, Point, QuadClass};
use crate::topology::{bounded_degree_mst, build_udg, is_connected, RootedTree};
use crate::verifier::strong_at_radius;

/// Radius at which every 90° construction is strongly connected.
pub const RADIUS_90: f64 = 7.0;

/// Radius of the small-instance construction (at most three points).
pub const RADIUS_SMALL: f64 = 2.0;

/// Bound that holds by the inductive argument when no small root remainder is left.
pub const RADIUS_90_FULL_GROUPS: f64 = 5.0;

const GROUP_MIN: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group90 {
    pub subtree_root: usize,
    /// Sorted member ids.
    pub members: Vec<usize>,
    pub representatives: Vec<usize>,
    pub attach_parent: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction90 {
    /// Groups in removal order.
    pub groups: Vec<Group90>,
    /// At most three nodes containing the tree root; may be empty.
    pub remainder: Vec<usize>,
}

fn angle_at(apex: &Point, a: &Point, b: &Point) -> f64 {
    let (ux, uy) = (a.x - apex.x, a.y - apex.y);
    let (vx, vy) = (b.x - apex.x, b.y - apex.y);
    (ux * vy - uy * vx).abs().atan2(ux * vx + uy * vy)
}

/// Two or three points: face each other, or cover the triangle from its two
/// sharpest corners and point the third antenna at the nearer of them.
pub fn orient_small(points: &[Point]) -> Result<OrientationAssignment> {
    match points.len() {
        0 | 1 => {
            return Err(Error::TooFewPoints {
                needed: 2,
                got: points.len(),
            })
        }
        2 | 3 => {}
        got => return Err(Error::TooManyPoints { limit: 3, got }),
    }
    if !is_connected(&build_udg(points)?) {
        return Err(Error::DisconnectedInput);
    }
    let mut theta = vec![0.0; points.len()];
    if points.len() == 2 {
        theta[0] = direction(&points[0], &points[1])?;
        theta[1] = direction(&points[1], &points[0])?;
        return Ok(OrientationAssignment::new(FRAC_PI_2, theta, RADIUS_SMALL));
    }
    let others = |i: usize| -> (usize, usize) {
        match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        }
    };
    let mut corners: Vec<(f64, usize)> = (0..3)
        .map(|i| {
            let (a, b) = others(i);
            (angle_at(&points[i], &points[a], &points[b]), i)
        })
        .collect();
    corners.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    for &(_, i) in &corners[..2] {
        let (a, b) = others(i);
        let (da, db) = (points[i].dist(&points[a]), points[i].dist(&points[b]));
        let bx = (points[a].x - points[i].x) / da + (points[b].x - points[i].x) / db;
        let by = (points[a].y - points[i].y) / da + (points[b].y - points[i].y) / db;
        theta[i] = by.atan2(bx);
    }
    let third = corners[2].1;
    let (a, b) = others(third);
    let nearer = if points[third].dist(&points[b]) < points[third].dist(&points[a]) {
        b
    } else {
        a
    };
    theta[third] = direction(&points[third], &points[nearer])?;
    Ok(OrientationAssignment::new(FRAC_PI_2, theta, RADIUS_SMALL))
}

/// Residual subtree sizes; dead nodes get 0.
fn subtree_sizes(t: &RootedTree, alive: &[bool]) -> Vec<usize> {
    let mut size = vec![0; t.len()];
    for v in t.preorder().into_iter().rev() {
        if alive[v] {
            size[v] = 1 + t.children[v].iter().map(|&c| size[c]).sum::<usize>();
        }
    }
    size
}

fn residual_subtree(t: &RootedTree, alive: &[bool], v: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        out.push(u);
        stack.extend(t.children[u].iter().copied().filter(|&c| alive[c]));
    }
    out.sort_unstable();
    out
}

/// Repeatedly removes the deepest subtree with at least four nodes whose
/// child subtrees all have fewer than four.
pub fn extract_groups_90(t: &RootedTree) -> Extraction90 {
    let depth = t.depths();
    let mut alive = vec![true; t.len()];
    let mut groups = Vec::new();
    loop {
        let size = subtree_sizes(t, &alive);
        let pick = (0..t.len())
            .filter(|&v| {
                alive[v]
                    && size[v] >= GROUP_MIN
                    && t.children[v].iter().all(|&c| size[c] < GROUP_MIN)
            })
            .min_by(|&a, &b| depth[b].cmp(&depth[a]).then(a.cmp(&b)));
        let Some(v) = pick else { break };
        let members = residual_subtree(t, &alive, v);
        for &m in &members {
            alive[m] = false;
        }
        let representatives = representative_candidates(t, &members, v)
            .into_iter()
            .next()
            .map(|r| r.to_vec())
            .unwrap_or_default();
        groups.push(Group90 {
            subtree_root: v,
            members,
            representatives,
            attach_parent: (v != t.root).then(|| t.parent[v]),
        });
    }
    let remainder = (0..t.len()).filter(|&v| alive[v]).collect();
    Extraction90 { groups, remainder }
}

/// Hop distances between members along tree edges inside the group.
fn member_hops(t: &RootedTree, members: &[usize]) -> Vec<Vec<usize>> {
    let index = |v: usize| members.binary_search(&v).ok();
    let k = members.len();
    let mut hops = vec![vec![usize::MAX; k]; k];
    for (s, &src) in members.iter().enumerate() {
        hops[s][s] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let dv = hops[s][index(v).expect("member")];
            let up = (v != t.root).then(|| t.parent[v]);
            for u in t.children[v].iter().copied().chain(up) {
                if let Some(ui) = index(u) {
                    if hops[s][ui] == usize::MAX {
                        hops[s][ui] = dv + 1;
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    hops
}

/// (farthest member hops, representative hop diameter, sorted ids)
type RepRank = (usize, usize, [usize; 4]);

/// Every admissible representative set, best first: the subtree root plus
/// three members, ranked by (farthest member from its nearest representative,
/// representative hop diameter, sorted ids).
pub fn representative_candidates(t: &RootedTree, members: &[usize], subtree_root: usize) -> Vec<[usize; 4]> {
    if members.len() < GROUP_MIN {
        return Vec::new();
    }
    let hops = member_hops(t, members);
    let root_idx = members.binary_search(&subtree_root).expect("root is a member");
    let others: Vec<usize> = (0..members.len()).filter(|&i| i != root_idx).collect();
    let mut ranked: Vec<(RepRank, [usize; 4])> = Vec::new();
    for a in 0..others.len() {
        for b in a + 1..others.len() {
            for c in b + 1..others.len() {
                let reps = [root_idx, others[a], others[b], others[c]];
                let cover = (0..members.len())
                    .map(|m| reps.iter().map(|&r| hops[m][r]).min().unwrap_or(0))
                    .max()
                    .unwrap_or(0);
                let mut diam = 0;
                for i in 0..4 {
                    for j in i + 1..4 {
                        diam = diam.max(hops[reps[i]][reps[j]]);
                    }
                }
                let ids = reps.map(|i| members[i]);
                let mut sorted = ids;
                sorted.sort_unstable();
                ranked.push(((cover, diam, sorted), ids));
            }
        }
    }
    ranked.sort_by_key(|x| x.0);
    ranked.into_iter().map(|(_, ids)| ids).collect()
}

/// Best representative set for a group; see [`representative_candidates`].
pub fn choose_representatives(t: &RootedTree, members: &[usize], subtree_root: usize) -> Option<[usize; 4]> {
    representative_candidates(t, members, subtree_root).into_iter().next()
}

/// Picks the first representative set in general position and orients it;
/// if every set is degenerate, the first one the quadrant search can orient.
fn orient_representatives(points: &[Point], candidates: &[[usize; 4]]) -> Option<([usize; 4], [f64; 4])> {
    let quad = |ids: &[usize; 4]| -> [Point; 4] { ids.map(|i| points[i]) };
    for ids in candidates {
        let q = quad(ids);
        if classify_quad(&q) != QuadClass::Degenerate {
            if let Some(theta) = orient_four_any(&q) {
                return Some((*ids, theta));
            }
        }
    }
    candidates
        .iter()
        .find_map(|ids| search_thetas(&quad(ids)).map(|theta| (*ids, theta)))
}

#[derive(Debug, Clone)]
pub struct Plan90 {
    pub tree: Option<RootedTree>,
    pub groups: Vec<Group90>,
    pub remainder: Vec<usize>,
    /// Root of the group the remainder points at.
    pub remainder_target: Option<usize>,
    /// Representative diameter per group.
    pub rep_dmax: Vec<f64>,
    pub assignment: OrientationAssignment,
    /// Tighter radius expected when every node belongs to a full group.
    pub diagnostic_bound: Option<f64>,
}

fn closest(points: &[Point], from: usize, among: &[usize]) -> usize {
    *among
        .iter()
        .min_by(|&&a, &&b| {
            points[from]
                .dist(&points[a])
                .total_cmp(&points[from].dist(&points[b]))
                .then(a.cmp(&b))
        })
        .expect("non-empty")
}

/// Builds the 90° orientation without the final verification.
pub fn plan_90(points: &[Point]) -> Result<Plan90> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: points.len(),
        });
    }
    if points.len() <= 3 {
        let small = orient_small(points)?;
        return Ok(Plan90 {
            tree: None,
            groups: Vec::new(),
            remainder: (0..points.len()).collect(),
            remainder_target: None,
            rep_dmax: Vec::new(),
            assignment: OrientationAssignment::new(FRAC_PI_2, small.theta, RADIUS_90),
            diagnostic_bound: Some(RADIUS_SMALL),
        });
    }
    let tree = bounded_degree_mst(points)?;
    let Extraction90 {
        mut groups,
        remainder,
    } = extract_groups_90(&tree);
    let mut theta = vec![f64::NAN; points.len()];
    let mut rep_dmax = Vec::with_capacity(groups.len());
    for g in &mut groups {
        let candidates = representative_candidates(&tree, &g.members, g.subtree_root);
        let (reps, angles) = orient_representatives(points, &candidates)
            .ok_or(Error::ConstructionInvariantViolated { radius: RADIUS_90 })?;
        for (k, &r) in reps.iter().enumerate() {
            theta[r] = angles[k];
        }
        let mut dmax: f64 = 0.0;
        for i in 0..4 {
            for j in i + 1..4 {
                dmax = dmax.max(points[reps[i]].dist(&points[reps[j]]));
            }
        }
        rep_dmax.push(dmax);
        for &x in &g.members {
            if !reps.contains(&x) {
                let y = closest(points, x, &reps);
                theta[x] = direction(&points[x], &points[y])?;
            }
        }
        g.representatives = reps.to_vec();
    }
    let remainder_target = if remainder.is_empty() {
        None
    } else {
        let q = groups
            .iter()
            .rev()
            .find(|g| g.attach_parent.is_some_and(|a| remainder.contains(&a)))
            .map(|g| g.subtree_root)
            .ok_or(Error::ConstructionInvariantViolated { radius: RADIUS_90 })?;
        for &t in &remainder {
            theta[t] = direction(&points[t], &points[q])?;
        }
        Some(q)
    };
    debug_assert!(theta.iter().all(|t| t.is_finite()));
    Ok(Plan90 {
        tree: Some(tree),
        groups,
        diagnostic_bound: remainder.is_empty().then_some(RADIUS_90_FULL_GROUPS),
        remainder,
        remainder_target,
        rep_dmax,
        assignment: OrientationAssignment::new(FRAC_PI_2, theta, RADIUS_90),
    })
}

/// 90° orientation whose communication graph is strongly connected at radius 7.
pub fn orient_all_90(points: &[Point]) -> Result<OrientationAssignment> {
    let plan = plan_90(points)?;
    if !strong_at_radius(points, &plan.assignment, RADIUS_90)? {
        return Err(Error::ConstructionInvariantViolated { radius: RADIUS_90 });
    }
    Ok(plan.assignment)
}
