//! 180° antennas: strong connectivity at radius `1 + √3`.
//!
//! The spanning tree is cut into groups, each a height-one node of the
//! residual tree together with its children. Inside a group the parent `p` is
//! paired with an anchor child: both wedges are half-planes whose boundaries
//! are parallel, facing opposite ways, so together they cover the plane and
//! see each other. Remaining children are either paired among themselves the
//! same way (smallest angle at `p` first) or, when exactly one is left over
//! next to the anchor, share the anchor's half-plane.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::assignment::OrientationAssignment;
use crate::error::{Error, Result};
use crate::geometry::{angular_distance, cross, direction, Point, EPS};
use crate::topology::{bounded_degree_mst, RootedTree};
use crate::verifier::strong_at_radius;

pub const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Radius at which every 180° construction is strongly connected.
pub const RADIUS_180: f64 = 1.0 + SQRT_3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group180 {
    pub parent: usize,
    /// Children of `parent` still present when the group was removed.
    pub members: Vec<usize>,
    /// Tree parent of `parent`, if any.
    pub attached_above: Option<usize>,
}

impl Group180 {
    pub fn size(&self) -> usize {
        1 + self.members.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role180 {
    Parent,
    /// Child sharing the complementary half-plane pair with the parent.
    Anchor { partner: usize },
    /// Child oriented like the anchor.
    TripletChild { anchor: usize },
    /// Child paired with a sibling along their common segment.
    PairedChild { partner: usize },
}

/// Removes groups bottom-up: the smallest-id height-one node of the residual
/// tree together with its remaining children, until at most one node is left.
/// A leftover root becomes a singleton group.
pub fn partition_groups_180(t: &RootedTree) -> Vec<Group180> {
    let n = t.len();
    let mut alive = vec![true; n];
    let mut child_count: Vec<usize> = t.children.iter().map(Vec::len).collect();
    // children that are not leaves in the residual tree
    let mut inner_children: Vec<usize> = (0..n)
        .map(|v| t.children[v].iter().filter(|&&c| !t.children[c].is_empty()).count())
        .collect();
    let height_one = |v: usize, cc: &[usize], ic: &[usize]| cc[v] > 0 && ic[v] == 0;
    let mut ready: std::collections::BTreeSet<usize> = (0..n)
        .filter(|&v| height_one(v, &child_count, &inner_children))
        .collect();

    let mut groups = Vec::new();
    let mut remaining = n;
    while remaining > 1 {
        let v = *ready.iter().next().expect("a tree with two or more nodes has a height-one node");
        ready.remove(&v);
        let members: Vec<usize> = t.children[v].iter().copied().filter(|&c| alive[c]).collect();
        for &c in &members {
            alive[c] = false;
        }
        alive[v] = false;
        remaining -= 1 + members.len();
        let attached_above = (v != t.root).then(|| t.parent[v]);
        if let Some(u) = attached_above {
            // v was an inner child of u
            child_count[u] -= 1;
            inner_children[u] -= 1;
            if child_count[u] == 0 && u != t.root {
                // u became a leaf
                let w = t.parent[u];
                inner_children[w] -= 1;
                if height_one(w, &child_count, &inner_children) {
                    ready.insert(w);
                }
            }
            if height_one(u, &child_count, &inner_children) {
                ready.insert(u);
            } else {
                ready.remove(&u);
            }
        }
        groups.push(Group180 {
            parent: v,
            members,
            attached_above,
        });
    }
    if remaining == 1 {
        groups.push(Group180 {
            parent: t.root,
            members: Vec::new(),
            attached_above: None,
        });
    }
    groups
}

/// The two children forming the smallest angle at `p`; ties go to the
/// lexicographically smallest id pair.
pub fn pair_smallest_angle(p: &Point, children: &[Point]) -> Result<(usize, usize)> {
    if children.len() < 2 {
        return Err(Error::InvalidParameter(
            "pairing needs at least two children".into(),
        ));
    }
    let dirs: Vec<f64> = children
        .iter()
        .map(|c| direction(p, c))
        .collect::<Result<_>>()?;
    let mut best: Option<(f64, (usize, usize))> = None;
    for i in 0..children.len() {
        for j in i + 1..children.len() {
            let angle = angular_distance(dirs[i], dirs[j]);
            let (a, b) = (children[i].id, children[j].id);
            let ids = (a.min(b), a.max(b));
            best = match best {
                Some((ba, bids)) if ba < angle - EPS || ((ba - angle).abs() <= EPS && bids <= ids) => {
                    Some((ba, bids))
                }
                _ => Some((angle, ids)),
            };
        }
    }
    Ok(best.expect("at least one pair").1)
}

pub fn assign_roles(points: &[Point], group: &Group180) -> Result<Vec<(usize, Role180)>> {
    let p = group.parent;
    let mut roles = vec![(p, Role180::Parent)];
    let mut rest = group.members.clone();
    while rest.len() >= 3 {
        let kids: Vec<Point> = rest.iter().map(|&c| points[c]).collect();
        let (a, b) = pair_smallest_angle(&points[p], &kids)?;
        roles.push((a, Role180::PairedChild { partner: b }));
        roles.push((b, Role180::PairedChild { partner: a }));
        rest.retain(|&c| c != a && c != b);
    }
    rest.sort_unstable();
    match rest.as_slice() {
        [] => {}
        [c1] => roles.push((*c1, Role180::Anchor { partner: p })),
        [c1, c2] => {
            roles.push((*c1, Role180::Anchor { partner: p }));
            roles.push((*c2, Role180::TripletChild { anchor: *c1 }));
        }
        _ => unreachable!(),
    }
    Ok(roles)
}

/// Bisectors for one group, in the order of `roles`.
fn orient_group(points: &[Point], roles: &[(usize, Role180)]) -> Result<Vec<(usize, f64)>> {
    let p = roles[0].0;
    let mut out = Vec::with_capacity(roles.len());
    if roles.len() == 1 {
        out.push((p, 3.0 * FRAC_PI_2));
        return Ok(out);
    }
    let anchor = roles
        .iter()
        .find_map(|&(id, r)| matches!(r, Role180::Anchor { .. }).then_some(id));
    let triplet = roles
        .iter()
        .find_map(|&(id, r)| matches!(r, Role180::TripletChild { .. }).then_some(id));
    if let Some(c1) = anchor {
        let base = direction(&points[p], &points[c1])?;
        let left = match triplet {
            Some(c2) => {
                let (pp, a, b) = (&points[p], &points[c1], &points[c2]);
                cross(pp, a, b) >= -EPS * pp.dist(a) * pp.dist(b)
            }
            None => true,
        };
        let theta_p = if left { base + FRAC_PI_2 } else { base - FRAC_PI_2 };
        out.push((p, theta_p));
        out.push((c1, theta_p + PI));
        if let Some(c2) = triplet {
            out.push((c2, theta_p + PI));
        }
    }
    for &(id, role) in roles {
        if let Role180::PairedChild { partner } = role {
            if id < partner {
                let theta = direction(&points[id], &points[partner])? + FRAC_PI_2;
                out.push((id, theta));
                out.push((partner, theta + PI));
            }
        }
    }
    Ok(out)
}

/// Everything the 180° construction decided, for inspection and tests.
#[derive(Debug, Clone)]
pub struct Plan180 {
    pub tree: RootedTree,
    pub groups: Vec<Group180>,
    pub roles: Vec<Vec<(usize, Role180)>>,
    pub assignment: OrientationAssignment,
}

/// Builds the 180° orientation without the final verification.
pub fn plan_180(points: &[Point]) -> Result<Plan180> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: points.len(),
        });
    }
    let tree = bounded_degree_mst(points)?;
    let groups = partition_groups_180(&tree);
    let mut theta = vec![f64::NAN; points.len()];
    let mut roles = Vec::with_capacity(groups.len());
    for g in &groups {
        let r = assign_roles(points, g)?;
        for (id, angle) in orient_group(points, &r)? {
            theta[id] = angle;
        }
        roles.push(r);
    }
    debug_assert!(theta.iter().all(|t| t.is_finite()));
    Ok(Plan180 {
        tree,
        groups,
        roles,
        assignment: OrientationAssignment::new(PI, theta, RADIUS_180),
    })
}

/// 180° orientation whose communication graph is strongly connected at `1 + √3`.
pub fn orient_all_180(points: &[Point]) -> Result<OrientationAssignment> {
    let plan = plan_180(points)?;
    if !strong_at_radius(points, &plan.assignment, RADIUS_180)? {
        return Err(Error::ConstructionInvariantViolated { radius: RADIUS_180 });
    }
    Ok(plan.assignment)
}
