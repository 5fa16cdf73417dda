//! Planar primitives: points, directions, wedges and quadrilateral classification.
//!
//! All predicates are closed with an absolute tolerance of [`EPS`] on distances
//! and angles, so points placed exactly on a wedge boundary by a construction
//! stay covered under floating-point error.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Absolute tolerance for closed-boundary membership.
pub const EPS: f64 = 1e-9;

/// Relative threshold for the collinearity test in [`classify_quad`].
pub const COLLINEAR_REL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub id: usize,
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(id: usize, x: f64, y: f64) -> Self {
        Point { id, x, y }
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn same_position(&self, other: &Point) -> bool {
        self.x == other.x && self.y == other.y
    }
}

/// Maps any finite angle into `[0, 2π)`.
pub fn normalize_angle(angle: f64) -> f64 {
    let r = angle.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Absolute circular difference between two angles, in `[0, π]`.
pub fn angular_distance(a: f64, b: f64) -> f64 {
    // subtract in a fixed order so the result is exactly symmetric
    let d = (a.max(b) - a.min(b)).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Direction of the vector `b - a`, counterclockwise from the positive x-axis.
pub fn direction(a: &Point, b: &Point) -> Result<f64> {
    if a.same_position(b) {
        return Err(Error::CoincidentPoints(a.id, b.id));
    }
    Ok(normalize_angle((b.y - a.y).atan2(b.x - a.x)))
}

/// Counterclockwise angle swept from direction `from` to direction `to`.
pub fn ccw_angle_between(from: f64, to: f64) -> f64 {
    normalize_angle(to - from)
}

/// Twice the signed area of triangle `o, a, b`; positive when counterclockwise.
pub fn cross(o: &Point, a: &Point, b: &Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// A circular sector anchored at `apex`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wedge {
    pub apex: Point,
    /// Bisector direction in `[0, 2π)`.
    pub theta: f64,
    /// Aperture in `(0, 2π]`.
    pub alpha: f64,
    pub r: f64,
}

impl Wedge {
    pub fn new(apex: Point, theta: f64, alpha: f64, r: f64) -> Self {
        Wedge {
            apex,
            theta: normalize_angle(theta),
            alpha,
            r,
        }
    }

    /// Angular membership only, as if the radius were infinite.
    pub fn covers_direction(&self, q: &Point, eps: f64) -> bool {
        if q.same_position(&self.apex) {
            return false;
        }
        if self.alpha >= TAU - eps {
            return true;
        }
        let dir = (q.y - self.apex.y).atan2(q.x - self.apex.x);
        angular_distance(dir, self.theta) <= self.alpha / 2.0 + eps
    }

    pub fn contains(&self, q: &Point, eps: f64) -> bool {
        point_in_wedge(self, q, eps)
    }

    /// Boundary rays as directions `(theta - alpha/2, theta + alpha/2)`.
    pub fn boundary_directions(&self) -> (f64, f64) {
        (
            normalize_angle(self.theta - self.alpha / 2.0),
            normalize_angle(self.theta + self.alpha / 2.0),
        )
    }
}

/// Closed wedge membership with tolerance `eps`. The apex never covers itself.
pub fn point_in_wedge(w: &Wedge, q: &Point, eps: f64) -> bool {
    if q.same_position(&w.apex) {
        return false;
    }
    if w.apex.dist(q) > w.r + eps {
        return false;
    }
    w.covers_direction(q, eps)
}

/// Orthogonal projection of `q` onto line `ab`, as the parameter `t` with
/// `t = 0` at `a` and `t = 1` at `b`, plus whether it falls on the segment.
pub fn project_onto_segment(q: &Point, a: &Point, b: &Point) -> Result<(f64, bool)> {
    if a.same_position(b) {
        return Err(Error::CoincidentPoints(a.id, b.id));
    }
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let t = ((q.x - a.x) * dx + (q.y - a.y) * dy) / (dx * dx + dy * dy);
    Ok((t, (0.0..=1.0).contains(&t)))
}

/// Whether closed segments `ab` and `cd` share a point. Orientation tests use
/// `eps` relative to the squared segment scale.
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let scale = [a.dist(b), c.dist(d)].into_iter().fold(0.0, f64::max);
    let tol = EPS * scale * scale;
    let sign = |v: f64| {
        if v > tol {
            1
        } else if v < -tol {
            -1
        } else {
            0
        }
    };
    let d1 = sign(cross(c, d, a));
    let d2 = sign(cross(c, d, b));
    let d3 = sign(cross(a, b, c));
    let d4 = sign(cross(a, b, d));
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    let within = |p: &Point, s: &Point, e: &Point| {
        p.x >= s.x.min(e.x) - EPS
            && p.x <= s.x.max(e.x) + EPS
            && p.y >= s.y.min(e.y) - EPS
            && p.y <= s.y.max(e.y) + EPS
    };
    (d1 == 0 && within(a, c, d))
        || (d2 == 0 && within(b, c, d))
        || (d3 == 0 && within(c, a, b))
        || (d4 == 0 && within(d, a, b))
}

/// Shape of four points, by position in the input slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadClass {
    /// All four on the hull, listed clockwise starting from the lowest index.
    ConvexOrdered([usize; 4]),
    /// Three hull points (clockwise, lowest index first) and one strictly inside.
    TriangleWithInterior { outer: [usize; 3], inner: usize },
    /// Duplicate points or three (near-)collinear points.
    Degenerate,
}

fn bbox_diagonal(pts: &[Point]) -> f64 {
    let (mut lx, mut ly, mut hx, mut hy) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in pts {
        lx = lx.min(p.x);
        ly = ly.min(p.y);
        hx = hx.max(p.x);
        hy = hy.max(p.y);
    }
    (hx - lx).hypot(hy - ly)
}

/// True when some three of `pts` are collinear under the relative threshold.
pub fn has_collinear_triple(pts: &[Point]) -> bool {
    let diag = bbox_diagonal(pts);
    let tol = COLLINEAR_REL * diag * diag;
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if cross(&pts[i], &pts[j], &pts[k]).abs() < tol {
                    return true;
                }
            }
        }
    }
    false
}

fn clockwise_from_first(pts: &[Point], idx: &[usize]) -> Vec<usize> {
    let cx = idx.iter().map(|&i| pts[i].x).sum::<f64>() / idx.len() as f64;
    let cy = idx.iter().map(|&i| pts[i].y).sum::<f64>() / idx.len() as f64;
    let ang = |i: usize| (pts[i].y - cy).atan2(pts[i].x - cx);
    let mut sorted: Vec<usize> = idx.to_vec();
    sorted.sort();
    let start = sorted[0];
    let a0 = ang(start);
    sorted.sort_by(|&i, &j| {
        let oi = (a0 - ang(i)).rem_euclid(TAU);
        let oj = (a0 - ang(j)).rem_euclid(TAU);
        let oi = if i == start { 0.0 } else { oi };
        let oj = if j == start { 0.0 } else { oj };
        oi.total_cmp(&oj).then(i.cmp(&j))
    });
    sorted
}

pub fn classify_quad(p: &[Point; 4]) -> QuadClass {
    let diag = bbox_diagonal(p);
    if diag == 0.0 {
        return QuadClass::Degenerate;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i].dist(&p[j]) <= EPS {
                return QuadClass::Degenerate;
            }
        }
    }
    if has_collinear_triple(p) {
        return QuadClass::Degenerate;
    }
    for inner in 0..4 {
        let outer: Vec<usize> = (0..4).filter(|&k| k != inner).collect();
        let (a, b, c) = (&p[outer[0]], &p[outer[1]], &p[outer[2]]);
        let s1 = cross(a, b, &p[inner]).signum();
        let s2 = cross(b, c, &p[inner]).signum();
        let s3 = cross(c, a, &p[inner]).signum();
        if s1 == s2 && s2 == s3 {
            let cw = clockwise_from_first(p, &outer);
            return QuadClass::TriangleWithInterior {
                outer: [cw[0], cw[1], cw[2]],
                inner,
            };
        }
    }
    let cw = clockwise_from_first(p, &[0, 1, 2, 3]);
    QuadClass::ConvexOrdered([cw[0], cw[1], cw[2], cw[3]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn pt(id: usize, x: f64, y: f64) -> Point {
        Point::new(id, x, y)
    }

    #[test]
    fn direction_examples() {
        assert_eq!(direction(&pt(0, 0.0, 0.0), &pt(1, 1.0, 0.0)).unwrap(), 0.0);
        assert_eq!(
            direction(&pt(0, 0.0, 0.0), &pt(1, 0.0, 1.0)).unwrap(),
            FRAC_PI_2
        );
        let d = direction(&pt(0, 1.0, 1.0), &pt(1, 0.0, 0.0)).unwrap();
        assert!((d - 5.0 * PI / 4.0).abs() < 1e-15);
        assert_eq!(
            direction(&pt(0, 2.0, 2.0), &pt(1, 2.0, 2.0)),
            Err(Error::CoincidentPoints(0, 1))
        );
    }

    #[test]
    fn wedge_membership_examples() {
        let w = Wedge::new(pt(0, 0.0, 0.0), 0.0, FRAC_PI_2, 1.0);
        assert!(point_in_wedge(&w, &pt(1, 1.0, 0.0), EPS));
        assert!(point_in_wedge(&w, &pt(1, 0.5, 0.5), EPS));
        assert!(!point_in_wedge(&w, &pt(1, 0.8, 0.8), EPS));
        assert!(!point_in_wedge(&w, &pt(1, 0.0, 0.0), EPS));
        assert!(!point_in_wedge(&w, &pt(1, -0.5, 0.1), EPS));
    }

    #[test]
    fn full_aperture_is_a_disk() {
        let w = Wedge::new(pt(0, 0.0, 0.0), 1.0, TAU, 2.0);
        assert!(w.contains(&pt(1, -1.9, 0.0), EPS));
        assert!(!w.contains(&pt(1, -2.1, 0.0), EPS));
    }

    #[test]
    fn wrapped_bisector() {
        // bisector just below 2π still covers directions slightly above 0
        let w = Wedge::new(pt(0, 0.0, 0.0), -0.1, FRAC_PI_2, 5.0);
        assert!(w.theta > 6.0);
        assert!(w.contains(&pt(1, 1.0, 0.5), EPS));
        assert!(!w.contains(&pt(1, 0.0, 1.0), EPS));
    }

    #[test]
    fn classify_examples() {
        let sq = [pt(0, 0.0, 1.0), pt(1, 1.0, 1.0), pt(2, 1.0, 0.0), pt(3, 0.0, 0.0)];
        assert_eq!(classify_quad(&sq), QuadClass::ConvexOrdered([0, 1, 2, 3]));

        let tri = [pt(0, 0.0, 0.0), pt(1, 2.0, 2.0), pt(2, 4.0, 0.0), pt(3, 2.0, 1.0)];
        match classify_quad(&tri) {
            QuadClass::TriangleWithInterior { outer, inner } => {
                assert_eq!(inner, 3);
                let mut o = outer.to_vec();
                o.sort();
                assert_eq!(o, vec![0, 1, 2]);
                // clockwise: (0,0) -> (2,2) -> (4,0)
                assert_eq!(outer, [0, 1, 2]);
            }
            other => panic!("unexpected {other:?}"),
        }

        let line = [pt(0, 0.0, 0.0), pt(1, 1.0, 0.0), pt(2, 2.0, 0.0), pt(3, 3.0, 0.0)];
        assert_eq!(classify_quad(&line), QuadClass::Degenerate);
    }

    #[test]
    fn near_collinear_is_degenerate() {
        let q = [pt(0, 0.0, 0.0), pt(1, 1.0, 1e-12), pt(2, 2.0, 0.0), pt(3, 1.0, 3.0)];
        assert_eq!(classify_quad(&q), QuadClass::Degenerate);
    }

    #[test]
    fn projection_examples() {
        let a = pt(0, 0.0, 0.0);
        let b = pt(1, 1.0, 0.0);
        assert_eq!(project_onto_segment(&pt(2, 0.5, 3.0), &a, &b).unwrap(), (0.5, true));
        assert_eq!(project_onto_segment(&pt(2, 2.0, 1.0), &a, &b).unwrap(), (2.0, false));
        assert_eq!(project_onto_segment(&pt(2, 0.0, 5.0), &a, &b).unwrap(), (0.0, true));
        assert!(project_onto_segment(&pt(2, 0.0, 5.0), &a, &a).is_err());
    }

    #[test]
    fn ccw_angle_examples() {
        assert_eq!(ccw_angle_between(0.0, FRAC_PI_2), FRAC_PI_2);
        assert!((ccw_angle_between(FRAC_PI_2, 0.0) - 3.0 * FRAC_PI_2).abs() < 1e-15);
        assert_eq!(ccw_angle_between(1.0, 1.0), 0.0);
    }

    #[test]
    fn segment_intersection_cases() {
        let o = pt(0, 0.0, 0.0);
        assert!(segments_intersect(&o, &pt(1, 2.0, 2.0), &pt(2, 0.0, 2.0), &pt(3, 2.0, 0.0)));
        assert!(!segments_intersect(&o, &pt(1, 1.0, 0.0), &pt(2, 2.0, 0.0), &pt(3, 3.0, 0.0)));
        assert!(segments_intersect(&o, &pt(1, 2.0, 0.0), &pt(2, 1.0, 0.0), &pt(3, 3.0, 0.0)));
        assert!(!segments_intersect(&o, &pt(1, 1.0, 0.0), &pt(2, 0.0, 1.0), &pt(3, 1.0, 1.0)));
    }

    #[test]
    fn normalize_handles_tiny_negative() {
        let a = normalize_angle(-1e-17);
        assert!((0.0..TAU).contains(&a));
    }
}
