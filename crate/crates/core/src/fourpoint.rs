//! Orientation of four 90° antennas so that the four points are strongly
//! connected at their diameter and the four wedges cover the whole plane.
//!
//! Both constructive cases work in a local frame whose x-axis runs along a
//! longest segment `ac`, and assign every antenna one of the four frame
//! quadrants. Reflections of the frame bring each configuration into the one
//! canonical layout handled by the rule, so the rule never needs a mirror case.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::assignment::OrientationAssignment;
use crate::error::{Error, Result};
use crate::geometry::{classify_quad, direction, normalize_angle, Point, QuadClass, Wedge};
use crate::verifier::{covers_plane, strong_at_radius};

const Q1: f64 = FRAC_PI_4;
const Q2: f64 = 3.0 * FRAC_PI_4;
const Q3: f64 = 5.0 * FRAC_PI_4;
const Q4: f64 = 7.0 * FRAC_PI_4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourCase {
    Convex,
    NonConvex,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourPointResult {
    /// Bisector per input position.
    pub theta: [f64; 4],
    /// Maximum pairwise distance of the four points.
    pub dmax: f64,
    pub case: FourCase,
    /// Set when the constructive rule failed verification and the search was used.
    pub searched: bool,
}

/// Orthonormal (possibly mirrored) frame anchored at `origin`.
#[derive(Debug, Clone, Copy)]
struct Frame {
    origin: (f64, f64),
    ex: (f64, f64),
    ey: (f64, f64),
}

impl Frame {
    fn along(from: &Point, to: &Point) -> Self {
        let len = from.dist(to);
        let ex = ((to.x - from.x) / len, (to.y - from.y) / len);
        Frame {
            origin: (from.x, from.y),
            ex,
            ey: (-ex.1, ex.0),
        }
    }

    fn local(&self, p: &Point) -> (f64, f64) {
        let (dx, dy) = (p.x - self.origin.0, p.y - self.origin.1);
        (dx * self.ex.0 + dy * self.ex.1, dx * self.ey.0 + dy * self.ey.1)
    }

    fn flip_vertical(&mut self) {
        self.ey = (-self.ey.0, -self.ey.1);
    }

    /// Mirror across the perpendicular bisector of the base segment ending at `far`.
    fn flip_horizontal(&mut self, far: &Point) {
        self.origin = (far.x, far.y);
        self.ex = (-self.ex.0, -self.ex.1);
    }

    fn world_angle(&self, local: f64) -> f64 {
        let (c, s) = (local.cos(), local.sin());
        let vx = c * self.ex.0 + s * self.ey.0;
        let vy = c * self.ex.1 + s * self.ey.1;
        normalize_angle(vy.atan2(vx))
    }
}

fn diameter(p: &[Point; 4]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..4 {
        for j in i + 1..4 {
            d = d.max(p[i].dist(&p[j]));
        }
    }
    d
}

fn relabel(p: &[Point; 4]) -> [Point; 4] {
    std::array::from_fn(|i| Point::new(i, p[i].x, p[i].y))
}

/// Strong connectivity at `dmax` and directional plane coverage.
pub fn verify_four(p: &[Point; 4], theta: &[f64; 4], dmax: f64) -> bool {
    let local = relabel(p);
    let a = OrientationAssignment::new(FRAC_PI_2, theta.to_vec(), dmax);
    let strong = strong_at_radius(&local, &a, dmax).unwrap_or(false);
    if !strong {
        return false;
    }
    let wedges: Vec<Wedge> = (0..4)
        .map(|i| Wedge::new(local[i], theta[i], FRAC_PI_2, dmax))
        .collect();
    covers_plane(&wedges)
}

fn convex_rule(p: &[Point; 4], hull: [usize; 4]) -> [f64; 4] {
    let d02 = p[hull[0]].dist(&p[hull[2]]);
    let d13 = p[hull[1]].dist(&p[hull[3]]);
    let (ia, ic, ip, iq) = if d02 >= d13 {
        (hull[0], hull[2], hull[1], hull[3])
    } else {
        (hull[1], hull[3], hull[0], hull[2])
    };
    let mut frame = Frame::along(&p[ia], &p[ic]);
    let len = p[ia].dist(&p[ic]);
    // the off-diagonal point whose projection lands on ac goes below the axis
    let slack = |i: usize| {
        let x = frame.local(&p[i]).0;
        (-x).max(x - len).max(0.0)
    };
    let (down, up) = if slack(ip) <= slack(iq) { (ip, iq) } else { (iq, ip) };
    if frame.local(&p[down]).1 > 0.0 {
        frame.flip_vertical();
    }
    let (mut a, mut c) = (ia, ic);
    if frame.local(&p[up]).0 < frame.local(&p[down]).0 {
        frame.flip_horizontal(&p[ic]);
        std::mem::swap(&mut a, &mut c);
    }
    let mut theta = [0.0; 4];
    theta[a] = frame.world_angle(Q4);
    theta[c] = frame.world_angle(Q2);
    theta[down] = frame.world_angle(Q1);
    theta[up] = frame.world_angle(Q3);
    theta
}

fn nonconvex_rule(p: &[Point; 4], outer: [usize; 3], inner: usize) -> [f64; 4] {
    let edges = [(outer[0], outer[1], outer[2]), (outer[1], outer[2], outer[0]), (outer[2], outer[0], outer[1])];
    let (mut a, mut c, b) = edges
        .into_iter()
        .fold(None::<(usize, usize, usize)>, |best, e| match best {
            Some(cur) if p[cur.0].dist(&p[cur.1]) >= p[e.0].dist(&p[e.1]) => Some(cur),
            _ => Some(e),
        })
        .expect("three edges");
    let mut frame = Frame::along(&p[a], &p[c]);
    if frame.local(&p[b]).1 < 0.0 {
        frame.flip_vertical();
    }
    if frame.local(&p[inner]).0 > frame.local(&p[b]).0 {
        frame.flip_horizontal(&p[c]);
        std::mem::swap(&mut a, &mut c);
    }
    let mut theta = [0.0; 4];
    theta[a] = frame.world_angle(Q1);
    theta[b] = frame.world_angle(Q3);
    theta[c] = frame.world_angle(Q2);
    theta[inner] = frame.world_angle(Q4);
    theta
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let v = [a, b, c, d];
                    if (0..4).all(|k| v.contains(&k)) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// Exhaustive search over quadrant tilings. Four 90° wedges can only cover
/// every far direction by tiling the circle, so all four share a frame
/// rotation; every coverage and connectivity predicate flips only when that
/// rotation is aligned with some pair direction (mod 90°), and all predicates
/// are closed, so those rotations suffice. Works for degenerate inputs too.
pub(crate) fn search_thetas(p: &[Point; 4]) -> Option<[f64; 4]> {
    let dmax = diameter(p);
    let mut rotations: Vec<f64> = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            if let Ok(d) = direction(&p[i], &p[j]) {
                rotations.push(d.rem_euclid(FRAC_PI_2));
            }
        }
    }
    rotations.sort_by(f64::total_cmp);
    rotations.dedup_by(|b, a| (*b - *a).abs() < 1e-12);
    for phi in rotations {
        for perm in permutations4() {
            let theta: [f64; 4] =
                std::array::from_fn(|i| normalize_angle(phi + FRAC_PI_4 + perm[i] as f64 * FRAC_PI_2));
            if verify_four(p, &theta, dmax) {
                return Some(theta);
            }
        }
    }
    None
}

fn case_of(class: QuadClass) -> Result<FourCase> {
    match class {
        QuadClass::ConvexOrdered(_) => Ok(FourCase::Convex),
        QuadClass::TriangleWithInterior { .. } => Ok(FourCase::NonConvex),
        QuadClass::Degenerate => Err(Error::NotGeneralPosition),
    }
}

/// Constructive orientation of four points in general position, falling back
/// to [`search_orient_four`] if the construction does not verify.
pub fn orient_four(p: &[Point; 4]) -> Result<FourPointResult> {
    let class = classify_quad(p);
    let case = case_of(class)?;
    let theta = match class {
        QuadClass::ConvexOrdered(hull) => convex_rule(p, hull),
        QuadClass::TriangleWithInterior { outer, inner } => nonconvex_rule(p, outer, inner),
        QuadClass::Degenerate => unreachable!(),
    };
    let dmax = diameter(p);
    if verify_four(p, &theta, dmax) {
        return Ok(FourPointResult {
            theta,
            dmax,
            case,
            searched: false,
        });
    }
    search_orient_four(p)
}

pub fn search_orient_four(p: &[Point; 4]) -> Result<FourPointResult> {
    let case = case_of(classify_quad(p))?;
    let theta = search_thetas(p).ok_or(Error::SearchExhausted)?;
    Ok(FourPointResult {
        theta,
        dmax: diameter(p),
        case,
        searched: true,
    })
}

/// Orientation for any four distinct points, including collinear ones.
pub(crate) fn orient_four_any(p: &[Point; 4]) -> Option<[f64; 4]> {
    match orient_four(p) {
        Ok(res) => Some(res.theta),
        Err(Error::NotGeneralPosition) => search_thetas(p),
        Err(_) => None,
    }
}
