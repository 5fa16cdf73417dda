//! Exact plane-coverage decision for a set of unbounded wedges (cones).
//!
//! Coverage is constant on every open face of the arrangement formed by the
//! wedge boundary lines, so it suffices to test one interior point per face.
//! Each face is reached by offsetting an edge sample of one of its bounding
//! lines by less than the distance to every other line.

use std::f64::consts::TAU;

use crate::geometry::{angular_distance, normalize_angle, Wedge, EPS};

/// True when the angular intervals `[θ − α/2, θ + α/2]` cover the full circle.
pub fn covers_far_field(wedges: &[Wedge]) -> bool {
    if wedges.iter().any(|w| w.alpha >= TAU - EPS) {
        return true;
    }
    let mut spans: Vec<(f64, f64)> = Vec::new();
    for w in wedges {
        let start = normalize_angle(w.theta - w.alpha / 2.0 - EPS);
        let end = start + w.alpha + 2.0 * EPS;
        if end > TAU {
            spans.push((start, TAU));
            spans.push((0.0, end - TAU));
        } else {
            spans.push((start, end));
        }
    }
    spans.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut reach = 0.0;
    for (s, e) in spans {
        if s > reach {
            return false;
        }
        reach = f64::max(reach, e);
    }
    reach >= TAU
}

#[derive(Debug, Clone, Copy)]
struct Line {
    px: f64,
    py: f64,
    dx: f64,
    dy: f64,
}

impl Line {
    fn at(&self, t: f64) -> (f64, f64) {
        (self.px + t * self.dx, self.py + t * self.dy)
    }

    fn distance_to(&self, x: f64, y: f64) -> f64 {
        ((x - self.px) * self.dy - (y - self.py) * self.dx).abs()
    }

    fn same_as(&self, other: &Line) -> bool {
        (self.dx * other.dy - self.dy * other.dx).abs() < 1e-12
            && self.distance_to(other.px, other.py) < EPS
    }

    /// Parameter along `self` where it meets `other`, unless parallel.
    fn meet(&self, other: &Line) -> Option<f64> {
        let denom = self.dx * other.dy - self.dy * other.dx;
        if denom.abs() < 1e-12 {
            return None;
        }
        let (qx, qy) = (other.px - self.px, other.py - self.py);
        Some((qx * other.dy - qy * other.dx) / denom)
    }
}

/// Closed cone membership; unlike communication coverage, the apex counts.
fn cone_covers(w: &Wedge, x: f64, y: f64) -> bool {
    let (vx, vy) = (x - w.apex.x, y - w.apex.y);
    if vx.hypot(vy) <= EPS || w.alpha >= TAU - EPS {
        return true;
    }
    angular_distance(vy.atan2(vx), w.theta) <= w.alpha / 2.0 + EPS
}

fn boundary_lines(wedges: &[Wedge]) -> Vec<Line> {
    let mut lines: Vec<Line> = Vec::new();
    for w in wedges {
        if w.alpha >= TAU - EPS {
            continue;
        }
        let (lo, hi) = w.boundary_directions();
        for dir in [lo, hi] {
            let line = Line {
                px: w.apex.x,
                py: w.apex.y,
                dx: dir.cos(),
                dy: dir.sin(),
            };
            if !lines.iter().any(|l| l.same_as(&line)) {
                lines.push(line);
            }
        }
    }
    lines
}

/// One point inside every open face of the arrangement, plus edge and vertex samples.
fn arrangement_samples(lines: &[Line]) -> Vec<(f64, f64)> {
    let mut samples = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let mut ts: Vec<f64> = lines
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .filter_map(|(_, other)| line.meet(other))
            .collect();
        ts.sort_by(f64::total_cmp);
        ts.dedup_by(|b, a| (*b - *a).abs() <= EPS);

        let mut edge_params = Vec::new();
        match (ts.first(), ts.last()) {
            (Some(&first), Some(&last)) => {
                edge_params.push(first - 1.0);
                edge_params.push(last + 1.0);
                for pair in ts.windows(2) {
                    edge_params.push(0.5 * (pair[0] + pair[1]));
                }
                samples.extend(ts.iter().map(|&t| line.at(t)));
            }
            _ => edge_params.push(0.0),
        }

        for t in edge_params {
            let (mx, my) = line.at(t);
            samples.push((mx, my));
            let clearance = lines
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, other)| other.distance_to(mx, my))
                .fold(f64::INFINITY, f64::min);
            let delta = (0.5 * clearance).min(1.0);
            let (nx, ny) = (-line.dy, line.dx);
            samples.push((mx + delta * nx, my + delta * ny));
            samples.push((mx - delta * nx, my - delta * ny));
        }
    }
    samples
}

/// Whether the union of the wedges, taken as unbounded closed cones, is the
/// whole plane. Radii are ignored.
pub fn covers_plane(wedges: &[Wedge]) -> bool {
    if wedges.is_empty() || !covers_far_field(wedges) {
        return false;
    }
    if wedges.iter().any(|w| w.alpha >= TAU - EPS) {
        return true;
    }
    let lines = boundary_lines(wedges);
    arrangement_samples(&lines)
        .into_iter()
        .all(|(x, y)| wedges.iter().any(|w| cone_covers(w, x, y)))
}
