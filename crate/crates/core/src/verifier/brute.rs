//! Exhaustive orientation search for tiny point sets.
//!
//! The set of points a wedge covers is piecewise constant in its bisector
//! angle, changing only where a boundary ray sweeps over a point. Probing each
//! side of every such breakpoint, plus the directions to the points
//! themselves, therefore realizes every achievable coverage pattern.

use crate::error::{Error, Result};
use crate::geometry::{direction, Point, Wedge, EPS};
use crate::topology::validate_points;

pub const BRUTE_FORCE_LIMIT: usize = 5;

/// Offset used to step off a breakpoint onto either side.
pub const CANDIDATE_NUDGE: f64 = 1e-7;

/// Bisector candidates for the wedge at `points[i]`.
pub fn candidate_angles(points: &[Point], i: usize, alpha: f64) -> Vec<f64> {
    let mut out = Vec::new();
    for q in points {
        if q.id == i {
            continue;
        }
        let Ok(dir) = direction(&points[i], q) else {
            continue;
        };
        out.push(dir);
        for edge in [alpha / 2.0, -alpha / 2.0] {
            out.push(dir + edge + CANDIDATE_NUDGE);
            out.push(dir + edge - CANDIDATE_NUDGE);
        }
    }
    if out.is_empty() {
        out.push(0.0);
    }
    out
}

fn coverage_mask(points: &[Point], i: usize, theta: f64, alpha: f64, r: f64) -> u32 {
    let w = Wedge::new(points[i], theta, alpha, r);
    points
        .iter()
        .filter(|q| q.id != i && w.contains(q, EPS))
        .fold(0, |m, q| m | (1 << q.id))
}

/// Distinct coverage patterns for point `i`, dropping any pattern strictly
/// contained in another since extra edges never hurt strong connectivity.
fn maximal_patterns(points: &[Point], i: usize, alpha: f64, r: f64) -> Vec<(u32, f64)> {
    let mut patterns: Vec<(u32, f64)> = Vec::new();
    for theta in candidate_angles(points, i, alpha) {
        let m = coverage_mask(points, i, theta, alpha, r);
        if !patterns.iter().any(|&(p, _)| p == m) {
            patterns.push((m, theta));
        }
    }
    let all = patterns.clone();
    patterns.retain(|&(m, _)| !all.iter().any(|&(o, _)| o != m && o & m == m));
    patterns
}

fn reaches_all(masks: &[u32], forward: bool) -> bool {
    let n = masks.len();
    let full = (1u32 << n) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        for (v, &mask) in masks.iter().enumerate() {
            if forward {
                if frontier & (1 << v) != 0 {
                    next |= mask;
                }
            } else if mask & frontier != 0 {
                next |= 1 << v;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen & full == full
}

fn strongly_connected_masks(masks: &[u32]) -> bool {
    masks.len() <= 1 || (reaches_all(masks, true) && reaches_all(masks, false))
}

/// Searches every orientation of at most five antennas of aperture `alpha`
/// for one whose communication graph at radius `r` is strongly connected.
/// Returns the bisector angles of the first witness found.
pub fn feasible_by_bruteforce(points: &[Point], alpha: f64, r: f64) -> Result<Option<Vec<f64>>> {
    if points.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooManyPoints {
            limit: BRUTE_FORCE_LIMIT,
            got: points.len(),
        });
    }
    validate_points(points)?;
    let n = points.len();
    if n <= 1 {
        return Ok(Some(vec![0.0; n]));
    }
    let options: Vec<Vec<(u32, f64)>> = (0..n)
        .map(|i| maximal_patterns(points, i, alpha, r))
        .collect();
    if options.iter().any(|o| o.iter().all(|&(m, _)| m == 0)) {
        return Ok(None);
    }
    let mut choice = vec![0usize; n];
    loop {
        let masks: Vec<u32> = (0..n).map(|i| options[i][choice[i]].0).collect();
        if strongly_connected_masks(&masks) {
            return Ok(Some((0..n).map(|i| options[i][choice[i]].1).collect()));
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == n {
                return Ok(None);
            }
            choice[k] += 1;
            if choice[k] < options[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}
