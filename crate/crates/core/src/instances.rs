//! Lower-bound point sets and random test instances.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Point, Wedge, EPS};
use crate::orient180::SQRT_3;
use crate::verifier::candidate_angles;

/// Points `(i, 0)` for `i = 0..n`.
pub fn collinear_witness(n: usize) -> Result<Vec<Point>> {
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    Ok((0..n).map(|i| Point::new(i, i as f64, 0.0)).collect())
}

/// Tripod on the hexagonal lattice showing that half-plane antennas need
/// radius at least √3.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness180 {
    pub points: Vec<Point>,
    /// The degree-three center.
    pub p_id: usize,
    /// The arm cut off from the center.
    pub left_set: Vec<usize>,
    /// The center and the two remaining arms.
    pub right_set: Vec<usize>,
}

/// Center at the origin with unit neighbors at 90°, 210° and 330°; each arm
/// continues for `arm_length` more unit edges, turning right and left by 60°
/// in turn so every pair of adjacent edges meets at 120°.
pub fn witness_180(arm_length: usize) -> Result<Witness180> {
    if arm_length < 2 {
        return Err(Error::InvalidParameter(format!(
            "arm length must be at least 2, got {arm_length}"
        )));
    }
    let mut points = vec![Point::new(0, 0.0, 0.0)];
    let mut left_set = Vec::new();
    let mut right_set = vec![0];
    for (arm, axis_deg) in [90.0_f64, 210.0, 330.0].into_iter().enumerate() {
        let (mut x, mut y) = (0.0, 0.0);
        for step in 0..=arm_length {
            let heading = if step % 2 == 1 { axis_deg - 60.0 } else { axis_deg }.to_radians();
            x += heading.cos();
            y += heading.sin();
            let id = points.len();
            points.push(Point::new(id, x, y));
            if arm == 0 {
                left_set.push(id);
            } else {
                right_set.push(id);
            }
        }
    }
    Ok(Witness180 {
        points,
        p_id: 0,
        left_set,
        right_set,
    })
}

/// Checks the two geometric facts behind the √3 bound at radius `r < √3`:
/// every half-plane antenna at the center reaches at most two of its three
/// neighbors and nothing else, and the cut-off arm is at least √3 from every
/// other point except the center.
pub fn check_witness_180(w: &Witness180, r: f64) -> Result<bool> {
    if r.is_nan() || r >= SQRT_3 {
        return Err(Error::InvalidParameter(format!("radius {r} is not below sqrt(3)")));
    }
    let p = w
        .points
        .get(w.p_id)
        .ok_or_else(|| Error::InvalidParameter(format!("center id {} out of range", w.p_id)))?;
    let neighbors: Vec<usize> = w
        .points
        .iter()
        .filter(|q| q.id != p.id && (q.dist(p) - 1.0).abs() <= EPS)
        .map(|q| q.id)
        .collect();
    let center_ok = candidate_angles(&w.points, p.id, PI).into_iter().all(|theta| {
        let wedge = Wedge::new(*p, theta, PI, r);
        let covered: Vec<usize> = w
            .points
            .iter()
            .filter(|q| q.id != p.id && wedge.contains(q, EPS))
            .map(|q| q.id)
            .collect();
        covered.len() <= 2 && covered.iter().all(|id| neighbors.contains(id))
    });
    let separation = w
        .right_set
        .iter()
        .filter(|&&a| a != w.p_id)
        .flat_map(|&a| w.left_set.iter().map(move |&b| (a, b)))
        .map(|(a, b)| w.points[a].dist(&w.points[b]))
        .fold(f64::INFINITY, f64::min);
    Ok(center_ok && neighbors.len() == 3 && separation >= SQRT_3 - EPS)
}

const ATTACH_RADIUS: f64 = 0.9;
const MIN_SEPARATION: f64 = 1e-6;
const MAX_ATTEMPTS_PER_POINT: usize = 10_000;

/// `n` points in `[0, box_size]²` with a connected unit disk graph,
/// reproducible from `(n, seed, box_size)`. Each new point lands within 0.9
/// of a randomly chosen earlier point.
pub fn random_connected_udg(n: usize, seed: u64, box_size: f64) -> Result<Vec<Point>> {
    if n == 0 {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    if !box_size.is_finite() || box_size <= 0.0 {
        return Err(Error::InvalidParameter(format!("box size must be positive, got {box_size}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = vec![Point::new(0, rng.gen_range(0.0..=box_size), rng.gen_range(0.0..=box_size))];
    while points.len() < n {
        let id = points.len();
        let mut placed = false;
        for _ in 0..MAX_ATTEMPTS_PER_POINT {
            let anchor = points[rng.gen_range(0..points.len())];
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            // (0, 0.9]: never lands on the anchor itself
            let dist = ATTACH_RADIUS * (1.0 - rng.gen::<f64>());
            let cand = Point::new(id, anchor.x + dist * angle.cos(), anchor.y + dist * angle.sin());
            let inside = (0.0..=box_size).contains(&cand.x) && (0.0..=box_size).contains(&cand.y);
            if inside && points.iter().all(|q| q.dist(&cand) > MIN_SEPARATION) {
                points.push(cand);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::InvalidParameter(format!(
                "could not place {n} points in a box of side {box_size}"
            )));
        }
    }
    Ok(points)
}
