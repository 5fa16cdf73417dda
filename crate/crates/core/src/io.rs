//! Plain-text point and orientation files.
//!
//! Points: one `<id> <x> <y>` per line. Orientations: `alpha <radians>`,
//! `radius <r>`, then one `<id> <theta>` per point. `#` starts a comment and
//! blank lines are skipped.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use crate::assignment::OrientationAssignment;
use crate::geometry::{normalize_angle, Point};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 for whole-file problems.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_id(line: usize, s: &str) -> Result<usize, ParseError> {
    s.parse()
        .map_err(|_| ParseError::new(line, format!("invalid id '{s}'")))
}

fn parse_real(line: usize, s: &str) -> Result<f64, ParseError> {
    let v: f64 = s
        .parse()
        .map_err(|_| ParseError::new(line, format!("invalid number '{s}'")))?;
    if !v.is_finite() {
        return Err(ParseError::new(line, format!("non-finite number '{s}'")));
    }
    Ok(v)
}

/// Places `(line, id, value)` entries by id, requiring ids `0..n` exactly once.
fn order_by_id<T: Clone>(entries: Vec<(usize, usize, T)>) -> Result<Vec<T>, ParseError> {
    let n = entries.len();
    let mut slots: Vec<Option<T>> = vec![None; n];
    for (line, id, value) in entries {
        if id >= n {
            return Err(ParseError::new(line, format!("id {id} out of range; ids must be 0..{n}")));
        }
        if slots[id].is_some() {
            return Err(ParseError::new(line, format!("duplicate id {id}")));
        }
        slots[id] = Some(value);
    }
    Ok(slots.into_iter().map(|s| s.expect("every slot filled")).collect())
}

pub fn parse_points(text: &str) -> Result<Vec<Point>, ParseError> {
    let mut entries = Vec::new();
    for (line, fields) in content_lines(text) {
        let [id, x, y] = fields[..] else {
            return Err(ParseError::new(line, "expected '<id> <x> <y>'"));
        };
        let id = parse_id(line, id)?;
        entries.push((line, id, (parse_real(line, x)?, parse_real(line, y)?)));
    }
    Ok(order_by_id(entries)?
        .into_iter()
        .enumerate()
        .map(|(id, (x, y))| Point::new(id, x, y))
        .collect())
}

pub fn format_points(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        let _ = writeln!(out, "{} {} {}", p.id, p.x, p.y);
    }
    out
}

pub fn parse_orientation(text: &str) -> Result<OrientationAssignment, ParseError> {
    let mut alpha = None;
    let mut radius = None;
    let mut entries = Vec::new();
    for (line, fields) in content_lines(text) {
        match fields[..] {
            ["alpha", v] => {
                let a = parse_real(line, v)?;
                if !(a > 0.0 && a <= TAU) {
                    return Err(ParseError::new(line, format!("aperture {a} outside (0, 2pi]")));
                }
                if alpha.replace(a).is_some() {
                    return Err(ParseError::new(line, "duplicate alpha line"));
                }
            }
            ["radius", v] => {
                let r = parse_real(line, v)?;
                if r < 0.0 {
                    return Err(ParseError::new(line, format!("negative radius {r}")));
                }
                if radius.replace(r).is_some() {
                    return Err(ParseError::new(line, "duplicate radius line"));
                }
            }
            [id, theta] => {
                let id = parse_id(line, id)?;
                let t = parse_real(line, theta)?;
                if !(0.0..TAU).contains(&t) {
                    return Err(ParseError::new(line, format!("angle {t} outside [0, 2pi)")));
                }
                entries.push((line, id, t));
            }
            _ => return Err(ParseError::new(line, "expected 'alpha', 'radius' or '<id> <theta>'")),
        }
    }
    let alpha = alpha.ok_or_else(|| ParseError::new(0, "missing alpha line"))?;
    let radius = radius.ok_or_else(|| ParseError::new(0, "missing radius line"))?;
    Ok(OrientationAssignment::new(alpha, order_by_id(entries)?, radius))
}

pub fn format_orientation(a: &OrientationAssignment) -> String {
    let mut out = format!("alpha {}\nradius {}\n", a.alpha, a.guaranteed_radius);
    for (id, &t) in a.theta.iter().enumerate() {
        let _ = writeln!(out, "{id} {}", normalize_angle(t));
    }
    out
}
