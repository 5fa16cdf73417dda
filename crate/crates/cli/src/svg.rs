//! Static SVG figures of an instance and, optionally, its orientation.
//!
//! One plane unit is drawn as [`SCALE`] pixels and the y-axis points up.
//! Output depends only on the inputs, so repeated runs are byte-identical.

use std::f64::consts::TAU;
use std::fmt::Write;

use dirant_core::topology::{bounded_degree_mst, build_udg, is_connected};
use dirant_core::verifier::build_comm_graph;
use dirant_core::{OrientationAssignment, Point, Result};

pub const SCALE: f64 = 100.0;
const MARGIN: f64 = 0.5;
const POINT_RADIUS: f64 = 4.0;

struct Canvas {
    min_x: f64,
    max_y: f64,
}

impl Canvas {
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.min_x) * SCALE, (self.max_y - y) * SCALE)
    }
}

fn bounds(points: &[Point], pad: f64) -> (f64, f64, f64, f64) {
    let fold = |f: fn(&Point) -> f64, init: f64, pick: fn(f64, f64) -> f64| {
        points.iter().map(f).fold(init, pick)
    };
    let (min_x, max_x) = (fold(|p| p.x, f64::INFINITY, f64::min), fold(|p| p.x, f64::NEG_INFINITY, f64::max));
    let (min_y, max_y) = (fold(|p| p.y, f64::INFINITY, f64::min), fold(|p| p.y, f64::NEG_INFINITY, f64::max));
    if points.is_empty() {
        return (-pad, -pad, pad, pad);
    }
    (min_x - pad, min_y - pad, max_x + pad, max_y + pad)
}

fn sector_path(c: &Canvas, p: &Point, theta: f64, alpha: f64, r: f64) -> String {
    let (cx, cy) = c.map(p.x, p.y);
    if alpha >= TAU - 1e-12 {
        return format!(
            r#"<circle class="wedge" cx="{cx:.3}" cy="{cy:.3}" r="{:.3}"/>"#,
            r * SCALE
        );
    }
    let (a0, a1) = (theta - alpha / 2.0, theta + alpha / 2.0);
    let (x0, y0) = c.map(p.x + r * a0.cos(), p.y + r * a0.sin());
    let (x1, y1) = c.map(p.x + r * a1.cos(), p.y + r * a1.sin());
    let large = u8::from(alpha > std::f64::consts::PI);
    // counterclockwise in the plane is sweep-flag 0 once y is flipped
    format!(
        r#"<path class="wedge" d="M {cx:.3} {cy:.3} L {x0:.3} {y0:.3} A {rr:.3} {rr:.3} 0 {large} 0 {x1:.3} {y1:.3} Z"/>"#,
        rr = r * SCALE
    )
}

/// Renders the figure. Wedges and communication links use radius `r`.
pub fn render(points: &[Point], orientation: Option<&OrientationAssignment>, r: f64) -> Result<String> {
    let pad = MARGIN + if orientation.is_some() { r.max(0.0) } else { 0.0 };
    let (min_x, min_y, max_x, max_y) = bounds(points, pad);
    let canvas = Canvas { min_x, max_y };
    let (width, height) = ((max_x - min_x) * SCALE, (max_y - min_y) * SCALE);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    s.push_str(concat!(
        "  <defs>\n",
        r#"    <marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse">"#,
        "\n",
        r##"      <path d="M 0 0 L 10 5 L 0 10 z" fill="#c0392b"/>"##,
        "\n    </marker>\n",
        "    <style>\n",
        "      .wedge { fill: #3498db; fill-opacity: 0.15; stroke: #2980b9; stroke-width: 0.5; }\n",
        "      .tree { stroke: #222; stroke-width: 1.5; }\n",
        "      .link { stroke: #c0392b; stroke-width: 0.8; marker-end: url(#arrow); }\n",
        "      .point { fill: #fff; stroke: #222; stroke-width: 1; }\n",
        "      text { font: 10px sans-serif; }\n",
        "    </style>\n",
        "  </defs>\n",
    ));

    if let Some(a) = orientation {
        s.push_str("  <g id=\"wedges\">\n");
        for p in points {
            let _ = writeln!(s, "    {}", sector_path(&canvas, p, a.theta[p.id], a.alpha, r));
        }
        s.push_str("  </g>\n");
    }

    s.push_str("  <g id=\"tree\">\n");
    if points.len() >= 2 && is_connected(&build_udg(points)?) {
        for (u, v) in bounded_degree_mst(points)?.edges() {
            let (x1, y1) = canvas.map(points[u].x, points[u].y);
            let (x2, y2) = canvas.map(points[v].x, points[v].y);
            let _ = writeln!(
                s,
                r#"    <line class="tree" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#
            );
        }
    }
    s.push_str("  </g>\n");

    if let Some(a) = orientation {
        s.push_str("  <g id=\"links\">\n");
        let g = build_comm_graph(points, a, Some(r))?;
        for (u, targets) in g.out_edges.iter().enumerate() {
            for &v in targets {
                let (x1, y1) = canvas.map(points[u].x, points[u].y);
                let (x2, y2) = canvas.map(points[v].x, points[v].y);
                // stop short of the target circle so the arrowhead stays visible
                let len = (x2 - x1).hypot(y2 - y1);
                let k = (len - POINT_RADIUS) / len;
                let _ = writeln!(
                    s,
                    r#"    <line class="link" x1="{x1:.3}" y1="{y1:.3}" x2="{:.3}" y2="{:.3}"/>"#,
                    x1 + k * (x2 - x1),
                    y1 + k * (y2 - y1)
                );
            }
        }
        s.push_str("  </g>\n");
    }

    s.push_str("  <g id=\"points\">\n");
    for p in points {
        let (x, y) = canvas.map(p.x, p.y);
        let _ = writeln!(
            s,
            r#"    <circle class="point" cx="{x:.3}" cy="{y:.3}" r="{POINT_RADIUS}"/><text x="{:.3}" y="{:.3}">{}</text>"#,
            x + 6.0,
            y - 6.0,
            p.id
        );
    }
    s.push_str("  </g>\n</svg>\n");
    Ok(s)
}
