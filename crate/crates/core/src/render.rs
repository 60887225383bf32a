//! SVG arc diagrams.
//!
//! Segment `i` fills the sector between angles `2πi/n` and `2π(i+1)/n`,
//! anticlockwise. Offsets are squeezed into that sector by a logistic curve,
//! so marked points bunch up near the accumulation markers.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::arcs::Arc;
use crate::circle::{CircleModel, PointIndex};

const SIZE: f64 = 400.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = 170.0;
const TICK: f64 = 6.0;

/// Position of a point in the plane (SVG coordinates, y down).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

/// Quadratic Bézier chord between two boundary points, bent toward the centre.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub start: Point2,
    pub control: Point2,
    pub end: Point2,
}

impl Chord {
    pub fn point_at(&self, t: f64) -> Point2 {
        let u = 1.0 - t;
        Point2 {
            x: u * u * self.start.x + 2.0 * u * t * self.control.x + t * t * self.end.x,
            y: u * u * self.start.y + 2.0 * u * t * self.control.y + t * t * self.end.y,
        }
    }

    /// `(min, max)` corners of the curve's bounding box.
    pub fn bounding_box(&self) -> (Point2, Point2) {
        let mut lo = Point2 {
            x: f64::MAX,
            y: f64::MAX,
        };
        let mut hi = Point2 {
            x: f64::MIN,
            y: f64::MIN,
        };
        for k in 0..=64 {
            let p = self.point_at(k as f64 / 64.0);
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }

    pub fn bounding_boxes_overlap(&self, other: &Chord) -> bool {
        let (a0, a1) = self.bounding_box();
        let (b0, b1) = other.bounding_box();
        a0.x <= b1.x && b0.x <= a1.x && a0.y <= b1.y && b0.y <= a1.y
    }

    /// Whether the two curves meet, tested on 64-piece polylines.
    pub fn intersects(&self, other: &Chord) -> bool {
        let a: Vec<Point2> = (0..=64).map(|k| self.point_at(k as f64 / 64.0)).collect();
        let b: Vec<Point2> = (0..=64).map(|k| other.point_at(k as f64 / 64.0)).collect();
        a.windows(2)
            .any(|s| b.windows(2).any(|t| segments_cross(s[0], s[1], t[0], t[1])))
    }
}

fn segments_cross(p: Point2, q: Point2, r: Point2, s: Point2) -> bool {
    let orient =
        |a: Point2, b: Point2, c: Point2| (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    let (d1, d2) = (orient(r, s, p), orient(r, s, q));
    let (d3, d4) = (orient(p, q, r), orient(p, q, s));
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Angle of a marked point in radians, anticlockwise from the positive x axis.
pub fn angle(model: CircleModel, p: PointIndex, window: i64) -> f64 {
    let n = model.num_segments() as f64;
    let k = 3.0 / window.max(1) as f64;
    let s = 1.0 / (1.0 + (-k * p.offset as f64).exp());
    TAU * (p.segment as f64 + s) / n
}

fn on_circle(theta: f64, r: f64) -> Point2 {
    Point2 {
        x: CENTER + r * theta.cos(),
        y: CENTER - r * theta.sin(),
    }
}

pub fn chord(model: CircleModel, arc: &Arc, window: i64) -> Chord {
    let (p, q) = arc.endpoints();
    let start = on_circle(angle(model, p, window), RADIUS);
    let end = on_circle(angle(model, q, window), RADIUS);
    let mid = Point2 {
        x: (start.x + end.x) / 2.0,
        y: (start.y + end.y) / 2.0,
    };
    let control = Point2 {
        x: CENTER + (mid.x - CENTER) * 0.5,
        y: CENTER + (mid.y - CENTER) * 0.5,
    };
    Chord {
        start,
        control,
        end,
    }
}

pub fn render_svg(model: CircleModel, arcs: &[Arc], window: i64) -> String {
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        out,
        r#"  <circle class="boundary" cx="{CENTER}" cy="{CENTER}" r="{RADIUS}" fill="none" stroke="black" stroke-width="1"/>"#
    );
    for p in model.window_points(window) {
        let t = angle(model, p, window);
        let a = on_circle(t, RADIUS - TICK / 2.0);
        let b = on_circle(t, RADIUS + TICK / 2.0);
        let _ = writeln!(
            out,
            r#"  <line class="tick" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="1"/>"#,
            a.x, a.y, b.x, b.y
        );
    }
    for i in 0..model.num_segments() {
        let c = on_circle(TAU * i as f64 / model.num_segments() as f64, RADIUS);
        let _ = writeln!(
            out,
            r#"  <circle class="accumulation" cx="{:.3}" cy="{:.3}" r="4" fill="white" stroke="black" stroke-width="1"/>"#,
            c.x, c.y
        );
    }
    for a in arcs {
        let c = chord(model, a, window);
        let _ = writeln!(
            out,
            r#"  <path class="arc" d="M {:.3} {:.3} Q {:.3} {:.3} {:.3} {:.3}" fill="none" stroke="steelblue" stroke-width="1.5"><title>{a}</title></path>"#,
            c.start.x, c.start.y, c.control.x, c.control.y, c.end.x, c.end.y
        );
    }
    out.push_str("</svg>\n");
    out
}
