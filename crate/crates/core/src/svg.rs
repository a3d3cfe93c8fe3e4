//! Poincaré-disk rendering of polygons as SVG 1.1.
//!
//! Each geodesic edge is the arc of the circle through its endpoints that
//! meets the unit circle at right angles, or a straight segment when the
//! endpoints are (numerically) on a diameter.

use std::fmt::Write as _;

use crate::hyp::HPoint;

/// Below this `|p × q|` the edge is drawn as a chord.
const CHORD_CROSS: f64 = 1e-12;
/// Disk points are kept this far inside the boundary.
const RIM: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum EdgePath {
    Line,
    Arc { centre: (f64, f64), radius: f64, ccw: bool },
}

/// Disk image of `p`, pulled strictly inside the unit circle.
pub fn disk_point(p: &HPoint) -> (f64, f64) {
    let (u, v) = p.to_poincare();
    let r = u.hypot(v);
    if r >= 1.0 - RIM {
        let s = (1.0 - RIM) / r;
        (u * s, v * s)
    } else {
        (u, v)
    }
}

/// The geodesic from `p` to `q` in the disk: the circle through both that is
/// orthogonal to the unit circle (centre `c` with `c·x = (1 + |x|²)/2` for
/// both points), traversed along its shorter arc.
pub fn geodesic_path(p: (f64, f64), q: (f64, f64)) -> EdgePath {
    let cross = p.0 * q.1 - p.1 * q.0;
    if cross.abs() < CHORD_CROSS {
        return EdgePath::Line;
    }
    let a = (1.0 + p.0 * p.0 + p.1 * p.1) / 2.0;
    let b = (1.0 + q.0 * q.0 + q.1 * q.1) / 2.0;
    let c = ((a * q.1 - b * p.1) / cross, (b * p.0 - a * q.0) / cross);
    let radius = (c.0 * c.0 + c.1 * c.1 - 1.0).max(0.0).sqrt();
    let turn = (p.0 - c.0) * (q.1 - c.1) - (p.1 - c.1) * (q.0 - c.0);
    EdgePath::Arc {
        centre: c,
        radius,
        ccw: turn > 0.0,
    }
}

#[derive(Debug, Clone)]
pub struct SvgStyle {
    /// Pixel size of the disk's radius.
    pub scale: f64,
    pub stroke: String,
    pub fill: String,
    pub vertex_radius: f64,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            scale: 400.0,
            stroke: "#1f4e79".into(),
            fill: "#9dc3e6".into(),
            vertex_radius: 2.5,
        }
    }
}

/// SVG document with the unit circle and each point list drawn as a path of
/// geodesic edges, closed when `closed` is set.
pub fn render(polygons: &[&[HPoint]], closed: bool, style: &SvgStyle) -> String {
    let s = style.scale;
    let m = 10.0;
    let size = 2.0 * (s + m);
    // y is flipped so the picture has the usual orientation
    let at = |z: (f64, f64)| (m + s + s * z.0, m + s - s * z.1);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let (cx, cy) = at((0.0, 0.0));
    let _ = writeln!(
        out,
        r#"  <circle cx="{cx}" cy="{cy}" r="{s}" fill="none" stroke="black" stroke-width="1"/>"#
    );
    for poly in polygons {
        if poly.is_empty() {
            continue;
        }
        let z: Vec<(f64, f64)> = poly.iter().map(disk_point).collect();
        let (x0, y0) = at(z[0]);
        let mut d = format!("M {x0:.6} {y0:.6}");
        let edges = if closed { z.len() } else { z.len() - 1 };
        for i in 0..edges {
            let (p, q) = (z[i], z[(i + 1) % z.len()]);
            let (x, y) = at(q);
            match geodesic_path(p, q) {
                EdgePath::Line => {
                    let _ = write!(d, " L {x:.6} {y:.6}");
                }
                EdgePath::Arc { radius, ccw, .. } => {
                    // counterclockwise in the disk is clockwise on screen
                    let sweep = u8::from(ccw);
                    let r = radius * s;
                    let _ = write!(d, " A {r:.6} {r:.6} 0 0 {sweep} {x:.6} {y:.6}");
                }
            }
        }
        let fill = if closed {
            d.push_str(" Z");
            style.fill.as_str()
        } else {
            "none"
        };
        let _ = writeln!(
            out,
            r#"  <path d="{d}" fill="{fill}" fill-opacity="0.5" stroke="{}" stroke-width="1.5"/>"#,
            style.stroke
        );
        for &w in &z {
            let (x, y) = at(w);
            let _ = writeln!(
                out,
                r#"  <circle cx="{x:.6}" cy="{y:.6}" r="{}" fill="{}"/>"#,
                style.vertex_radius, style.stroke
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
