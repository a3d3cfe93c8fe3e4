use std::f64::consts::TAU;

use super::Polygon;
use crate::error::{GeomError, Result};
use crate::tol::{EPS_ANGLE, EPS_POINT};

fn rebuild(p: &Polygon, keep: impl Fn(usize) -> bool) -> Result<Polygon> {
    let verts: Vec<_> = (0..p.len()).filter(|&i| keep(i)).map(|i| *p.vertex(i)).collect();
    if verts.len() < 3 {
        return Err(GeomError::Degenerate(format!(
            "flattening leaves {} vertices",
            verts.len()
        )));
    }
    let out = Polygon::measure(verts)?;
    if !out.is_embedded() || out.turning_number() != 1 {
        return Err(GeomError::Geometry(
            "flattened polygon is not simple".to_string(),
        ));
    }
    Ok(out)
}

/// Replace the boundary path `i_from → … → i_to` (forward, cyclic) by the
/// single geodesic from `i_from` to `i_to`, dropping the vertices strictly
/// between them.
pub fn flatten(p: &Polygon, i_from: usize, i_to: usize) -> Result<Polygon> {
    let n = p.len();
    if i_from >= n || i_to >= n || i_from == i_to {
        return Err(GeomError::Domain(format!(
            "invalid flattening range {i_from} → {i_to} on a {n}-gon"
        )));
    }
    let gap = (i_to + n - i_from) % n;
    rebuild(p, |i| {
        let off = (i + n - i_from) % n;
        off == 0 || off >= gap
    })
}

fn sorted_pair(a: f64, b: f64) -> (f64, f64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Flatten two complementary vertices `v`, `w` (angles summing to 2π with
/// congruent incident edges). Adjacent pairs are replaced by the single
/// geodesic joining their outer neighbours.
pub fn flatten_complementary_pair(p: &Polygon, v: usize, w: usize) -> Result<Polygon> {
    let n = p.len();
    if v >= n || w >= n || v == w {
        return Err(GeomError::Contract(format!(
            "need two distinct vertices of the {n}-gon (got {v}, {w})"
        )));
    }
    let sum = p.angle(v).0 + p.angle(w).0;
    if (sum - TAU).abs() > EPS_ANGLE {
        return Err(GeomError::Contract(format!(
            "angles at {v} and {w} sum to {sum}, not 2π"
        )));
    }
    let sides = p.side_lengths();
    let ev = sorted_pair(sides[p.prev(v)], sides[v]);
    let ew = sorted_pair(sides[p.prev(w)], sides[w]);
    if (ev.0 - ew.0).abs() > EPS_POINT * (1.0 + ev.0) || (ev.1 - ew.1).abs() > EPS_POINT * (1.0 + ev.1)
    {
        return Err(GeomError::Contract(format!(
            "incident edges differ: {ev:?} at {v} vs {ew:?} at {w}"
        )));
    }
    rebuild(p, |i| i != v && i != w)
}
