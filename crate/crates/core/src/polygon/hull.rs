use super::intersect::{centred_klein, line_offset, P2};
use crate::hyp::Lifted;
use super::Polygon;
use crate::error::Result;

/// Hyperbolic convex hull of the vertices.
///
/// Geodesics are straight chords in the Klein model, so the planar
/// monotone-chain hull of the Klein images is the hyperbolic hull. Collinear
/// hull points are dropped. The output reuses the input vertices, starts at
/// the hull vertex with the smallest input index and runs counterclockwise.
pub fn convex_hull(p: &Polygon) -> Result<Polygon> {
    let k = centred_klein(p.vertices());
    let lifted: Vec<Lifted> = p.vertices().iter().map(Lifted::new).collect();
    let turn = |a: usize, b: usize, c: usize| {
        line_offset(&lifted[a], &lifted[b], lifted[a].distance(&lifted[b]), &lifted[c])
    };
    let idx = hull_indices(&k, turn);
    let start = idx
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let verts = idx[start..]
        .iter()
        .chain(&idx[..start])
        .map(|&i| p.vertices()[i])
        .collect();
    Polygon::new(verts)
}

/// Andrew's monotone chain; indices in counterclockwise order.
fn hull_indices(pts: &[P2], turn: impl Fn(usize, usize, usize) -> f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| {
        pts[a]
            .0
            .total_cmp(&pts[b].0)
            .then(pts[a].1.total_cmp(&pts[b].1))
    });
    order.dedup_by(|a, b| pts[*a] == pts[*b]);
    if order.len() < 3 {
        return order;
    }
    // offsets (hyperbolic distance) below this count as collinear
    let eps = 1e-13;
    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2
            && turn(lower[lower.len() - 2], lower[lower.len() - 1], i) <= eps
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2
            && turn(upper[upper.len() - 2], upper[upper.len() - 1], i) <= eps
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}
