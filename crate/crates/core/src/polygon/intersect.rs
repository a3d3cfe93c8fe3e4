//! Intrinsic predicates for geodesic segments.
//!
//! Sides of lines come from the sign of `det(a, b, p)`, which is the
//! orientation of the Klein images, and tolerances are hyperbolic distances
//! so they stay meaningful however far from the origin the points lie.

use crate::hyp::{HPoint, Isometry, Lifted};
use crate::polygon::interior_angle;

/// Hyperbolic distance below which a point counts as touching a segment.
const TOUCH: f64 = 1e-12;

pub(crate) type P2 = (f64, f64);

/// Klein coordinates in a chart centred on the Minkowski barycentre of the
/// points. Only used for orderings.
pub(crate) fn centred_klein(points: &[HPoint]) -> Vec<P2> {
    let (mut s0, mut s1, mut s2) = (0.0, 0.0, 0.0);
    for p in points {
        s0 += p.x0;
        s1 += p.x1;
        s2 += p.x2;
    }
    let norm = (s0 * s0 - s1 * s1 - s2 * s2).sqrt();
    let centre = HPoint::from_spatial(s1 / norm, s2 / norm);
    let chart = Isometry::boost_from(&centre);
    points.iter().map(|p| chart.apply(p).to_klein()).collect()
}

/// Signed distance of `p` from the geodesic through `a`, `b` (positive on
/// the left of `a → b`). `d_ab` is the distance from `a` to `b`.
pub(crate) fn line_offset(a: &Lifted, b: &Lifted, d_ab: f64, p: &Lifted) -> f64 {
    let s = d_ab.sinh().max(f64::MIN_POSITIVE);
    (Lifted::det(a, b, p) / s).asinh()
}

struct Seg<'a> {
    a: &'a Lifted,
    b: &'a Lifted,
    len: f64,
}

impl Seg<'_> {
    fn offset(&self, p: &Lifted) -> f64 {
        line_offset(self.a, self.b, self.len, p)
    }

    fn touches(&self, p: &Lifted) -> bool {
        self.offset(p).abs() <= TOUCH
            && self.a.distance(p) <= self.len + TOUCH
            && self.b.distance(p) <= self.len + TOUCH
    }

    /// Closed segments share a point (up to [`TOUCH`]).
    fn meets(&self, o: &Seg) -> bool {
        let strict = |x: f64, y: f64| (x > TOUCH && y < -TOUCH) || (x < -TOUCH && y > TOUCH);
        if strict(o.offset(self.a), o.offset(self.b)) && strict(self.offset(o.a), self.offset(o.b)) {
            return true;
        }
        o.touches(self.a) || o.touches(self.b) || self.touches(o.a) || self.touches(o.b)
    }
}

/// O(n²) simplicity test of a closed polygon (or open chain when
/// `closed == false`): non-adjacent edges must be disjoint and adjacent
/// edges may only share their common vertex.
pub fn is_simple(points: &[HPoint], closed: bool) -> bool {
    let n = points.len();
    if n < 2 {
        return true;
    }
    let lifted: Vec<Lifted> = points.iter().map(Lifted::new).collect();
    let edges: Vec<(usize, usize)> = if closed {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    } else {
        (0..n - 1).map(|i| (i, i + 1)).collect()
    };
    let segs: Vec<Seg> = edges
        .iter()
        .map(|&(i, j)| Seg {
            a: &lifted[i],
            b: &lifted[j],
            len: lifted[i].distance(&lifted[j]),
        })
        .collect();
    if segs.iter().any(|s| s.len <= TOUCH) {
        return false;
    }
    let folds_back = |s: usize, a: usize, b: usize| {
        let t = interior_angle(&points[a], &points[s], &points[b]);
        t.min(std::f64::consts::TAU - t) < TOUCH
    };
    let m = edges.len();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let bad = if b == c {
                folds_back(b, a, d)
            } else if d == a {
                folds_back(a, b, c)
            } else {
                segs[i].meets(&segs[j])
            };
            if bad {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyp::Isometry;

    fn meets(p: [(f64, f64); 4]) -> bool {
        let l: Vec<Lifted> = p
            .iter()
            .map(|&(u, v)| Lifted::new(&HPoint::from_klein(u * 0.5, v * 0.5).unwrap()))
            .collect();
        let seg = |a: usize, b: usize| Seg {
            a: &l[a],
            b: &l[b],
            len: l[a].distance(&l[b]),
        };
        seg(0, 1).meets(&seg(2, 3))
    }

    #[test]
    fn crossing_and_touching() {
        assert!(meets([(0.0, 0.0), (1.0, 1.0), (0.0, 1.0), (1.0, 0.0)]));
        assert!(!meets([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]));
        // T-junction
        assert!(meets([(0.0, 0.0), (1.0, 0.0), (0.5, 0.0), (0.5, 1.0)]));
        // collinear, disjoint
        assert!(!meets([(0.0, 0.0), (0.3, 0.0), (0.5, 0.0), (0.9, 0.0)]));
        // collinear, overlapping
        assert!(meets([(0.0, 0.0), (0.6, 0.0), (0.5, 0.0), (0.9, 0.0)]));
    }

    #[test]
    fn far_thin_polygon() {
        // a thin kite carried to radius 12, then its bow-tie reordering
        let far = Isometry::boost_to(&HPoint::from_polar(12.0, 1.0));
        let base = [(0.0, 0.0), (5.0, -1e-5), (6.0, 0.0), (5.0, 1e-5)];
        let pts: Vec<HPoint> = base
            .iter()
            .map(|&(r, t)| far.apply(&HPoint::from_polar(r, t)))
            .collect();
        assert!(is_simple(&pts, true));
        assert!(!is_simple(&[pts[0], pts[1], pts[3], pts[2]], true));
    }
}
