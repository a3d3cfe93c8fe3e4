//! Seeded random inputs for property checks: star-shaped polygons, polygons
//! carrying a complementary vertex pair, admissible half-angle vectors.
//!
//! Every generator takes the RNG explicitly; [`instance_rng`] derives an
//! independent stream per instance so batches can run in parallel and still
//! reproduce exactly.

use std::f64::consts::{PI, TAU};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::hyp::{geodesic_lerp, Angle, HPoint, Isometry};
use crate::polygon::{is_simple, triangle_signed_area, Polygon};

/// RNG for instance `index` of a batch seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A polygon star-shaped about the origin: vertex `i` at distance
/// `radii[i]` on bearing `bearings[i]`, bearings increasing with all gaps
/// below π. Such a polygon is always simple and counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct StarPolygon {
    pub bearings: Vec<f64>,
    pub radii: Vec<f64>,
}

impl StarPolygon {
    /// `n` bearings uniform on the circle (resampled until every gap is
    /// below π) and radii uniform in `[r_lo, r_hi]`.
    pub fn random<R: Rng>(rng: &mut R, n: usize, r_lo: f64, r_hi: f64) -> Result<Self> {
        if n < 3 {
            return Err(GeomError::Domain(format!("star polygon needs n ≥ 3 (got {n})")));
        }
        if !(r_lo > 0.0 && r_lo <= r_hi) {
            return Err(GeomError::Domain(format!("bad radius range [{r_lo}, {r_hi}]")));
        }
        let bearings = loop {
            let mut b: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
            b.sort_by(f64::total_cmp);
            let max_gap = (0..n)
                .map(|i| {
                    if i + 1 < n {
                        b[i + 1] - b[i]
                    } else {
                        b[0] + TAU - b[i]
                    }
                })
                .fold(0.0, f64::max);
            // keep a margin from π so edges stay clear of the origin
            if max_gap < PI - 0.05 && b.windows(2).all(|w| w[1] - w[0] > 1e-3) {
                break b;
            }
        };
        let radii = (0..n).map(|_| rng.gen_range(r_lo..=r_hi)).collect();
        Ok(StarPolygon { bearings, radii })
    }

    fn points(&self, scale: f64) -> Vec<HPoint> {
        self.bearings
            .iter()
            .zip(&self.radii)
            .map(|(&b, &r)| HPoint::from_polar(scale * r, b))
            .collect()
    }

    /// Area after scaling every radius by `scale` (fan from the origin).
    pub fn area_at(&self, scale: f64) -> f64 {
        let pts = self.points(scale);
        let n = pts.len();
        (0..n)
            .map(|i| triangle_signed_area(&HPoint::ORIGIN, &pts[i], &pts[(i + 1) % n]))
            .sum()
    }

    pub fn polygon(&self, scale: f64) -> Result<Polygon> {
        Polygon::new(self.points(scale))
    }

    /// Radii scaled by the factor giving area `target` (to 1e-13 relative).
    /// The area grows monotonically with the factor towards `(n−2)π` minus
    /// the bearing gaps' contribution, so bisection applies.
    pub fn scaled_to_area(&self, target: f64) -> Result<Polygon> {
        if !(target > 0.0) {
            return Err(GeomError::Domain(format!("target area {target} must be positive")));
        }
        let mut hi = 1.0;
        while self.area_at(hi) < target {
            hi *= 2.0;
            if hi > 64.0 {
                return Err(GeomError::Domain(format!(
                    "area {target} is out of reach for this star polygon"
                )));
            }
        }
        let mut lo = 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.area_at(mid) < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        self.polygon(hi)
    }
}

/// A simple polygon with vertices `v`, `w` whose angles sum to 2π and whose
/// incident edges are congruent.
#[derive(Debug, Clone)]
pub struct ComplementaryInstance {
    pub polygon: Polygon,
    pub v: usize,
    pub w: usize,
    pub adjacent: bool,
}

const PAIR_ATTEMPTS: usize = 10_000;

/// Random [`ComplementaryInstance`]; adjacent and non-adjacent pairs with
/// equal probability.
pub fn complementary_pair_instance<R: Rng>(rng: &mut R) -> Result<ComplementaryInstance> {
    let adjacent = rng.gen_bool(0.5);
    for _ in 0..PAIR_ATTEMPTS {
        let found = if adjacent {
            adjacent_pair(rng)?
        } else {
            separated_pair(rng)?
        };
        if let Some(inst) = found {
            return Ok(inst);
        }
    }
    Err(GeomError::SearchExhausted(PAIR_ATTEMPTS))
}

fn simple_polygon(points: Vec<HPoint>) -> Option<Polygon> {
    if !is_simple(&points, true) {
        return None;
    }
    Polygon::new(points).ok().filter(Polygon::is_embedded)
}

/// Base edge `P → Q` replaced by `P → v → s(v) → Q` where `s` is the half
/// turn about the midpoint of `PQ`: an S-bend whose two vertices are
/// complementary.
fn adjacent_pair<R: Rng>(rng: &mut R) -> Result<Option<ComplementaryInstance>> {
    let n = rng.gen_range(3..=8);
    let base = StarPolygon::random(rng, n, 0.4, 1.6)?.points(1.0);
    let i = rng.gen_range(0..n);
    let (p, q) = (base[i], base[(i + 1) % n]);
    let mid = geodesic_lerp(&p, &q, 0.5);
    let half = p.distance(&q) / 2.0;
    let frame = Isometry::frame_towards(&mid, &q);
    let off = rng.gen_range(0.1..0.9) * half;
    let side = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let v = frame.turn(PI - side * rng.gen_range(0.2..1.4)).advance(off).position();
    let w = Isometry::half_turn(&mid).apply(&v);
    let mut pts = base[..=i].to_vec();
    pts.push(v);
    pts.push(w);
    pts.extend_from_slice(&base[i + 1..]);
    Ok(simple_polygon(pts).map(|polygon| ComplementaryInstance {
        polygon,
        v: i + 1,
        w: i + 2,
        adjacent: true,
    }))
}

/// An outward dent on edge `P → Q` and a congruent inward dent on a
/// non-adjacent edge `R → S` of the same length.
fn separated_pair<R: Rng>(rng: &mut R) -> Result<Option<ComplementaryInstance>> {
    let n = rng.gen_range(4..=8);
    let mut base = StarPolygon::random(rng, n, 0.6, 1.6)?.points(1.0);
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(2..n - 1)) % n;
    let (p, q) = (base[i], base[(i + 1) % n]);
    let c = p.distance(&q);
    let r = base[j];
    let s = Isometry::frame_towards(&r, &base[(j + 1) % n]).advance(c).position();
    base[(j + 1) % n] = s;
    if !is_simple(&base, true) {
        return Ok(None);
    }
    let alpha = rng.gen_range(0.1..1.0);
    let a = c * rng.gen_range(0.2..0.8);
    let v = Isometry::frame_towards(&p, &q).turn(-alpha).advance(a).position();
    let w = Isometry::frame_towards(&r, &s).turn(alpha).advance(a).position();
    // insert the later dent first so the earlier index stays valid
    let mut pts = base;
    let (first, second) = if i < j { ((i, v), (j, w)) } else { ((j, w), (i, v)) };
    pts.insert(second.0 + 1, second.1);
    pts.insert(first.0 + 1, first.1);
    let (vi, wi) = if i < j { (i + 1, j + 2) } else { (i + 2, j + 1) };
    Ok(simple_polygon(pts).map(|polygon| ComplementaryInstance {
        polygon,
        v: vi,
        w: wi,
        adjacent: false,
    }))
}

/// `n` half-angles uniform in `(margin, π − margin)`, resampled until their
/// sum is below `(n−1)π − slack`.
pub fn random_half_angles<R: Rng>(rng: &mut R, n: usize, margin: f64, slack: f64) -> Result<Vec<Angle>> {
    if n < 2 || !(0.0..PI / 2.0).contains(&margin) {
        return Err(GeomError::Domain(format!("bad half-angle request n = {n}, margin = {margin}")));
    }
    let cap = (n as f64 - 1.0) * PI - slack;
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.gen_range(margin..PI - margin)).collect();
        if v.iter().sum::<f64>() < cap {
            return Ok(v.into_iter().map(Angle).collect());
        }
    }
}
