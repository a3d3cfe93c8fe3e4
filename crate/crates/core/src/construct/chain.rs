use std::f64::consts::{PI, TAU};

use crate::error::{GeomError, Result};
use crate::hyp::{solve_sas, wrap_two_pi, Angle, HPoint, Length};
use crate::polygon::{is_simple, Chain, Polygon};
use crate::tol::EPS_ANGLE;

const L_MIN: f64 = 1e-6;
const L_MAX: f64 = 1e3;
const SCAN_POINTS: usize = 1000;
const ROOT_STEP: f64 = 1e-12;
const BISECT_CAP: usize = 200;
const REFINE_STEPS: i32 = 40;
const HI_GROWTH: f64 = 1.25;
/// A bisection limit with a larger residual is a jump of the angle wrap, not a root.
const ROOT_RESIDUAL: f64 = 1e-9;

fn wrap_pi(a: f64) -> f64 {
    a - TAU * (a / TAU).round()
}

fn sign(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// The chain in polar coordinates about its first vertex, the second vertex
/// on bearing 0. Each step solves the triangle `V₁ Vⱼ Vⱼ₊₁` from the two
/// sides at `Vⱼ`, so no coordinates far from the origin are ever formed.
struct Fan {
    dist: Vec<f64>,
    bearing: Vec<f64>,
    /// `bearing[j + 1] − bearing[j]`, kept so bearings relative to the last
    /// vertex can be summed without cancellation.
    step: Vec<f64>,
    /// Signed angle at the last vertex from the direction to `V₁` to the
    /// direction to the previous vertex.
    last_turn: f64,
}

impl Fan {
    fn new(l: f64, internal: &[Angle]) -> Fan {
        let mut dist = vec![0.0, l];
        let mut bearing = vec![0.0, 0.0];
        let mut step = vec![0.0];
        let mut turn = 0.0;
        for t in internal {
            let d = *dist.last().unwrap();
            let b = *bearing.last().unwrap();
            let gamma = wrap_pi(turn - t.radians());
            let tri = solve_sas(l, d, gamma.abs());
            dist.push(tri.side);
            step.push(-sign(gamma) * tri.opposite_b);
            bearing.push(b + step.last().unwrap());
            turn = -sign(gamma) * tri.opposite_c;
        }
        Fan {
            dist,
            bearing,
            step,
            last_turn: turn,
        }
    }

    /// `m(V₁) + m(V_last)` of the closed-up polygon.
    fn endpoint_angle_sum(&self) -> f64 {
        wrap_two_pi(*self.bearing.last().unwrap()) + wrap_two_pi(self.last_turn)
    }

    fn vertices(&self) -> Vec<HPoint> {
        self.dist
            .iter()
            .zip(&self.bearing)
            .map(|(&d, &b)| HPoint::from_polar(d, b))
            .collect()
    }

    /// Vertices in a chart centred on the midpoint `M` of `V₁V_last`, with
    /// `V_last` on the positive `x1` axis. Bearings are handled through their
    /// small offsets from the axis so far vertices keep their precision.
    fn centred(&self) -> Vec<HPoint> {
        let half = self.dist.last().unwrap() / 2.0;
        let mut rel = vec![0.0; self.dist.len()];
        for j in (0..self.step.len()).rev() {
            rel[j] = rel[j + 1] - self.step[j];
        }
        (0..self.dist.len())
            .map(|j| {
                if j == 0 {
                    return HPoint::from_spatial(-half.sinh(), 0.0);
                }
                let psi = wrap_pi(rel[j]);
                let tri = solve_sas(self.dist[j], half, psi.abs());
                // bearing π − sign(ψ)·B, with B the angle at M
                let (cos, sin) = if tri.opposite_b < PI / 2.0 {
                    (-tri.opposite_b.cos(), tri.opposite_b.sin())
                } else {
                    (tri.supplement_b.cos(), tri.supplement_b.sin())
                };
                let r = tri.side.sinh();
                HPoint::from_spatial(r * cos, sign(psi) * r * sin)
            })
            .collect()
    }

    /// The closed-up chain has no self-intersections.
    fn is_simple(&self) -> bool {
        is_simple(&self.centred(), true)
    }

    /// The chain followed by its half-turn image about `M`.
    fn doubled(&self) -> Result<Polygon> {
        let verts = self.centred();
        let k = verts.len();
        let image = verts[1..k - 1]
            .iter()
            .map(|p| HPoint::from_spatial(-p.x1, -p.x2));
        Polygon::new(verts.iter().copied().chain(image).collect())
    }
}

/// Open chain `V₁ … V_{k+2}` with every side `l`, starting at the origin
/// heading along `+x1` and turning left so the interior angle at each
/// internal vertex is the prescribed one.
pub fn build_chain(l: Length, angles: &[Angle]) -> Result<Chain> {
    let l = l.value();
    if !(l > 0.0 && l.is_finite()) {
        return Err(GeomError::Domain(format!("side length must be positive (got {l})")));
    }
    if angles.is_empty() {
        return Err(GeomError::domain("chain needs at least one internal angle"));
    }
    if let Some(a) = angles.iter().find(|a| !(a.0 > 0.0 && a.0 < PI)) {
        return Err(GeomError::Domain(format!("internal angle {} outside (0, π)", a.0)));
    }
    let fan = Fan::new(l, angles);
    Ok(Chain::from_parts(
        fan.vertices(),
        Length(l),
        angles.to_vec(),
        fan.endpoint_angle_sum(),
    ))
}

/// Outcome of the side-length search behind [`equilateral_even_gon`].
#[derive(Debug, Clone)]
pub struct EvenGon {
    pub polygon: Polygon,
    pub side: Length,
    /// Largest deviation of a measured angle from the prescribed one.
    pub angle_residual: f64,
    /// Number of roots of the closing condition found above the last
    /// self-intersecting configuration.
    pub roots: usize,
}

fn mismatch(l: f64, half: &[Angle]) -> f64 {
    Fan::new(l, &half[1..]).endpoint_angle_sum() - half[0].radians()
}

/// Bisection down to adjacent floats: the closing condition can be steep in
/// the side length, so any coarser stop leaves a visible angle error.
fn bisect(mut a: f64, mut b: f64, mut fa: f64, half: &[Angle]) -> (f64, f64) {
    let mut fb = mismatch(b, half);
    for _ in 0..BISECT_CAP {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = mismatch(mid, half);
        if (fm > 0.0) == (fa > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    if fa.abs() <= fb.abs() {
        (a, fa)
    } else {
        (b, fb)
    }
}

/// Equilateral `2n`-gon with interior angles `θ₁ … θₙ θ₁ … θₙ`, centrally
/// symmetric about the origin.
pub fn equilateral_even_gon(half_angles: &[Angle]) -> Result<Polygon> {
    solve_equilateral_even_gon(half_angles).map(|s| s.polygon)
}

/// Solve for the common side length: lay out the chain with internal angles
/// `θ₂ … θₙ`, require its endpoint angles to sum to `θ₁`, then double it.
///
/// Only side lengths above the last one where the closed-up chain
/// self-intersects are searched; there the closing condition is continuous
/// and its largest root is taken.
pub fn solve_equilateral_even_gon(half_angles: &[Angle]) -> Result<EvenGon> {
    let n = half_angles.len();
    if n < 2 {
        return Err(GeomError::Domain(format!("need at least 2 half-angles (got {n})")));
    }
    if let Some(a) = half_angles.iter().find(|a| !(a.0 > 0.0 && a.0 <= PI)) {
        return Err(GeomError::Domain(format!("angle {} outside (0, π]", a.0)));
    }
    let sum: f64 = half_angles.iter().map(|a| a.0).sum();
    let cap = (n as f64 - 1.0) * PI;
    if sum >= cap - EPS_ANGLE {
        return Err(GeomError::Domain(format!(
            "half-angle sum {sum} must be below (n−1)π = {cap}"
        )));
    }
    let internal = &half_angles[1..];

    // Grow slowly: far beyond the root the vertices leave the range where
    // binary64 coordinates resolve them.
    let mut hi = 1.0;
    loop {
        let fan = Fan::new(hi, internal);
        let f = fan.endpoint_angle_sum() - half_angles[0].radians();
        if !f.is_finite() {
            return Err(GeomError::Construction(format!(
                "closing condition not finite at side length {hi}"
            )));
        }
        if f < 0.0 && fan.is_simple() {
            break;
        }
        hi *= HI_GROWTH;
        if hi > L_MAX {
            return Err(GeomError::Construction(format!(
                "no side length in [{L_MIN}, {L_MAX}] makes the endpoint angles small enough"
            )));
        }
    }

    // Walk down the log grid while the closed-up chain stays simple. Below the
    // first non-simple grid point, locate the simplicity boundary by bisection
    // and approach it geometrically: the closing condition rises steeply there.
    let ratio = (hi / L_MIN).ln() / (SCAN_POINTS - 1) as f64;
    let mut grid = vec![hi];
    let mut values = vec![mismatch(hi, half_angles)];
    for i in (0..SCAN_POINTS - 1).rev() {
        let l = L_MIN * (ratio * i as f64).exp();
        let fan = Fan::new(l, internal);
        if !fan.is_simple() {
            let above = *grid.last().unwrap();
            let (mut bad, mut good) = (l, above);
            while good - bad > ROOT_STEP * good.max(1.0) {
                let mid = 0.5 * (bad + good);
                if mid <= bad || mid >= good {
                    break;
                }
                if Fan::new(mid, internal).is_simple() {
                    good = mid;
                } else {
                    bad = mid;
                }
            }
            for j in 1..=REFINE_STEPS {
                let l = good + (above - good) * 0.5f64.powi(j);
                if l <= good {
                    break;
                }
                grid.push(l);
                values.push(mismatch(l, half_angles));
            }
            break;
        }
        grid.push(l);
        values.push(fan.endpoint_angle_sum() - half_angles[0].radians());
    }

    let mut roots = 0;
    let mut rejected = 0;
    let mut found: Option<(f64, Polygon)> = None;
    for w in 0..grid.len() - 1 {
        let (b, a) = (grid[w], grid[w + 1]);
        let (fb, fa) = (values[w], values[w + 1]);
        if (fa > 0.0) == (fb > 0.0) {
            continue;
        }
        let (l, r) = bisect(a, b, fa, half_angles);
        if r.abs() > ROOT_RESIDUAL {
            continue;
        }
        roots += 1;
        if found.is_none() {
            match Fan::new(l, internal).doubled() {
                Ok(p) if p.is_embedded() => found = Some((l, p)),
                _ => rejected += 1,
            }
        }
    }

    let Some((l, polygon)) = found else {
        return Err(if roots > 0 {
            GeomError::Geometry(format!(
                "{rejected} root(s) of the closing condition, none gives an embedded polygon"
            ))
        } else {
            GeomError::Construction(format!(
                "no sign change of the closing condition on [{}, {hi}]",
                grid.last().unwrap()
            ))
        });
    };
    let angle_residual = polygon
        .interior_angles()
        .iter()
        .zip(half_angles.iter().chain(half_angles))
        .map(|(m, t)| (m - t.0).abs())
        .fold(0.0, f64::max);
    Ok(EvenGon {
        polygon,
        side: Length(l),
        angle_residual,
        roots,
    })
}
