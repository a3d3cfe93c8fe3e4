use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{regular_polygon, solve_equilateral_even_gon};
use crate::error::{GeomError, Result};
use crate::hyp::{geodesic_lerp, side_from_angles, Angle, HPoint, Isometry};
use crate::polygon::Polygon;
use crate::tol::EPS_ANGLE;

/// Angles of the isosceles triangle tile `θ₁ = A/(2k−1)`, `θ₂ = θ₃ = π/2 − kθ₁`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsoTriangleParams {
    pub area: f64,
    pub k: u32,
    pub theta1: Angle,
    pub theta2: Angle,
}

impl IsoTriangleParams {
    pub fn new(area: f64, k: Option<u32>) -> Result<Self> {
        if !(area > 0.0 && area < PI) {
            return Err(GeomError::Domain(format!("triangle area {area} outside (0, π)")));
        }
        let at = |k: u32| {
            let t1 = area / (2.0 * k as f64 - 1.0);
            IsoTriangleParams {
                area,
                k,
                theta1: Angle(t1),
                theta2: Angle(PI / 2.0 - k as f64 * t1),
            }
        };
        let valid = |p: &IsoTriangleParams| p.theta2.0 > 0.0 && p.theta1.0 < p.theta2.0;
        match k {
            Some(k) => {
                let p = at(k.max(1));
                if k == 0 || !valid(&p) {
                    return Err(GeomError::Domain(format!(
                        "k = {k} does not give 0 < θ₁ < θ₂ at area {area}"
                    )));
                }
                Ok(p)
            }
            None => {
                let mut k = (PI / (2.0 * PI - 2.0 * area)).floor() as u32 + 1;
                loop {
                    let p = at(k);
                    if valid(&p) {
                        return Ok(p);
                    }
                    k += 1;
                }
            }
        }
    }

    /// `2kθ₁ + θ₂ + θ₃ − π`, zero for a tile.
    pub fn tiling_defect(&self) -> f64 {
        2.0 * self.k as f64 * self.theta1.0 + 2.0 * self.theta2.0 - PI
    }
}

/// Isosceles triangle of area `area` with apex angle `θ₁` at the origin.
/// `k = None` picks the smallest admissible `k`.
pub fn isosceles_triangle_tile(area: f64, k: Option<u32>) -> Result<(Polygon, IsoTriangleParams)> {
    let p = IsoTriangleParams::new(area, k)?;
    let leg = side_from_angles(p.theta1, p.theta2, p.theta2)?.value();
    let half = p.theta1.0 / 2.0;
    let verts = vec![
        HPoint::ORIGIN,
        HPoint::from_polar(leg, -half),
        HPoint::from_polar(leg, half),
    ];
    Ok((Polygon::new(verts)?, p))
}

/// Rhombus of area `area`: two isosceles tiles of area `area/2` glued along
/// their base, centred at the origin.
pub fn rhombic_tile(area: f64) -> Result<(Polygon, IsoTriangleParams)> {
    if !(area > 0.0 && area < 2.0 * PI) {
        return Err(GeomError::Domain(format!("rhombus area {area} outside (0, 2π)")));
    }
    let (tri, params) = isosceles_triangle_tile(area / 2.0, None)?;
    let [p, b, c] = [tri.vertex(0), tri.vertex(1), tri.vertex(2)];
    let mid = geodesic_lerp(b, c, 0.5);
    let s = Isometry::half_turn(&mid);
    let recentre = Isometry::boost_from(&mid);
    let verts = [*p, *b, s.apply(p), *c]
        .iter()
        .map(|v| recentre.apply(v))
        .collect();
    Ok((Polygon::new(verts)?, params))
}

/// Relative distance within which `4/((n−2)σ)` counts as an integer.
const M_SNAP: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TileKind {
    /// `m` is the smallest integer in `(4/((n−2)σ), 2/σ)`.
    IntegerM,
    /// `m = 4/(n−2)`.
    FallbackM,
    /// `(n, A) = (6, 3π)`: the regular hexagon with angles π/6.
    RegularHexagon,
}

/// Parameters of the equilateral `n`-gon tile of area `A`: two angles `θ₁`
/// and `n − 2` angles `θ`, with `(n−2)(θ₁ + θ) = 2π/m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TileParams {
    pub n: usize,
    pub area: f64,
    pub sigma: f64,
    pub m: f64,
    pub theta1: Angle,
    pub theta: Angle,
    pub kind: TileKind,
}

impl TileParams {
    /// `(n−2)(θ₁ + θ) − 2π/m`.
    pub fn angle_sum_defect(&self) -> f64 {
        (self.n as f64 - 2.0) * (self.theta1.0 + self.theta.0) - 2.0 * PI / self.m
    }

    /// Interior angles in boundary order, the two `θ₁` half a period apart.
    pub fn angles(&self) -> Vec<Angle> {
        let half = self.half_angles();
        half.iter().chain(&half).copied().collect()
    }

    fn half_angles(&self) -> Vec<Angle> {
        let mut half = vec![self.theta; self.n / 2];
        half[0] = self.theta1;
        half
    }
}

pub fn equilateral_tile_params(n: usize, area: f64) -> Result<TileParams> {
    if n < 6 || !n.is_multiple_of(2) {
        return Err(GeomError::Domain(format!("n must be even and ≥ 6 (got {n})")));
    }
    let nf = n as f64;
    let (lo, hi) = ((nf - 2.0) * PI / 2.0, (nf - 2.0) * PI);
    if !(area > lo && area < hi) {
        return Err(GeomError::Domain(format!(
            "area {area} outside ({lo}, {hi}) for n = {n}"
        )));
    }
    let sigma = (nf - 2.0) - area / PI;
    if n == 6 && (area - 3.0 * PI).abs() <= EPS_ANGLE {
        let t = Angle(PI / 6.0);
        return Ok(TileParams {
            n,
            area,
            sigma,
            m: 1.5,
            theta1: t,
            theta: t,
            kind: TileKind::RegularHexagon,
        });
    }
    let (m, kind) = if sigma < 2.0 * (nf - 4.0) / (nf - 2.0) {
        let (m_lo, m_hi) = (4.0 / ((nf - 2.0) * sigma), 2.0 / sigma);
        // an m_lo that is an integer up to rounding must be excluded
        let snapped = if (m_lo - m_lo.round()).abs() <= M_SNAP * m_lo { m_lo.round() } else { m_lo };
        let m = snapped.floor() + 1.0;
        if m >= m_hi {
            return Err(GeomError::Construction(format!(
                "no integer in ({m_lo}, {m_hi})"
            )));
        }
        (m, TileKind::IntegerM)
    } else {
        (4.0 / (nf - 2.0), TileKind::FallbackM)
    };
    let theta1 = PI * (2.0 - m * sigma) / (m * (nf - 4.0));
    let theta = 2.0 * PI / (m * (nf - 2.0)) - theta1;
    let ok = |t: f64| t > EPS_ANGLE && t < PI / 2.0;
    if !(ok(theta1) && ok(theta)) {
        return Err(GeomError::Construction(format!(
            "angles θ₁ = {theta1}, θ = {theta} outside (0, π/2)"
        )));
    }
    Ok(TileParams {
        n,
        area,
        sigma,
        m,
        theta1: Angle(theta1),
        theta: Angle(theta),
        kind,
    })
}

/// Strictly convex equilateral `n`-gon of area `area`.
pub fn equilateral_tile(n: usize, area: f64) -> Result<(Polygon, TileParams)> {
    let params = equilateral_tile_params(n, area)?;
    let polygon = match params.kind {
        TileKind::RegularHexagon => regular_polygon(6, params.theta)?,
        _ => solve_equilateral_even_gon(&params.half_angles())?.polygon,
    };
    if let Some(a) = polygon.interior_angles().iter().find(|&&a| a >= PI / 2.0 + EPS_ANGLE) {
        return Err(GeomError::Geometry(format!("tile angle {a} is not below π/2")));
    }
    Ok((polygon, params))
}
