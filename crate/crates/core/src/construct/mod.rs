//! Builders for the tile families: regular polygons, isosceles triangles,
//! rhombi, equilateral even-gons and equilateral tiles of prescribed area.

mod chain;
mod tiles;

pub use chain::{build_chain, equilateral_even_gon, solve_equilateral_even_gon, EvenGon};
pub use tiles::{
    equilateral_tile, equilateral_tile_params, isosceles_triangle_tile, rhombic_tile,
    IsoTriangleParams, TileKind, TileParams,
};

use std::f64::consts::{PI, TAU};

use crate::error::{GeomError, Result};
use crate::hyp::{regular_metrics, Angle, HPoint};
use crate::polygon::Polygon;

/// Regular `n`-gon with interior angle `theta`, centred at the origin with
/// vertex 0 on the positive `x1` axis.
pub fn regular_polygon(n: usize, theta: Angle) -> Result<Polygon> {
    if n < 3 {
        return Err(GeomError::Domain(format!("regular polygon needs n ≥ 3 (got {n})")));
    }
    let t = theta.radians();
    let limit = (n as f64 - 2.0) * PI / n as f64;
    if !(t > 0.0 && t < limit) {
        return Err(GeomError::Domain(format!(
            "angle {t} outside (0, {limit}) for a hyperbolic {n}-gon"
        )));
    }
    let r = regular_metrics(n, theta)?.circumradius.value();
    let verts = (0..n)
        .map(|k| HPoint::from_polar(r, TAU * k as f64 / n as f64))
        .collect();
    Polygon::new(verts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyp::regular_metrics;

    #[test]
    fn regular_heptagon_matches_metrics() {
        let p = regular_polygon(7, Angle(TAU / 3.0)).unwrap();
        let m = regular_metrics(7, Angle(TAU / 3.0)).unwrap();
        assert!((p.area().unwrap() - PI / 3.0).abs() < 1e-12);
        assert!((p.perimeter() - m.perimeter).abs() < 1e-10);
        for &a in p.interior_angles() {
            assert!((a - TAU / 3.0).abs() < 1e-10);
        }
    }

    #[test]
    fn octagon_area() {
        let p = regular_polygon(8, Angle(TAU / 3.0)).unwrap();
        assert!((p.area().unwrap() - 2.0 * PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn euclidean_square_rejected() {
        assert!(matches!(
            regular_polygon(4, Angle(PI / 2.0)),
            Err(GeomError::Domain(_))
        ));
        assert!(regular_polygon(2, Angle(0.1)).is_err());
        assert!(regular_polygon(5, Angle(0.0)).is_err());
    }
}
