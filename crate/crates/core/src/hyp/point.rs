use serde::{Deserialize, Serialize};

use super::{Length, Lifted};
use crate::error::{GeomError, Result};
use crate::tol::EPS_IO;

/// A point of the hyperbolic plane on the upper sheet of the hyperboloid
/// `-x0² + x1² + x2² = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HPoint {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
}

impl HPoint {
    pub const ORIGIN: HPoint = HPoint {
        x0: 1.0,
        x1: 0.0,
        x2: 0.0,
    };

    /// Validated constructor; the time coordinate is recomputed from the
    /// spatial part after the residual check.
    pub fn new(x0: f64, x1: f64, x2: f64) -> Result<Self> {
        if !(x0.is_finite() && x1.is_finite() && x2.is_finite()) {
            return Err(GeomError::domain("non-finite hyperboloid coordinate"));
        }
        if x0 <= 0.0 {
            return Err(GeomError::domain("point is not on the upper sheet (x0 <= 0)"));
        }
        let residual = -x0 * x0 + x1 * x1 + x2 * x2 + 1.0;
        if residual.abs() > EPS_IO * (1.0 + x0 * x0) {
            return Err(GeomError::Domain(format!(
                "point ({x0}, {x1}, {x2}) is off the hyperboloid (residual {residual:.3e})"
            )));
        }
        Ok(Self::from_spatial(x1, x2))
    }

    /// Lift the spatial coordinates onto the hyperboloid.
    pub fn from_spatial(x1: f64, x2: f64) -> Self {
        let x0 = (1.0 + x1 * x1 + x2 * x2).sqrt();
        HPoint { x0, x1, x2 }
    }

    /// Point at distance `r` from the origin in direction `phi`.
    pub fn from_polar(r: f64, phi: f64) -> Self {
        let s = r.sinh();
        Self::from_spatial(s * phi.cos(), s * phi.sin())
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.x0, self.x1, self.x2]
    }

    /// Minkowski bilinear form of signature (−,+,+).
    pub fn minkowski(&self, o: &HPoint) -> f64 {
        -self.x0 * o.x0 + self.x1 * o.x1 + self.x2 * o.x2
    }

    pub fn residual(&self) -> f64 {
        self.minkowski(self) + 1.0
    }

    pub fn renormalized(&self) -> Self {
        Self::from_spatial(self.x1, self.x2)
    }

    pub fn is_finite(&self) -> bool {
        self.x0.is_finite() && self.x1.is_finite() && self.x2.is_finite()
    }

    pub fn distance(&self, o: &HPoint) -> f64 {
        Lifted::new(self).distance(&Lifted::new(o))
    }

    /// Distance from the origin.
    pub fn radius(&self) -> f64 {
        self.x1.hypot(self.x2).asinh()
    }

    /// Poincaré-disk coordinates.
    pub fn to_poincare(&self) -> (f64, f64) {
        let d = 1.0 + self.x0;
        (self.x1 / d, self.x2 / d)
    }

    pub fn from_poincare(u: f64, v: f64) -> Result<Self> {
        let r2 = u * u + v * v;
        if !(r2 < 1.0) {
            return Err(GeomError::domain("Poincaré coordinates outside the unit disk"));
        }
        let k = 2.0 / (1.0 - r2);
        Ok(Self::from_spatial(k * u, k * v))
    }

    /// Beltrami–Klein coordinates; geodesics are straight chords there.
    pub fn to_klein(&self) -> (f64, f64) {
        (self.x1 / self.x0, self.x2 / self.x0)
    }

    pub fn from_klein(u: f64, v: f64) -> Result<Self> {
        let r2 = u * u + v * v;
        if !(r2 < 1.0) {
            return Err(GeomError::domain("Klein coordinates outside the unit disk"));
        }
        let k = 1.0 / (1.0 - r2).sqrt();
        Ok(Self::from_spatial(k * u, k * v))
    }
}

/// Geodesic distance.
pub fn dist(p: &HPoint, q: &HPoint) -> Result<Length> {
    if !(p.is_finite() && q.is_finite()) {
        return Err(GeomError::domain("non-finite point in dist"));
    }
    Ok(Length(p.distance(q)))
}

/// Point at fraction `t` of the way along the geodesic from `p` to `q`.
pub fn geodesic_lerp(p: &HPoint, q: &HPoint, t: f64) -> HPoint {
    let d = p.distance(q);
    if d < 1e-300 {
        return *p;
    }
    let a = ((1.0 - t) * d).sinh() / d.sinh();
    let b = (t * d).sinh() / d.sinh();
    HPoint::from_spatial(a * p.x1 + b * q.x1, a * p.x2 + b * q.x2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn distance_to_self_is_zero() {
        let p = HPoint::from_polar(1.3, 0.4);
        assert_eq!(dist(&p, &p).unwrap().0, 0.0);
    }

    #[test]
    fn unit_geodesic_from_origin() {
        let q = HPoint::new(1f64.cosh(), 1f64.sinh(), 0.0).unwrap();
        assert!((HPoint::ORIGIN.distance(&q) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn agrees_with_inner_product_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        for _ in 0..2000 {
            let p = HPoint::from_polar(rng.gen_range(0.0..3.0), rng.gen_range(0.0..6.3));
            let q = HPoint::from_polar(rng.gen_range(0.0..3.0), rng.gen_range(0.0..6.3));
            let d = dist(&p, &q).unwrap().0;
            if d > 0.1 {
                let oracle = (-p.minkowski(&q)).acosh();
                assert!((d - oracle).abs() < 1e-12, "{d} vs {oracle}");
                checked += 1;
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn non_finite_rejected() {
        let bad = HPoint {
            x0: f64::NAN,
            x1: 0.0,
            x2: 0.0,
        };
        assert!(matches!(dist(&bad, &HPoint::ORIGIN), Err(GeomError::Domain(_))));
        assert!(HPoint::new(f64::INFINITY, 0.0, 0.0).is_err());
    }

    #[test]
    fn off_sheet_rejected() {
        assert!(HPoint::new(2.0, 0.0, 0.0).is_err());
        assert!(HPoint::new(-1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn model_round_trips() {
        let p = HPoint::from_polar(2.1, -0.7);
        let (u, v) = p.to_poincare();
        let back = HPoint::from_poincare(u, v).unwrap();
        assert!(p.distance(&back) < 1e-12);
        let (a, b) = p.to_klein();
        let back = HPoint::from_klein(a, b).unwrap();
        assert!(p.distance(&back) < 1e-12);
    }

    #[test]
    fn lerp_splits_distance() {
        let p = HPoint::from_polar(0.5, 0.1);
        let q = HPoint::from_polar(1.7, 2.0);
        let d = p.distance(&q);
        let m = geodesic_lerp(&p, &q, 0.25);
        assert!((p.distance(&m) - 0.25 * d).abs() < 1e-12);
        assert!((m.distance(&q) - 0.75 * d).abs() < 1e-12);
    }
}
