//! Hyperbolic-plane kernel: hyperboloid points, Lorentz isometries,
//! trigonometry and regular-polygon metrics.

mod dd;
mod isometry;
mod point;
mod trig;

pub(crate) use dd::Lifted;
pub use isometry::Isometry;
pub use point::{dist, geodesic_lerp, HPoint};
pub use trig::{
    acosh1p, regular_angle_for_area, regular_metrics, side_from_angles, solve_sas, RegularMetrics, SasSolution,
};

use serde::{Deserialize, Serialize};

/// An angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(pub f64);

impl Angle {
    pub fn radians(self) -> f64 {
        self.0
    }

    /// `num/den · π`.
    pub fn pi_fraction(num: f64, den: f64) -> Self {
        Angle(num * std::f64::consts::PI / den)
    }
}

impl From<f64> for Angle {
    fn from(v: f64) -> Self {
        Angle(v)
    }
}

/// A hyperbolic length (curvature −1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Length(pub f64);

impl Length {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<f64> for Length {
    fn from(v: f64) -> Self {
        Length(v)
    }
}

/// Wrap an angle into `[0, 2π)`.
pub fn wrap_two_pi(a: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let r = a.rem_euclid(tau);
    if r >= tau {
        0.0
    } else {
        r
    }
}
