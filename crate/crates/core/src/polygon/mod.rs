//! Oriented geodesic polygons of the hyperbolic plane.
//!
//! A [`Polygon`] stores its vertices in counterclockwise order together with
//! measured side lengths and interior angles. Interior angles lie in
//! `(0, 2π)`; reflex vertices measure more than π and flat (degenerate)
//! vertices exactly π.

mod flatten;
mod hull;
mod intersect;
mod io;

use std::f64::consts::{PI, TAU};

pub use flatten::{flatten, flatten_complementary_pair};
pub use hull::convex_hull;
pub use intersect::is_simple;
pub use io::{PolygonDoc, MODEL_HYPERBOLOID};

use crate::error::{GeomError, Result};
use crate::hyp::{geodesic_lerp, wrap_two_pi, Angle, HPoint, Isometry, Length, Lifted};
use crate::tol::{EPS_ANGLE, EPS_POINT};

/// Interior angle at `v` of a counterclockwise polygon whose neighbours are
/// `prev` and `next`.
pub fn interior_angle(prev: &HPoint, v: &HPoint, next: &HPoint) -> f64 {
    let v = Lifted::new(v);
    let p = v.chart(&Lifted::new(prev));
    let q = v.chart(&Lifted::new(next));
    wrap_two_pi(p.x2.atan2(p.x1) - q.x2.atan2(q.x1))
}

/// Signed area of the geodesic triangle `abc` (positive when counterclockwise).
pub fn triangle_signed_area(a: &HPoint, b: &HPoint, c: &HPoint) -> f64 {
    // tan(Δ/2) = det(a, b, c) / (1 − ⟨a,b⟩ − ⟨b,c⟩ − ⟨c,a⟩), evaluated with a
    // moved to the origin.
    let a = Lifted::new(a);
    let b = a.chart(&Lifted::new(b));
    let c = a.chart(&Lifted::new(c));
    let det = b.x1 * c.x2 - b.x2 * c.x1;
    let denom = 1.0 + b.x0 + c.x0 - b.minkowski(&c);
    2.0 * det.atan2(denom)
}

/// Indices of flat (`|θ − π| ≤ EPS_ANGLE`) and reflex (`θ > π + EPS_ANGLE`)
/// vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConcaveReport {
    pub flat: Vec<usize>,
    pub reflex: Vec<usize>,
}

impl ConcaveReport {
    /// Number of angles of measure exactly π.
    pub fn l1(&self) -> usize {
        self.flat.len()
    }

    /// Number of angles of measure greater than π.
    pub fn l2(&self) -> usize {
        self.reflex.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<HPoint>,
    sides: Vec<f64>,
    angles: Vec<f64>,
    simple: bool,
}

impl Polygon {
    /// Build from counterclockwise vertices. Self-intersecting input is
    /// accepted (see [`Polygon::is_embedded`]); clockwise input is not.
    pub fn new(vertices: Vec<HPoint>) -> Result<Self> {
        let p = Self::measure(vertices)?;
        if p.turning_number() < 0 {
            return Err(GeomError::domain("polygon is oriented clockwise"));
        }
        Ok(p)
    }

    /// Like [`Polygon::new`] but reverses clockwise input.
    pub fn new_any_orientation(mut vertices: Vec<HPoint>) -> Result<Self> {
        let p = Self::measure(vertices.clone())?;
        if p.turning_number() < 0 {
            vertices.reverse();
            return Self::measure(vertices);
        }
        Ok(p)
    }

    fn measure(vertices: Vec<HPoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::Degenerate(format!("{n} vertices, need at least 3")));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::domain("non-finite vertex"));
        }
        let sides: Vec<f64> = (0..n)
            .map(|i| vertices[i].distance(&vertices[(i + 1) % n]))
            .collect();
        if let Some(i) = sides.iter().position(|&s| s <= EPS_POINT) {
            return Err(GeomError::Degenerate(format!(
                "vertices {i} and {} coincide",
                (i + 1) % n
            )));
        }
        let angles = (0..n)
            .map(|i| interior_angle(&vertices[(i + n - 1) % n], &vertices[i], &vertices[(i + 1) % n]))
            .collect();
        let simple = is_simple(&vertices, true);
        Ok(Polygon {
            vertices,
            sides,
            angles,
            simple,
        })
    }

    /// Realise side/angle data by a turtle walk: `sides[i]` joins vertex `i`
    /// to vertex `i+1`, `angles[i]` is the interior angle at vertex `i`.
    pub fn from_side_angle_data(sides: &[Length], angles: &[Angle]) -> Result<Self> {
        let n = sides.len();
        if n != angles.len() || n < 3 {
            return Err(GeomError::Domain(format!(
                "need equal-length side and angle lists of length ≥ 3 (got {n} and {})",
                angles.len()
            )));
        }
        let mut frame = Isometry::identity();
        let mut vertices = Vec::with_capacity(n);
        for i in 0..n {
            vertices.push(frame.position());
            frame = frame.advance(sides[i].0).turn(PI - angles[(i + 1) % n].0);
        }
        let perimeter: f64 = sides.iter().map(|s| s.0).sum();
        let position = frame.position().distance(&HPoint::ORIGIN);
        let m = frame.matrix();
        let heading = m[2][1].atan2(m[1][1]).abs();
        if position > EPS_POINT * (perimeter / 2.0).cosh() || heading > EPS_ANGLE {
            return Err(GeomError::Closure { position, heading });
        }
        Self::new(vertices)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[HPoint] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &HPoint {
        &self.vertices[i % self.len()]
    }

    /// `side_lengths()[i]` is the length of the edge from vertex `i` to `i+1`.
    pub fn side_lengths(&self) -> &[f64] {
        &self.sides
    }

    pub fn interior_angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn angle(&self, i: usize) -> Angle {
        Angle(self.angles[i % self.len()])
    }

    pub fn next(&self, i: usize) -> usize {
        (i + 1) % self.len()
    }

    pub fn prev(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    /// Turning number of the boundary (1 for a simple counterclockwise
    /// polygon). The total turning `Σ(π − θᵢ)` exceeds `2π·turning` by the
    /// signed enclosed area, which the fan triangulation supplies.
    pub fn turning_number(&self) -> i64 {
        let turning: f64 = self.angles.iter().map(|a| PI - a).sum();
        ((turning - self.triangulated_area()) / TAU).round() as i64
    }

    /// No two edges meet except adjacent edges at their shared vertex.
    pub fn is_embedded(&self) -> bool {
        self.simple
    }

    pub fn perimeter(&self) -> f64 {
        self.sides.iter().sum()
    }

    /// `(n−2)π − Σθᵢ` without the simplicity check.
    pub fn gauss_bonnet_area(&self) -> f64 {
        (self.len() as f64 - 2.0) * PI - self.angles.iter().sum::<f64>()
    }

    /// Gauss–Bonnet area; refused for self-intersecting polygons.
    pub fn area(&self) -> Result<f64> {
        if !self.simple {
            return Err(GeomError::domain("area is undefined for a self-intersecting polygon"));
        }
        Ok(self.gauss_bonnet_area())
    }

    /// Sum of signed areas of the fan triangles from vertex 0.
    pub fn triangulated_area(&self) -> f64 {
        let v = &self.vertices;
        (1..v.len() - 1)
            .map(|i| triangle_signed_area(&v[0], &v[i], &v[i + 1]))
            .sum()
    }

    pub fn concave_vertices(&self) -> ConcaveReport {
        let mut r = ConcaveReport::default();
        for (i, &a) in self.angles.iter().enumerate() {
            if (a - PI).abs() <= EPS_ANGLE {
                r.flat.push(i);
            } else if a > PI + EPS_ANGLE {
                r.reflex.push(i);
            }
        }
        r
    }

    /// All angles ≤ π + EPS_ANGLE and the polygon is simple.
    pub fn is_convex(&self) -> bool {
        self.simple && self.angles.iter().all(|&a| a <= PI + EPS_ANGLE)
    }

    /// Remove every vertex of measure π (the canonical representative of the
    /// equivalence class).
    pub fn reduce_equivalent(&self) -> Result<Polygon> {
        let keep: Vec<HPoint> = self
            .vertices
            .iter()
            .zip(&self.angles)
            .filter(|(_, a)| (**a - PI).abs() > EPS_ANGLE)
            .map(|(v, _)| *v)
            .collect();
        if keep.len() < 3 {
            return Err(GeomError::Degenerate(format!(
                "only {} non-flat vertices remain",
                keep.len()
            )));
        }
        if keep.len() == self.len() {
            return Ok(self.clone());
        }
        Polygon::new(keep)
    }

    /// Insert `count` equally spaced vertices on edge `edge` (from vertex
    /// `edge` to `edge+1`).
    pub fn insert_degenerate_vertices(&self, edge: usize, count: usize) -> Result<Polygon> {
        if count == 0 {
            return Err(GeomError::domain("count must be at least 1"));
        }
        let n = self.len();
        if edge >= n {
            return Err(GeomError::Domain(format!("edge {edge} out of range for {n}-gon")));
        }
        let (a, b) = (self.vertices[edge], self.vertices[(edge + 1) % n]);
        let mut out = Vec::with_capacity(n + count);
        out.extend_from_slice(&self.vertices[..=edge]);
        for k in 1..=count {
            out.push(geodesic_lerp(&a, &b, k as f64 / (count + 1) as f64));
        }
        out.extend_from_slice(&self.vertices[edge + 1..]);
        Polygon::new(out)
    }

    /// Insert `per_edge` equally spaced vertices on every edge.
    pub fn subdivide_edges(&self, per_edge: usize) -> Result<Polygon> {
        if per_edge == 0 {
            return Err(GeomError::domain("per_edge must be at least 1"));
        }
        let n = self.len();
        let mut out = Vec::with_capacity(n * (per_edge + 1));
        for i in 0..n {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
            out.push(a);
            for k in 1..=per_edge {
                out.push(geodesic_lerp(&a, &b, k as f64 / (per_edge + 1) as f64));
            }
        }
        Polygon::new(out)
    }

    /// Apply an isometry to every vertex.
    pub fn transformed(&self, g: &Isometry) -> Result<Polygon> {
        Polygon::new(self.vertices.iter().map(|v| g.apply(v)).collect())
    }

    /// Congruence up to an isometry (orientation-preserving or reversing)
    /// and relabelling of the starting vertex, by comparing all pairwise
    /// vertex distances.
    pub fn congruent_to(&self, other: &Polygon, tol: f64) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        let d = |p: &Polygon, i: usize, j: usize| p.vertices[i % n].distance(&p.vertices[j % n]);
        let matches = |map: &dyn Fn(usize) -> usize| {
            (0..n).all(|i| (i + 1..n).all(|j| (d(self, i, j) - d(other, map(i), map(j))).abs() <= tol))
        };
        (0..n).any(|s| matches(&|i| i + s) || matches(&|i| s + n - i))
    }
}

/// Open geodesic chain `V₁ … V_{k}` with uniform side length.
#[derive(Debug, Clone, PartialEq)]
pub struct Chain {
    vertices: Vec<HPoint>,
    side: Length,
    angles: Vec<Angle>,
    endpoint_angle_sum: f64,
}

impl Chain {
    pub(crate) fn from_parts(
        vertices: Vec<HPoint>,
        side: Length,
        angles: Vec<Angle>,
        endpoint_angle_sum: f64,
    ) -> Self {
        Chain {
            vertices,
            side,
            angles,
            endpoint_angle_sum,
        }
    }

    pub fn vertices(&self) -> &[HPoint] {
        &self.vertices
    }

    pub fn side(&self) -> Length {
        self.side
    }

    /// Prescribed interior angles at the internal vertices.
    pub fn internal_angles(&self) -> &[Angle] {
        &self.angles
    }

    /// The open chain itself has no self-intersections.
    pub fn is_embedded(&self) -> bool {
        is_simple(&self.vertices, false)
    }

    /// `m(V₁) + m(V_last)` of the closed-up polygon.
    pub fn endpoint_angle_sum(&self) -> f64 {
        self.endpoint_angle_sum
    }

    /// Close the chain with the geodesic from the last vertex to the first.
    pub fn closed(&self) -> Result<Polygon> {
        Polygon::measure(self.vertices.clone())
    }
}
