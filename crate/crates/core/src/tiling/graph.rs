//! Combinatorial tilings of closed surfaces and the vertex-degree audit.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Class of a face's interior angle at one of its corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleClass {
    /// Below π.
    Convex,
    /// Exactly π.
    Flat,
    /// Above π.
    Reflex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Face {
    pub sides: usize,
    /// One label per corner, or empty when unknown.
    #[serde(default)]
    pub angle_labels: Vec<AngleClass>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TilingGraph {
    pub chi: i64,
    pub faces: Vec<Face>,
    pub vertices: Vec<Vertex>,
    pub edges: usize,
}

impl TilingGraph {
    /// Checks the incidence counts and Euler's formula.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(GeomError::Data(m));
        if self.faces.is_empty() {
            return bad("no faces".into());
        }
        let sides: usize = self.faces.iter().map(|f| f.sides).sum();
        let degrees: usize = self.vertices.iter().map(|v| v.degree).sum();
        if sides != 2 * self.edges {
            return bad(format!("face sides sum to {sides}, expected 2E = {}", 2 * self.edges));
        }
        if degrees != 2 * self.edges {
            return bad(format!("vertex degrees sum to {degrees}, expected 2E = {}", 2 * self.edges));
        }
        let euler = self.faces.len() as i64 - self.edges as i64 + self.vertices.len() as i64;
        if euler != self.chi {
            return bad(format!("F − E + V = {euler} but χ = {}", self.chi));
        }
        for (i, f) in self.faces.iter().enumerate() {
            if !f.angle_labels.is_empty() && f.angle_labels.len() != f.sides {
                return bad(format!("face {i} has {} labels for {} sides", f.angle_labels.len(), f.sides));
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let g: TilingGraph = serde_json::from_str(s).map_err(|e| GeomError::Data(e.to_string()))?;
        g.validate()?;
        Ok(g)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| GeomError::Data(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tiling graph serializes")
    }

    /// Average number of degree-≥3 corners per face. Each vertex of degree
    /// `d` is a corner of `d` faces.
    pub fn v_bar(&self) -> f64 {
        let corners: usize = self.vertices.iter().map(|v| v.degree).filter(|&d| d >= 3).sum();
        corners as f64 / self.faces.len() as f64
    }

    /// The `k` for which equal-area faces have area `(k−6)π/3`, from the
    /// total area `−2πχ`.
    pub fn implied_k(&self) -> f64 {
        6.0 - 6.0 * self.chi as f64 / self.faces.len() as f64
    }
}

/// The Klein quartic: 24 heptagons, three at each vertex, on a genus-3
/// surface.
pub fn klein_quartic() -> TilingGraph {
    TilingGraph {
        chi: -4,
        faces: vec![
            Face {
                sides: 7,
                angle_labels: vec![AngleClass::Convex; 7],
            };
            24
        ],
        vertices: vec![Vertex { degree: 3 }; 56],
        edges: 84,
    }
}

/// Corner-label counts of one face against `ℓ₁ + 2ℓ₂ ≥ n − k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceAudit {
    pub sides: usize,
    /// Flat corners.
    pub l1: usize,
    /// Reflex corners.
    pub l2: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeAudit {
    pub chi: i64,
    pub v_bar: f64,
    pub k: i64,
    /// `k` agrees with the Gauss–Bonnet value `6 − 6χ/F`.
    pub k_consistent: bool,
    /// Totals over all labelled faces.
    pub l1: usize,
    pub l2: usize,
    /// The hyperbolic bound `v̄ ≤ k` applies only when `χ < 0`.
    pub applicable: bool,
    pub bound_satisfied: bool,
    /// Every vertex has degree 2 or 3.
    pub equality: bool,
    /// `v̄ ≤ 6`, checked for flat surfaces (`χ = 0`).
    pub euclidean_bound: Option<bool>,
    /// Per labelled face; unlabelled faces are skipped.
    pub faces: Vec<FaceAudit>,
}

impl DegreeAudit {
    pub fn all_faces_hold(&self) -> bool {
        self.faces.iter().all(|f| f.holds)
    }
}

pub fn degree_audit(g: &TilingGraph, k: i64) -> Result<DegreeAudit> {
    g.validate()?;
    let v_bar = g.v_bar();
    let faces: Vec<FaceAudit> = g
        .faces
        .iter()
        .filter(|f| !f.angle_labels.is_empty())
        .map(|f| {
            let count = |c| f.angle_labels.iter().filter(|&&l| l == c).count();
            let (l1, l2) = (count(AngleClass::Flat), count(AngleClass::Reflex));
            FaceAudit {
                sides: f.sides,
                l1,
                l2,
                holds: (l1 + 2 * l2) as i64 >= f.sides as i64 - k,
            }
        })
        .collect();
    let applicable = g.chi < 0;
    Ok(DegreeAudit {
        chi: g.chi,
        v_bar,
        k,
        k_consistent: (g.implied_k() - k as f64).abs() < 1e-9,
        l1: faces.iter().map(|f| f.l1).sum(),
        l2: faces.iter().map(|f| f.l2).sum(),
        applicable,
        bound_satisfied: applicable && v_bar <= k as f64 + 1e-12,
        equality: g.vertices.iter().all(|v| v.degree == 2 || v.degree == 3),
        euclidean_bound: (g.chi == 0).then_some(v_bar <= 6.0 + 1e-12),
        faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_quartic_counts() {
        let g = klein_quartic();
        g.validate().unwrap();
        let a = degree_audit(&g, 7).unwrap();
        assert_eq!(a.v_bar, 7.0);
        assert!(a.applicable && a.bound_satisfied && a.equality && a.k_consistent);
        assert!(a.all_faces_hold());
    }

    #[test]
    fn square_torus_is_euclidean() {
        // n × n squares on a torus: V = F = n², E = 2n²
        let g = TilingGraph {
            chi: 0,
            faces: vec![
                Face {
                    sides: 4,
                    angle_labels: vec![]
                };
                9
            ],
            vertices: vec![Vertex { degree: 4 }; 9],
            edges: 18,
        };
        let a = degree_audit(&g, 6).unwrap();
        assert!(!a.applicable && !a.bound_satisfied);
        assert_eq!(a.v_bar, 4.0);
        assert_eq!(a.euclidean_bound, Some(true));
        assert!(!a.equality);
    }

    #[test]
    fn ten_gons_with_flat_corners() {
        // genus 2, four 10-gons: 12 vertices of degree 3 and 2 of degree 2
        use AngleClass::*;
        let mut labels = vec![vec![Convex; 10]; 4];
        labels[0][0] = Flat;
        labels[0][4] = Flat;
        labels[0][5] = Flat;
        labels[1][3] = Flat;
        labels[2][2] = Flat;
        labels[2][7] = Reflex;
        let g = TilingGraph {
            chi: -2,
            faces: labels
                .into_iter()
                .map(|l| Face {
                    sides: 10,
                    angle_labels: l,
                })
                .collect(),
            vertices: [vec![Vertex { degree: 3 }; 12], vec![Vertex { degree: 2 }; 2]].concat(),
            edges: 20,
        };
        assert_eq!(g.implied_k(), 9.0);
        let a = degree_audit(&g, 7).unwrap();
        assert_eq!(a.v_bar, 9.0);
        assert!(!a.bound_satisfied && !a.k_consistent && a.equality);
        let holds: Vec<bool> = a.faces.iter().map(|f| f.holds).collect();
        assert_eq!(holds, [true, false, true, false]);
        assert_eq!((a.l1, a.l2), (5, 1));
        assert!(degree_audit(&g, 9).unwrap().bound_satisfied);
    }

    #[test]
    fn inconsistent_counts_are_data_errors() {
        let mut g = klein_quartic();
        g.edges = 85;
        assert!(matches!(degree_audit(&g, 7), Err(GeomError::Data(_))));
        let mut g = klein_quartic();
        g.chi = -2;
        assert!(matches!(g.validate(), Err(GeomError::Data(_))));
    }

    #[test]
    fn json_shape() {
        let s = r#"{"chi": -4, "faces": [{"sides": 7, "angle_labels": ["convex","convex","convex","convex","convex","convex","reflex"]}], "vertices": [], "edges": 0}"#;
        let e = TilingGraph::from_json(s).unwrap_err();
        assert!(matches!(e, GeomError::Data(_)));
        let g = TilingGraph::from_json(&klein_quartic().to_json()).unwrap();
        assert_eq!(g, klein_quartic());
    }
}
