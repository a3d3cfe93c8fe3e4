//! JSON interchange: `{"model": "hyperboloid", "vertices": [[x0, x1, x2], …]}`.
//! Writers may add further top-level fields; readers ignore them.

use serde::{Deserialize, Serialize};

use super::Polygon;
use crate::error::{GeomError, Result};
use crate::hyp::HPoint;

pub const MODEL_HYPERBOLOID: &str = "hyperboloid";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonDoc {
    pub model: String,
    pub vertices: Vec<[f64; 3]>,
    #[serde(flatten)]
    pub extra: serde_json::Map<String, serde_json::Value>,
}

impl PolygonDoc {
    pub fn from_polygon(p: &Polygon) -> Self {
        PolygonDoc {
            model: MODEL_HYPERBOLOID.to_string(),
            vertices: p.vertices().iter().map(HPoint::coords).collect(),
            extra: serde_json::Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).unwrap_or(serde_json::Value::Null);
        self.extra.insert(key.to_string(), v);
        self
    }

    /// Validate the model tag and every point, then rebuild the polygon
    /// (clockwise input is reversed).
    pub fn to_polygon(&self) -> Result<Polygon> {
        if self.model != MODEL_HYPERBOLOID {
            return Err(GeomError::Data(format!(
                "unsupported model `{}` (expected `{MODEL_HYPERBOLOID}`)",
                self.model
            )));
        }
        let pts = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, c)| {
                HPoint::new(c[0], c[1], c[2])
                    .map_err(|e| GeomError::Data(format!("vertex {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Polygon::new_any_orientation(pts)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("polygon document serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| GeomError::Data(format!("polygon JSON: {e}")))
    }
}

impl Polygon {
    pub fn to_json(&self) -> String {
        PolygonDoc::from_polygon(self).to_json()
    }

    pub fn from_json(s: &str) -> Result<Polygon> {
        PolygonDoc::from_json(s)?.to_polygon()
    }
}
