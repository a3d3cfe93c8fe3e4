//! Hyperbolic polygon constructions, tiling combinatorics and isoperimetric checks.
//!
//! Points live on the hyperboloid sheet `-x0² + x1² + x2² = -1`; the Poincaré
//! disk and Beltrami–Klein coordinates are only used as views (rendering and
//! straight-chord tests). The crate is organised bottom-up:
//!
//! * [`hyp`]: points, isometries, trigonometry and regular-polygon metrics.
//! * [`polygon`]: oriented polygons, embeddedness, convex hulls, flattening.
//! * [`construct`]: builders for the tile families (regular, isosceles,
//!   rhombic, equilateral even-gons, equilateral tiles at prescribed area).
//! * [`tiling`]: angle-combination enumeration, tiling predicates and
//!   Euler/vertex-degree audits of tiling graphs.
//! * [`euclid`]: the Euclidean regular-n-gon area calculus.
//! * [`verify`]: named verification suites producing JSON reports.
//!
//! Batch workloads (random sampling, enumeration) run on rayon when the
//! `parallel` feature is enabled and fall back to plain iterators otherwise;
//! see [`exec::Exec`].

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod construct;
pub mod error;
pub mod euclid;
pub mod exec;
pub mod hyp;
pub mod pi_expr;
pub mod polygon;
pub mod sample;
pub mod svg;
pub mod tiling;
pub mod tol;
pub mod verify;

pub use error::{GeomError, Result};
pub use exec::Exec;
pub use hyp::{Angle, HPoint, Isometry, Length, RegularMetrics};
pub use pi_expr::PiRational;
pub use polygon::{Chain, Polygon};
