//! Combinatorial tiling conditions: angle-combination enumeration, the
//! parity and completion predicates, scalene witnesses and degree audits.
//!
//! Real angle sums are compared at an absolute tolerance; the exact mode
//! works on rational multiples of π. Only integer combinations up to the
//! enumeration bound are examined, so uniqueness of a relation is never
//! certified against rational combinations.

mod combos;
mod graph;
mod scalene;

pub use combos::{
    angle_combinations, angle_combinations_exact, angle_combinations_with, gs_coefficients, gs_condition,
    margulis_check, quadrilateral_gs_candidate, regular_tiles, ComboSolution,
};
pub use graph::{degree_audit, klein_quartic, AngleClass, DegreeAudit, Face, FaceAudit, TilingGraph, Vertex};
pub use scalene::{scalene_feasible, scalene_witness, unique_relation, SCALENE_BUDGET};
