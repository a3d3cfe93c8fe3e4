//! Named tolerances shared across the crate.

/// Points: hyperboloid residual, distinctness of consecutive vertices.
pub const EPS_POINT: f64 = 1e-12;
/// Interior-angle comparisons (π-vertices, complementary pairs).
pub const EPS_ANGLE: f64 = 1e-9;
/// Area comparisons.
pub const EPS_AREA: f64 = 1e-9;
/// Absolute tolerance for "Σ kᵢθᵢ = 2π" tests on real angles.
pub const EPS_COMBO: f64 = 1e-9;
/// Hyperboloid residual accepted when reading coordinates from files.
pub const EPS_IO: f64 = 1e-9;
/// Isometry compositions between Minkowski re-orthonormalisations.
pub const RENORM_PERIOD: u32 = 16;
