//! Scalene triangles whose angles satisfy a single prescribed relation.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::exec::Exec;
use crate::hyp::Angle;
use crate::tiling::angle_combinations_with;

/// Candidates drawn before giving up.
pub const SCALENE_BUDGET: usize = 100_000;
/// Minimum pairwise gap between the witness angles.
const MIN_GAP: f64 = 1e-6;
/// Witness angles stay above this so the recheck enumeration stays small.
const MIN_ANGLE: f64 = 0.01;

/// Whether `Σ kᵢθᵢ = 2π` meets `{θᵢ > 0, Σθᵢ < π}`. Over that open triangle
/// the form ranges over `(0, π·max kᵢ)`.
pub fn scalene_feasible(k: [u32; 3]) -> bool {
    k.iter().copied().max().unwrap_or(0) > 2
}

/// Random hyperbolic triangle angles `(θ₁, θ₂, θ₃)`, pairwise distinct, with
/// `Σ kᵢθᵢ = 2π` and no other combination summing to 2π (at tolerance 1e-9).
pub fn scalene_witness(k: [u32; 3], seed: u64) -> Result<[Angle; 3]> {
    if !scalene_feasible(k) {
        return Err(GeomError::Infeasible(format!(
            "Σ kᵢθᵢ = 2π with k = {k:?} has no solution with Σθᵢ < π"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = (0..3).max_by_key(|&i| (k[i], std::cmp::Reverse(i))).unwrap_or(0);
    let (a, b) = ((p + 1) % 3, (p + 2) % 3);
    for _ in 0..SCALENE_BUDGET {
        let (mut u, mut v) = (rng.gen_range(0.0..PI), rng.gen_range(0.0..PI));
        if u + v >= PI {
            (u, v) = (PI - u, PI - v);
        }
        let mut t = [0.0; 3];
        t[a] = u;
        t[b] = v;
        t[p] = (TAU - k[a] as f64 * u - k[b] as f64 * v) / k[p] as f64;
        if t.iter().any(|&x| x < MIN_ANGLE) || t.iter().sum::<f64>() >= PI {
            continue;
        }
        if (0..3).any(|i| (t[i] - t[(i + 1) % 3]).abs() <= MIN_GAP) {
            continue;
        }
        let angles = t.map(Angle);
        if unique_relation(&angles, k)? {
            return Ok(angles);
        }
    }
    Err(GeomError::SearchExhausted(SCALENE_BUDGET))
}

/// Whether `k` is the only combination of `angles` summing to 2π.
pub fn unique_relation(angles: &[Angle; 3], k: [u32; 3]) -> Result<bool> {
    let sols = angle_combinations_with(Exec::Sequential, angles, 1e-9)?;
    Ok(sols.len() == 1 && sols[0].coefficients == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_for_2_3_7() {
        let t = scalene_witness([2, 3, 7], 7).unwrap();
        let s = 2.0 * t[0].0 + 3.0 * t[1].0 + 7.0 * t[2].0;
        assert!((s - TAU).abs() < 1e-12);
        assert!(t.iter().map(|a| a.0).sum::<f64>() < PI);
        assert!((t[0].0 - t[1].0).abs() > 1e-6 && (t[1].0 - t[2].0).abs() > 1e-6);
        assert!(unique_relation(&t, [2, 3, 7]).unwrap());
        assert_eq!(scalene_witness([2, 3, 7], 7).unwrap(), t);
    }

    #[test]
    fn infeasible_relations() {
        for k in [[1, 1, 1], [2, 2, 2], [0, 0, 0], [2, 1, 0]] {
            assert!(matches!(scalene_witness(k, 0), Err(GeomError::Infeasible(_))), "{k:?}");
        }
    }

    #[test]
    fn zero_coefficients_are_allowed() {
        let t = scalene_witness([0, 5, 0], 3).unwrap();
        assert!((5.0 * t[1].0 - TAU).abs() < 1e-12);
    }
}
