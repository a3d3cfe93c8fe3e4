//! Non-negative integer combinations of angles summing to 2π.

use std::f64::consts::{PI, TAU};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::exec::Exec;
use crate::hyp::Angle;
use crate::pi_expr::PiRational;
use crate::tol::{EPS_ANGLE, EPS_COMBO};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComboSolution {
    pub coefficients: Vec<u32>,
    /// `Σ kᵢθᵢ − 2π`.
    pub residual: f64,
}

fn check_angles(angles: &[f64]) -> Result<()> {
    match angles.iter().find(|a| !(a.is_finite() && **a > 0.0)) {
        Some(a) => Err(GeomError::domain(format!("angle {a} must be positive"))),
        None => Ok(()),
    }
}

/// Depth-first search over coefficients in index order, so solutions come
/// out lexicographically sorted. The last coefficient is solved for.
struct Search<'a> {
    angles: &'a [f64],
    target: f64,
    tol: f64,
}

impl Search<'_> {
    fn bound(&self, i: usize) -> u32 {
        ((self.target + self.tol) / self.angles[i]).floor() as u32
    }

    fn run(&self, prefix: &mut Vec<u32>, sum: f64, out: &mut Vec<Vec<u32>>, first_only: bool) {
        let i = prefix.len();
        let last = self.angles.len() - 1;
        if i == last {
            let k = ((self.target - sum) / self.angles[i]).round();
            if k >= 0.0 && (sum + k * self.angles[i] - self.target).abs() <= self.tol {
                let mut c = prefix.clone();
                c.push(k as u32);
                out.push(c);
            }
            return;
        }
        for k in 0..=self.bound(i) {
            let s = sum + k as f64 * self.angles[i];
            if s > self.target + self.tol {
                break;
            }
            prefix.push(k);
            self.run(prefix, s, out, first_only);
            prefix.pop();
            if first_only && !out.is_empty() {
                return;
            }
        }
    }
}

/// All `k ∈ ℕⁿ` with `|Σ kᵢθᵢ − 2π| ≤ tol`, sorted lexicographically.
pub fn angle_combinations(angles: &[Angle], tol: f64) -> Result<Vec<ComboSolution>> {
    angle_combinations_with(Exec::default(), angles, tol)
}

/// [`angle_combinations`], parallel over the first coefficient when `exec`
/// allows it.
pub fn angle_combinations_with(exec: Exec, angles: &[Angle], tol: f64) -> Result<Vec<ComboSolution>> {
    if !(tol > 0.0) {
        return Err(GeomError::domain(format!("tolerance {tol} must be positive")));
    }
    let a: Vec<f64> = angles.iter().map(|t| t.0).collect();
    check_angles(&a)?;
    if a.is_empty() {
        return Ok(Vec::new());
    }
    let search = Search {
        angles: &a,
        target: TAU,
        tol,
    };
    let coeffs: Vec<Vec<u32>> = if a.len() == 1 {
        let mut out = Vec::new();
        search.run(&mut Vec::new(), 0.0, &mut out, false);
        out
    } else {
        exec.map_range(search.bound(0) as usize + 1, |k0| {
            let mut out = Vec::new();
            search.run(&mut vec![k0 as u32], k0 as f64 * a[0], &mut out, false);
            out
        })
        .into_iter()
        .flatten()
        .collect()
    };
    Ok(coeffs
        .into_iter()
        .map(|c| {
            let residual = c.iter().zip(&a).map(|(&k, &t)| k as f64 * t).sum::<f64>() - TAU;
            ComboSolution {
                coefficients: c,
                residual,
            }
        })
        .collect())
}

/// Whether some combination of `angles` sums to `target` within `tol`.
fn completes(angles: &[f64], target: f64, tol: f64) -> bool {
    if target.abs() <= tol {
        return true;
    }
    let search = Search { angles, target, tol };
    let mut out = Vec::new();
    search.run(&mut Vec::new(), 0.0, &mut out, true);
    !out.is_empty()
}

/// Exact enumeration for angles that are positive rational multiples of π.
pub fn angle_combinations_exact(angles: &[PiRational]) -> Result<Vec<Vec<u32>>> {
    if let Some(a) = angles.iter().find(|a| a.num <= 0) {
        return Err(GeomError::domain(format!("angle {a} must be positive")));
    }
    if angles.is_empty() {
        return Ok(Vec::new());
    }
    let l = angles.iter().fold(1i64, |l, a| l.lcm(&a.den));
    let w: Vec<i64> = angles.iter().map(|a| a.num * (l / a.den)).collect();
    let mut out = Vec::new();
    exact_run(&w, 2 * l, &mut Vec::new(), &mut out);
    Ok(out)
}

fn exact_run(w: &[i64], rem: i64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let i = prefix.len();
    if i == w.len() - 1 {
        if rem % w[i] == 0 {
            let mut c = prefix.clone();
            c.push((rem / w[i]) as u32);
            out.push(c);
        }
        return;
    }
    for k in 0..=rem / w[i] {
        prefix.push(k as u32);
        exact_run(w, rem - k * w[i], prefix, out);
        prefix.pop();
    }
}

/// Every coefficient at least 2 and all of one parity.
pub fn gs_coefficients(k: &[u32]) -> bool {
    k.iter().all(|&c| c >= 2) && k.windows(2).all(|w| w[0] % 2 == w[1] % 2)
}

/// [`gs_coefficients`] of the unique solution; `None` unless there is
/// exactly one.
pub fn gs_condition(solutions: &[ComboSolution]) -> Option<bool> {
    match solutions {
        [s] => Some(gs_coefficients(&s.coefficients)),
        _ => None,
    }
}

/// Conjectural: flags a quadrilateral with distinct angles as a tile
/// candidate when some solution has positive coefficients of one parity,
/// none or all equal to 1. Not a proven criterion.
pub fn quadrilateral_gs_candidate(solutions: &[ComboSolution]) -> bool {
    solutions.iter().any(|s| {
        let k = &s.coefficients;
        let ones = k.iter().filter(|&&c| c == 1).count();
        k.len() == 4
            && k.iter().all(|&c| c > 0)
            && k.windows(2).all(|w| w[0] % 2 == w[1] % 2)
            && (ones == 0 || ones == 4)
    })
}

/// Whether `θ` divides 2π (to 1e-9 relative). False outside `(0, π)`.
pub fn regular_tiles(theta: Angle) -> bool {
    if !(theta.0 > 0.0 && theta.0 < PI) {
        return false;
    }
    let q = TAU / theta.0;
    (q - q.round()).abs() <= 1e-9 * q
}

/// Whether any three of the angles (repetition allowed) can be completed by
/// further angles to a sum of 2π. Requires at least four angles, each at
/// most π/2.
pub fn margulis_check(angles: &[Angle]) -> bool {
    if angles.len() < 4 || angles.iter().any(|a| !(a.0 > 0.0 && a.0 <= PI / 2.0 + EPS_ANGLE)) {
        return false;
    }
    let mut v: Vec<f64> = angles.iter().map(|a| a.0).collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
    let m = v.len();
    for i in 0..m {
        for j in i..m {
            for l in j..m {
                if !completes(&v, TAU - v[i] - v[j] - v[l], EPS_COMBO) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::equilateral_tile_params;

    fn coeffs(angles: &[f64]) -> Vec<Vec<u32>> {
        let a: Vec<Angle> = angles.iter().map(|&t| Angle(t)).collect();
        angle_combinations(&a, 1e-9)
            .unwrap()
            .into_iter()
            .map(|s| s.coefficients)
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(coeffs(&[TAU / 3.0]), vec![vec![3]]);
        assert!(coeffs(&[1.0]).is_empty());
        assert_eq!(
            coeffs(&[PI / 2.0, PI / 3.0, PI / 7.0]),
            vec![
                vec![0, 0, 14],
                vec![0, 3, 7],
                vec![0, 6, 0],
                vec![2, 0, 7],
                vec![2, 3, 0],
                vec![4, 0, 0]
            ]
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(angle_combinations(&[Angle(1.0)], 0.0).is_err());
        assert!(angle_combinations(&[Angle(0.0)], 1e-9).is_err());
        assert!(angle_combinations_exact(&[PiRational::new(-1, 2).unwrap()]).is_err());
    }

    #[test]
    fn modes_agree() {
        let r: Vec<PiRational> = [(1, 2), (1, 3), (1, 7)]
            .iter()
            .map(|&(n, d)| PiRational::new(n, d).unwrap())
            .collect();
        let a: Vec<Angle> = r.iter().map(|p| Angle(p.value())).collect();
        let seq = angle_combinations_with(Exec::Sequential, &a, 1e-9).unwrap();
        let par = angle_combinations_with(Exec::Parallel, &a, 1e-9).unwrap();
        assert_eq!(seq, par);
        let exact = angle_combinations_exact(&r).unwrap();
        assert_eq!(exact, seq.iter().map(|s| s.coefficients.clone()).collect::<Vec<_>>());
        assert!(seq.iter().all(|s| s.residual.abs() < 1e-12));
    }

    #[test]
    fn gs_fixtures() {
        let one = |k: Vec<u32>| {
            vec![ComboSolution {
                coefficients: k,
                residual: 0.0,
            }]
        };
        assert_eq!(gs_condition(&one(vec![2, 4, 6])), Some(true));
        assert_eq!(gs_condition(&one(vec![1, 3, 5])), Some(false));
        assert_eq!(gs_condition(&one(vec![2, 3, 4])), Some(false));
        assert_eq!(gs_condition(&[]), None);
    }

    #[test]
    fn quadrilateral_candidates() {
        let s = |k: Vec<u32>| ComboSolution {
            coefficients: k,
            residual: 0.0,
        };
        assert!(quadrilateral_gs_candidate(&[s(vec![1, 1, 1, 1])]));
        assert!(quadrilateral_gs_candidate(&[s(vec![3, 5, 3, 7])]));
        assert!(!quadrilateral_gs_candidate(&[s(vec![1, 3, 1, 1])]));
        assert!(!quadrilateral_gs_candidate(&[s(vec![2, 4, 0, 2])]));
    }

    #[test]
    fn regular_tiling_angles() {
        assert!(regular_tiles(Angle(TAU / 3.0)));
        assert!(regular_tiles(Angle(PI / 6.0)));
        assert!(!regular_tiles(Angle(TAU / 7.5)));
        assert!(!regular_tiles(Angle(PI)));
    }

    #[test]
    fn margulis_examples() {
        let p = equilateral_tile_params(12, 9.5 * PI).unwrap();
        assert!(margulis_check(&p.angles()));
        assert!(margulis_check(&[Angle(PI / 2.0); 4]));
        let h = PI / 2.0;
        assert!(!margulis_check(&[Angle(h), Angle(h), Angle(h), Angle(0.7)]));
        assert!(!margulis_check(&[Angle(h); 3]));
        assert!(!margulis_check(&[Angle(2.0); 4]));
    }
}
