//! Area of the regular Euclidean `n`-gon at fixed perimeter as a function of
//! real `n`, and the inequality chain bounding average tile area on a flat
//! torus by the hexagon's.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Area of the regular `n`-gon of perimeter `p`: `p² cot(π/n) / 4n`,
/// extended by 0 on `[0, 2]`.
#[allow(non_snake_case)]
pub fn A_of_n(n: f64, p: f64) -> Result<f64> {
    if !(n >= 0.0) || !(p > 0.0) {
        return Err(GeomError::domain(format!("A(n) needs n ≥ 0 and P > 0 (got n = {n}, P = {p})")));
    }
    Ok(area(n, p))
}

fn area(n: f64, p: f64) -> f64 {
    if n <= 2.0 {
        0.0
    } else {
        p * p / ((PI / n).tan() * 4.0 * n)
    }
}

/// Closed-form `A''(n)`, via `α = π/n`.
pub fn second_derivative(n: f64, p: f64) -> f64 {
    let a = PI / n;
    let csc2 = 1.0 / (a.sin() * a.sin());
    p * p / 4.0 * (2.0 / a.tan() * (1.0 + a * a * csc2) - 4.0 * a * csc2) / n.powi(3)
}

/// `2cos α (sin²α + α²) − 4α sin α`, which carries the sign of `A''`.
pub fn concavity_factor(alpha: f64) -> f64 {
    let s = alpha.sin();
    2.0 * alpha.cos() * (s * s + alpha * alpha) - 4.0 * alpha * s
}

/// Relative step of the central differences.
const FD_STEP: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcavityReport {
    pub samples: usize,
    /// Grid points where the first difference is not positive.
    pub increasing_failures: usize,
    /// Grid points where the second difference is not negative.
    pub concave_failures: usize,
    /// Grid points where the closed-form second derivative is not negative.
    pub closed_form_failures: usize,
}

impl ConcavityReport {
    pub fn passed(&self) -> bool {
        self.increasing_failures == 0 && self.concave_failures == 0 && self.closed_form_failures == 0
    }
}

/// Finite-difference monotonicity and concavity of `A` on `samples` evenly
/// spaced points of `[n_lo, n_hi]`.
pub fn concavity_report(n_lo: f64, n_hi: f64, p: f64, samples: usize) -> Result<ConcavityReport> {
    if !(n_lo > 2.0 && n_lo < n_hi) || !(p > 0.0) || samples < 2 {
        return Err(GeomError::domain(format!(
            "concavity grid needs 2 < n_lo < n_hi, P > 0 and ≥ 2 samples (got [{n_lo}, {n_hi}], {p}, {samples})"
        )));
    }
    let mut r = ConcavityReport {
        samples,
        increasing_failures: 0,
        concave_failures: 0,
        closed_form_failures: 0,
    };
    for i in 0..samples {
        let n = n_lo + (n_hi - n_lo) * i as f64 / (samples - 1) as f64;
        let h = FD_STEP * n;
        let (lo, mid, hi) = (area(n - h, p), area(n, p), area(n + h, p));
        if !(hi - lo > 0.0) {
            r.increasing_failures += 1;
        }
        if !(hi - 2.0 * mid + lo < 0.0) {
            r.concave_failures += 1;
        }
        if !(second_derivative(n, p) < 0.0) {
            r.closed_form_failures += 1;
        }
    }
    Ok(r)
}

/// `A(n) < 2A(n/2)`, stated for `n ≥ 6`.
pub fn halving_inequality(n: f64, p: f64) -> Result<bool> {
    if !(n >= 6.0) || !(p > 0.0) {
        return Err(GeomError::domain(format!("halving inequality needs n ≥ 6 and P > 0 (got {n}, {p})")));
    }
    Ok(area(n, p) < 2.0 * area(n / 2.0, p))
}

/// The equivalent form `cos²(π/n) > 2/3`, valid for `n > 4`.
pub fn halving_cos_form(n: f64) -> bool {
    (PI / n).cos().powi(2) > 2.0 / 3.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JensenAudit {
    pub mean: f64,
    /// `mean ≤ 6`; the chain is only claimed under it.
    pub hypothesis: bool,
    /// Side counts after the repair rule.
    pub repaired: Vec<f64>,
    pub repairs: usize,
    /// Counts below 2 remained with no count ≥ 6 left to split.
    pub exhausted: bool,
    /// `Σ A(nᵢ)` before and after repair.
    pub sum_area: f64,
    pub sum_repaired: f64,
    /// `N·A(mean of repaired counts)`.
    pub jensen_bound: f64,
    /// `N·A(6)`.
    pub hexagon_bound: f64,
    pub slack_repair: f64,
    /// Jensen and monotonicity links; skipped when the repair is exhausted.
    pub slack_jensen: Option<f64>,
    pub slack_monotone: Option<f64>,
    /// `N·A(6) − Σ A(repaired)`, the whole chain in one step.
    pub slack_direct: f64,
    /// `N·A(6) − N·A_target`.
    pub slack_target: f64,
    pub chain_holds: bool,
    /// Every link of the chain is an equality.
    pub tight: bool,
    pub all_hexagons: bool,
}

/// Evaluates `Σ A(nᵢ) ≤ N·A(mean) ≤ N·A(6)` for side counts with mean at
/// most 6. Counts below 2 (where `A` is not concave) are first absorbed by
/// splitting the largest count `m ≥ 6` into two of `m/2`, which raises
/// `Σ A` and lowers the mean. When no count ≥ 6 is left every count is
/// below 6 and `Σ A(nᵢ) ≤ N·A(6)` is checked directly instead.
pub fn jensen_audit(counts: &[f64], p: f64, a_target: f64) -> Result<JensenAudit> {
    if counts.is_empty() || counts.iter().any(|n| !(*n >= 0.0 && n.is_finite())) || !(p > 0.0) {
        return Err(GeomError::domain("side counts must be non-negative and finite, P > 0"));
    }
    let big_n = counts.len() as f64;
    let mean = counts.iter().sum::<f64>() / big_n;
    let mut repaired = counts.to_vec();
    let mut repairs = 0;
    let mut exhausted = false;
    while let Some(small) = repaired.iter().position(|&n| n < 2.0) {
        let (big, &m) = repaired
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .expect("non-empty");
        if m < 6.0 {
            exhausted = true;
            break;
        }
        repaired[big] = m / 2.0;
        repaired[small] = m / 2.0;
        repairs += 1;
    }
    let sum_area: f64 = counts.iter().map(|&n| area(n, p)).sum();
    let sum_repaired: f64 = repaired.iter().map(|&n| area(n, p)).sum();
    let mean_repaired = repaired.iter().sum::<f64>() / big_n;
    let jensen_bound = big_n * area(mean_repaired, p);
    let hexagon_bound = big_n * area(6.0, p);
    let tol = 1e-12 * hexagon_bound;
    let slack_repair = sum_repaired - sum_area;
    let slack_direct = hexagon_bound - sum_repaired;
    let (slack_jensen, slack_monotone) = if exhausted {
        (None, None)
    } else {
        (Some(jensen_bound - sum_repaired), Some(hexagon_bound - jensen_bound))
    };
    let links: Vec<f64> = match (slack_jensen, slack_monotone) {
        (Some(j), Some(m)) => vec![slack_repair, j, m],
        _ => vec![slack_repair, slack_direct],
    };
    Ok(JensenAudit {
        mean,
        hypothesis: mean <= 6.0 + 1e-12,
        repairs,
        exhausted,
        sum_area,
        sum_repaired,
        jensen_bound,
        hexagon_bound,
        slack_repair,
        slack_jensen,
        slack_monotone,
        slack_direct,
        slack_target: hexagon_bound - big_n * a_target,
        chain_holds: links.iter().all(|&s| s >= -tol),
        tight: links.iter().all(|&s| s.abs() <= tol),
        all_hexagons: counts.iter().all(|&n| n == 6.0),
        repaired,
    })
}
