use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{Angle, Length};
use crate::error::{GeomError, Result};

/// `acosh(1 + x)` without cancellation for small `x`.
pub fn acosh1p(x: f64) -> f64 {
    let x = x.max(0.0);
    (x + (x * (x + 2.0)).sqrt()).ln_1p()
}

/// Two sides `b`, `c` and the included angle `a_ang ∈ [0, π]` of a triangle
/// give the third side and the angles opposite `b` and `c`.
///
/// Uses `cosh a − 1 = 2 sinh²((b−c)/2) + 2 sinh b sinh c sin²(A/2)` and the
/// hyperbolic Napier analogies, which stay accurate for long thin triangles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SasSolution {
    pub side: f64,
    pub opposite_b: f64,
    pub opposite_c: f64,
    /// `π − opposite_b`, accurate when `opposite_b` is close to π.
    pub supplement_b: f64,
    /// `π − opposite_c`.
    pub supplement_c: f64,
}

pub fn solve_sas(b: f64, c: f64, a_ang: f64) -> SasSolution {
    let h = a_ang / 2.0;
    let (sh, ch) = h.sin_cos();
    let (d, s) = ((b - c) / 2.0, (b + c) / 2.0);
    let side = if s < 300.0 {
        let sd = d.sinh();
        acosh1p(2.0 * sd * sd + 2.0 * b.sinh() * c.sinh() * sh * sh)
    } else {
        // ln(cosh a − 1) by log-sum-exp; cosh a ≈ e^a / 2 here.
        let u = if d == 0.0 {
            f64::NEG_INFINITY
        } else {
            2.0_f64.ln() + 2.0 * ln_sinh(d.abs())
        };
        let v = 2.0_f64.ln() + ln_sinh(b) + ln_sinh(c) + 2.0 * sh.ln();
        let (hi, lo) = if u > v { (u, v) } else { (v, u) };
        hi + (lo - hi).exp().ln_1p() + 2.0_f64.ln()
    };
    let sum_half = (cosh_ratio(d, s) * ch).atan2(sh);
    let co_sum = sh.atan2(cosh_ratio(d, s) * ch);
    let diff_half = (sinh_ratio(d, s) * ch).atan2(sh);
    let (b_ang, c_ang) = (sum_half + diff_half, sum_half - diff_half);
    let mut sol = SasSolution {
        side,
        opposite_b: b_ang,
        opposite_c: c_ang,
        supplement_b: PI - b_ang,
        supplement_c: PI - c_ang,
    };
    // The angle opposite the shorter side is acute. When it is small the
    // analogies lose it to cancellation, so take it from the sine rule; the
    // other angle is then `2·sum_half − small`.
    let sin_small = (sinh_ratio(b.min(c), side) * a_ang.sin()).min(1.0);
    if sin_small < 0.5 {
        let small = sin_small.asin();
        let (small_ang, small_sup, big_ang, big_sup) = (
            small,
            PI - small,
            2.0 * sum_half - small,
            2.0 * co_sum + small,
        );
        if b <= c {
            (sol.opposite_b, sol.supplement_b) = (small_ang, small_sup);
            (sol.opposite_c, sol.supplement_c) = (big_ang, big_sup);
        } else {
            (sol.opposite_c, sol.supplement_c) = (small_ang, small_sup);
            (sol.opposite_b, sol.supplement_b) = (big_ang, big_sup);
        }
    }
    sol
}

fn ln_sinh(t: f64) -> f64 {
    if t < 20.0 {
        t.sinh().ln()
    } else {
        t - 2.0_f64.ln() + (-(-2.0 * t).exp_m1()).ln()
    }
}

/// `cosh x / cosh y` without overflow.
fn cosh_ratio(x: f64, y: f64) -> f64 {
    let (x, y) = (x.abs(), y.abs());
    if x.max(y) < 300.0 {
        x.cosh() / y.cosh()
    } else {
        (x - y).exp() * (1.0 + (-2.0 * x).exp()) / (1.0 + (-2.0 * y).exp())
    }
}

/// `sinh x / sinh y` for `y ≥ 0` without overflow.
fn sinh_ratio(x: f64, y: f64) -> f64 {
    if y == 0.0 {
        return 1.0;
    }
    if x.abs().max(y) < 300.0 {
        x.sinh() / y.sinh()
    } else {
        x.signum() * (x.abs() - y).exp() * (-2.0 * x.abs()).exp_m1() / (-2.0 * y).exp_m1()
    }
}

fn check_angle(a: Angle, what: &str) -> Result<f64> {
    let v = a.radians();
    if !v.is_finite() || v <= 0.0 || v >= PI {
        return Err(GeomError::Domain(format!("{what} = {v} is not in (0, π)")));
    }
    Ok(v)
}

/// Length of the side between the vertices with angles `t1` and `t2` (that
/// is, opposite `t3`) of the hyperbolic triangle with angles `t1, t2, t3`,
/// from `cos t3 = sin t1 sin t2 cosh l − cos t1 cos t2`.
pub fn side_from_angles(t1: Angle, t2: Angle, t3: Angle) -> Result<Length> {
    let a = check_angle(t1, "θ1")?;
    let b = check_angle(t2, "θ2")?;
    let c = check_angle(t3, "θ3")?;
    let sum = a + b + c;
    if sum >= PI * (1.0 - 4.0 * f64::EPSILON) {
        return Err(GeomError::Domain(format!(
            "angle sum {sum} ≥ π: not a hyperbolic triangle"
        )));
    }
    // cosh l − 1 = (cos t3 + cos(t1 + t2)) / (sin t1 sin t2)
    //            = 2 cos(Σ/2) cos((t3 − t1 − t2)/2) / (sin t1 sin t2)
    let x = 2.0 * (sum / 2.0).cos() * ((c - a - b) / 2.0).cos() / (a.sin() * b.sin());
    Ok(Length(acosh1p(x)))
}

/// Closed-form metrics of the regular n-gon with interior angle θ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegularMetrics {
    pub n: usize,
    pub angle: Angle,
    pub area: f64,
    pub perimeter: f64,
    pub side: Length,
    pub circumradius: Length,
    pub inradius: Length,
}

fn check_regular(n: usize, theta: f64) -> Result<()> {
    if n < 3 {
        return Err(GeomError::Domain(format!("n = {n} < 3")));
    }
    let max = (n as f64 - 2.0) * PI / n as f64;
    if !theta.is_finite() || theta <= 0.0 || theta >= max {
        return Err(GeomError::Domain(format!(
            "angle {theta} outside (0, (n−2)π/n) = (0, {max}) for n = {n}"
        )));
    }
    Ok(())
}

/// Area (Gauss–Bonnet), perimeter `2n·acosh(cos(π/n)/sin(θ/2))`,
/// circumradius and inradius of the regular n-gon with angle θ.
///
/// The centre, a vertex and an adjacent edge midpoint span a right triangle
/// with angles π/2, π/n and θ/2; every radius comes from that triangle.
pub fn regular_metrics(n: usize, theta: Angle) -> Result<RegularMetrics> {
    let t = theta.radians();
    check_regular(n, t)?;
    let nf = n as f64;
    let area = (nf - 2.0) * PI - nf * t;
    let (a, h) = (PI / nf, t / 2.0);
    // cosh s − 1 = (cos a − sin h)/sin h, with the difference rewritten as a
    // product; (π/2 − a − h) = area/(2n) is the small quantity near the
    // Euclidean limit.
    let x = 2.0 * ((a + PI / 2.0 - h) / 2.0).sin() * (area / (4.0 * nf)).sin() / h.sin();
    let half_side = acosh1p(x);
    let circumradius = (1.0 / (a.tan() * h.tan())).max(1.0).acosh();
    let inradius = (h.cos() / a.sin()).max(1.0).acosh();
    Ok(RegularMetrics {
        n,
        angle: theta,
        area,
        perimeter: 2.0 * nf * half_side,
        side: Length(2.0 * half_side),
        circumradius: Length(circumradius),
        inradius: Length(inradius),
    })
}

/// Interior angle of the regular n-gon of area `area`.
pub fn regular_angle_for_area(n: usize, area: f64) -> Result<Angle> {
    if n < 3 {
        return Err(GeomError::Domain(format!("n = {n} < 3")));
    }
    let max = (n as f64 - 2.0) * PI;
    if !area.is_finite() || area <= 0.0 || area >= max {
        return Err(GeomError::Domain(format!(
            "area {area} outside (0, (n−2)π) = (0, {max})"
        )));
    }
    Ok(Angle((max - area) / n as f64))
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    #[test]
    fn sas_matches_coordinates() {
        for &(b, c, a) in &[
            (1.0, 2.0, 0.7),
            (0.3, 0.3, 2.9),
            (5.0, 0.01, 1.2),
            (9.0, 8.5, 0.03),
            (1e-3, 2e-3, 1.0),
            (4.0, 4.0, 3.1),
        ] {
            let pb = HPoint::from_polar(c, 0.0);
            let pc = HPoint::from_polar(b, a);
            let sol = solve_sas(b, c, a);
            assert!((sol.side - pb.distance(&pc)).abs() < 1e-12 * (1.0 + sol.side), "{b} {c} {a}");
            let at_b = crate::polygon::interior_angle(&HPoint::ORIGIN, &pb, &pc);
            let at_b = at_b.min(std::f64::consts::TAU - at_b);
            assert!((sol.opposite_b - at_b).abs() < 1e-9, "{b} {c} {a}: {} {at_b}", sol.opposite_b);
            let area = PI - a - sol.opposite_b - sol.opposite_c;
            let direct = crate::polygon::triangle_signed_area(&HPoint::ORIGIN, &pb, &pc).abs();
            assert!((area - direct).abs() < 1e-9, "{b} {c} {a}");
        }
    }

    #[test]
    fn sas_thin_triangle_keeps_relative_precision() {
        // reference values from 100-digit arithmetic on the cosine rules
        let sol = solve_sas(34.0, 20.0, 3e-15);
        let rel = |x: f64, y: f64| ((x - y) / y).abs();
        assert!(rel(sol.side, 14.000000000000529617) < 1e-15);
        assert!(rel(sol.supplement_b, 1.4554955862301202701e-6) < 1e-12);
        assert!(rel(sol.opposite_c, 1.2102863804784012151e-12) < 1e-12);
        assert!((sol.opposite_b + sol.supplement_b - PI).abs() < 1e-15);
    }

    #[test]
    fn sas_far_out_stays_finite() {
        let sol = solve_sas(400.0, 380.0, 0.5);
        assert!(sol.side.is_finite() && sol.side > 20.0);
        assert!(sol.opposite_b > 0.0 && sol.opposite_c > 0.0);
        // isosceles with zero angle: degenerate
        let z = solve_sas(2.0, 2.0, 0.0);
        assert!(z.side.abs() < 1e-7);
    }
    use crate::hyp::{HPoint, Isometry};

    /// Rebuild the triangle from side `l` (between the θ1 and θ2 corners)
    /// and the two adjacent angles; return the angle at the third vertex.
    fn rebuild_third_angle(l: f64, t1: f64, t2: f64) -> f64 {
        let a = HPoint::ORIGIN;
        let b = HPoint::from_polar(l, 0.0);
        // rays from a at angle t1, from b at angle π − t2; intersect by
        // bisection on the ray parameter from a
        let ray_a = Isometry::rotation(t1);
        let frame_b = Isometry::frame_towards(&b, &a).turn(-t2);
        let side = |s: f64| {
            let p = ray_a.advance(s).position();
            let loc = frame_b.local(&p);
            loc.x2
        };
        let (mut lo, mut hi) = (0.0, 1.0);
        while side(hi) > 0.0 {
            hi *= 2.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if side(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let c = ray_a.advance(0.5 * (lo + hi)).position();
        let fc = Isometry::boost_from(&c);
        let (pa, pb) = (fc.apply(&a), fc.apply(&b));
        let d = pa.x2.atan2(pa.x1) - pb.x2.atan2(pb.x1);
        d.rem_euclid(2.0 * PI).min((-d).rem_euclid(2.0 * PI))
    }

    #[test]
    fn law_of_cosines_round_trip() {
        let (t1, t2, t3) = (PI / 2.0, PI / 3.0, PI / 7.0);
        let l = side_from_angles(Angle(t1), Angle(t2), Angle(t3)).unwrap().0;
        let direct = ((t3.cos() + t1.cos() * t2.cos()) / (t1.sin() * t2.sin())).acosh();
        assert!((l - direct).abs() < 1e-12);
        let r = rebuild_third_angle(l, t1, t2);
        assert!((r - t3).abs() < 1e-10, "{r} vs {t3}");
    }

    #[test]
    fn right_triangle_special_case() {
        // cosh(a) = cos(A)/sin(B) for the leg a adjacent to B
        let (b, a) = (0.4, 0.9);
        let l = side_from_angles(Angle(PI / 2.0), Angle(b), Angle(a)).unwrap().0;
        assert!((l.cosh() - a.cos() / b.sin()).abs() < 1e-12);
    }

    #[test]
    fn euclidean_limit_shrinks_side() {
        let mut prev = f64::INFINITY;
        for eps in [1e-1, 1e-3, 1e-6, 1e-9] {
            let t = (PI - eps) / 3.0;
            let l = side_from_angles(Angle(t), Angle(t), Angle(t)).unwrap().0;
            assert!(l < prev);
            prev = l;
        }
        assert!(prev < 1e-3);
    }

    #[test]
    fn non_hyperbolic_triangle_rejected() {
        let r = side_from_angles(Angle(PI / 2.0), Angle(PI / 3.0), Angle(PI / 6.0));
        assert!(matches!(r, Err(GeomError::Domain(_))));
        assert!(side_from_angles(Angle(0.0), Angle(0.1), Angle(0.1)).is_err());
    }

    #[test]
    fn heptagon_metrics() {
        let m = regular_metrics(7, Angle(2.0 * PI / 3.0)).unwrap();
        assert!((m.area - PI / 3.0).abs() < 1e-14);
        // 50-digit evaluation of 14·acosh(cos(π/7)/sin(π/3))
        let oracle = 3.963_794_147_147_203_266_332_290_851_357_662_120_776_010_959_339_2;
        assert!(((m.perimeter - oracle) / oracle).abs() < 1e-12);
        // circumradius / inradius from the right-triangle decomposition
        let (a, h) = (PI / 7.0, PI / 3.0);
        assert!((m.circumradius.0.cosh() - 1.0 / (a.tan() * h.tan())).abs() < 1e-12);
        assert!((m.inradius.0.cosh() - h.cos() / a.sin()).abs() < 1e-12);
    }

    #[test]
    fn hexagon_with_sixth_angles_has_area_three_pi() {
        let m = regular_metrics(6, Angle(PI / 6.0)).unwrap();
        assert!((m.area - 3.0 * PI).abs() < 1e-13);
    }

    #[test]
    fn regular_metrics_domain() {
        assert!(regular_metrics(4, Angle(PI / 2.0)).is_err());
        assert!(regular_metrics(2, Angle(0.1)).is_err());
        assert!(regular_metrics(5, Angle(0.0)).is_err());
    }

    #[test]
    fn angle_for_area() {
        let t = regular_angle_for_area(7, PI / 3.0).unwrap().0;
        assert!((t - 2.0 * PI / 3.0).abs() < 1e-15);
        assert!(regular_angle_for_area(3, PI).is_err());
        let t = regular_angle_for_area(12, 6.0 * PI).unwrap().0;
        assert!((t - PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn perimeter_decreases_in_n_at_fixed_area() {
        let area = PI / 3.0;
        let mut prev = f64::INFINITY;
        for n in 3..=30 {
            let p = regular_metrics(n, regular_angle_for_area(n, area).unwrap())
                .unwrap()
                .perimeter;
            assert!(p < prev, "n = {n}");
            prev = p;
        }
    }

    #[test]
    fn perimeter_increases_in_area_at_fixed_n() {
        for n in [3usize, 5, 7, 12] {
            let max = (n as f64 - 2.0) * PI;
            let mut prev = 0.0;
            for i in 1..200 {
                let a = max * i as f64 / 200.0;
                let p = regular_metrics(n, regular_angle_for_area(n, a).unwrap())
                    .unwrap()
                    .perimeter;
                assert!(p > prev);
                prev = p;
            }
        }
    }
}
