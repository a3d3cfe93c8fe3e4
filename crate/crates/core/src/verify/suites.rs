use std::f64::consts::{PI, TAU};

use rand::Rng;

use super::Check;
use crate::construct::{
    equilateral_tile, equilateral_tile_params, regular_polygon, solve_equilateral_even_gon, TileKind,
};
use crate::euclid::{concavity_report, halving_inequality, jensen_audit, A_of_n};
use crate::exec::Exec;
use crate::hyp::{regular_angle_for_area, regular_metrics, Angle};
use crate::pi_expr::PiRational;
use crate::polygon::{convex_hull, flatten, flatten_complementary_pair, Polygon};
use crate::sample::{complementary_pair_instance, instance_rng, random_half_angles, StarPolygon};
use crate::tiling::{
    angle_combinations, angle_combinations_exact, angle_combinations_with, degree_audit, gs_coefficients,
    klein_quartic as klein_graph, margulis_check, regular_tiles, scalene_feasible, scalene_witness, unique_relation,
};

pub const EVENGON_INSTANCES: usize = 200;
pub const FLATTEN_INSTANCES: usize = 500;
pub const HULL_INSTANCES: usize = 500;
pub const COMBO_INSTANCES: usize = 50;
pub const JENSEN_INSTANCES: usize = 10_000;
pub const REG_BEST_INSTANCES: usize = 10_000;

/// Perimeter of the regular heptagon with angles 2π/3, to 50 digits.
const HEPTAGON_PERIMETER: &str = "3.9637941471472032663322908513576621207760109593392";

fn max_of(v: impl IntoIterator<Item = f64>) -> f64 {
    v.into_iter().fold(0.0, f64::max)
}

fn first_error<T>(v: &[Result<T, String>]) -> Option<&String> {
    v.iter().find_map(|r| r.as_ref().err())
}

fn regular_perimeter_for_area(n: usize, area: f64) -> Option<f64> {
    let t = regular_angle_for_area(n, area).ok()?;
    regular_metrics(n, t).ok().map(|m| m.perimeter)
}

pub(super) fn heptagon() -> Vec<Check> {
    let theta = Angle(TAU / 3.0);
    let (p, m) = match (regular_polygon(7, theta), regular_metrics(7, theta)) {
        (Ok(p), Ok(m)) => (p, m),
        (Err(e), _) | (_, Err(e)) => {
            return vec![Check::new("construct", "regular heptagon builds", None).measure("error", e.to_string())]
        }
    };
    let area = p.area().unwrap_or(f64::NAN);
    let oracle: f64 = HEPTAGON_PERIMETER.parse().expect("valid literal");
    vec![
        Check::new("area", "Gauss-Bonnet area equals π/3", Some(1e-12))
            .measure("area", area)
            .measure("error", (area - PI / 3.0).abs())
            .pass((area - PI / 3.0).abs() <= 1e-12),
        Check::new("perimeter", "measured perimeter equals the closed form", Some(1e-10))
            .measure("measured", p.perimeter())
            .measure("closed_form", m.perimeter)
            .pass((p.perimeter() - m.perimeter).abs() <= 1e-10),
        Check::new("oracle", "closed form matches the 50-digit reference (relative)", Some(1e-12))
            .measure("closed_form", m.perimeter)
            .measure("reference", HEPTAGON_PERIMETER)
            .pass(((m.perimeter - oracle) / oracle).abs() <= 1e-12),
    ]
}

pub(super) fn monotonicity() -> Vec<Check> {
    let by_n: Vec<Option<f64>> = (3..=30).map(|n| regular_perimeter_for_area(n, PI / 3.0)).collect();
    let by_n_ok = by_n.iter().all(Option::is_some) && by_n.windows(2).all(|w| w[1] < w[0]);
    let by_area: Vec<Option<f64>> = (1..=50)
        .map(|k| k as f64 * 0.1 * PI / 3.0)
        .filter(|&a| a > 0.0 && a < 5.0 * PI)
        .map(|a| regular_perimeter_for_area(7, a))
        .collect();
    let by_area_ok = by_area.iter().all(Option::is_some) && by_area.windows(2).all(|w| w[1] > w[0]);
    vec![
        Check::new("decreasing-in-n", "regular perimeter at area π/3 strictly decreases for n = 3..30", None)
            .measure("perimeters", &by_n)
            .pass(by_n_ok),
        Check::new(
            "increasing-in-area",
            "regular heptagon perimeter strictly increases over areas 0.1..5.0 × π/3",
            None,
        )
        .measure("perimeters", &by_area)
        .pass(by_area_ok),
    ]
}

pub(super) fn evengon(seed: u64, exec: Exec) -> Vec<Check> {
    struct Outcome {
        spread: f64,
        angle_err: f64,
        embedded: bool,
    }
    let runs: Vec<Result<Outcome, String>> = exec.map_range(EVENGON_INSTANCES, |i| {
        let mut rng = instance_rng(seed, i as u64);
        let n = rng.gen_range(2..=6);
        let half = random_half_angles(&mut rng, n, 0.2, 0.1).map_err(|e| e.to_string())?;
        let s = solve_equilateral_even_gon(&half).map_err(|e| format!("instance {i}: {e}"))?;
        let sides = s.polygon.side_lengths();
        let lo = sides.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = max_of(sides.iter().copied());
        let angle_err = max_of(
            s.polygon
                .interior_angles()
                .iter()
                .enumerate()
                .map(|(j, a)| (a - half[j % n].0).abs()),
        );
        Ok(Outcome {
            spread: hi - lo,
            angle_err,
            embedded: s.polygon.is_embedded(),
        })
    });
    let ok: Vec<&Outcome> = runs.iter().filter_map(|r| r.as_ref().ok()).collect();
    let spread = max_of(ok.iter().map(|o| o.spread));
    let angle_err = max_of(ok.iter().map(|o| o.angle_err));
    let embedded = ok.iter().all(|o| o.embedded);

    let regular: Vec<Result<bool, String>> = (2..=6usize)
        .flat_map(|n| [0.3, 0.6, 0.9].map(move |f| (n, f)))
        .map(|(n, f)| {
            let t = Angle(f * (2.0 * n as f64 - 2.0) * PI / (2.0 * n as f64));
            let built = solve_equilateral_even_gon(&vec![t; n]).map_err(|e| e.to_string())?;
            let reference = regular_polygon(2 * n, t).map_err(|e| e.to_string())?;
            Ok(built.polygon.congruent_to(&reference, 1e-8))
        })
        .collect();
    vec![
        Check::new("success", "every admissible half-angle vector yields a polygon", None)
            .measure("instances", EVENGON_INSTANCES)
            .measure("succeeded", ok.len())
            .measure("first_error", first_error(&runs))
            .pass(ok.len() == EVENGON_INSTANCES),
        Check::new("equilateral", "side-length spread", Some(1e-9))
            .measure("max_spread", spread)
            .pass(spread < 1e-9),
        Check::new("angles", "prescribed angles reproduced", Some(1e-8))
            .measure("max_error", angle_err)
            .pass(angle_err <= 1e-8),
        Check::new("embedded", "every output is embedded", None).pass(embedded && !ok.is_empty()),
        Check::new("regular", "equal angles reproduce the regular polygon up to isometry", Some(1e-8))
            .measure("first_error", first_error(&regular))
            .pass(regular.iter().all(|r| matches!(r, Ok(true)))),
    ]
}

pub(super) fn tileparams(exec: Exec) -> Vec<Check> {
    struct Outcome {
        n: usize,
        area: f64,
        invariant_err: f64,
        bounds_ok: bool,
        area_err: f64,
        max_angle: f64,
        measured_sum_err: f64,
    }
    let cases: Vec<(usize, f64)> = [6usize, 8, 10, 12]
        .iter()
        .flat_map(|&n| {
            let (lo, hi) = ((n as f64 - 2.0) * PI / 2.0, (n as f64 - 2.0) * PI);
            (0..20).map(move |k| (n, lo + (k as f64 + 0.5) / 20.0 * (hi - lo)))
        })
        .collect();
    let runs: Vec<Result<Outcome, String>> = exec.map_slice(&cases, |&(n, area)| {
        let (poly, t) = equilateral_tile(n, area).map_err(|e| format!("({n}, {area}): {e}"))?;
        let nf = n as f64;
        let sigma_err = (t.sigma - ((nf - 2.0) - area / PI)).abs();
        let bounds_ok = match t.kind {
            TileKind::IntegerM => 4.0 / ((nf - 2.0) * t.sigma) < t.m && t.m < 2.0 / t.sigma,
            TileKind::FallbackM => t.m == 4.0 / (nf - 2.0),
            TileKind::RegularHexagon => n == 6,
        } && [t.theta1.0, t.theta.0].iter().all(|&a| a > 0.0 && a < PI / 2.0);
        let a = poly.interior_angles();
        let measured_sum_err = ((nf - 2.0) * (a[0] + a[1]) - TAU / t.m).abs();
        Ok(Outcome {
            n,
            area,
            invariant_err: sigma_err.max(t.angle_sum_defect().abs()),
            bounds_ok,
            area_err: (poly.area().unwrap_or(f64::NAN) - area).abs(),
            max_angle: max_of(a.iter().copied()),
            measured_sum_err,
        })
    });
    let ok: Vec<&Outcome> = runs.iter().filter_map(|r| r.as_ref().ok()).collect();
    let worst_area = ok.iter().max_by(|a, b| a.area_err.total_cmp(&b.area_err));
    let invariant_err = max_of(ok.iter().map(|o| o.invariant_err));
    let area_err = max_of(ok.iter().map(|o| o.area_err));
    let max_angle = max_of(ok.iter().map(|o| o.max_angle));
    let sum_err = max_of(ok.iter().map(|o| o.measured_sum_err));

    let fixture = |n: usize, area: f64, m: f64, t1: f64, t: f64| -> (bool, String) {
        match equilateral_tile_params(n, area) {
            Ok(p) => {
                let close = |x: f64, y: f64| (x - y).abs() <= 4.0 * f64::EPSILON * y.abs().max(1.0);
                let sigma = (n as f64 - 2.0) - area / PI;
                let good = close(p.sigma, sigma) && close(p.m, m) && close(p.theta1.0, t1) && close(p.theta.0, t);
                (good, format!("σ={} m={} θ₁={} θ={}", p.sigma, p.m, p.theta1.0, p.theta.0))
            }
            Err(e) => (false, e.to_string()),
        }
    };
    let f1 = fixture(12, 6.0 * PI, 0.4, PI / 8.0, 3.0 * PI / 8.0);
    let f2 = fixture(12, 9.5 * PI, 1.0, 3.0 * PI / 16.0, PI / 80.0);
    vec![
        Check::new("success", "tiles built for 20 areas per n ∈ {6, 8, 10, 12}", None)
            .measure("cases", cases.len())
            .measure("succeeded", ok.len())
            .measure("first_error", first_error(&runs))
            .pass(ok.len() == cases.len()),
        Check::new("invariants", "σ definition and angle-sum relation of the parameters", Some(1e-12))
            .measure("max_error", invariant_err)
            .pass(invariant_err <= 1e-12),
        Check::new("bounds", "m within its bracket, 0 < θ₁, θ < π/2", None).pass(ok.iter().all(|o| o.bounds_ok)),
        Check::new("area", "built polygon area matches the target", Some(1e-8))
            .measure("max_error", area_err)
            .measure("worst_case", worst_area.map(|o| (o.n, o.area)))
            .pass(area_err <= 1e-8),
        Check::new("acute", "all measured angles below π/2", None)
            .measure("max_angle", max_angle)
            .pass(max_angle < PI / 2.0),
        Check::new("angle-sum", "measured (n−2)(θ₁ + θ) equals 2π/m", Some(1e-10))
            .measure("max_error", sum_err)
            .pass(sum_err <= 1e-10),
        Check::new("fixture-12-6pi", "(12, 6π) → σ = 4, m = 0.4, θ₁ = π/8, θ = 3π/8", None)
            .measure("got", f1.1)
            .pass(f1.0),
        Check::new("fixture-12-9.5pi", "(12, 9.5π) → m = 1, θ₁ = 3π/16, θ = π/80", None)
            .measure("got", f2.1)
            .pass(f2.0),
    ]
}

pub(super) fn flattening(seed: u64, exec: Exec) -> Vec<Check> {
    struct Outcome {
        area_err: f64,
        shorter: bool,
    }
    let runs: Vec<Result<Outcome, String>> = exec.map_range(FLATTEN_INSTANCES, |i| {
        let mut rng = instance_rng(seed, i as u64);
        let inst = complementary_pair_instance(&mut rng).map_err(|e| format!("instance {i}: {e}"))?;
        let p = &inst.polygon;
        let f = flatten_complementary_pair(p, inst.v, inst.w).map_err(|e| format!("instance {i}: {e}"))?;
        let (a0, a1) = (p.area().map_err(|e| e.to_string())?, f.area().map_err(|e| e.to_string())?);
        Ok(Outcome {
            area_err: (a0 - a1).abs(),
            shorter: f.perimeter() < p.perimeter(),
        })
    });
    let ok: Vec<&Outcome> = runs.iter().filter_map(|r| r.as_ref().ok()).collect();
    let area_err = max_of(ok.iter().map(|o| o.area_err));

    let noop: Vec<Result<f64, String>> = exec.map_range(50, |i| {
        let mut rng = instance_rng(seed ^ 0x5eed, i as u64);
        let n = rng.gen_range(3..=8);
        let p = StarPolygon::random(&mut rng, n, 0.3, 1.5)
            .and_then(|s| s.polygon(1.0))
            .map_err(|e| e.to_string())?;
        let edge = rng.gen_range(0..n);
        let count = rng.gen_range(1..=3);
        let d = p.insert_degenerate_vertices(edge, count).map_err(|e| e.to_string())?;
        let f = flatten(&d, edge, (edge + count + 1) % d.len()).map_err(|e| e.to_string())?;
        let pos = max_of(f.vertices().iter().zip(p.vertices()).map(|(a, b)| a.distance(b)));
        let area = (f.area().map_err(|e| e.to_string())? - p.area().map_err(|e| e.to_string())?).abs();
        Ok(pos.max(area).max((f.perimeter() - p.perimeter()).abs()))
    });
    let noop_err = max_of(noop.iter().filter_map(|r| r.as_ref().ok().copied()));
    vec![
        Check::new("success", "every complementary pair flattens to a simple polygon", None)
            .measure("instances", FLATTEN_INSTANCES)
            .measure("succeeded", ok.len())
            .measure("first_error", first_error(&runs))
            .pass(ok.len() == FLATTEN_INSTANCES),
        Check::new("area", "area preserved", Some(1e-9))
            .measure("max_error", area_err)
            .pass(area_err <= 1e-9),
        Check::new("perimeter", "perimeter strictly reduced", None).pass(ok.iter().all(|o| o.shorter)),
        Check::new("pi-vertices", "flattening across π-vertices is a no-op", Some(1e-12))
            .measure("max_error", noop_err)
            .measure("first_error", first_error(&noop))
            .pass(noop.iter().all(Result::is_ok) && noop_err <= 1e-12),
    ]
}

pub(super) fn hull(seed: u64, exec: Exec) -> Vec<Check> {
    struct Outcome {
        area_slack: f64,
        perimeter_slack: f64,
        convex: bool,
    }
    let runs: Vec<Result<Outcome, String>> = exec.map_range(HULL_INSTANCES, |i| {
        let mut rng = instance_rng(seed, i as u64);
        let n = rng.gen_range(3..=10);
        let p = StarPolygon::random(&mut rng, n, 0.1, 2.5)
            .and_then(|s| s.polygon(1.0))
            .map_err(|e| e.to_string())?;
        let h = convex_hull(&p).map_err(|e| format!("instance {i}: {e}"))?;
        Ok(Outcome {
            area_slack: h.area().map_err(|e| e.to_string())? - p.area().map_err(|e| e.to_string())?,
            perimeter_slack: p.perimeter() - h.perimeter(),
            convex: p.is_convex(),
        })
    });
    let ok: Vec<&Outcome> = runs.iter().filter_map(|r| r.as_ref().ok()).collect();
    let worst = |f: fn(&Outcome) -> f64| ok.iter().map(|o| f(o)).fold(f64::INFINITY, f64::min);
    let nonconvex: Vec<&&Outcome> = ok.iter().filter(|o| !o.convex).collect();
    vec![
        Check::new("success", "hull computed for every polygon", None)
            .measure("succeeded", ok.len())
            .measure("first_error", first_error(&runs))
            .pass(ok.len() == HULL_INSTANCES),
        Check::new("area", "hull area ≥ polygon area", Some(1e-10))
            .measure("min_slack", worst(|o| o.area_slack))
            .pass(worst(|o| o.area_slack) >= -1e-10),
        Check::new("perimeter", "hull perimeter ≤ polygon perimeter", Some(1e-10))
            .measure("min_slack", worst(|o| o.perimeter_slack))
            .pass(worst(|o| o.perimeter_slack) >= -1e-10),
        Check::new("strict", "both inequalities strict for non-convex inputs", None)
            .measure("nonconvex", nonconvex.len())
            .pass(!nonconvex.is_empty() && nonconvex.iter().all(|o| o.area_slack > 0.0 && o.perimeter_slack > 0.0)),
    ]
}

/// Every coefficient vector with `Σ kᵢ aᵢ = target`, by plain nested
/// counting over the full box.
fn brute_force(weights: &[i64], target: i64) -> Vec<Vec<u32>> {
    let bounds: Vec<i64> = weights.iter().map(|w| target / w).collect();
    let mut out = Vec::new();
    let mut k = vec![0i64; weights.len()];
    loop {
        if k.iter().zip(weights).map(|(a, b)| a * b).sum::<i64>() == target {
            out.push(k.iter().map(|&c| c as u32).collect());
        }
        let mut i = weights.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if k[i] < bounds[i] {
                k[i] += 1;
                break;
            }
            k[i] = 0;
        }
    }
}

pub(super) fn combinatorics(seed: u64, exec: Exec) -> Vec<Check> {
    let trio = [Angle(PI / 2.0), Angle(PI / 3.0), Angle(PI / 7.0)];
    let got: Vec<Vec<u32>> = angle_combinations(&trio, 1e-9)
        .map(|v| v.into_iter().map(|s| s.coefficients).collect())
        .unwrap_or_default();
    let expected: Vec<Vec<u32>> = vec![
        vec![0, 0, 14],
        vec![0, 3, 7],
        vec![0, 6, 0],
        vec![2, 0, 7],
        vec![2, 3, 0],
        vec![4, 0, 0],
    ];

    // float and exact enumeration against the brute-force oracle
    let oracle: Vec<Result<bool, String>> = exec.map_range(100, |i| {
        let mut rng = instance_rng(seed ^ 0x0c0b, i as u64);
        let len = rng.gen_range(1..=3);
        let r: Vec<PiRational> = (0..len)
            .map(|_| {
                let den = rng.gen_range(1..=12);
                PiRational::new(rng.gen_range(1..=2 * den), den).expect("non-zero denominator")
            })
            .collect();
        let l = r.iter().fold(1i64, |l, a| num_integer::lcm(l, a.den));
        let w: Vec<i64> = r.iter().map(|a| a.num * (l / a.den)).collect();
        let want = brute_force(&w, 2 * l);
        let exact = angle_combinations_exact(&r).map_err(|e| e.to_string())?;
        let angles: Vec<Angle> = r.iter().map(|a| Angle(a.value())).collect();
        let float: Vec<Vec<u32>> = angle_combinations_with(Exec::Sequential, &angles, 1e-9)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|s| s.coefficients)
            .collect();
        Ok(exact == want && float == want)
    });

    let gs = [
        (vec![2u32, 4, 6], true),
        (vec![1, 3, 5], false),
        (vec![2, 3, 4], false),
    ];
    let regular = [(TAU / 3.0, true), (PI / 6.0, true), (TAU / 7.5, false)];
    let margulis = equilateral_tile_params(12, 9.5 * PI)
        .map(|p| margulis_check(&p.angles()))
        .unwrap_or(false);

    let triples: Vec<([u32; 3], u64)> = {
        let mut rng = instance_rng(seed, 0xc0ffee);
        let mut v = Vec::new();
        while v.len() < COMBO_INSTANCES {
            let k = [0, 1, 2].map(|_| rng.gen_range(0..=9u32));
            if scalene_feasible(k) {
                v.push((k, rng.gen()));
            }
        }
        v
    };
    let witnesses: Vec<Result<bool, String>> = exec.map_slice(&triples, |&(k, s)| {
        let t = scalene_witness(k, s).map_err(|e| format!("{k:?}: {e}"))?;
        let sum: f64 = t.iter().zip(k).map(|(a, c)| c as f64 * a.0).sum();
        let angles = t.map(|a| a.0);
        let gaps = (0..3).all(|i| (angles[i] - angles[(i + 1) % 3]).abs() > 1e-6);
        let hyperbolic = angles.iter().all(|&a| a > 0.0) && angles.iter().sum::<f64>() < PI;
        Ok((sum - TAU).abs() <= 1e-12 && gaps && hyperbolic && unique_relation(&t, k).map_err(|e| e.to_string())?)
    });
    let infeasible = matches!(scalene_witness([1, 1, 1], seed), Err(crate::GeomError::Infeasible(_)));

    vec![
        Check::new("trio", "[π/2, π/3, π/7] has exactly the six solutions", Some(1e-9))
            .measure("solutions", &got)
            .pass(got == expected),
        Check::new("oracle", "float and exact enumeration match brute force (denominators ≤ 12)", Some(1e-9))
            .measure("instances", oracle.len())
            .measure("first_error", first_error(&oracle))
            .pass(oracle.iter().all(|r| matches!(r, Ok(true)))),
        Check::new("gs", "parity condition fixtures", None)
            .pass(gs.iter().all(|(k, want)| gs_coefficients(k) == *want)),
        Check::new("regular", "regular tiling fixtures", None)
            .pass(regular.iter().all(|&(t, want)| regular_tiles(Angle(t)) == want)),
        Check::new("margulis", "the (12, 9.5π) tile angles pass the completion check", None).pass(margulis),
        Check::new("scalene", "witnesses satisfy their relation and no other", Some(1e-12))
            .measure("triples", triples.len())
            .measure("first_error", first_error(&witnesses))
            .pass(witnesses.iter().all(|r| matches!(r, Ok(true)))),
        Check::new("scalene-infeasible", "k = (1, 1, 1) is infeasible", None).pass(infeasible),
    ]
}

pub(super) fn klein_quartic() -> Vec<Check> {
    let g = klein_graph();
    let checks = degree_audit(&g, 7);
    let counts = Check::new("counts", "F = 24 heptagons, E = 84, V = 56, χ = −4", None)
        .measure("faces", g.faces.len())
        .measure("edges", g.edges)
        .measure("vertices", g.vertices.len())
        .measure("chi", g.chi)
        .pass(
            g.faces.len() == 24
                && g.faces.iter().all(|f| f.sides == 7)
                && g.edges == 84
                && g.vertices.len() == 56
                && g.chi == -4
                && g.validate().is_ok(),
        );
    let audit = match checks {
        Ok(a) => Check::new("audit", "v̄ = 7 = k with the equality flag", None)
            .measure("v_bar", a.v_bar)
            .measure("equality", a.equality)
            .measure("bound_satisfied", a.bound_satisfied)
            .pass(a.v_bar == 7.0 && a.equality && a.bound_satisfied && a.k_consistent),
        Err(e) => Check::new("audit", "degree audit runs", None).measure("error", e.to_string()),
    };
    vec![counts, audit]
}

pub(super) fn euclid_hex(seed: u64) -> Vec<Check> {
    let a44 = A_of_n(4.0, 4.0).unwrap_or(f64::NAN);
    let a66 = A_of_n(6.0, 6.0).unwrap_or(f64::NAN);
    let concave = concavity_report(2.1, 200.0, 1.0, 1000);
    let halving_grid: Vec<f64> = (0..=2000).map(|i| 6.0 * (1e4f64 / 6.0).powf(i as f64 / 2000.0)).collect();
    let halving_fail = halving_grid
        .iter()
        .filter(|&&n| !halving_inequality(n, 1.0).unwrap_or(false))
        .count();

    let a6 = A_of_n(6.0, 1.0).unwrap_or(f64::NAN);
    let mut rng = instance_rng(seed, 0xe0c1);
    let mut bad = Vec::new();
    let mut tight = 0;
    for i in 0..JENSEN_INSTANCES {
        let counts: Vec<f64> = loop {
            let len = rng.gen_range(1..=12);
            let v: Vec<f64> = (0..len)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        rng.gen_range(0..=12) as f64
                    } else {
                        rng.gen_range(0.0..12.0)
                    }
                })
                .collect();
            if v.iter().sum::<f64>() <= 6.0 * v.len() as f64 {
                break v;
            }
        };
        match jensen_audit(&counts, 1.0, a6) {
            Ok(r) if r.chain_holds && r.tight == r.all_hexagons => tight += usize::from(r.tight),
            Ok(_) | Err(_) => bad.push(i),
        }
    }
    let hexes_tight = (1..=12).all(|n| jensen_audit(&vec![6.0; n], 1.0, a6).is_ok_and(|r| r.tight));
    vec![
        Check::new("areas", "A(4, 4) = 1 and A(6, 6) = 3√3/2", Some(1e-12))
            .measure("a44", a44)
            .measure("a66", a66)
            .pass((a44 - 1.0).abs() <= 1e-12 && (a66 - 1.5 * 3f64.sqrt()).abs() <= 1e-12),
        Check::new("concavity", "A increasing and concave on [2.1, 200]", None)
            .measure("report", concave.as_ref().ok())
            .pass(concave.is_ok_and(|r| r.passed())),
        Check::new("halving", "A(n) < 2A(n/2) on a grid over [6, 10⁴]", None)
            .measure("grid", halving_grid.len())
            .measure("failures", halving_fail)
            .pass(halving_fail == 0),
        Check::new("jensen", "inequality chain holds, tight exactly for all-hexagon vectors", None)
            .measure("instances", JENSEN_INSTANCES)
            .measure("tight", tight)
            .measure("failures", bad.len())
            .pass(bad.is_empty() && hexes_tight),
    ]
}

pub(super) fn reg_is_best(seed: u64, exec: Exec) -> Vec<Check> {
    let target = PI / 3.0;
    let runs: Vec<Result<(usize, f64, f64), String>> = exec.map_range(REG_BEST_INSTANCES, |i| {
        let mut rng = instance_rng(seed, i as u64);
        let n = rng.gen_range(3..=10);
        let p: Polygon = StarPolygon::random(&mut rng, n, 0.2, 2.0)
            .and_then(|s| s.scaled_to_area(target))
            .map_err(|e| format!("instance {i}: {e}"))?;
        let area = p.area().map_err(|e| e.to_string())?;
        let reg = regular_perimeter_for_area(n, target).ok_or("regular perimeter")?;
        Ok((n, (area - target).abs(), p.perimeter() - reg))
    });
    let ok: Vec<&(usize, f64, f64)> = runs.iter().filter_map(|r| r.as_ref().ok()).collect();
    let area_err = max_of(ok.iter().map(|o| o.1));
    let margin = ok.iter().map(|o| o.2).fold(f64::INFINITY, f64::min);
    vec![
        Check::new("sampled", "random simple polygons scaled to area π/3", Some(1e-6))
            .measure("succeeded", ok.len())
            .measure("max_area_error", area_err)
            .measure("first_error", first_error(&runs))
            .pass(ok.len() == REG_BEST_INSTANCES && area_err <= 1e-6),
        Check::new("regular-wins", "no sample beats the regular perimeter", Some(1e-9))
            .measure("min_margin", margin)
            .pass(margin >= -1e-9),
    ]
}
