use std::f64::consts::PI;

use hyptile::tiling::{
    angle_combinations, angle_combinations_exact, angle_combinations_with, degree_audit, klein_quartic,
    scalene_feasible, scalene_witness, unique_relation, Face, TilingGraph, Vertex,
};
use hyptile::{Angle, Exec, PiRational};
use proptest::prelude::*;

/// Every coefficient vector with `Σ kᵢ·nᵢ/dᵢ = 2`, by exhaustive product
/// search in exact rational arithmetic.
fn brute_force(angles: &[(i64, i64)]) -> Vec<Vec<u32>> {
    let bounds: Vec<i64> = angles.iter().map(|&(n, d)| 2 * d / n).collect();
    let mut out = Vec::new();
    let mut k = vec![0i64; angles.len()];
    loop {
        // Σ kᵢ nᵢ/dᵢ == 2, cross-multiplied over the product of denominators
        let prod: i128 = angles.iter().map(|&(_, d)| d as i128).product();
        let lhs: i128 = angles
            .iter()
            .zip(&k)
            .map(|(&(n, d), &c)| c as i128 * n as i128 * (prod / d as i128))
            .sum();
        if lhs == 2 * prod {
            out.push(k.iter().map(|&c| c as u32).collect());
        }
        let mut i = angles.len();
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

fn pi_fractions() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((2i64..=12).prop_flat_map(|d| (1i64..d, Just(d))), 1..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn combinations_match_exhaustive_search(fr in pi_fractions()) {
        let expected = brute_force(&fr);
        let exact: Vec<PiRational> = fr.iter().map(|&(n, d)| PiRational::new(n, d).unwrap()).collect();
        prop_assert_eq!(angle_combinations_exact(&exact).unwrap(), expected.clone());
        let angles: Vec<Angle> = exact.iter().map(|a| Angle(a.value())).collect();
        let float = angle_combinations(&angles, 1e-9).unwrap();
        let coeffs: Vec<Vec<u32>> = float.iter().map(|s| s.coefficients.clone()).collect();
        prop_assert_eq!(coeffs, expected);
        for s in &float {
            prop_assert!(s.residual.abs() <= 1e-9);
        }
        prop_assert_eq!(angle_combinations_with(Exec::Sequential, &angles, 1e-9).unwrap(), float);
    }

    #[test]
    fn scalene_witnesses_are_valid(k in prop::array::uniform3(0u32..=9), seed in 0u64..1000) {
        prop_assume!(scalene_feasible(k));
        let t = scalene_witness(k, seed).unwrap();
        let sum: f64 = t.iter().map(|a| a.0).sum();
        prop_assert!(t.iter().all(|a| a.0 > 0.0) && sum < PI);
        prop_assert!((t[0].0 - t[1].0).abs() > 1e-6 && (t[1].0 - t[2].0).abs() > 1e-6 && (t[0].0 - t[2].0).abs() > 1e-6);
        let total: f64 = t.iter().zip(k).map(|(a, c)| c as f64 * a.0).sum();
        prop_assert!((total - 2.0 * PI).abs() < 1e-9);
        prop_assert!(unique_relation(&t, k).unwrap());
        let combos = angle_combinations(&t, 1e-9).unwrap();
        prop_assert_eq!(combos.len(), 1);
        prop_assert_eq!(&combos[0].coefficients, &k.to_vec());
    }

    #[test]
    fn infeasible_relations_are_refused(k in prop::array::uniform3(0u32..=2)) {
        prop_assert!(!scalene_feasible(k));
        prop_assert!(scalene_witness(k, 1).is_err());
    }

    /// With every vertex of degree ≥ 3, v̄ is the mean side count, which the
    /// Euler relation bounds by `6 − 6χ/F`.
    #[test]
    fn mean_degree_is_bounded_by_euler(
        sides in prop::collection::vec(3usize..=10, 1..40),
        extra in prop::collection::vec(0usize..=4, 1..200),
        fill in 0.0f64..1.0,
    ) {
        let mut sides = sides;
        if sides.iter().sum::<usize>() % 2 == 1 {
            sides[0] += 1;
        }
        let s: usize = sides.iter().sum();
        // V vertices of degree ≥ 3 with degrees summing to S
        let v = 1 + ((s / 3 - 1) as f64 * fill) as usize;
        let mut degrees = vec![3usize; v];
        let mut left = s - 3 * v;
        for (i, e) in extra.iter().cycle().enumerate() {
            if left == 0 {
                break;
            }
            let add = (*e).min(left).max(1);
            degrees[i % v] += add;
            left -= add;
        }
        let g = TilingGraph {
            chi: sides.len() as i64 - (s / 2) as i64 + v as i64,
            faces: sides.iter().map(|&n| Face { sides: n, angle_labels: vec![] }).collect(),
            vertices: degrees.into_iter().map(|degree| Vertex { degree }).collect(),
            edges: s / 2,
        };
        g.validate().unwrap();
        prop_assert!(g.v_bar() <= g.implied_k() + 1e-12);
        let k = g.implied_k().ceil() as i64;
        let audit = degree_audit(&g, k).unwrap();
        prop_assert_eq!(audit.applicable, g.chi < 0);
        prop_assert_eq!(audit.bound_satisfied, g.chi < 0);
        prop_assert_eq!(audit.equality, g.vertices.iter().all(|v| v.degree == 3));
    }
}

#[test]
fn klein_fixture_matches_builtin() {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/klein_quartic.json");
    let g = TilingGraph::load(&path).unwrap();
    assert_eq!(g, klein_quartic());
    let a = degree_audit(&g, 7).unwrap();
    assert!(a.k_consistent && a.bound_satisfied && a.equality && a.all_faces_hold());
    assert_eq!(a.v_bar, 7.0);
}

#[test]
fn inconsistent_graphs_are_data_errors() {
    let mut g = klein_quartic();
    g.edges += 1;
    assert!(matches!(g.validate(), Err(hyptile::GeomError::Data(_))));
    let mut g = klein_quartic();
    g.chi = -2;
    assert!(TilingGraph::from_json(&g.to_json()).is_err());
}
