mod common;

use common::{char_poly, int_matrix, integer_roots, poly_from_roots, random_permutation, random_regular};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use vtgap::graph::families::*;
use vtgap::spectrum::{normalized_spectrum, RESIDUAL_TOL};

/// Exact normalized spectrum from integer roots of the characteristic
/// polynomial, descending. Panics unless the polynomial splits over Z.
fn exact_integer_spectrum(g: &vtgap::Multigraph, d: u64) -> Vec<f64> {
    let p = char_poly(&int_matrix(g));
    let (roots, rest) = integer_roots(&p, -(d as i128), d as i128);
    assert_eq!(rest, vec![1], "characteristic polynomial does not split over the integers");
    roots.into_iter().map(|r| r as f64 / d as f64).collect()
}

#[test]
fn petersen_matches_characteristic_polynomial() {
    let g = petersen();
    let p = char_poly(&int_matrix(&g));
    let mut expected_roots = vec![3];
    expected_roots.extend([1; 5]);
    expected_roots.extend([-2; 4]);
    assert_eq!(p, poly_from_roots(&expected_roots));

    let exact = exact_integer_spectrum(&g, 3);
    let s = normalized_spectrum(&g, 3).unwrap();
    for (a, b) in s.eigenvalues.iter().zip(&exact) {
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }
    assert!(s.max_residual <= RESIDUAL_TOL);
}

#[test]
fn integral_spectra_from_oracle() {
    for (g, d) in [(complete(4), 3), (complete(6), 5), (complete_bipartite(3, 3), 3), (cycle(6), 2), (cycle(4), 2)] {
        let exact = exact_integer_spectrum(&g, d);
        let s = normalized_spectrum(&g, d).unwrap();
        assert!(s.eigenvalues.iter().zip(&exact).all(|(a, b)| (a - b).abs() < 1e-9));
    }
}

#[test]
fn cycles_closed_form() {
    for n in 3..=16 {
        let s = normalized_spectrum(&cycle(n), 2).unwrap();
        let mut expected: Vec<f64> = (0..n).map(|k| (2.0 * PI * k as f64 / n as f64).cos()).collect();
        expected.sort_by(|a, b| b.total_cmp(a));
        assert!(s.eigenvalues.iter().zip(&expected).all(|(a, b)| (a - b).abs() < 1e-9), "C{n}");
        assert!(s.max_residual <= RESIDUAL_TOL);
    }
}

#[test]
fn bipartite_iff_minus_one_on_connected_corpus() {
    for e in vtgap::verifier::corpus::builtin_corpus() {
        let d = e.graph.validate_regular().unwrap();
        let s = normalized_spectrum(&e.graph, d).unwrap();
        if e.graph.is_bipartite() {
            assert!((s.lambda_min + 1.0).abs() < 1e-9, "{}", e.id);
        } else {
            assert!(s.lambda_min > -1.0 + 1e-9, "{}", e.id);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_identities_and_relabel_invariance(seed in any::<u64>(), n in 1usize..=12, d in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_regular(&mut rng, n, d);
        let s = normalized_spectrum(&g, d as u64).unwrap();
        prop_assert!(s.max_residual <= RESIDUAL_TOL);
        prop_assert!((s.eigenvalues[0] - 1.0).abs() < 1e-9);
        prop_assert!(s.eigenvalues.iter().all(|&x| (-1.0 - 1e-9..=1.0 + 1e-9).contains(&x)));

        let df = d as f64;
        let sum: f64 = s.eigenvalues.iter().sum();
        prop_assert!((sum - g.loop_units() as f64 / df).abs() < 1e-8);
        let tr2: f64 = (0..n).flat_map(|u| (0..n).map(move |v| (u, v)))
            .map(|(u, v)| (g.multiplicity(u, v) as f64 / df).powi(2)).sum();
        let sq: f64 = s.eigenvalues.iter().map(|x| x * x).sum();
        prop_assert!((sq - tr2).abs() < 1e-8);

        let sigma = random_permutation(&mut rng, n);
        let r = normalized_spectrum(&g.relabel(&sigma), d as u64).unwrap();
        prop_assert!(s.eigenvalues.iter().zip(&r.eigenvalues).all(|(a, b)| (a - b).abs() < 1e-9));
    }
}
