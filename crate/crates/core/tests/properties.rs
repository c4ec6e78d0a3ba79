use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sp_einstein::algebra::{decompose_triple, enumerate_sign_modules, TripleShape};
use sp_einstein::ricci::{ricci_closed_form, ricci_general, MetricParams};
use sp_einstein::solver::{
    classify, newton_from, solve_general, solve_symmetric, triple_table, NewtonOutcome,
    GENERAL_PATH_TOL,
};
use sp_einstein::structconst::{compute_table, StructureTable};

fn shapes_up_to(n: usize) -> Vec<TripleShape> {
    let mut out = Vec::new();
    for k1 in 1..n {
        for k2 in 1..n {
            for k3 in 1..n {
                if k1 + k2 + k3 <= n {
                    out.push(TripleShape::new(k1, k2, k3).unwrap());
                }
            }
        }
    }
    out
}

fn check_table(t: &StructureTable) {
    let m = t.len();
    assert!(t.asymmetry() < 1e-9);
    for k in 0..m {
        let mut sum = 0.0;
        for i in 0..m {
            for j in 0..m {
                let v = t.get(i, j, k);
                assert!(v >= 0.0);
                for p in [
                    t.get(j, i, k),
                    t.get(j, k, i),
                    t.get(i, k, j),
                    t.get(k, i, j),
                    t.get(k, j, i),
                ] {
                    assert!((v - p).abs() < 1e-9);
                }
                sum += t.get(j, k, i);
            }
        }
        assert!(
            (sum - t.dims()[k] as f64).abs() < 1e-8,
            "{}: {sum}",
            t.labels()[k]
        );
    }
}

#[test]
fn structure_identities_for_all_small_decompositions() {
    for shape in shapes_up_to(6) {
        let t = triple_table(shape).unwrap();
        check_table(&t);
        for i in 3..6 {
            for j in 3..6 {
                if i != j {
                    assert_eq!(t.get(i, i, j), 0.0, "{shape}");
                }
            }
        }
    }
    for (n1, n2) in [(1, 2), (1, 3)] {
        check_table(&compute_table(&enumerate_sign_modules(n1, n2).unwrap()).unwrap());
    }
}

#[test]
fn ricci_paths_agree_for_all_small_shapes() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for shape in shapes_up_to(6) {
        let t = triple_table(shape).unwrap();
        for _ in 0..100 {
            let y =
                MetricParams::new((0..6).map(|_| rng.random_range(0.1..5.0)).collect()).unwrap();
            let a = ricci_general(&t, &y).unwrap();
            let b = ricci_closed_form(shape, &y).unwrap();
            for (u, v) in a.components.iter().zip(&b.components) {
                assert!((u - v).abs() < 1e-9, "{shape}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ricci_is_homogeneous_on_both_paths(
        y in proptest::array::uniform6(0.1f64..5.0),
        c in 0.1f64..10.0,
    ) {
        let shape = TripleShape::new(1, 2, 2).unwrap();
        let t = triple_table(shape).unwrap();
        let m = MetricParams::new(y.to_vec()).unwrap();
        let mc = m.scaled(c).unwrap();
        let pairs = [
            (ricci_closed_form(shape, &m).unwrap(), ricci_closed_form(shape, &mc).unwrap()),
            (ricci_general(&t, &m).unwrap(), ricci_general(&t, &mc).unwrap()),
        ];
        for (a, b) in pairs {
            for (u, v) in a.components.iter().zip(&b.components) {
                prop_assert!((u / c - v).abs() <= 1e-12 * v.abs());
            }
        }
    }

    #[test]
    fn classification_ignores_scale(y in proptest::array::uniform6(0.1f64..5.0), c in 0.01f64..100.0) {
        prop_assert_eq!(classify(&y, 1e-8), classify(&y.map(|v| v * c), 1e-8));
    }
}

#[test]
fn emitted_solutions_pass_both_ricci_paths() {
    for (k1, k2, k3) in [(1, 1, 2), (1, 2, 3), (2, 2, 1)] {
        let shape = TripleShape::new(k1, k2, k3).unwrap();
        let (set, stats) = solve_general(shape, 120, 1e-9).unwrap();
        assert!(stats.converged > 0);
        for s in &set.solutions {
            assert!(s.residual < 1e-9);
            assert!(s.general_residual.unwrap() < GENERAL_PATH_TOL);
            assert!(s.y.iter().all(|&v| v > 0.0));
        }
    }
    for (k, l) in [(1, 3), (2, 5), (3, 3)] {
        for s in solve_symmetric(k, l).unwrap().solutions {
            assert!(s.residual < 1e-9);
            assert!(s.general_residual.unwrap() < GENERAL_PATH_TOL);
        }
    }
}

#[test]
fn symmetric_solutions_are_refound_by_newton() {
    for l in 2..=5u64 {
        for k in 1..l {
            let shape = TripleShape::new(k as usize, k as usize, l as usize).unwrap();
            for s in solve_symmetric(k, l).unwrap().solutions {
                let (_, outcome) = newton_from(shape, &s.y, 1e-9);
                assert_eq!(outcome, NewtonOutcome::Converged, "({k},{l})");
            }
        }
    }
}

#[test]
fn decomposition_tables_are_deterministic() {
    let shape = TripleShape::new(2, 1, 2).unwrap();
    let a = compute_table(&decompose_triple(shape).unwrap()).unwrap();
    let b = compute_table(&decompose_triple(shape).unwrap()).unwrap();
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                assert_eq!(a.get(i, j, k).to_bits(), b.get(i, j, k).to_bits());
            }
        }
    }
}
