//! Cross-checks of library results against independent brute-force or
//! closed-form computations written here.

use khash_core::bounds::{self, THEOREM1_P};
use khash_core::codes::{self, random_linear, random_matrix, DEFAULT_ENUM_CAP};
use khash_core::galois::Field;
use khash_core::verify::{self, CoveringInstance, Hyperplane};
use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn sanov_exponent_matches_grid_minimum() {
    // Minimize D(r || p) over r on {0, 1, 3} with mean 4 delta by a fine
    // one-parameter sweep over r_3.
    for delta in [1.0f64 / 9.0, 0.05, 0.2] {
        let mean = 4.0 * delta;
        let steps = 200_000;
        let r3_max = (mean / 3.0).min(1.0);
        let mut best = f64::INFINITY;
        for i in 0..=steps {
            let r3 = r3_max * i as f64 / steps as f64;
            let r1 = mean - 3.0 * r3;
            let r0 = 1.0 - r1 - r3;
            if r0 < 0.0 || r1 < 0.0 {
                continue;
            }
            let term = |r: f64, p: f64| if r > 0.0 { r * (r / p).log(3.0) } else { 0.0 };
            let d = term(r0, THEOREM1_P[0]) + term(r1, THEOREM1_P[1]) + term(r3, THEOREM1_P[3]);
            best = best.min(d);
        }
        let lib = bounds::sanov_exponent(delta).unwrap();
        assert!((lib - best).abs() < 1e-7, "delta {delta}: {lib} vs grid {best}");
    }
}

#[test]
fn random_matrix_entries_are_uniform() {
    let f = Field::from_order(9).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut counts = [0u64; 9];
    for _ in 0..2000 {
        for row in random_matrix(&f, 3, 6, &mut rng) {
            for x in row {
                counts[x as usize] += 1;
            }
        }
    }
    let total: u64 = counts.iter().sum();
    let expect = total as f64 / 9.0;
    let chi2: f64 = counts.iter().map(|&c| (c as f64 - expect).powi(2) / expect).sum();
    // 99.9% quantile of chi-square with 8 degrees of freedom.
    assert!(chi2 < 26.12, "chi2 = {chi2}, counts {counts:?}");
}

#[test]
fn random_linear_codes_are_reproducible_and_full_rank() {
    let f = Field::from_order(7).unwrap();
    for seed in 0..20 {
        let a = random_linear(&f, 3, 5, seed, DEFAULT_ENUM_CAP).unwrap();
        let b = random_linear(&f, 3, 5, seed, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(a.code, b.code);
        assert_eq!(codes::rank(&f, a.code.generator()), 3);
    }
}

#[test]
fn exhaustive_bad_pair_expectations() {
    // m = 1: one projective class and no independent pairs.
    assert_eq!(verify::exact_bad_pair_expectation(2, 1, DEFAULT_ENUM_CAP).unwrap(), Ratio::new(1, 81));
    // m = 2: 2880 independent pairs at 25/81 and 10 classes at 1/9.
    let expect = Ratio::new(2880u64 * 25, 81) + Ratio::new(10u64, 9);
    assert_eq!(verify::exact_bad_pair_expectation(1, 2, DEFAULT_ENUM_CAP).unwrap(), expect);
    let r = verify::mc_trifference(1, 2, 10, 0, DEFAULT_ENUM_CAP).unwrap();
    assert!((r.expected_bad_pairs - 2880.0 * 25.0 / 81.0 - 10.0 / 9.0).abs() < 1e-9);
}

#[test]
fn axis_hyperplanes_meet_single_cover_bound() {
    // {x_i = b : b != 0} covers every nonzero point with exactly m(q-1) planes.
    for (q, m) in [(3u32, 2usize), (4, 3), (5, 2), (7, 2)] {
        let f = Field::from_order(q).unwrap();
        let mut hs = Vec::new();
        for i in 0..m {
            let mut g = vec![0; m];
            g[i] = 1;
            for b in 1..q {
                hs.push(Hyperplane { g: g.clone(), b });
            }
        }
        let inst = CoveringInstance::new(f, m, hs, 1).unwrap();
        let r = verify::covering_check(&inst, DEFAULT_ENUM_CAP).unwrap();
        assert!(r.covered);
        assert_eq!(r.hyperplanes as u64, r.bruen_bound);
        assert_eq!(r.min_multiplicity, 1);
    }
}

#[test]
fn dropping_a_plane_exposes_least_witness() {
    let f = Field::from_order(3).unwrap();
    let hs = vec![
        Hyperplane { g: vec![1, 0], b: 2 },
        Hyperplane { g: vec![0, 1], b: 1 },
        Hyperplane { g: vec![0, 1], b: 2 },
    ];
    let inst = CoveringInstance::new(f, 2, hs, 1).unwrap();
    let r = verify::covering_check(&inst, DEFAULT_ENUM_CAP).unwrap();
    assert!(!r.covered);
    assert_eq!(r.witness, Some(vec![1, 0]));
}

#[test]
fn concatenated_code_is_trifferent_when_outer_is_nine_three_hash() {
    // A GF(9) code with d_3 > 0 stays trifferent after substituting tetracode
    // words, and the ternary code has four times the length.
    let f9 = Field::from_order(9).unwrap();
    let mut found = 0;
    for seed in 0..40 {
        let outer = random_linear(&f9, 1, 3, seed, DEFAULT_ENUM_CAP).unwrap().code;
        if outer.khash_distance(3, DEFAULT_ENUM_CAP).unwrap().finite() == Some(0) {
            continue;
        }
        found += 1;
        let inner = codes::concat_tetracode(&outer).unwrap();
        assert_eq!(inner.length(), 12);
        assert_eq!(inner.dimension(), 2);
        assert!(inner.khash_distance(3, DEFAULT_ENUM_CAP).unwrap().is_positive());
    }
    assert!(found > 0);
}

#[test]
fn cor4_agrees_with_independent_fixed_point() {
    // Plain bisection on delta/S - R_LP1(q, delta) in the test itself.
    for q in [3u64, 5, 9, 16, 41] {
        let s = bounds::sum_s(q, 3).unwrap();
        let qf = q as f64;
        let g = |d: f64| d / s - bounds::rate_lp1(qf, d).unwrap();
        let (mut lo, mut hi) = (1e-9, (qf - 1.0) / qf - 1e-9);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if g(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let r = bounds::rate_cor4_lp(q, 3).unwrap().rate;
        assert!((r - lo / s).abs() < 1e-10, "q = {q}");
    }
}
