use khash_core::bounds::{lemma3_step, rate_lp1, theorem2_dk};
use khash_core::codes::{self, random_linear, Distance, ExplicitCode, DEFAULT_ENUM_CAP};
use khash_core::galois::Field;
use khash_core::solvers::{fixed_point_delta, tilt_alpha};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn field_order() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9])
}

/// A random explicit code: distinct words over GF(q) of length n.
fn explicit_code() -> impl Strategy<Value = ExplicitCode> {
    (field_order(), 1usize..=5).prop_flat_map(|(q, n)| {
        prop::collection::btree_set(prop::collection::vec(0..q, n), 2..=12).prop_map(move |set| {
            ExplicitCode::new(Field::from_order(q).unwrap(), set.into_iter().collect()).unwrap()
        })
    })
}

fn pairwise_min(words: &[Vec<u32>]) -> usize {
    let mut best = usize::MAX;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            best = best.min(codes::hamming(a, b));
        }
    }
    best
}

/// Exhaustive k-subset minimum of the joint distance, without anchoring.
fn oracle_dk(words: &[Vec<u32>], k: usize) -> Option<usize> {
    fn rec(words: &[Vec<u32>], k: usize, start: usize, chosen: &mut Vec<usize>, best: &mut Option<usize>) {
        if chosen.len() == k {
            let n = words[0].len();
            let d = (0..n)
                .filter(|&i| {
                    let mut col: Vec<u32> = chosen.iter().map(|&c| words[c][i]).collect();
                    col.sort_unstable();
                    col.windows(2).all(|w| w[0] != w[1])
                })
                .count();
            *best = Some(best.map_or(d, |b| b.min(d)));
            return;
        }
        for i in start..words.len() {
            chosen.push(i);
            rec(words, k, i + 1, chosen, best);
            chosen.pop();
        }
    }
    let mut best = None;
    rec(words, k, 0, &mut Vec::new(), &mut best);
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn two_hash_distance_is_min_hamming(code in explicit_code()) {
        let d2 = codes::khash_distance(&code, 2).unwrap();
        prop_assert_eq!(d2, Distance::Finite(pairwise_min(code.words())));
        prop_assert_eq!(codes::min_hamming(&code).unwrap(), pairwise_min(code.words()));
    }

    #[test]
    fn khash_matches_subset_oracle(code in explicit_code(), k in 3usize..=4) {
        let d = codes::khash_distance(&code, k).unwrap();
        match oracle_dk(code.words(), k) {
            Some(v) => prop_assert_eq!(d, Distance::Finite(v)),
            None => prop_assert_eq!(d, Distance::Infinite),
        }
    }

    #[test]
    fn khash_is_nonincreasing_in_k(code in explicit_code()) {
        let ds: Vec<usize> = (2..=code.len().min(6))
            .map(|k| codes::khash_distance(&code, k).unwrap().finite().unwrap())
            .collect();
        prop_assert!(ds.windows(2).all(|w| w[1] <= w[0]), "{:?}", ds);
    }

    #[test]
    fn anchored_linear_distance_equals_full(q in prop::sample::select(vec![2u32, 3, 4, 5]), m in 1usize..=2, extra in 0usize..=3, seed: u64, k in 2usize..=4) {
        let field = Field::from_order(q).unwrap();
        let code = random_linear(&field, m, m + extra, seed, DEFAULT_ENUM_CAP).unwrap().code;
        let full = codes::khash_distance(&code.enumerate(DEFAULT_ENUM_CAP).unwrap(), k).unwrap();
        prop_assert_eq!(code.khash_distance(k, DEFAULT_ENUM_CAP).unwrap(), full);
    }

    #[test]
    fn field_division_and_order(q in prop::sample::select(vec![4u32, 8, 9, 16, 25, 27, 49, 64, 81, 121, 128, 243, 256]), a in 1u32..256, b in 1u32..256) {
        let f = Field::from_order(q).unwrap();
        let (a, b) = (a % (q - 1) + 1, b % (q - 1) + 1);
        prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        prop_assert_eq!(f.pow(a, (q - 1) as u64), 1);
        prop_assert_eq!(f.pow(a, q as u64), a);
    }

    #[test]
    fn lp_bound_decreases(q in 2u32..=64, x in 0.0f64..1.0, y in 0.0f64..1.0) {
        let top = (q as f64 - 1.0) / q as f64;
        let (lo, hi) = if x < y { (x * top, y * top) } else { (y * top, x * top) };
        let (r_lo, r_hi) = (rate_lp1(q as f64, lo).unwrap(), rate_lp1(q as f64, hi).unwrap());
        prop_assert!(r_hi <= r_lo + 1e-12);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&r_lo));
    }

    #[test]
    fn fixed_point_residual(q in 3u32..=64, s in 1.0f64..4.0) {
        let r = fixed_point_delta(q as f64, s, 0.0).unwrap();
        let lp = rate_lp1(q as f64, r.root).unwrap();
        prop_assert!((r.root / s - lp).abs() < 1e-9);
    }

    #[test]
    fn tilt_reaches_mean(target in 0.001f64..2.99) {
        let p = [25.0 / 81.0, 48.0 / 81.0, 0.0, 8.0 / 81.0, 0.0];
        let t = tilt_alpha(&p, target).unwrap();
        prop_assert!((t.mean - target).abs() < 1e-10);
    }

    #[test]
    fn iterated_step_never_exceeds_closed_form(qk in (3u64..=17).prop_flat_map(|q| (Just(q), 3u64..=q.min(6))), d2 in 1u64..200, m in 1u64..12) {
        let (q, k) = qk;
        let closed = theorem2_dk(q, k, d2, m).unwrap();
        let mut d = d2;
        for s in 2..k {
            if d == 0 {
                break;
            }
            d = lemma3_step(q, s, d, m).unwrap();
        }
        prop_assert!(d <= closed, "iterated {} > closed form {}", d, closed);
        prop_assert_eq!(closed, exact_iteration(q, k, d2, m));
    }
}

/// The step `d -> ((q-s) d - (m-s)(q-1)) / (q-1)` applied exactly, floored
/// only at the end.
fn exact_iteration(q: u64, k: u64, d2: u64, m: u64) -> u64 {
    let mut d = BigRational::from_integer(BigInt::from(d2));
    for s in 2..k {
        let num = d * BigInt::from(q - s) - BigInt::from((m as i64 - s as i64) * (q as i64 - 1));
        d = num / BigInt::from(q - 1);
    }
    if d.is_negative() || d.is_zero() {
        0
    } else {
        d.floor().to_integer().to_u64().unwrap()
    }
}
