//! Closed-form rate and distance bounds for `(q, k)`-hash codes and linear
//! k-hash codes.
//!
//! Rates are base-q and asymptotic: `o(n)` and `O(1/n)` terms are dropped
//! throughout. Any rate formula that goes negative is reported as 0.
//!
//! `q` is real-valued in the entropy and LP functions (the typewriter bound
//! evaluates `R_LP1` at `q = sqrt(5)`); combinatorial bounds take an integer
//! alphabet size. Distance bounds derived from Lemma-type recursions are
//! computed in exact rational arithmetic and floored, since distances are
//! integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::solvers::{self, fixed_point_delta, tilt_alpha, SolveError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Solver(#[from] SolveError),
}

fn domain(msg: impl Into<String>) -> BoundError {
    BoundError::Domain(msg.into())
}

/// Base distribution of the number of separating tetracode coordinates for a
/// pair of independent uniform GF(9) symbols.
pub const THEOREM1_P: [f64; 5] = [25.0 / 81.0, 48.0 / 81.0, 0.0, 8.0 / 81.0, 0.0];

/// Largest 3-hash relative distance reachable by the random constructions.
pub const DELTA3_MAX: f64 = 2.0 / 9.0;

fn log_base(base: f64, x: f64) -> f64 {
    x.ln() / base.ln()
}

fn clamp(r: f64) -> f64 {
    r.max(0.0)
}

/// `a (a-1) ... (a-b+1)`; the empty product is 1.
pub fn falling(a: f64, b: u32) -> f64 {
    (0..b).map(|i| a - i as f64).product()
}

fn falling_big(a: i64, b: u32) -> BigInt {
    (0..b as i64).map(|i| BigInt::from(a - i)).product()
}

fn pow_big(a: i64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(a), e as usize)
}

/// q-ary entropy `t log(q-1) - t log t - (1-t) log(1-t)`, base q, with
/// `0 log 0 = 0`.
pub fn entropy_hq(q: f64, t: f64) -> Result<f64, BoundError> {
    if q.is_nan() || q <= 1.0 {
        return Err(domain(format!("entropy base q = {q} must exceed 1")));
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(domain(format!("entropy argument {t} outside [0, 1]")));
    }
    let xlogx = |x: f64| if x > 0.0 { x * log_base(q, x) } else { 0.0 };
    let lead = if t > 0.0 { t * log_base(q, q - 1.0) } else { 0.0 };
    Ok(lead - xlogx(t) - xlogx(1.0 - t))
}

/// First linear-programming bound on the rate of q-ary codes with relative
/// minimum distance `delta` (q-ary adaptation of the MRRW bound):
/// `H_q(((q-1) - (q-2) delta - 2 sqrt((q-1) delta (1-delta))) / q)`.
pub fn rate_lp1(q: f64, delta: f64) -> Result<f64, BoundError> {
    if q.is_nan() || q < 2.0 {
        return Err(domain(format!("LP bound needs q >= 2, got {q}")));
    }
    let top = (q - 1.0) / q;
    if !(0.0..=top).contains(&delta) {
        return Err(domain(format!("delta {delta} outside [0, {top}]")));
    }
    let arg = ((q - 1.0) - (q - 2.0) * delta - 2.0 * ((q - 1.0) * delta * (1.0 - delta)).sqrt()) / q;
    entropy_hq(q, arg.clamp(0.0, top)).map(clamp)
}

fn integer_q(q: u32, k: u32) -> Result<(), BoundError> {
    if k < 3 || k > q {
        return Err(domain(format!("need 3 <= k <= q, got q = {q}, k = {k}")));
    }
    Ok(())
}

/// Packing bound `|C| <= (k-1) (q/(k-1))^n` as a rate: `log_q(q/(k-1))`.
pub fn rate_simple(q: u32, k: u32) -> Result<f64, BoundError> {
    integer_q(q, k)?;
    Ok(log_base(q as f64, q as f64 / (k - 1) as f64))
}

/// One term of the Körner–Marton minimum:
/// `(q^{j+1 falling} / q^{j+1}) log_q((q-j)/(k-j-1))`.
pub fn korner_marton_term(q: u32, k: u32, j: u32) -> f64 {
    let qf = q as f64;
    let coef = falling(qf, j + 1) / qf.powi(j as i32 + 1);
    coef * log_base(qf, (qf - j as f64) / (k - j - 1) as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct KornerMarton {
    pub rate: f64,
    pub argmin_j: u32,
}

/// Körner–Marton upper bound, minimized over `j in [0, k-2]`.
pub fn rate_korner_marton(q: u32, k: u32) -> Result<KornerMarton, BoundError> {
    integer_q(q, k)?;
    let (argmin_j, rate) = (0..=k - 2)
        .map(|j| (j, korner_marton_term(q, k, j)))
        .fold((0, f64::INFINITY), |best, cur| if cur.1 < best.1 { cur } else { best });
    Ok(KornerMarton { rate, argmin_j })
}

/// Fredman–Komlós upper bound, the `j = k-2` term of Körner–Marton.
pub fn rate_fredman_komlos(q: u32, k: u32) -> Result<f64, BoundError> {
    if k < 4 || k > q {
        return Err(domain(format!("need 4 <= k <= q, got q = {q}, k = {k}")));
    }
    Ok(korner_marton_term(q, k, k - 2))
}

/// Fredman–Komlós random-coding lower bound:
/// `-(1/(k-1)) log_q(1 - q^{k falling}/q^k)`.
pub fn rate_lower_fk(q: u32, k: u32) -> Result<f64, BoundError> {
    integer_q(q, k)?;
    let qf = q as f64;
    let frac = falling(qf, k) / qf.powi(k as i32);
    Ok(-log_base(qf, 1.0 - frac) / (k - 1) as f64)
}

/// Blackburn–Wild bound `|C| <= (k-1) q^ceil(n/(k-1))`: rate `1/(k-1)`.
pub fn rate_blackburn_wild(q: u32, k: u32) -> Result<f64, BoundError> {
    integer_q(q, k)?;
    Ok(1.0 / (k - 1) as f64)
}

fn unit_interval(name: &str, x: f64) -> Result<(), BoundError> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(domain(format!("{name} = {x} outside [0, 1]")))
    }
}

/// Bassalygo et al. bound generalizing Blackburn–Wild: `(1 - delta_k)/(k-1)`.
pub fn rate_bassalygo_bw(q: u32, k: u32, delta_k: f64) -> Result<f64, BoundError> {
    integer_q(q, k)?;
    unit_interval("delta_k", delta_k)?;
    Ok(clamp((1.0 - delta_k) / (k - 1) as f64))
}

/// Bassalygo et al. exponential bound:
/// `(1 - (q^k / q^{k falling}) delta_k) log_q(q/(k-1))`.
pub fn rate_bassalygo_exp(q: u32, k: u32, delta_k: f64) -> Result<f64, BoundError> {
    integer_q(q, k)?;
    let qf = q as f64;
    let ratio = falling(qf, k) / qf.powi(k as i32);
    if !(0.0..=ratio).contains(&delta_k) {
        return Err(domain(format!("delta_k = {delta_k} outside [0, {ratio}]")));
    }
    Ok(clamp((1.0 - delta_k / ratio) * log_base(qf, qf / (k - 1) as f64)))
}

/// Single step of the linear-code recursion `d_{s+1} <= (d_s - m + 1)^+`.
pub fn bass_step(d_s: u64, m: u64) -> u64 {
    (d_s + 1).saturating_sub(m)
}

/// Iterated recursion `d_k <= (d_2 - (k-2)(m-1))^+`.
pub fn bass_recursion_dk(d2: u64, m: u64, k: u64) -> u64 {
    d2.saturating_sub((k - 2) * (m.saturating_sub(1)))
}

/// Rate bound for linear k-hash codes from the iterated recursion with
/// `d_k >= 1`: `delta_2 / (k-2)`.
pub fn rate_bass_linear(k: u32, delta2: f64) -> Result<f64, BoundError> {
    if k < 3 {
        return Err(domain(format!("k = {k} must be at least 3")));
    }
    Ok(delta2 / (k - 2) as f64)
}

/// Covering step: `d_{s+1} <= floor(((q-s)/(q-1)) d_s - m + s)^+`.
pub fn lemma3_step(q: u64, s: u64, d_s: u64, m: u64) -> Result<u64, BoundError> {
    if s < 2 || q < s + 1 || d_s < 1 || m < 1 {
        return Err(domain(format!("lemma step needs q >= s+1 >= 3, d_s >= 1, m >= 1 (q={q}, s={s}, d_s={d_s}, m={m})")));
    }
    // ((q-s) d_s - (m-s)(q-1)) / (q-1), exactly.
    let num = (q - s) as i128 * d_s as i128 - (m as i128 - s as i128) * (q - 1) as i128;
    Ok(if num <= 0 { 0 } else { (num / (q - 1) as i128) as u64 })
}

fn check_qk(q: u64, k: u64) -> Result<(), BoundError> {
    if k < 3 || q < k {
        return Err(domain(format!("need q >= k >= 3, got q = {q}, k = {k}")));
    }
    Ok(())
}

/// `sum_{i=1}^{k-2} (q-1)^i / (q-2)^{i falling}`, exactly.
pub fn sum_s_exact(q: u64, k: u64) -> Result<BigRational, BoundError> {
    check_qk(q, k)?;
    let q = q as i64;
    Ok((1..=(k - 2) as u32)
        .map(|i| BigRational::new(pow_big(q - 1, i), falling_big(q - 2, i)))
        .sum())
}

pub fn sum_s(q: u64, k: u64) -> Result<f64, BoundError> {
    Ok(to_f64(&sum_s_exact(q, k)?))
}

/// `(q-1)^{k-2} / (q-2)^{k-2 falling}`, the weight of `delta_k` in the
/// linear rate bound.
pub fn delta_k_weight_exact(q: u64, k: u64) -> Result<BigRational, BoundError> {
    check_qk(q, k)?;
    let e = (k - 2) as u32;
    Ok(BigRational::new(pow_big(q as i64 - 1, e), falling_big(q as i64 - 2, e)))
}

/// Upper bound on `d_k` for a q-ary linear code of dimension `m` and
/// minimum distance `d_2`:
/// `floor( ((q-2)^{k-2 falling} / (q-1)^{k-2})
///          (d_2 - sum_{i=1}^{k-2} (m-i-1)(q-1)^i / (q-2)^{i falling})^+ )`.
pub fn theorem2_dk(q: u64, k: u64, d2: u64, m: u64) -> Result<u64, BoundError> {
    check_qk(q, k)?;
    if d2 < 1 || m < 1 {
        return Err(domain(format!("need d_2 >= 1 and m >= 1, got d_2 = {d2}, m = {m}")));
    }
    let qi = q as i64;
    let mut inner = BigRational::from_integer(BigInt::from(d2));
    for i in 1..=(k - 2) as u32 {
        let c = BigInt::from(m as i64 - i as i64 - 1);
        inner -= BigRational::new(c * pow_big(qi - 1, i), falling_big(qi - 2, i));
    }
    if !inner.is_positive() {
        return Ok(0);
    }
    let e = (k - 2) as u32;
    let val = inner * BigRational::new(falling_big(qi - 2, e), pow_big(qi - 1, e));
    Ok(val.floor().to_integer().to_u64().expect("bounded by d_2"))
}

/// Linear rate bound in terms of both distances:
/// `(delta_2 - w delta_k) / S` with `S = sum_s(q,k)` and
/// `w = delta_k_weight(q,k)`.
pub fn rate_cor1(q: u64, k: u64, delta2: f64, delta_k: f64) -> Result<f64, BoundError> {
    unit_interval("delta_2", delta2)?;
    unit_interval("delta_k", delta_k)?;
    let s = sum_s(q, k)?;
    let w = to_f64(&delta_k_weight_exact(q, k)?);
    Ok(clamp((delta2 - w * delta_k) / s))
}

/// Linear k-hash codes with `d_k >= 1`: `delta_2 / S`.
pub fn rate_cor2(q: u64, k: u64, delta2: f64) -> Result<f64, BoundError> {
    rate_cor1(q, k, delta2, 0.0)
}

/// Combination with the Plotkin bound, exactly:
/// `(1 + (q/(q-1)) S)^{-1}`.
pub fn rate_cor3_plotkin_exact(q: u64, k: u64) -> Result<BigRational, BoundError> {
    let s = sum_s_exact(q, k)?;
    let one = BigRational::from_integer(BigInt::from(1));
    let factor = BigRational::new(BigInt::from(q), BigInt::from(q - 1));
    Ok((one.clone() + factor * s).recip())
}

pub fn rate_cor3_plotkin(q: u64, k: u64) -> Result<f64, BoundError> {
    Ok(to_f64(&rate_cor3_plotkin_exact(q, k)?))
}

/// A rate obtained at the crossing with the LP bound, with the crossing
/// point `delta_star` (a relative Hamming distance).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FixedPointRate {
    pub rate: f64,
    pub delta_star: f64,
}

/// Combination with the first LP bound: `delta* / S` where
/// `delta* = S R_LP1(q, delta*)`.
pub fn rate_cor4_lp(q: u64, k: u64) -> Result<FixedPointRate, BoundError> {
    rate_cor1_lp(q, k, 0.0)
}

/// `max_{delta_2} min((delta_2 - w delta_k)/S, R_LP1(q, delta_2))`, i.e. the
/// linear bound with both distances evaluated where it meets the LP bound.
pub fn rate_cor1_lp(q: u64, k: u64, delta_k: f64) -> Result<FixedPointRate, BoundError> {
    unit_interval("delta_k", delta_k)?;
    let s = sum_s(q, k)?;
    let w = to_f64(&delta_k_weight_exact(q, k)?);
    lp_crossing(q as f64, s, w / s * delta_k)
}

/// Same construction with the iterated recursion in place of the closed-form
/// distance bounds: `max min((delta_2 - delta_k)/(k-2), R_LP1(q, delta_2))`.
pub fn rate_bass_lp(q: u64, k: u64, delta_k: f64) -> Result<FixedPointRate, BoundError> {
    check_qk(q, k)?;
    unit_interval("delta_k", delta_k)?;
    let s = (k - 2) as f64;
    lp_crossing(q as f64, s, delta_k / s)
}

/// Solves `delta/s - shift = R_LP1(q, delta)` and reports `delta*/s - shift`.
/// When the shift is large enough that the line never reaches the LP curve
/// the rate is 0 (no positive rate is possible).
fn lp_crossing(q: f64, s: f64, shift: f64) -> Result<FixedPointRate, BoundError> {
    let top = (q - 1.0) / q;
    if shift >= top / s {
        return Ok(FixedPointRate { rate: 0.0, delta_star: top });
    }
    let r = fixed_point_delta(q, s, shift)?;
    Ok(FixedPointRate { rate: clamp(r.root / s - shift), delta_star: r.root })
}

/// Ternary linear codes with relative 3-hash distance `delta_3`:
/// `delta*/2 - delta_3` where `delta*/2 - delta_3 = R_LP1(3, delta*)`.
pub fn rate_linear_d3(delta3: f64) -> Result<FixedPointRate, BoundError> {
    if !(0.0..=DELTA3_MAX).contains(&delta3) {
        return Err(domain(format!("delta_3 = {delta3} outside [0, 2/9]")));
    }
    lp_crossing(3.0, 2.0, delta3)
}

/// Kullback–Leibler divergence `D(r || p)` in the given log base. Requires
/// `supp(r) ⊆ supp(p)`.
pub fn kl_divergence(r: &[f64], p: &[f64], base: f64) -> f64 {
    r.iter()
        .zip(p)
        .filter(|(&ri, _)| ri > 0.0)
        .map(|(&ri, &pi)| ri * log_base(base, ri / pi))
        .sum()
}

fn check_delta3(delta3: f64) -> Result<(), BoundError> {
    if !(0.0..=DELTA3_MAX).contains(&delta3) {
        return Err(domain(format!("delta_3 = {delta3} outside [0, 2/9]")));
    }
    Ok(())
}

/// Sanov exponent `D(p* || p)` (base 3) for the tetracode-concatenated
/// random linear code, where `p*` is the tilt of [`THEOREM1_P`] with mean
/// `4 delta_3`. At `delta_3 = 0` the tilt degenerates to a point mass at 0
/// and the limit `log_3(81/25)` is returned.
pub fn sanov_exponent(delta3: f64) -> Result<f64, BoundError> {
    check_delta3(delta3)?;
    if delta3 == 0.0 {
        return Ok(log_base(3.0, 1.0 / THEOREM1_P[0]));
    }
    if delta3 == DELTA3_MAX {
        return Ok(0.0);
    }
    let t = tilt_alpha(&THEOREM1_P, 4.0 * delta3)?;
    Ok(kl_divergence(&t.pstar, &THEOREM1_P, 3.0).max(0.0))
}

/// Achievable rate `(1/8) D(p* || p)` for ternary linear codes with relative
/// 3-hash distance `delta_3` in `[0, 2/9]` (value at 0 is the limit).
pub fn achiev_theorem1(delta3: f64) -> Result<f64, BoundError> {
    Ok(sanov_exponent(delta3)? / 8.0)
}

/// Binary divergence `D((a, 1-a) || (b, 1-b))` in base `base`.
pub fn binary_kl(a: f64, b: f64, base: f64) -> f64 {
    kl_divergence(&[a, 1.0 - a], &[b, 1.0 - b], base)
}

/// Achievable rate `(1/2) D(delta_3 || 2/9)` of random ternary linear codes
/// built directly from an i.i.d. generator matrix.
pub fn achiev_direct(delta3: f64) -> Result<f64, BoundError> {
    check_delta3(delta3)?;
    Ok(binary_kl(delta3, DELTA3_MAX, 3.0).max(0.0) / 2.0)
}

/// Chernoff exponent for linearly dependent message pairs:
/// `D((4 delta_3, 1 - 4 delta_3) || (8/9, 1/9))`, base 3.
pub fn chernoff_dep_exponent(delta3: f64) -> Result<f64, BoundError> {
    check_delta3(delta3)?;
    Ok(binary_kl(4.0 * delta3, 8.0 / 9.0, 3.0).max(0.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TypewriterBounds {
    /// `log_5(5/2)`.
    pub trivial: f64,
    /// `delta*/4 + 1/2` with `delta* = 2 R_LP1(sqrt 5, delta*)`.
    pub jamison_lp: f64,
    pub delta_star: f64,
}

/// Rate bounds for linear list-2 zero-error codes on the 5-input typewriter
/// channel.
pub fn typewriter_bounds() -> Result<TypewriterBounds, BoundError> {
    let r = solvers::fixed_point_delta(5f64.sqrt(), 2.0, 0.0)?;
    Ok(TypewriterBounds {
        trivial: log_base(5.0, 2.5),
        jamison_lp: r.root / 4.0 + 0.5,
        delta_star: r.root,
    })
}

/// Margin below which a Plotkin-vs-Körner–Marton comparison is a tie.
pub const STRICT_MARGIN: f64 = 1e-12;

/// `km - plotkin` for the Plotkin-combined linear bound against
/// Körner–Marton.
pub fn theorem3_margin(q: u32, k: u32) -> Result<f64, BoundError> {
    let plotkin = rate_cor3_plotkin(q as u64, k as u64)?;
    let km = rate_korner_marton(q, k)?.rate;
    Ok(km - plotkin)
}

/// Whether the Plotkin-combined linear bound is strictly below Körner–Marton.
pub fn theorem3_holds(q: u32, k: u32) -> Result<bool, BoundError> {
    let margin = theorem3_margin(q, k)?;
    if margin.abs() <= STRICT_MARGIN {
        log::warn!("Plotkin and Körner–Marton bounds tie within {STRICT_MARGIN} at q = {q}, k = {k}");
        return Ok(false);
    }
    Ok(margin > 0.0)
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Helper for callers that print exact values: `(numerator, denominator)`.
pub fn ratio_parts(r: &BigRational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}
