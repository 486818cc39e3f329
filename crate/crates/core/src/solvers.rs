//! Deterministic scalar root finding: bisection, the LP fixed points
//! `delta / S - shift = R_LP1(q, delta)`, and the exponential-tilt parameter
//! that moves the mean of a distribution on `{0, 1, ...}` to a target.

use serde::Serialize;
use thiserror::Error;

use crate::bounds::rate_lp1;

pub const DEFAULT_TOL: f64 = 1e-12;

/// Gap kept between fixed-point brackets and the ends of `[0, (q-1)/q]`.
pub const ENDPOINT_GAP: f64 = 1e-12;

const MAX_ITERATIONS: u32 = 200;
const SIGN_SCAN_POINTS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("bracket needs more than {0} bisection steps")]
    MaxIterations(u32),
    #[error("fixed-point equation has no root on the domain")]
    NoRoot,
    #[error("fixed-point equation changes sign {} times; brackets {brackets:?}", brackets.len())]
    MultipleRoots { brackets: Vec<(f64, f64)> },
    #[error("target mean {target} outside the open support range ({lo}, {hi})")]
    TargetOutOfRange { target: f64, lo: f64, hi: f64 },
    #[error("solver failure: {0}")]
    SolverFailure(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RootResult {
    pub root: f64,
    pub iterations: u32,
    /// `f(root)`.
    pub residual: f64,
    /// Width of the final bracket.
    pub width: f64,
}

/// Bisection on `[lo, hi]` for a continuous `f` with `f(lo) * f(hi) <= 0`.
///
/// Runs exactly `ceil(log2((hi - lo) / tol))` halvings unless an exact zero
/// is hit first, and returns the midpoint of the last bracket.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<RootResult, SolveError> {
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(RootResult { root: lo, iterations: 0, residual: 0.0, width: 0.0 });
    }
    if fhi == 0.0 {
        return Ok(RootResult { root: hi, iterations: 0, residual: 0.0, width: 0.0 });
    }
    if flo.signum() == fhi.signum() || flo.is_nan() || fhi.is_nan() {
        return Err(SolveError::NoSignChange { lo, hi });
    }
    let steps = ((hi - lo) / tol).log2().ceil().max(0.0);
    if steps > MAX_ITERATIONS as f64 {
        return Err(SolveError::MaxIterations(MAX_ITERATIONS));
    }
    let steps = steps as u32;
    for i in 0..steps {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(RootResult { root: mid, iterations: i + 1, residual: 0.0, width: 0.0 });
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    Ok(RootResult { root, iterations: steps, residual: f(root), width: hi - lo })
}

/// Root of `g(delta) = delta / s - shift - R_LP1(q, delta)` on
/// `[ENDPOINT_GAP, (q-1)/q - ENDPOINT_GAP]`.
///
/// Pure LP crossings `delta = S * R_LP1(q, delta)` use `shift = 0`; the
/// ternary 3-hash bound `delta / 2 - delta_3 = R_LP1(3, delta)` uses `s = 2`
/// and `shift = delta_3`. `g` is strictly increasing, so the root is unique.
pub fn fixed_point_delta(q: f64, s: f64, shift: f64) -> Result<RootResult, SolveError> {
    fixed_point_delta_tol(q, s, shift, DEFAULT_TOL)
}

pub fn fixed_point_delta_tol(q: f64, s: f64, shift: f64, tol: f64) -> Result<RootResult, SolveError> {
    if [q, s, shift].iter().any(|x| x.is_nan()) || q < 2.0 || s <= 0.0 || shift < 0.0 {
        return Err(SolveError::NoRoot);
    }
    let g = |d: f64| d / s - shift - rate_lp1(q, d).unwrap_or(f64::NAN);
    let lo = ENDPOINT_GAP;
    let hi = (q - 1.0) / q - ENDPOINT_GAP;

    let grid: Vec<f64> = (0..=SIGN_SCAN_POINTS)
        .map(|i| lo + (hi - lo) * i as f64 / SIGN_SCAN_POINTS as f64)
        .collect();
    let brackets: Vec<(f64, f64)> = grid
        .windows(2)
        .filter(|w| g(w[0]).signum() != g(w[1]).signum())
        .map(|w| (w[0], w[1]))
        .collect();
    match brackets.len() {
        0 => Err(SolveError::NoRoot),
        1 => bisect(g, brackets[0].0, brackets[0].1, tol),
        _ => Err(SolveError::MultipleRoots { brackets }),
    }
}

/// Exponential tilt `p*_j = p_j 3^(alpha j) / sum_h p_h 3^(alpha h)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TiltedFamily {
    pub p: Vec<f64>,
    pub alpha: f64,
    pub pstar: Vec<f64>,
    pub mean: f64,
    /// `log_3 sum_h p_h 3^(alpha h)`.
    pub log3_partition: f64,
}

impl TiltedFamily {
    /// Builds the tilt of `p` at `alpha`, in the log domain.
    pub fn at(p: &[f64], alpha: f64) -> Self {
        let ln3 = 3f64.ln();
        let logw: Vec<Option<f64>> = p
            .iter()
            .enumerate()
            .map(|(j, &pj)| (pj > 0.0).then(|| pj.ln() + alpha * j as f64 * ln3))
            .collect();
        let max = logw.iter().flatten().cloned().fold(f64::NEG_INFINITY, f64::max);
        let w: Vec<f64> = logw.iter().map(|l| l.map_or(0.0, |l| (l - max).exp())).collect();
        let z: f64 = w.iter().sum();
        let pstar: Vec<f64> = w.iter().map(|x| x / z).collect();
        let mean = pstar.iter().enumerate().map(|(j, x)| j as f64 * x).sum();
        TiltedFamily {
            p: p.to_vec(),
            alpha,
            pstar,
            mean,
            log3_partition: (max + z.ln()) / ln3,
        }
    }
}

/// Finds the tilt whose mean equals `target`, by bisection on `alpha` over a
/// bracket doubled outward from `[-1, 0]` or `[0, 1]`.
pub fn tilt_alpha(p: &[f64], target: f64) -> Result<TiltedFamily, SolveError> {
    let support: Vec<usize> = (0..p.len()).filter(|&j| p[j] > 0.0).collect();
    let (Some(&smin), Some(&smax)) = (support.first(), support.last()) else {
        return Err(SolveError::SolverFailure("empty support".into()));
    };
    let (smin, smax) = (smin as f64, smax as f64);
    if !(target > smin && target < smax) {
        return Err(SolveError::TargetOutOfRange { target, lo: smin, hi: smax });
    }
    let base = TiltedFamily::at(p, 0.0);
    if base.mean == target {
        return Ok(base);
    }
    let mean_gap = |a: f64| TiltedFamily::at(p, a).mean - target;
    let dir = if target < base.mean { -1.0 } else { 1.0 };
    let mut far = dir;
    while mean_gap(far).signum() != dir {
        far *= 2.0;
        if far.abs() > 4096.0 {
            return Err(SolveError::SolverFailure(format!("cannot bracket tilt for mean {target}")));
        }
    }
    let r = bisect(mean_gap, 0.0, far, 1e-13)?;
    Ok(TiltedFamily::at(p, r.root))
}
