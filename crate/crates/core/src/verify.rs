//! Combinatorial oracles: hyperplane multi-coverings built from linear codes,
//! zero-error list checks on powers of the pentagon, the Plotkin versus
//! Körner–Marton scan, and the random-coding experiments behind the
//! tetracode concatenation argument.

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{self, BoundError};
use crate::codes::{
    self, all_vectors, joint_distance, random_matrix, row_echelon, separating_coordinates, CodeError, Distance,
    LinearCode,
};
use crate::galois::{prime_powers_in, Field, FieldError, DEFAULT_FIELD_CAP};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error("{size} points exceed the enumeration cap {cap}")]
    CapExceeded { size: u64, cap: u64 },
    #[error("invalid covering instance: {0}")]
    InvalidInstance(String),
    #[error("dimension {m} leaves no subcode of dimension m - s + 1 for s = {s}")]
    NoSuchSubcode { m: usize, s: usize },
    #[error("the {s}-hash distance is 0, so no covering can be built")]
    DegenerateDistance { s: usize },
    #[error("k = {k} must satisfy 3 <= k <= q = {q}")]
    InvalidK { k: usize, q: u32 },
    #[error("only list size 2 is supported, got {0}")]
    UnsupportedListSize(usize),
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid pentagon code: {0}")]
    InvalidPentagonCode(String),
    #[error("invalid scan range: {0}")]
    InvalidScan(String),
    #[error("at least one trial is required")]
    NoTrials,
}

fn cap_check(q: u32, dim: usize, cap: u64) -> Result<u64, VerifyError> {
    let size = (q as u64).saturating_pow(dim as u32);
    if size > cap {
        Err(VerifyError::CapExceeded { size, cap })
    } else {
        Ok(size)
    }
}

/// The affine hyperplane `{v : v . g = b}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    pub g: Vec<u32>,
    pub b: u32,
}

/// A multiset of affine hyperplanes avoiding the origin, with the number of
/// times every nonzero point is required to be covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringInstance {
    field: Field,
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    t: u32,
}

impl CoveringInstance {
    pub fn new(field: Field, dim: usize, hyperplanes: Vec<Hyperplane>, t: u32) -> Result<Self, VerifyError> {
        if dim == 0 {
            return Err(VerifyError::InvalidInstance("dimension must be at least 1".into()));
        }
        if t == 0 {
            return Err(VerifyError::InvalidInstance("multiplicity target must be positive".into()));
        }
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.g.len() != dim {
                return Err(VerifyError::InvalidInstance(format!("hyperplane {i} has normal of length {}", h.g.len())));
            }
            if h.b == 0 {
                return Err(VerifyError::InvalidInstance(format!("hyperplane {i} contains the origin")));
            }
            if h.g.iter().all(|&x| x == 0) {
                return Err(VerifyError::InvalidInstance(format!("hyperplane {i} has a zero normal")));
            }
            field.check(h.b)?;
            for &x in &h.g {
                field.check(x)?;
            }
        }
        Ok(CoveringInstance { field, dim, hyperplanes, t })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `(m + t - 1)(q - 1)`, the multi-covering lower bound on `|H|`.
    pub fn bruen_bound(&self) -> u64 {
        (self.dim as u64 + self.t as u64 - 1) * (self.field.order() as u64 - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    pub covered: bool,
    pub min_multiplicity: u32,
    /// Least-label point covered fewer than `t` times.
    pub witness: Option<Vec<u32>>,
    pub witness_label: Option<u64>,
    pub hyperplanes: usize,
    pub bruen_bound: u64,
    /// `covered` implies `|H| >= (m + t - 1)(q - 1)`.
    pub bruen_ok: bool,
}

/// Point of `F_q^m` with label `sum v_i q^i`.
fn point_from_label(q: u32, dim: usize, mut label: u64) -> Vec<u32> {
    (0..dim)
        .map(|_| {
            let d = (label % q as u64) as u32;
            label /= q as u64;
            d
        })
        .collect()
}

/// Counts, for every nonzero point, the hyperplanes through it.
pub fn covering_check(inst: &CoveringInstance, cap: u64) -> Result<CoveringReport, VerifyError> {
    let q = inst.field.order();
    let size = cap_check(q, inst.dim, cap)?;
    let f = &inst.field;
    let mult: Vec<u32> = (1..size)
        .into_par_iter()
        .map(|label| {
            let v = point_from_label(q, inst.dim, label);
            inst.hyperplanes.iter().filter(|h| f.dot_labels(&v, &h.g) == h.b).count() as u32
        })
        .collect();
    let min_multiplicity = mult.iter().copied().min().unwrap_or(u32::MAX);
    let witness_label = mult.iter().position(|&c| c < inst.t).map(|i| i as u64 + 1);
    let covered = witness_label.is_none();
    let bruen_bound = inst.bruen_bound();
    Ok(CoveringReport {
        covered,
        min_multiplicity,
        witness: witness_label.map(|l| point_from_label(q, inst.dim, l)),
        witness_label,
        hyperplanes: inst.hyperplanes.len(),
        bruen_bound,
        bruen_ok: !covered || inst.hyperplanes.len() as u64 >= bruen_bound,
    })
}

/// A covering instance derived from a linear code together with the data
/// used to build it.
#[derive(Clone, Debug)]
pub struct BuiltCovering {
    pub instance: CoveringInstance,
    /// The `s` anchor codewords `0, x_1, ..., x_{s-1}`.
    pub anchors: Vec<Vec<u32>>,
    /// Coordinates where the anchors are pairwise distinct (`d_s` of them).
    pub support: Vec<usize>,
    pub s: usize,
    pub d_s: usize,
    /// Brute-forced `(s+1)`-hash distance of the code.
    pub d_next: Distance,
    pub subcode: LinearCode,
    /// Support coordinates where the subcode column vanishes; their
    /// hyperplanes would be empty and are left out.
    pub dropped_columns: usize,
    pub anchors_independent: bool,
}

/// Builds the hyperplane multiset `{H_{i,b} : i in support, b in S_i}` for a
/// linear code and `k = s + 1`.
///
/// Anchors `0, x_1, ..., x_{s-1}` realize the `s`-hash distance `d_s`
/// (linearly independent anchors are preferred). The subcode is spanned by
/// `w G` for message vectors `w` completing the anchor messages to a basis,
/// so it meets `span(x_1..x_{s-1})` only in 0. Every nonzero subcode word
/// `y = v G` then has at least `d_{s+1}` support coordinates with
/// `y_i` in `S_i = F_q \ {0, x_{1,i}, ..., x_{s-1,i}}`, i.e. `v` lies on
/// `H_{i, y_i}`. The target `t` is `d_{s+1}` when positive and 1 otherwise.
pub fn build_covering(code: &LinearCode, k: usize, cap: u64) -> Result<BuiltCovering, VerifyError> {
    let field = code.field().clone();
    let q = field.order();
    if k < 3 || k > q as usize {
        return Err(VerifyError::InvalidK { k, q });
    }
    let s = k - 1;
    let m = code.dimension();
    if m + 1 < s + 1 {
        return Err(VerifyError::NoSuchSubcode { m, s });
    }
    let messages = code.messages(cap)?;
    let words: Vec<Vec<u32>> = messages.iter().map(|u| code.encode(u)).collect();

    // Anchor search over (s-1)-subsets of nonzero words, with 0 included.
    let nonzero: Vec<usize> = (1..words.len()).collect();
    let mut best: Option<(usize, bool, Vec<usize>)> = None;
    let mut chosen = Vec::with_capacity(s - 1);
    search_anchors(&field, &messages, &words, &nonzero, 0, s - 1, &mut chosen, &mut best);
    let (d_s, independent, idx) = best.expect("q^m >= q >= k > s - 1 nonzero words exist");
    if d_s == 0 {
        return Err(VerifyError::DegenerateDistance { s });
    }

    let mut anchors = vec![words[0].clone()];
    anchors.extend(idx.iter().map(|&i| words[i].clone()));
    let anchor_refs: Vec<&[u32]> = anchors.iter().map(Vec::as_slice).collect();
    let support = separating_coordinates(&anchor_refs);
    debug_assert_eq!(support.len(), d_s);

    let sub_dim = m + 1 - s;
    let span: Vec<Vec<u32>> = idx.iter().map(|&i| messages[i].clone()).collect();
    let complement = complete_basis(&field, span, m);
    if complement.len() < sub_dim {
        return Err(VerifyError::NoSuchSubcode { m, s });
    }
    let sub_rows: Vec<Vec<u32>> = complement[..sub_dim].iter().map(|w| code.encode(w)).collect();
    let subcode = LinearCode::new(field.clone(), sub_rows)?;

    let mut hyperplanes = Vec::new();
    let mut dropped_columns = 0;
    for &i in &support {
        let g: Vec<u32> = subcode.generator().iter().map(|row| row[i]).collect();
        if g.iter().all(|&x| x == 0) {
            dropped_columns += 1;
            continue;
        }
        for b in 1..q {
            if anchors[1..].iter().all(|x| x[i] != b) {
                hyperplanes.push(Hyperplane { g: g.clone(), b });
            }
        }
    }

    let d_next = code.khash_distance(s + 1, cap)?;
    let t = match d_next {
        Distance::Finite(d) if d > 0 => d as u32,
        _ => 1,
    };
    let instance = CoveringInstance::new(field, sub_dim, hyperplanes, t)?;
    Ok(BuiltCovering {
        instance,
        anchors,
        support,
        s,
        d_s,
        d_next,
        subcode,
        dropped_columns,
        anchors_independent: independent,
    })
}

#[allow(clippy::too_many_arguments)]
fn search_anchors(
    field: &Field,
    messages: &[Vec<u32>],
    words: &[Vec<u32>],
    pool: &[usize],
    from: usize,
    need: usize,
    chosen: &mut Vec<usize>,
    best: &mut Option<(usize, bool, Vec<usize>)>,
) {
    if chosen.len() == need {
        let mut tuple: Vec<&[u32]> = vec![&words[0]];
        tuple.extend(chosen.iter().map(|&i| words[i].as_slice()));
        let d = joint_distance(&tuple);
        let msgs: Vec<Vec<u32>> = chosen.iter().map(|&i| messages[i].clone()).collect();
        let independent = codes::rank(field, &msgs) == chosen.len();
        let better = match best {
            None => true,
            Some((bd, bi, _)) => d < *bd || (d == *bd && independent && !*bi),
        };
        if better {
            *best = Some((d, independent, chosen.clone()));
        }
        return;
    }
    for idx in from..pool.len() {
        if let Some((0, true, _)) = best {
            return;
        }
        chosen.push(pool[idx]);
        search_anchors(field, messages, words, pool, idx + 1, need, chosen, best);
        chosen.pop();
    }
}

/// Standard basis vectors that extend `span` to a basis of `F_q^m`, in
/// coordinate order.
fn complete_basis(field: &Field, span: Vec<Vec<u32>>, m: usize) -> Vec<Vec<u32>> {
    let mut basis = row_echelon(field, span);
    let mut out = Vec::new();
    for i in 0..m {
        let mut e = vec![0u32; m];
        e[i] = 1;
        let mut trial = basis.clone();
        trial.push(e.clone());
        let reduced = row_echelon(field, trial);
        if reduced.len() > basis.len() {
            basis = reduced;
            out.push(e);
        }
    }
    out
}

/// Two words over Z_5 are confusable on the pentagon typewriter channel when
/// every coordinate pair is equal or adjacent mod 5.
pub fn pentagon_confusable(x: &[u32], y: &[u32]) -> Result<bool, VerifyError> {
    if x.len() != y.len() {
        return Err(VerifyError::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.iter().zip(y).all(|(&a, &b)| matches!((a + 5 - b % 5) % 5, 0 | 1 | 4)))
}

/// A code over Z_5 for list decoding with list size `list_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PentagonCode {
    n: usize,
    words: Vec<Vec<u32>>,
    list_size: usize,
}

impl PentagonCode {
    pub fn new(words: Vec<Vec<u32>>, list_size: usize) -> Result<Self, VerifyError> {
        let n = words.first().map_or(0, Vec::len);
        for w in &words {
            if w.len() != n {
                return Err(VerifyError::LengthMismatch(n, w.len()));
            }
            if w.iter().any(|&x| x >= 5) {
                return Err(VerifyError::InvalidPentagonCode(format!("{w:?} has a symbol outside Z_5")));
            }
        }
        for (i, w) in words.iter().enumerate() {
            if words[..i].contains(w) {
                return Err(VerifyError::InvalidPentagonCode(format!("{w:?} appears twice")));
            }
        }
        Ok(PentagonCode { n, words, list_size })
    }

    /// Parses words written as digit strings, e.g. `["00", "12"]`.
    pub fn from_digits(words: &[&str], list_size: usize) -> Result<Self, VerifyError> {
        let parsed = words
            .iter()
            .map(|w| {
                w.chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| VerifyError::InvalidPentagonCode(format!("bad word {w:?}"))))
                    .collect::<Result<Vec<u32>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parsed, list_size)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Vec<u32>] {
        &self.words
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListCheck {
    pub valid: bool,
    pub bad_triple: Option<[usize; 3]>,
}

/// List size 2: valid iff no three codewords are pairwise confusable.
pub fn pentagon_list_check(code: &PentagonCode) -> Result<ListCheck, VerifyError> {
    if code.list_size != 2 {
        return Err(VerifyError::UnsupportedListSize(code.list_size));
    }
    let w = &code.words;
    let conf = |a: usize, b: usize| pentagon_confusable(&w[a], &w[b]).expect("equal lengths");
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if !conf(a, b) {
                continue;
            }
            for c in b + 1..w.len() {
                if conf(a, c) && conf(b, c) {
                    return Ok(ListCheck { valid: false, bad_triple: Some([a, b, c]) });
                }
            }
        }
    }
    Ok(ListCheck { valid: true, bad_triple: None })
}

/// First pair of distinct confusable codewords, if any (list size 1).
pub fn pentagon_confusable_pair(code: &PentagonCode) -> Option<[usize; 2]> {
    let w = &code.words;
    (0..w.len())
        .flat_map(|a| (a + 1..w.len()).map(move |b| (a, b)))
        .find(|&(a, b)| pentagon_confusable(&w[a], &w[b]).expect("equal lengths"))
        .map(|(a, b)| [a, b])
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub q: u32,
    pub k: u32,
    pub plotkin_bound: f64,
    pub km_bound: f64,
    /// `km_bound - plotkin_bound`.
    pub margin: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Scan {
    pub rows: Vec<ScanRow>,
    pub violations: Vec<ScanRow>,
}

/// Compares the Plotkin-combined linear bound with Körner–Marton for every
/// `k in [k_lo, k_hi]` and prime power `q in [2k - 3, q_cap]`.
pub fn scan_theorem3(k_lo: u32, k_hi: u32, q_cap: u32) -> Result<Scan, VerifyError> {
    if k_lo < 3 || k_lo > k_hi {
        return Err(VerifyError::InvalidScan(format!("need 3 <= k_lo <= k_hi, got [{k_lo}, {k_hi}]")));
    }
    if q_cap > DEFAULT_FIELD_CAP {
        return Err(VerifyError::InvalidScan(format!("q_cap {q_cap} exceeds {DEFAULT_FIELD_CAP}")));
    }
    let per_k: Vec<Vec<ScanRow>> = (k_lo..=k_hi)
        .into_par_iter()
        .map(|k| {
            prime_powers_in(2 * k - 3, q_cap)
                .into_iter()
                .map(|q| {
                    let plotkin = bounds::rate_cor3_plotkin(q as u64, k as u64)?;
                    let km = bounds::rate_korner_marton(q, k)?.rate;
                    let holds = bounds::theorem3_holds(q, k)?;
                    Ok(ScanRow { q, k, plotkin_bound: plotkin, km_bound: km, margin: km - plotkin, holds })
                })
                .collect::<Result<Vec<_>, BoundError>>()
        })
        .collect::<Result<_, _>>()?;
    let rows: Vec<ScanRow> = per_k.into_iter().flatten().collect();
    let violations = rows.iter().filter(|r| !r.holds).copied().collect();
    Ok(Scan { rows, violations })
}

/// Per-coordinate probability that `{0, u_1 g, u_2 g}` has at most two
/// distinct values for a uniform column `g`.
pub const P_NONHASH_INDEPENDENT: (u64, u64) = (25, 81);
pub const P_NONHASH_DEPENDENT: (u64, u64) = (1, 9);

fn gf9() -> Field {
    Field::new(3, 2).expect("GF(9)")
}

fn not_separated(a: u32, b: u32) -> bool {
    a == 0 || b == 0 || a == b
}

/// Bad-pair classification for one GF(9) generator matrix.
struct PairCounter {
    field: Field,
    messages: Vec<Vec<u32>>,
    /// Projective class of each nonzero message (index 0 is the zero word).
    class: Vec<usize>,
    /// One representative message index per projective class.
    reps: Vec<usize>,
}

impl PairCounter {
    fn new(m: usize) -> Self {
        let field = gf9();
        let messages = all_vectors(9, m);
        let mut class = vec![usize::MAX; messages.len()];
        let mut reps = Vec::new();
        for (i, u) in messages.iter().enumerate().skip(1) {
            // The representative has leading nonzero coordinate 1.
            let lead = *u.iter().find(|&&x| x != 0).unwrap();
            let inv = field.inv(lead).unwrap();
            let normal: Vec<u32> = u.iter().map(|&x| field.mul(x, inv)).collect();
            let rep = messages.iter().position(|v| *v == normal).unwrap();
            if rep == i {
                reps.push(i);
            }
            class[i] = rep;
        }
        PairCounter { field, messages, class, reps }
    }

    fn encode(&self, g: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let n = g.first().map_or(0, Vec::len);
        self.messages
            .iter()
            .map(|u| {
                (0..n)
                    .map(|i| u.iter().zip(g).fold(0, |acc, (&x, row)| self.field.add(acc, self.field.mul(x, row[i]))))
                    .collect()
            })
            .collect()
    }

    /// Bad unordered independent pairs plus bad projective classes.
    fn count_bad(&self, g: &[Vec<u32>]) -> u64 {
        let words = self.encode(g);
        let bad_pair = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(&x, &y)| not_separated(x, y));
        let mut count = self.reps.iter().filter(|&&r| words[r].iter().all(|&x| x == 0)).count() as u64;
        for a in 1..words.len() {
            for b in a + 1..words.len() {
                if self.class[a] != self.class[b] && bad_pair(&words[a], &words[b]) {
                    count += 1;
                }
            }
        }
        count
    }

    fn independent_pairs(&self) -> u64 {
        let nz = self.messages.len() as u64 - 1;
        if nz == 0 {
            return 0;
        }
        let per_class = 8u64;
        nz * (nz - 1) / 2 - self.reps.len() as u64 * per_class * (per_class - 1) / 2
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloReport {
    pub n_quarter: usize,
    pub m: usize,
    pub trials: u64,
    pub seed: u64,
    pub bad_pair_mean: f64,
    /// Standard error of the mean.
    pub bad_pair_sem: f64,
    /// `(25/81)^{n/4}`.
    pub p_nonhash: f64,
    /// `9^{2m} P / 2`.
    pub union_bound: f64,
    /// `#independent pairs * (25/81)^{n/4} + #classes * (1/9)^{n/4}`.
    pub expected_bad_pairs: f64,
    pub empirical_ok: bool,
}

/// Samples random GF(9) generator matrices (`m x n_quarter`, i.i.d. uniform,
/// no rank condition) and counts message pairs whose tetracode-concatenated
/// triple `{0, u_1 G, u_2 G}` is not trifferent. Independent pairs are
/// counted once per unordered pair; dependent pairs once per 1-dimensional
/// message subspace. Trial `i` draws from ChaCha8 stream `i` of `seed`.
pub fn mc_trifference(n_quarter: usize, m: usize, trials: u64, seed: u64, cap: u64) -> Result<MonteCarloReport, VerifyError> {
    if trials == 0 {
        return Err(VerifyError::NoTrials);
    }
    cap_check(9, m, cap)?;
    let counter = PairCounter::new(m);
    let field = counter.field.clone();
    let (sum, sum_sq) = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let g = random_matrix(&field, m, n_quarter, &mut rng);
            let c = counter.count_bad(&g) as u128;
            (c, c * c)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let t = trials as f64;
    let mean = sum as f64 / t;
    let var = if trials > 1 { (sum_sq as f64 - t * mean * mean).max(0.0) / (t - 1.0) } else { 0.0 };
    let sem = (var / t).sqrt();
    let p = (25.0f64 / 81.0).powi(n_quarter as i32);
    let union_bound = 81f64.powi(m as i32) * p / 2.0;
    let expected = counter.independent_pairs() as f64 * p
        + counter.reps.len() as f64 * (1.0f64 / 9.0).powi(n_quarter as i32);
    Ok(MonteCarloReport {
        n_quarter,
        m,
        trials,
        seed,
        bad_pair_mean: mean,
        bad_pair_sem: sem,
        p_nonhash: p,
        union_bound,
        expected_bad_pairs: expected,
        empirical_ok: mean <= union_bound + 3.0 * sem,
    })
}

/// Exact mean bad-pair count over every GF(9) matrix of shape
/// `m x n_quarter`, as a reduced fraction.
pub fn exact_bad_pair_expectation(n_quarter: usize, m: usize, cap: u64) -> Result<Ratio<u64>, VerifyError> {
    let cells = m * n_quarter;
    let total = cap_check(9, cells, cap)?;
    let counter = PairCounter::new(m);
    let sum: u64 = (0..total)
        .into_par_iter()
        .map(|label| {
            let flat = point_from_label(9, cells, label);
            let g: Vec<Vec<u32>> = flat.chunks(n_quarter.max(1)).take(m).map(<[u32]>::to_vec).collect();
            counter.count_bad(&g)
        })
        .sum();
    Ok(Ratio::new(sum, total))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonHashProbabilities {
    /// `(numerator, denominator)` shared by every independent pair.
    pub independent: Option<(u64, u64)>,
    pub dependent: Option<(u64, u64)>,
    pub ordered_pairs: u64,
    /// Every pair within a class gave the same probability.
    pub uniform_within_class: bool,
}

/// For every ordered pair of distinct nonzero messages in `F_9^m`, the
/// exact fraction of columns `g` in `F_9^m` with `|{0, u_1 g, u_2 g}| <= 2`.
pub fn per_coordinate_nonhash(m: usize) -> NonHashProbabilities {
    let f = gf9();
    let vecs = all_vectors(9, m);
    let mut indep: Option<Ratio<u64>> = None;
    let mut dep: Option<Ratio<u64>> = None;
    let mut uniform = true;
    let mut pairs = 0;
    for a in 1..vecs.len() {
        for b in 1..vecs.len() {
            if a == b {
                continue;
            }
            pairs += 1;
            let (u1, u2) = (&vecs[a], &vecs[b]);
            let bad = vecs.iter().filter(|g| not_separated(f.dot_labels(u1, g), f.dot_labels(u2, g))).count();
            let r = Ratio::new(bad as u64, vecs.len() as u64);
            let independent = codes::rank(&f, &[u1.clone(), u2.clone()]) == 2;
            let slot = if independent { &mut indep } else { &mut dep };
            match slot {
                Some(prev) if *prev != r => uniform = false,
                Some(_) => {}
                None => *slot = Some(r),
            }
        }
    }
    let parts = |r: Option<Ratio<u64>>| r.map(|r| (*r.numer(), *r.denom()));
    NonHashProbabilities {
        independent: parts(indep),
        dependent: parts(dep),
        ordered_pairs: pairs,
        uniform_within_class: uniform,
    }
}

/// Exact law of the number of tetracode coordinates at which `0`, `b_a` and
/// `b_b` are pairwise distinct, for `(a, b)` uniform over GF(9)^2.
pub fn empirical_t_distribution() -> [Ratio<u64>; 5] {
    let mut hist = [0u64; 5];
    for a in 0..9 {
        for b in 0..9 {
            let (x, y) = (codes::tetracode_symbol(a), codes::tetracode_symbol(b));
            let t = (0..4).filter(|&j| x[j] != 0 && y[j] != 0 && x[j] != y[j]).count();
            hist[t] += 1;
        }
    }
    hist.map(|c| Ratio::new(c, 81))
}
