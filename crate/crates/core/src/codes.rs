//! Linear and explicit codes, brute-force Hamming and k-hash distances,
//! the ternary tetracode and concatenation of GF(9) codes with it.
//!
//! Every distance here is computed by exhaustive enumeration. The k-hash
//! distance of a code with `M` words costs `O(C(M, k) * n * k^2)`; callers
//! bound `M` through the enumeration cap.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::galois::{Field, FieldError};

/// Default limit on the number of codewords any enumeration may produce.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("generator matrix has rank {rank}, expected {m}")]
    RankDeficient { rank: usize, m: usize },
    #[error("{size} codewords exceed the enumeration cap {cap}")]
    CapExceeded { size: u64, cap: u64 },
    #[error("at least two codewords are required")]
    TooFewWords,
    #[error("code must have dimension and length at least 1")]
    EmptyCode,
    #[error("row {row} has length {len}, expected {n}")]
    RaggedRows { row: usize, len: usize, n: usize },
    #[error("codeword {0} appears more than once")]
    DuplicateWord(usize),
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A k-hash distance, or `Infinite` when the code has fewer than `k` words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    /// Whether every k-tuple is separated somewhere (vacuous when infinite).
    pub fn is_positive(self) -> bool {
        self != Distance::Finite(0)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// A linear code given by a full-rank `m x n` generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    rows: Vec<Vec<u32>>,
    n: usize,
}

impl LinearCode {
    pub fn new(field: Field, rows: Vec<Vec<u32>>) -> Result<Self, CodeError> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || n == 0 {
            return Err(CodeError::EmptyCode);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(CodeError::RaggedRows { row, len: r.len(), n });
            }
            for &x in r {
                field.check(x)?;
            }
        }
        let rank = rank(&field, &rows);
        if rank < rows.len() {
            return Err(CodeError::RankDeficient { rank, m: rows.len() });
        }
        Ok(LinearCode { field, rows, n })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn generator(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of codewords, `q^m`, saturating.
    pub fn size(&self) -> u64 {
        (self.field.order() as u64).saturating_pow(self.rows.len() as u32)
    }

    pub fn check_cap(&self, cap: u64) -> Result<(), CodeError> {
        let size = self.size();
        if size > cap {
            Err(CodeError::CapExceeded { size, cap })
        } else {
            Ok(())
        }
    }

    /// `u * G` for a message `u` of length `m`.
    pub fn encode(&self, message: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0u32; self.n];
        for (&u, row) in message.iter().zip(&self.rows) {
            if u == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(u, g));
            }
        }
        out
    }

    /// All messages in lexicographic order (first coordinate most significant).
    pub fn messages(&self, cap: u64) -> Result<Vec<Vec<u32>>, CodeError> {
        self.check_cap(cap)?;
        Ok(all_vectors(self.field.order(), self.rows.len()))
    }

    /// Lists the `q^m` codewords, ordered by message.
    pub fn enumerate(&self, cap: u64) -> Result<ExplicitCode, CodeError> {
        let words = self.messages(cap)?.iter().map(|u| self.encode(u)).collect();
        Ok(ExplicitCode { field: self.field.clone(), n: self.n, words })
    }

    /// Minimum weight of a nonzero codeword.
    pub fn min_weight(&self, cap: u64) -> Result<usize, CodeError> {
        let words = self.enumerate(cap)?.words;
        Ok(words[1..].iter().map(|w| weight(w)).min().expect("m >= 1 gives q^m >= 2 words"))
    }

    /// k-hash distance over tuples that contain the zero word. Subtracting a
    /// common codeword preserves pairwise distinctness at every coordinate,
    /// so for a linear code this equals the minimum over all k-tuples.
    pub fn khash_distance(&self, k: usize, cap: u64) -> Result<Distance, CodeError> {
        if k < 2 {
            return Err(CodeError::InvalidK(k));
        }
        let code = self.enumerate(cap)?;
        if code.words.len() < k {
            return Ok(Distance::Infinite);
        }
        // Zero is the first word in message order.
        Ok(Distance::Finite(min_tuple_distance(&code.words, k, Some(0))))
    }

    pub fn to_file_string(&self) -> String {
        let mut s = format!("{} {} {}\n", self.field.order(), self.rows.len(), self.n);
        for r in &self.rows {
            s.push_str(&join(r));
            s.push('\n');
        }
        s
    }

    /// Parses `q m n` followed by `m` rows of `n` labels.
    pub fn parse(text: &str) -> Result<Self, CodeError> {
        let (field, rows, n) = parse_matrix(text, "m")?;
        let code = LinearCode::new(field, rows)?;
        debug_assert_eq!(code.n, n);
        Ok(code)
    }
}

/// An arbitrary code given as a list of distinct words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitCode {
    field: Field,
    n: usize,
    words: Vec<Vec<u32>>,
}

impl ExplicitCode {
    pub fn new(field: Field, words: Vec<Vec<u32>>) -> Result<Self, CodeError> {
        let n = words.first().map_or(0, Vec::len);
        if n == 0 {
            return Err(CodeError::EmptyCode);
        }
        for (row, w) in words.iter().enumerate() {
            if w.len() != n {
                return Err(CodeError::RaggedRows { row, len: w.len(), n });
            }
            for &x in w {
                field.check(x)?;
            }
        }
        let mut sorted: Vec<(&Vec<u32>, usize)> = words.iter().zip(0..).collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(CodeError::DuplicateWord(w[1].1));
        }
        Ok(ExplicitCode { field, n, words })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[Vec<u32>] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        self.words.iter().any(|w| w == word)
    }

    /// Parses `q M n` followed by `M` codeword lines.
    pub fn parse(text: &str) -> Result<Self, CodeError> {
        let (field, words, _) = parse_matrix(text, "M")?;
        ExplicitCode::new(field, words)
    }
}

pub fn hamming(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn weight(a: &[u32]) -> usize {
    a.iter().filter(|&&x| x != 0).count()
}

/// Coordinates where all given words are pairwise distinct.
pub fn separating_coordinates(words: &[&[u32]]) -> Vec<usize> {
    let n = words.first().map_or(0, |w| w.len());
    (0..n)
        .filter(|&i| {
            words
                .iter()
                .enumerate()
                .all(|(a, wa)| words[..a].iter().all(|wb| wb[i] != wa[i]))
        })
        .collect()
}

/// Joint k-hash distance of one tuple.
pub fn joint_distance(words: &[&[u32]]) -> usize {
    separating_coordinates(words).len()
}

pub fn min_hamming(code: &ExplicitCode) -> Result<usize, CodeError> {
    if code.words.len() < 2 {
        return Err(CodeError::TooFewWords);
    }
    Ok(min_tuple_distance(&code.words, 2, None))
}

/// Minimum joint k-hash distance over all k-subsets of distinct words.
pub fn khash_distance(code: &ExplicitCode, k: usize) -> Result<Distance, CodeError> {
    if k < 2 {
        return Err(CodeError::InvalidK(k));
    }
    if code.words.len() < k {
        return Ok(Distance::Infinite);
    }
    Ok(Distance::Finite(min_tuple_distance(&code.words, k, None)))
}

/// Brute-force minimum over k-subsets; with `anchor`, only subsets that
/// contain that word. Requires `words.len() >= k`.
fn min_tuple_distance(words: &[Vec<u32>], k: usize, anchor: Option<usize>) -> usize {
    let n = words[0].len();
    let search = |first: usize, rest: Vec<usize>| {
        let mut chosen = vec![first];
        let alive = vec![true; n];
        let mut best = n;
        extend_tuple(words, &rest, 0, k, &mut chosen, &alive, &mut best);
        best
    };
    match anchor {
        Some(a) => {
            let others: Vec<usize> = (0..words.len()).filter(|&i| i != a).collect();
            // Split on the second member so the work spreads across threads.
            (0..others.len())
                .into_par_iter()
                .filter(|&j| others.len() - j >= k - 1)
                .map(|j| {
                    let mut chosen = vec![a, others[j]];
                    let alive = mark(&vec![true; n], words, &[a], others[j]);
                    let mut best = n;
                    extend_tuple(words, &others[j + 1..], 0, k, &mut chosen, &alive, &mut best);
                    best
                })
                .min()
                .unwrap_or(n)
        }
        None => (0..words.len())
            .into_par_iter()
            .filter(|&i| words.len() - i >= k)
            .map(|i| search(i, ((i + 1)..words.len()).collect()))
            .min()
            .unwrap_or(n),
    }
}

fn mark(alive: &[bool], words: &[Vec<u32>], chosen: &[usize], next: usize) -> Vec<bool> {
    let w = &words[next];
    alive
        .iter()
        .enumerate()
        .map(|(i, &a)| a && chosen.iter().all(|&c| words[c][i] != w[i]))
        .collect()
}

fn extend_tuple(
    words: &[Vec<u32>],
    pool: &[usize],
    from: usize,
    k: usize,
    chosen: &mut Vec<usize>,
    alive: &[bool],
    best: &mut usize,
) {
    if *best == 0 {
        return;
    }
    if chosen.len() == k {
        let count = alive.iter().filter(|&&a| a).count();
        *best = (*best).min(count);
        return;
    }
    let need = k - chosen.len();
    for idx in from..pool.len() {
        if pool.len() - idx < need {
            break;
        }
        let next = pool[idx];
        let narrowed = mark(alive, words, chosen, next);
        chosen.push(next);
        extend_tuple(words, pool, idx + 1, k, chosen, &narrowed, best);
        chosen.pop();
    }
}

/// Generator matrix of the ternary tetracode.
pub const TETRACODE_GENERATOR: [[u32; 4]; 2] = [[1, 0, 2, 2], [0, 1, 2, 1]];

/// The nine tetracode words `b_0..b_8`; `b_i = (i / 3, i % 3) * G_T`.
pub const TETRACODE_WORDS: [[u32; 4]; 9] = [
    [0, 0, 0, 0],
    [0, 1, 2, 1],
    [0, 2, 1, 2],
    [1, 0, 2, 2],
    [1, 1, 1, 0],
    [1, 2, 0, 1],
    [2, 0, 1, 1],
    [2, 1, 0, 2],
    [2, 2, 2, 0],
];

pub fn tetracode() -> LinearCode {
    let f3 = Field::new(3, 1).expect("GF(3)");
    LinearCode::new(f3, TETRACODE_GENERATOR.iter().map(|r| r.to_vec()).collect())
        .expect("tetracode generator has full rank")
}

/// Tetracode image of a GF(9) label: its base-3 coefficient pair
/// `(e mod 3, e div 3)` multiplied by the tetracode generator.
pub fn tetracode_symbol(label: u32) -> [u32; 4] {
    let a = [label % 3, label / 3];
    let mut out = [0u32; 4];
    for (j, o) in out.iter_mut().enumerate() {
        *o = (a[0] * TETRACODE_GENERATOR[0][j] + a[1] * TETRACODE_GENERATOR[1][j]) % 3;
    }
    out
}

/// Replaces each GF(9) symbol of a word by its tetracode image.
pub fn concat_word(word: &[u32]) -> Vec<u32> {
    word.iter().flat_map(|&e| tetracode_symbol(e)).collect()
}

fn require_gf9(field: &Field) -> Result<(), CodeError> {
    if field.p() == 3 && field.m() == 2 {
        Ok(())
    } else {
        Err(FieldError::FieldMismatch.into())
    }
}

/// Ternary code of length `4n` obtained by expanding every symbol of a GF(9)
/// linear code through the tetracode. The generator has rows `beta * g_j`
/// for each row `g_j` and `beta` in the GF(3)-basis `{1, x}` (labels 1, 3).
pub fn concat_tetracode(code9: &LinearCode) -> Result<LinearCode, CodeError> {
    require_gf9(code9.field())?;
    let f9 = code9.field();
    let f3 = Field::new(3, 1)?;
    let rows = code9
        .generator()
        .iter()
        .flat_map(|row| {
            [1u32, 3].map(|beta| concat_word(&row.iter().map(|&g| f9.mul(beta, g)).collect::<Vec<_>>()))
        })
        .collect();
    LinearCode::new(f3, rows)
}

/// A random full-rank code plus the number of rank-deficient draws rejected.
#[derive(Clone, Debug)]
pub struct RandomLinear {
    pub code: LinearCode,
    pub rejections: u64,
}

/// Draws i.i.d. uniform `m x n` matrices until one has rank `m`.
pub fn random_linear(field: &Field, m: usize, n: usize, seed: u64, cap: u64) -> Result<RandomLinear, CodeError> {
    if m == 0 || n == 0 {
        return Err(CodeError::EmptyCode);
    }
    let size = (field.order() as u64).saturating_pow(m as u32);
    if size > cap {
        return Err(CodeError::CapExceeded { size, cap });
    }
    if m > n {
        return Err(CodeError::RankDeficient { rank: n, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rejections = 0;
    loop {
        let rows = random_matrix(field, m, n, &mut rng);
        if rank(field, &rows) == m {
            let code = LinearCode { field: field.clone(), rows, n };
            return Ok(RandomLinear { code, rejections });
        }
        rejections += 1;
    }
}

/// An `m x n` matrix with i.i.d. uniform labels.
pub fn random_matrix<R: Rng>(field: &Field, m: usize, n: usize, rng: &mut R) -> Vec<Vec<u32>> {
    let q = field.order();
    (0..m).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect()
}

/// Rank over the field by Gaussian elimination.
pub fn rank(field: &Field, rows: &[Vec<u32>]) -> usize {
    row_echelon(field, rows.to_vec()).len()
}

/// Nonzero rows of a reduced row echelon form of `rows`.
pub(crate) fn row_echelon(field: &Field, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, p));
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// All vectors of `F_q^len` in lexicographic order.
pub fn all_vectors(q: u32, len: usize) -> Vec<Vec<u32>> {
    let total = (q as usize).pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![0u32; len];
    for _ in 0..total {
        out.push(cur.clone());
        for x in cur.iter_mut().rev() {
            *x += 1;
            if *x < q {
                break;
            }
            *x = 0;
        }
    }
    out
}

fn join(r: &[u32]) -> String {
    r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_matrix(text: &str, count_name: &str) -> Result<(Field, Vec<Vec<u32>>, usize), CodeError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let parse_nums = |line: usize, l: &str| -> Result<Vec<u32>, CodeError> {
        l.split_whitespace()
            .map(|t| {
                t.parse::<u32>().map_err(|_| CodeError::Parse { line, msg: format!("invalid integer {t:?}") })
            })
            .collect()
    };
    let (hline, header) = lines.next().ok_or(CodeError::Parse { line: 1, msg: "missing header".into() })?;
    let h = parse_nums(hline, header)?;
    let [q, count, n] = h[..] else {
        return Err(CodeError::Parse { line: hline, msg: format!("header must be `q {count_name} n`") });
    };
    let field = Field::from_order(q).map_err(|e| CodeError::Parse { line: hline, msg: e.to_string() })?;
    let mut rows = Vec::with_capacity(count as usize);
    for (line, l) in lines {
        let r = parse_nums(line, l)?;
        if r.len() != n as usize {
            return Err(CodeError::Parse { line, msg: format!("expected {n} entries, found {}", r.len()) });
        }
        if let Some(&bad) = r.iter().find(|&&x| x >= q) {
            return Err(CodeError::Parse { line, msg: format!("label {bad} not in [0, {q})") });
        }
        rows.push(r);
    }
    if rows.len() != count as usize {
        return Err(CodeError::Parse {
            line: hline,
            msg: format!("header declares {count} rows, found {}", rows.len()),
        });
    }
    Ok((field, rows, n as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u32) -> Field {
        Field::from_order(q).unwrap()
    }

    fn explicit(q: u32, words: &[&[u32]]) -> ExplicitCode {
        ExplicitCode::new(f(q), words.iter().map(|w| w.to_vec()).collect()).unwrap()
    }

    #[test]
    fn tetracode_matches_table() {
        let code = tetracode().enumerate(DEFAULT_ENUM_CAP).unwrap();
        let expect: Vec<Vec<u32>> = TETRACODE_WORDS.iter().map(|w| w.to_vec()).collect();
        assert_eq!(code.words(), &expect[..]);
    }

    #[test]
    fn tetracode_distances() {
        let code = tetracode().enumerate(DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(min_hamming(&code).unwrap(), 3);
        assert_eq!(khash_distance(&code, 3).unwrap(), Distance::Finite(1));
        assert_eq!(tetracode().khash_distance(3, DEFAULT_ENUM_CAP).unwrap(), Distance::Finite(1));
    }

    #[test]
    fn small_code_distances() {
        let rep = explicit(3, &[&[0, 0, 0], &[1, 1, 1], &[2, 2, 2]]);
        assert_eq!(min_hamming(&rep).unwrap(), 3);
        assert_eq!(khash_distance(&rep, 3).unwrap(), Distance::Finite(3));
        assert_eq!(khash_distance(&rep, 4).unwrap(), Distance::Infinite);
        let two = explicit(2, &[&[0, 0], &[0, 1]]);
        assert_eq!(min_hamming(&two).unwrap(), 1);
        let one = explicit(2, &[&[0, 0]]);
        assert_eq!(min_hamming(&one).unwrap_err(), CodeError::TooFewWords);
        assert_eq!(khash_distance(&rep, 1).unwrap_err(), CodeError::InvalidK(1));
    }

    #[test]
    fn trivial_enumeration() {
        let code = LinearCode::new(f(3), vec![vec![1]]).unwrap();
        let words = code.enumerate(DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(words.words(), &[vec![0], vec![1], vec![2]]);
        assert!(matches!(code.enumerate(2), Err(CodeError::CapExceeded { size: 3, cap: 2 })));
    }

    #[test]
    fn rank_deficiency_rejected() {
        let err = LinearCode::new(f(3), vec![vec![1, 2], vec![2, 1]]).unwrap_err();
        assert_eq!(err, CodeError::RankDeficient { rank: 1, m: 2 });
        let dup = ExplicitCode::new(f(2), vec![vec![0, 1], vec![0, 1]]).unwrap_err();
        assert_eq!(dup, CodeError::DuplicateWord(1));
    }

    #[test]
    fn concat_maps_symbols_onto_tetracode() {
        let f9 = f(9);
        let code9 = LinearCode::new(f9, vec![vec![1]]).unwrap();
        let ternary = concat_tetracode(&code9).unwrap();
        assert_eq!(ternary.dimension(), 2);
        let mut words = ternary.enumerate(DEFAULT_ENUM_CAP).unwrap().words().to_vec();
        words.sort();
        let mut expect: Vec<Vec<u32>> = TETRACODE_WORDS.iter().map(|w| w.to_vec()).collect();
        expect.sort();
        assert_eq!(words, expect);
        assert_eq!(concat_word(&[0, 0]), vec![0; 8]);
    }

    #[test]
    fn concat_requires_gf9() {
        let code = LinearCode::new(f(3), vec![vec![1]]).unwrap();
        assert_eq!(concat_tetracode(&code).unwrap_err(), CodeError::Field(FieldError::FieldMismatch));
    }

    #[test]
    fn random_linear_is_seeded() {
        let f3 = f(3);
        let a = random_linear(&f3, 2, 5, 11, DEFAULT_ENUM_CAP).unwrap();
        let b = random_linear(&f3, 2, 5, 11, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(a.code, b.code);
        let words = a.code.enumerate(DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(words.len(), 9);
        for seed in 0..20 {
            let c = random_linear(&f3, 1, 1, seed, DEFAULT_ENUM_CAP).unwrap();
            assert!(matches!(c.code.generator()[0][0], 1 | 2));
        }
    }

    #[test]
    fn file_round_trip() {
        let t = tetracode();
        let text = t.to_file_string();
        assert_eq!(text, "3 2 4\n1 0 2 2\n0 1 2 1\n");
        assert_eq!(LinearCode::parse(&text).unwrap(), t);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(LinearCode::parse("3 2\n1 0\n"), Err(CodeError::Parse { line: 1, .. })));
        assert!(matches!(LinearCode::parse("6 1 2\n1 0\n"), Err(CodeError::Parse { line: 1, .. })));
        assert!(matches!(LinearCode::parse("3 1 2\n1 3\n"), Err(CodeError::Parse { line: 2, .. })));
        assert!(matches!(LinearCode::parse("3 2 2\n1 0\n"), Err(CodeError::Parse { .. })));
        assert!(matches!(LinearCode::parse(""), Err(CodeError::Parse { .. })));
        let e = ExplicitCode::parse("3 3 3\n0 0 0\n1 1 1\n2 2 2\n").unwrap();
        assert_eq!(khash_distance(&e, 3).unwrap(), Distance::Finite(3));
    }

    #[test]
    fn anchored_distance_matches_full_search() {
        let f3 = f(3);
        for seed in 0..30 {
            let code = random_linear(&f3, 3, 6, seed, DEFAULT_ENUM_CAP).unwrap().code;
            let words = code.enumerate(DEFAULT_ENUM_CAP).unwrap();
            for k in 2..=3 {
                assert_eq!(code.khash_distance(k, DEFAULT_ENUM_CAP).unwrap(), khash_distance(&words, k).unwrap());
            }
            assert_eq!(code.min_weight(DEFAULT_ENUM_CAP).unwrap(), min_hamming(&words).unwrap());
        }
    }
}
