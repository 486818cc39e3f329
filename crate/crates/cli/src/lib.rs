//! Report builders behind the `khash` binary. Each `cmd_*` function returns
//! plain data; formatting to CSV or JSON happens in [`Table`] and
//! [`to_json`].

use std::fmt::Write as _;

use khash_core::bounds::{self, BoundError};
use khash_core::codes::{self, CodeError, Distance, ExplicitCode, LinearCode};
use khash_core::galois::{prime_power, prime_powers_in};
use khash_core::verify::{self, CoveringReport, ListCheck, MonteCarloReport, PentagonCode, Scan, VerifyError};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub const DEFAULT_PRECISION: usize = 6;
pub const DEFAULT_STEP: f64 = 0.002;
pub const FIG4_Q_MAX: u32 = 256;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0} is not a prime power >= 3")]
    InvalidQ(u32),
    #[error("unknown figure {0:?} (expected fig1, fig2 or fig4)")]
    UnknownFigure(String),
    #[error("grid step must lie in (0, 1], got {0}")]
    InvalidStep(f64),
    #[error("KHASH_CAP must be a positive integer, got {0:?}")]
    InvalidCap(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Enumeration cap from `KHASH_CAP`, falling back to the library default.
pub fn enum_cap_from(var: Option<&str>) -> Result<u64, CliError> {
    match var {
        None => Ok(codes::DEFAULT_ENUM_CAP),
        Some(s) => match s.trim().parse::<u64>() {
            Ok(c) if c > 0 => Ok(c),
            _ => Err(CliError::InvalidCap(s.to_string())),
        },
    }
}

/// A value in a CSV report.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
    Bool(bool),
}

/// Rows under a fixed header; reals are printed at a chosen number of
/// significant digits.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let i = self.headers.iter().position(|h| *h == name)?;
        Some(self.rows.iter().map(|r| &r[i]).collect())
    }

    pub fn to_csv(&self, precision: usize) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| match c {
                Cell::Int(i) => i.to_string(),
                Cell::Real(x) => format_real(*x, precision),
                Cell::Text(s) => s.clone(),
                Cell::Bool(b) => b.to_string(),
            }))?;
        }
        Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is utf-8"))
    }
}

/// `x` with `digits` significant digits, trailing zeros removed.
pub fn format_real(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let exp = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&exp) {
        return format!("{:.*e}", digits - 1, x);
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

fn round_sig(x: f64, digits: usize) -> f64 {
    format!("{:.*e}", digits.max(1) - 1, x).parse().unwrap_or(x)
}

/// Pretty JSON with every non-integer number rounded to `precision`
/// significant digits.
pub fn to_json<T: Serialize>(value: &T, precision: usize) -> Result<String, CliError> {
    fn walk(v: &mut Value, p: usize) {
        match v {
            Value::Number(n) if n.is_f64() => {
                if let Some(r) = n.as_f64().map(|x| round_sig(x, p)).and_then(serde_json::Number::from_f64) {
                    *n = r;
                }
            }
            Value::Array(a) => a.iter_mut().for_each(|x| walk(x, p)),
            Value::Object(o) => o.values_mut().for_each(|x| walk(x, p)),
            _ => {}
        }
    }
    let mut v = serde_json::to_value(value)?;
    walk(&mut v, precision);
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table1Row {
    pub q: u32,
    pub cor3_plotkin: f64,
    /// The Plotkin-combined bound as an exact fraction, e.g. `"15/31"`.
    pub cor3_plotkin_exact: String,
    pub cor4_aaltonen: f64,
    pub korner_marton: f64,
}

/// Linear 3-hash rate bounds for each `q` (default: prime powers in `[3, 64]`).
pub fn cmd_table1(q_list: Option<&[u32]>) -> Result<Vec<Table1Row>, CliError> {
    let qs = match q_list {
        Some(l) => l.to_vec(),
        None => prime_powers_in(3, 64),
    };
    qs.into_iter()
        .map(|q| {
            if q < 3 || prime_power(q).is_none() {
                return Err(CliError::InvalidQ(q));
            }
            let exact = bounds::rate_cor3_plotkin_exact(q as u64, 3)?;
            let (n, d) = bounds::ratio_parts(&exact);
            Ok(Table1Row {
                q,
                cor3_plotkin: bounds::rate_cor3_plotkin(q as u64, 3)?,
                cor3_plotkin_exact: format!("{n}/{d}"),
                cor4_aaltonen: bounds::rate_cor4_lp(q as u64, 3)?.rate,
                korner_marton: bounds::rate_korner_marton(q, 3)?.rate,
            })
        })
        .collect()
}

pub fn table1_table(rows: &[Table1Row]) -> Table {
    Table {
        headers: vec!["q", "cor3_plotkin", "cor3_plotkin_exact", "cor4_aaltonen", "korner_marton"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    Cell::Int(r.q as i64),
                    Cell::Real(r.cor3_plotkin),
                    Cell::Text(r.cor3_plotkin_exact.clone()),
                    Cell::Real(r.cor4_aaltonen),
                    Cell::Real(r.korner_marton),
                ]
            })
            .collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig4,
}

impl std::str::FromStr for FigureId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "fig1" => Ok(FigureId::Fig1),
            "fig2" => Ok(FigureId::Fig2),
            "fig4" => Ok(FigureId::Fig4),
            other => Err(CliError::UnknownFigure(other.to_string())),
        }
    }
}

/// `lo, lo + step, ...` up to `hi`, always ending exactly at `hi`.
fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    let mut g: Vec<f64> = (0..=n).map(|i| lo + i as f64 * step).collect();
    if hi - g[n] > 1e-12 {
        g.push(hi);
    } else {
        g[n] = hi;
    }
    g
}

/// Largest relative 4-hash distance of a 7-ary code: `7^{4 falling} / 7^4`.
pub const FIG2_DELTA4_MAX: f64 = 840.0 / 2401.0;

pub fn cmd_figure(id: FigureId, step: f64) -> Result<Table, CliError> {
    if !(step > 0.0 && step <= 1.0) {
        return Err(CliError::InvalidStep(step));
    }
    match id {
        FigureId::Fig1 => {
            let rows = grid(0.0, bounds::DELTA3_MAX, step)
                .into_iter()
                .map(|d| {
                    Ok(vec![
                        Cell::Real(d),
                        Cell::Real(bounds::achiev_theorem1(d)?),
                        Cell::Real(bounds::achiev_direct(d)?),
                    ])
                })
                .collect::<Result<_, BoundError>>()?;
            Ok(Table { headers: vec!["delta3", "theorem1", "bassalygo_direct"], rows })
        }
        FigureId::Fig2 => {
            let rows = grid(0.0, FIG2_DELTA4_MAX, step)
                .into_iter()
                .map(|d| {
                    Ok(vec![
                        Cell::Real(d),
                        Cell::Real(bounds::rate_cor1_lp(7, 4, d)?.rate),
                        Cell::Real(bounds::rate_bass_lp(7, 4, d)?.rate),
                    ])
                })
                .collect::<Result<_, BoundError>>()?;
            Ok(Table { headers: vec!["delta4", "cor1_lp_combined", "bass_lp_combined"], rows })
        }
        FigureId::Fig4 => {
            let rows = prime_powers_in(5, FIG4_Q_MAX)
                .into_iter()
                .map(|q| {
                    Ok(vec![
                        Cell::Int(q as i64),
                        Cell::Real(bounds::rate_cor3_plotkin(q as u64, 4)?),
                        Cell::Real(bounds::rate_cor4_lp(q as u64, 4)?.rate),
                        Cell::Real(bounds::rate_korner_marton(q, 4)?.rate),
                        Cell::Real(bounds::rate_lower_fk(q, 4)?),
                    ])
                })
                .collect::<Result<_, BoundError>>()?;
            Ok(Table { headers: vec!["q", "cor3_plotkin", "cor4_aaltonen", "korner_marton", "fk_lower"], rows })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoveringSummary {
    pub k: usize,
    pub dim: usize,
    pub t: u32,
    pub d_s: usize,
    pub dropped_columns: usize,
    pub report: CoveringReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistanceEntry {
    pub k: usize,
    pub d: Distance,
    /// Upper bound on `d_k` for linear codes with the observed `d_2`.
    pub theorem2_bound: Option<u64>,
    pub within_theorem2: Option<bool>,
    /// Covering built from the `(k-1)`-hash anchors, when one exists.
    pub covering: Option<CoveringSummary>,
    pub covering_skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CodeReport {
    pub kind: &'static str,
    pub q: u32,
    pub n: usize,
    pub size: u64,
    pub dimension: Option<usize>,
    pub d2: Distance,
    pub distances: Vec<DistanceEntry>,
    /// Every triple is separated somewhere (`d_3 > 0`); present when `k >= 3`.
    pub trifferent: Option<bool>,
    pub k_hash: bool,
    pub expect_dk: Option<usize>,
    pub expectation_met: Option<bool>,
}

impl CodeReport {
    /// Verification fails only when an expected `d_k` was supplied and differs.
    pub fn verified(&self) -> bool {
        self.expectation_met != Some(false)
    }
}

/// Distances `d_2..d_k` of a code file. With `explicit` the file lists
/// codewords; otherwise it holds a generator matrix.
pub fn cmd_verify_code(
    text: &str,
    k: usize,
    expect_dk: Option<usize>,
    explicit: bool,
    cap: u64,
) -> Result<CodeReport, CliError> {
    if k < 2 {
        return Err(CodeError::InvalidK(k).into());
    }
    let (linear, words) = if explicit {
        (None, ExplicitCode::parse(text)?)
    } else {
        let code = LinearCode::parse(text)?;
        let words = code.enumerate(cap)?;
        (Some(code), words)
    };
    let q = words.field().order();
    let d_of = |j: usize| match &linear {
        Some(c) => c.khash_distance(j, cap),
        None => codes::khash_distance(&words, j),
    };
    let d2 = d_of(2)?;
    let mut distances = Vec::new();
    for j in 2..=k {
        let d = if j == 2 { d2 } else { d_of(j)? };
        let mut entry =
            DistanceEntry { k: j, d, theorem2_bound: None, within_theorem2: None, covering: None, covering_skipped: None };
        if let (Some(code), Some(d2v)) = (&linear, d2.finite()) {
            if j >= 3 && j <= q as usize && d2v >= 1 {
                let b = bounds::theorem2_dk(q as u64, j as u64, d2v as u64, code.dimension() as u64)?;
                entry.theorem2_bound = Some(b);
                entry.within_theorem2 = d.finite().map(|v| v as u64 <= b);
            }
            if j >= 3 {
                match verify::build_covering(code, j, cap) {
                    Ok(built) => {
                        let report = verify::covering_check(&built.instance, cap)?;
                        entry.covering = Some(CoveringSummary {
                            k: j,
                            dim: built.instance.dim(),
                            t: built.instance.t(),
                            d_s: built.d_s,
                            dropped_columns: built.dropped_columns,
                            report,
                        });
                    }
                    Err(e @ (VerifyError::InvalidK { .. }
                    | VerifyError::NoSuchSubcode { .. }
                    | VerifyError::DegenerateDistance { .. })) => entry.covering_skipped = Some(e.to_string()),
                    Err(e) => return Err(e.into()),
                }
            }
        }
        distances.push(entry);
    }
    let dk = distances.last().expect("k >= 2").d;
    let trifferent = (k >= 3).then(|| distances[1].d.is_positive());
    Ok(CodeReport {
        kind: if linear.is_some() { "linear" } else { "explicit" },
        q,
        n: words.length(),
        size: words.len() as u64,
        dimension: linear.as_ref().map(LinearCode::dimension),
        d2,
        trifferent,
        k_hash: dk.is_positive(),
        expect_dk,
        expectation_met: expect_dk.map(|e| dk == Distance::Finite(e)),
        distances,
    })
}

pub fn cmd_scan(k_lo: u32, k_hi: u32, q_cap: u32) -> Result<Scan, CliError> {
    Ok(verify::scan_theorem3(k_lo, k_hi, q_cap)?)
}

pub fn scan_table(scan: &Scan) -> Table {
    Table {
        headers: vec!["q", "k", "plotkin_bound", "km_bound", "margin", "holds"],
        rows: scan
            .rows
            .iter()
            .map(|r| {
                vec![
                    Cell::Int(r.q as i64),
                    Cell::Int(r.k as i64),
                    Cell::Real(r.plotkin_bound),
                    Cell::Real(r.km_bound),
                    Cell::Real(r.margin),
                    Cell::Bool(r.holds),
                ]
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PentagonSummary {
    pub words: Vec<String>,
    pub list_size: usize,
    pub list: ListCheck,
    pub independent: bool,
    pub confusable_pair: Option<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TypewriterReport {
    pub trivial: f64,
    pub jamison_lp: f64,
    pub delta_star: f64,
    /// The covering argument is weaker than the trivial bound.
    pub jamison_exceeds_trivial: bool,
    pub pentagon_n2_checks: Vec<PentagonSummary>,
}

pub const PENTAGON_SETS: [[&str; 5]; 2] = [["00", "12", "24", "31", "43"], ["00", "12", "24", "31", "42"]];

pub fn cmd_typewriter() -> Result<TypewriterReport, CliError> {
    let b = bounds::typewriter_bounds()?;
    let checks = PENTAGON_SETS
        .iter()
        .map(|set| {
            let code = PentagonCode::from_digits(set, 2)?;
            let pair = verify::pentagon_confusable_pair(&code);
            Ok(PentagonSummary {
                words: set.iter().map(|s| s.to_string()).collect(),
                list_size: 2,
                list: verify::pentagon_list_check(&code)?,
                independent: pair.is_none(),
                confusable_pair: pair.map(|[a, b]| [set[a].to_string(), set[b].to_string()]),
            })
        })
        .collect::<Result<_, VerifyError>>()?;
    Ok(TypewriterReport {
        trivial: b.trivial,
        jamison_lp: b.jamison_lp,
        delta_star: b.delta_star,
        jamison_exceeds_trivial: b.jamison_lp > b.trivial,
        pentagon_n2_checks: checks,
    })
}

pub fn cmd_montecarlo(n_quarter: usize, m: usize, trials: u64, seed: u64, cap: u64) -> Result<MonteCarloReport, CliError> {
    Ok(verify::mc_trifference(n_quarter, m, trials, seed, cap)?)
}

/// Parses `"3,4,5"` or `"3 4 5"`.
pub fn parse_q_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|e| format!("bad q {t:?}: {e}")))
        .collect()
}

/// Renders a short human summary of a code report (stderr companion to JSON).
pub fn summarize(report: &CodeReport) -> String {
    let mut s = String::new();
    let _ = write!(s, "{} code over GF({}), n = {}, |C| = {}:", report.kind, report.q, report.n, report.size);
    for d in &report.distances {
        let _ = write!(s, " d{} = {}", d.k, d.d);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_real(0.25, 6), "0.25");
        assert_eq!(format_real(0.219_755_1, 6), "0.219755");
        assert_eq!(format_real(123.456_789, 6), "123.457");
        assert_eq!(format_real(0.0, 6), "0");
        assert_eq!(format_real(-1.5, 3), "-1.5");
        assert_eq!(format_real(1.234_567e-9, 3), "1.23e-9");
        assert_eq!(format_real(2.0 / 3.0, 4), "0.6667");
    }

    #[test]
    fn grid_ends_on_boundary() {
        let g = grid(0.0, 2.0 / 9.0, 0.002);
        assert_eq!(g[0], 0.0);
        assert_eq!(*g.last().unwrap(), 2.0 / 9.0);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        assert_eq!(grid(0.0, 1.0, 0.25).len(), 5);
    }

    #[test]
    fn q_list_parsing() {
        assert_eq!(parse_q_list("3,4, 5").unwrap(), vec![3, 4, 5]);
        assert!(parse_q_list("3,x").is_err());
    }

    #[test]
    fn cap_env() {
        assert_eq!(enum_cap_from(None).unwrap(), codes::DEFAULT_ENUM_CAP);
        assert_eq!(enum_cap_from(Some("1000")).unwrap(), 1000);
        assert!(enum_cap_from(Some("0")).is_err());
        assert!(enum_cap_from(Some("lots")).is_err());
    }

    #[test]
    fn table1_rejects_non_prime_power() {
        assert!(matches!(cmd_table1(Some(&[6])), Err(CliError::InvalidQ(6))));
        assert!(matches!(cmd_table1(Some(&[2])), Err(CliError::InvalidQ(2))));
    }

    #[test]
    fn json_rounding_keeps_integers() {
        #[derive(Serialize)]
        struct S {
            a: f64,
            b: u64,
        }
        let s = to_json(&S { a: 0.123_456_789, b: 12_345_678 }, 3).unwrap();
        assert!(s.contains("0.123"), "{s}");
        assert!(s.contains("12345678"), "{s}");
    }
}
