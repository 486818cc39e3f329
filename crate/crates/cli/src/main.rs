use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use khash_cli::{
    cmd_figure, cmd_montecarlo, cmd_scan, cmd_table1, cmd_typewriter, cmd_verify_code, enum_cap_from,
    parse_q_list, scan_table, summarize, table1_table, to_json, CliError, FigureId, DEFAULT_PRECISION,
    DEFAULT_STEP,
};

/// Rate bounds and brute-force verifiers for perfect k-hash codes.
#[derive(Parser, Debug)]
#[command(name = "khash", version)]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Significant digits for printed reals.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Linear 3-hash rate bounds per field size (CSV).
    Table1 {
        /// Comma-separated prime powers; default is every prime power in [3, 64].
        #[arg(long, value_parser = q_list)]
        q: Option<QList>,
    },
    /// Figure data series (CSV).
    Figure {
        #[arg(long)]
        id: FigureId,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
    },
    /// k-hash distances of a code file (JSON).
    VerifyCode {
        path: PathBuf,
        #[arg(long)]
        k: usize,
        /// Exit with status 1 unless d_k equals this value.
        #[arg(long)]
        expect_dk: Option<usize>,
        /// The file lists codewords rather than a generator matrix.
        #[arg(long)]
        explicit: bool,
    },
    /// Plotkin-combined linear bound against Körner–Marton (CSV).
    Scan {
        #[arg(long)]
        k_lo: u32,
        #[arg(long)]
        k_hi: u32,
        #[arg(long)]
        q_cap: u32,
    },
    /// Typewriter-channel list-2 bounds and pentagon checks (JSON).
    Typewriter,
    /// Random tetracode-concatenation experiment (JSON).
    Montecarlo {
        #[arg(long)]
        n_quarter: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Debug)]
struct QList(Vec<u32>);

fn q_list(s: &str) -> Result<QList, String> {
    parse_q_list(s).map(QList)
}

enum Outcome {
    Verified,
    Failed,
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let cap = enum_cap_from(std::env::var("KHASH_CAP").ok().as_deref())?;
    let p = cli.precision;
    let (text, outcome) = match cli.command {
        Command::Table1 { q } => {
            let rows = cmd_table1(q.as_ref().map(|l| l.0.as_slice()))?;
            (table1_table(&rows).to_csv(p)?, Outcome::Verified)
        }
        Command::Figure { id, step } => (cmd_figure(id, step)?.to_csv(p)?, Outcome::Verified),
        Command::VerifyCode { path, k, expect_dk, explicit } => {
            let text = std::fs::read_to_string(&path)?;
            let report = cmd_verify_code(&text, k, expect_dk, explicit, cap)?;
            log::info!("{}", summarize(&report));
            let outcome = if report.verified() { Outcome::Verified } else { Outcome::Failed };
            (to_json(&report, p)?, outcome)
        }
        Command::Scan { k_lo, k_hi, q_cap } => {
            let scan = cmd_scan(k_lo, k_hi, q_cap)?;
            for v in &scan.violations {
                log::warn!("violation at q = {}, k = {} (margin {:e})", v.q, v.k, v.margin);
            }
            let outcome = if scan.violations.is_empty() { Outcome::Verified } else { Outcome::Failed };
            (scan_table(&scan).to_csv(p)?, outcome)
        }
        Command::Typewriter => (to_json(&cmd_typewriter()?, p)?, Outcome::Verified),
        Command::Montecarlo { n_quarter, m, trials, seed } => {
            let report = cmd_montecarlo(n_quarter, m, trials, seed, cap)?;
            (to_json(&report, p)?, Outcome::Verified)
        }
    };
    match cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(outcome)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Verified) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
