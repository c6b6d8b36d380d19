//! Command-line front end: `cosets`, `bound`, `encode`, `decode`, `check`, `ratio-grid`.
//!
//! Exit codes: 0 when the command ran (a decoding failure still counts),
//! 1 for usage, file and parse errors, 2 when an internal check fails.

mod fixtures;
mod report;
mod spec_file;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::cyclic::{self, CyclicCode, CyclicError, HtSearch};
use crate::decoder::{DecodeError, DecodeResult, DecoderContext};
use crate::gf::GfError;
use crate::nzl::{
    self, BoundLimits, CandidateLimits, LocatorKind, LocatorSpec, MRule, NzlCertificate, NzlError,
};

pub use fixtures::{check_names, run_checks, CheckRow};
pub use report::{
    build_report, render_human, BoundRequest, CodeInfo, HtEntry, NzlEntry, OracleEntry,
    ReportRecord,
};
pub use spec_file::CodeSpecFile;

/// Environment variable capping the worker threads of the bound searches.
pub const THREADS_ENV: &str = "CYCLIC_BOUND_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    #[error(transparent)]
    Nzl(#[from] NzlError),
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cyclic-bound",
    version,
    about = "Minimum-distance bounds and decoding for cyclic codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the cyclotomic cosets of q modulo n.
    Cosets {
        n: u64,
        q: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compute BCH, Hartmann-Tzeng, non-zero-locator and exhaustive bounds
    /// (all of them unless some are selected).
    Bound {
        /// Code spec JSON file.
        spec: PathBuf,
        #[arg(long)]
        bch: bool,
        #[arg(long)]
        ht: bool,
        #[arg(long)]
        nzl: bool,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        search: SearchArgs,
        /// Maximum number of codewords the exhaustive search may enumerate.
        #[arg(long, default_value_t = cyclic::DEFAULT_ORACLE_CAP)]
        cap: u128,
        /// Aligned text instead of JSON.
        #[arg(long)]
        human: bool,
    },
    /// Encode a message (k base-q digits, coefficient of x^0 first).
    Encode {
        spec: PathBuf,
        #[arg(long)]
        message: String,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        locator: LocatorArgs,
    },
    /// Decode a received word.
    ///
    /// Words are strings of base-q digits with the coefficient of x^0 first:
    /// one hex character per symbol when q <= 16, otherwise comma-separated
    /// integers.
    Decode {
        spec: PathBuf,
        #[arg(long)]
        received: String,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        locator: LocatorArgs,
    },
    /// Recompute the built-in reference values and compare.
    Check {
        /// Only fixtures whose name contains this string.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// CSV of d*/(d0 + nu) for Reed-Solomon locators of length m.
    RatioGrid {
        /// Inclusive range `a..b` (or one value).
        #[arg(long, default_value = "1..6")]
        nu_range: String,
        #[arg(long, default_value = "2..20")]
        d0_range: String,
        /// `nu+K` or `nu+A..B`.
        #[arg(long, default_value = "nu+2")]
        m_rule: String,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct SearchArgs {
    /// Largest locator length tried.
    #[arg(long, default_value_t = 15)]
    pub max_nl: u64,
    /// Largest extension degree u of locator fields GF(q^u).
    #[arg(long, default_value_t = 2)]
    pub max_u: u32,
    /// Search multipliers w (for n <= 255).
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub search_w: bool,
}

impl SearchArgs {
    fn limits(&self) -> BoundLimits {
        BoundLimits {
            candidates: CandidateLimits {
                max_n_l: self.max_nl,
                max_u: self.max_u,
                lowest_rate_d2: false,
            },
            search_w_max_n: if self.search_w { 255 } else { 0 },
            ht: HtSearch::default(),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct LocatorArgs {
    /// `auto` (best candidate), `trivial`, `spc:N`, `rs:U:N:K` or `cyclic:U:N:I,J,...`.
    #[arg(long, default_value = "auto")]
    pub locator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetListing {
    pub n: u64,
    pub q: u64,
    pub cosets: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeOutput {
    pub certificate: NzlCertificate,
    pub radius: u64,
    pub result: DecodeResult,
}

/// Caps the global rayon pool from `CYCLIC_BOUND_THREADS`, if set.
pub fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = v.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "{THREADS_ENV} must be a positive integer, got {v:?}"
        ))
    })?;
    // A second initialization (e.g. in tests) keeps the existing pool.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

/// Parses arguments and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        // a closed reader (e.g. `| head`) is not an error
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Cosets { n, q, json } => {
            let cosets = cyclic::all_cosets(n, q)?;
            if json {
                let listing = CosetListing { n, q, cosets };
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&listing).expect("serializable")
                )?;
            } else {
                for c in &cosets {
                    writeln!(out, "C_{:<4} {:?}", c[0], c)?;
                }
            }
            Ok(0)
        }
        Command::Bound {
            spec,
            bch,
            ht,
            nzl,
            oracle,
            search,
            cap,
            human,
        } => {
            let file = CodeSpecFile::load(&spec)?;
            let code = file.to_code()?;
            let all = !(bch || ht || nzl || oracle);
            let req = BoundRequest {
                bch: all || bch,
                ht: all || ht,
                nzl: all || nzl,
                oracle: all || oracle,
                limits: search.limits(),
                cap,
            };
            let record = build_report(&code, file.name.clone(), &req)?;
            if human {
                write!(out, "{}", render_human(&record))?;
            } else {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&record).expect("serializable")
                )?;
            }
            Ok(0)
        }
        Command::Encode {
            spec,
            message,
            search,
            locator,
        } => {
            let code = CodeSpecFile::load(&spec)?.to_code()?;
            let ctx = context_for(&code, &locator.locator, &search)?;
            let msg = parse_word(&message, code.q())?;
            let word = ctx.encode(&msg)?;
            writeln!(out, "{}", format_word(&word, code.q()))?;
            Ok(0)
        }
        Command::Decode {
            spec,
            received,
            search,
            locator,
        } => {
            let code = CodeSpecFile::load(&spec)?.to_code()?;
            let ctx = context_for(&code, &locator.locator, &search)?;
            let word = parse_word(&received, code.q())?;
            let result = ctx.decode(&word)?;
            let output = DecodeOutput {
                certificate: ctx.certificate().clone(),
                radius: ctx.radius(),
                result,
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&output).expect("serializable")
            )?;
            Ok(0)
        }
        Command::Check { only, json } => {
            let rows = run_checks(only.as_deref());
            if rows.is_empty() {
                return Err(CliError::Usage(format!(
                    "no fixture matches; available: {}",
                    check_names().join(", ")
                )));
            }
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&rows).expect("serializable")
                )?;
            } else {
                let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
                for r in &rows {
                    let mark = if r.pass { "PASS" } else { "FAIL" };
                    writeln!(
                        out,
                        "{mark}  {:width$}  expected {}  computed {}",
                        r.name, r.expected, r.computed
                    )?;
                }
            }
            Ok(if rows.iter().all(|r| r.pass) { 0 } else { 2 })
        }
        Command::RatioGrid {
            nu_range,
            d0_range,
            m_rule,
            out: path,
        } => {
            let nus = parse_range(&nu_range)?;
            let d0s = parse_range(&d0_range)?;
            let rule = parse_m_rule(&m_rule)?;
            if *d0s.start() < 2 {
                return Err(CliError::Usage("d0 must be at least 2".into()));
            }
            let rows = nzl::ratio_grid(nus, d0s, &rule)?;
            let csv = nzl::grid_to_csv(&rows);
            match path {
                Some(p) => std::fs::write(&p, csv)
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display())))?,
                None => write!(out, "{csv}")?,
            }
            Ok(0)
        }
    }
}

/// Decoder context for `auto` (best candidate) or an explicit locator.
pub fn context_for(
    code: &CyclicCode,
    locator: &str,
    search: &SearchArgs,
) -> Result<DecoderContext, CliError> {
    let limits = search.limits();
    let cert = if locator == "auto" {
        nzl::best_bound(code, limits)?.certificate
    } else {
        let spec = parse_locator(locator, code.q(), search.max_u)?;
        let opts = nzl::MuSearchOptions {
            search_w: code.n() <= limits.search_w_max_n,
            w: 1,
        };
        nzl::mu_search(code.defining_set(), code.n(), &spec, opts)?
    };
    Ok(DecoderContext::build(code, &cert)?)
}

fn num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid {what}: {s:?}")))
}

pub fn parse_locator(s: &str, q: u64, max_u: u32) -> Result<LocatorSpec, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let spec = match parts.as_slice() {
        ["trivial"] => LocatorSpec::trivial(q),
        ["spc", n] => LocatorSpec::spc(q, num(n, "locator length")?, max_u)?,
        ["rs", u, n, k] => LocatorSpec::rs(
            q,
            num(u, "extension degree")?,
            num(n, "locator length")?,
            num(k, "locator dimension")?,
        )?,
        ["cyclic", u, n, idx] => {
            let idx = idx
                .split(',')
                .map(|i| num(i, "defining-set index"))
                .collect::<Result<Vec<i64>, _>>()?;
            LocatorSpec::cyclic(
                LocatorKind::Custom,
                q,
                num(u, "extension degree")?,
                num(n, "locator length")?,
                &idx,
            )?
        }
        _ => return Err(CliError::Usage(format!("unknown locator {s:?}"))),
    };
    Ok(spec)
}

/// One hex digit per symbol when `q <= 16`, else comma-separated integers.
pub fn parse_word(s: &str, q: u64) -> Result<Vec<u32>, CliError> {
    let s = s.trim();
    let digits: Vec<u32> = if s.contains(',') || q > 16 {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| num(t, "symbol"))
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(16)
                    .ok_or_else(|| CliError::Usage(format!("invalid symbol {c:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    if let Some(&bad) = digits.iter().find(|&&d| d as u64 >= q) {
        return Err(CliError::Usage(format!(
            "symbol {bad} is not below q = {q}"
        )));
    }
    Ok(digits)
}

pub fn format_word(word: &[u32], q: u64) -> String {
    if q <= 16 {
        word.iter()
            .map(|&d| char::from_digit(d, 16).expect("digit below 16"))
            .collect()
    } else {
        word.iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<u64>, CliError> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (
            num(a, "range start")?,
            num(b.trim_start_matches('='), "range end")?,
        ),
        None => {
            let v = num(s, "range")?;
            (v, v)
        }
    };
    if a > b {
        return Err(CliError::Usage(format!("empty range {s:?}")));
    }
    Ok(a..=b)
}

pub fn parse_m_rule(s: &str) -> Result<MRule, CliError> {
    let rest = s.trim().strip_prefix("nu+").ok_or_else(|| {
        CliError::Usage(format!("m rule must look like nu+K or nu+A..B, got {s:?}"))
    })?;
    let offsets = parse_range(rest)?;
    if *offsets.start() < 2 {
        return Err(CliError::Usage("m must exceed nu + 1".into()));
    }
    Ok(MRule::offsets(offsets))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        assert_eq!(parse_word("0110", 2).unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(parse_word("3,0,17", 19).unwrap(), vec![3, 0, 17]);
        assert!(parse_word("012", 2).is_err());
        assert_eq!(format_word(&[0, 3, 2], 4), "032");
        assert_eq!(format_word(&[0, 18], 19), "0,18");
    }

    #[test]
    fn ranges_and_rules() {
        assert_eq!(parse_range("1..6").unwrap(), 1..=6);
        assert_eq!(parse_range("2..=20").unwrap(), 2..=20);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("5..2").is_err());
        assert_eq!(parse_m_rule("nu+2..6").unwrap(), MRule::offsets(2..=6));
        assert!(parse_m_rule("nu+1").is_err());
        assert!(parse_m_rule("m=3").is_err());
    }

    #[test]
    fn locators() {
        assert_eq!(parse_locator("spc:5", 2, 1).unwrap().n_l, 5);
        assert_eq!(parse_locator("rs:1:4:2", 5, 1).unwrap().d_l, 3);
        assert_eq!(
            parse_locator("cyclic:1:7:3", 2, 1).unwrap().defining_set,
            vec![3, 5, 6]
        );
        assert!(parse_locator("foo", 2, 1).is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["cyclic-bound", "cosets"], &mut o, &mut e), 1);
        assert_eq!(
            run(["cyclic-bound", "cosets", "21", "3"], &mut o, &mut e),
            1
        );
        assert_eq!(run(["cyclic-bound", "--help"], &mut o, &mut e), 0);
    }
}
