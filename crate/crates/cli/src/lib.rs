//! Command-line front end for `sqdist-core`.
//!
//! [`run`] parses an argument vector, executes one command and returns the
//! process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | at least one verification check failed |
//! | 2 | usage or I/O error |
//! | 3 | request is inapplicable to the partition (e.g. inverse of a singular `Δ`) |

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use sqdist_core::format::{fraction, matrix_csv, matrix_json, matrix_pretty};
use sqdist_core::verify::{conjecture_scan_with, scan, ConjectureSummary, ReportLine, ScanSummary};
use sqdist_core::{
    build_delta, build_laplacian_like, classify, cof_delta_closed, compute_bundle,
    det_delta_closed, inverse_block_form, inverse_gauss, inverse_rank_one, lambda,
    verify_partition, Error, Partition, RationalMatrix,
};

/// Environment variable holding the worker count for `scan` and `conjecture`.
pub const WORKERS_ENV: &str = "SQDIST_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sqdist",
    version,
    about = "Exact squared distance matrices of complete multipartite graphs"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; defaults to `pretty`, or `csv` for `matrix`. Scans always emit JSON lines.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants, closed forms and classification of one partition.
    Info {
        /// Part sizes, comma separated, e.g. `2,2,1`.
        sizes: Partition,
    },
    /// Print Δ, 𝓛 or Δ⁻¹ exactly.
    Matrix {
        kind: MatrixKind,
        sizes: Partition,
        /// Construction used for `inverse`.
        #[arg(long, value_enum, default_value_t = InverseMethod::Auto)]
        method: InverseMethod,
    },
    /// Run every applicable check for one partition.
    Verify { sizes: Partition },
    /// Verify every partition with at most `max-n` vertices.
    Scan {
        #[arg(long)]
        max_n: usize,
    },
    /// Record the spectrum of 𝓛 for every singular partition with at most `max-n` vertices.
    Conjecture {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Delta,
    Laplacian,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InverseMethod {
    /// Rank-one form when `cof Δ ≠ 0`, block form otherwise.
    Auto,
    RankOne,
    Block,
    /// Gauss-Jordan elimination on Δ.
    Gauss,
}

/// A command failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn inapplicable(err: Error) -> Self {
        Self {
            code: EXIT_INAPPLICABLE,
            message: err.to_string(),
        }
    }
}

/// Rendered output and the exit code it should end with.
struct Rendered {
    text: String,
    code: i32,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Self {
            text,
            code: EXIT_OK,
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&config).and_then(|r| emit(&config, &r.text).map(|()| r.code)) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("sqdist: {}", f.message);
            f.code
        }
    }
}

fn execute(config: &CliConfig) -> Result<Rendered, Failure> {
    match &config.command {
        Command::Info { sizes } => info(sizes, config.format.unwrap_or(Format::Pretty)),
        Command::Matrix {
            kind,
            sizes,
            method,
        } => {
            let m = build_matrix(*kind, *method, sizes)?;
            Ok(Rendered::ok(render_matrix(
                &m,
                config.format.unwrap_or(Format::Csv),
            )))
        }
        Command::Verify { sizes } => verify(sizes, config.format.unwrap_or(Format::Pretty)),
        Command::Scan { max_n } => {
            require_json_lines(config.format)?;
            let reports = scan(*max_n, workers()?);
            let summary = ScanSummary::from_reports(&reports);
            let mut text = String::new();
            for r in &reports {
                push_line(&mut text, ReportLine::Verification(r).to_json_line());
            }
            push_line(&mut text, ReportLine::ScanSummary(&summary).to_json_line());
            let code = if summary.checks_failed == 0 {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(Rendered { text, code })
        }
        Command::Conjecture { max_n } => {
            require_json_lines(config.format)?;
            let reports = conjecture_scan_with(*max_n, workers()?);
            let summary = ConjectureSummary::from_reports(*max_n, &reports);
            let mut text = String::new();
            for r in &reports {
                push_line(&mut text, ReportLine::Conjecture(r).to_json_line());
            }
            push_line(
                &mut text,
                ReportLine::ConjectureSummary(&summary).to_json_line(),
            );
            Ok(Rendered::ok(text))
        }
    }
}

fn push_line(text: &mut String, line: String) {
    text.push_str(&line);
    text.push('\n');
}

fn require_json_lines(format: Option<Format>) -> Result<(), Failure> {
    match format {
        None | Some(Format::Json) => Ok(()),
        Some(_) => Err(Failure::usage(
            "scans only emit JSON lines; use --format json or omit it",
        )),
    }
}

/// `None` means the default pool, sized to the available parallelism.
fn workers() -> Result<Option<usize>, Failure> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(w) if w > 0 => Ok(Some(w)),
            _ => Err(Failure::usage(format!(
                "{WORKERS_ENV} must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn info(p: &Partition, format: Format) -> Result<Rendered, Failure> {
    let bundle = compute_bundle(p);
    let class = classify(p);
    let det = det_delta_closed(p);
    let cof = cof_delta_closed(p);
    let lam = lambda(p).ok().map(|l| fraction(&l.0));
    let text = match format {
        Format::Json => {
            let value = serde_json::json!({
                "partition": p,
                "invariants": bundle,
                "det": det.to_string(),
                "cof": cof.to_string(),
                "lambda": lam,
                "classification": class,
            });
            let mut s = serde_json::to_string_pretty(&value).expect("info serializes");
            s.push('\n');
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "partition {p}");
            let _ = writeln!(s, "n={} t={} h={} s={}", p.n(), p.t(), p.h(), p.s());
            let _ = writeln!(s, "Φ={} Ψ={} Θ={}", bundle.phi, bundle.psi, bundle.theta);
            let _ = writeln!(s, "det={det}");
            let _ = writeln!(s, "cof={cof}");
            let _ = writeln!(s, "λ={}", lam.as_deref().unwrap_or("undefined"));
            let _ = writeln!(s, "det_zero={} cof_zero={}", class.det_zero, class.cof_zero);
            let _ = writeln!(
                s,
                "margin={} cof_margin={}",
                fraction(&class.margin),
                fraction(&class.cof_margin)
            );
            s
        }
        Format::Csv => return Err(Failure::usage("csv output is only available for `matrix`")),
    };
    Ok(Rendered::ok(text))
}

fn build_matrix(
    kind: MatrixKind,
    method: InverseMethod,
    p: &Partition,
) -> Result<RationalMatrix, Failure> {
    let built = match kind {
        MatrixKind::Delta => Ok(build_delta(p)),
        MatrixKind::Laplacian => build_laplacian_like(p),
        MatrixKind::Inverse => match method {
            InverseMethod::Auto => {
                if classify(p).cof_zero {
                    inverse_block_form(p)
                } else {
                    inverse_rank_one(p)
                }
            }
            InverseMethod::RankOne => inverse_rank_one(p),
            InverseMethod::Block => inverse_block_form(p),
            InverseMethod::Gauss => inverse_gauss(&build_delta(p)),
        },
    };
    built.map_err(Failure::inapplicable)
}

fn render_matrix(m: &RationalMatrix, format: Format) -> String {
    match format {
        Format::Csv => matrix_csv(m),
        Format::Pretty => matrix_pretty(m),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&matrix_json(m)).expect("matrix serializes");
            s.push('\n');
            s
        }
    }
}

fn verify(p: &Partition, format: Format) -> Result<Rendered, Failure> {
    let report = verify_partition(p);
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "partition {p}");
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{status} {}: {}", c.name, c.witness);
            }
            for k in &report.skipped {
                let reason = serde_json::to_value(k.reason).expect("reason serializes");
                let _ = writeln!(
                    s,
                    "SKIP {}: {}",
                    k.name,
                    reason.as_str().unwrap_or_default()
                );
            }
            let failed = report.failures().count();
            let _ = writeln!(
                s,
                "{} passed, {failed} failed, {} skipped",
                report.checks.len() - failed,
                report.skipped.len()
            );
            s
        }
        Format::Csv => return Err(Failure::usage("csv output is only available for `matrix`")),
    };
    let code = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Ok(Rendered { text, code })
}

fn emit(config: &CliConfig, text: &str) -> Result<(), Failure> {
    let io_failure = |e: io::Error| Failure::usage(format!("cannot write output: {e}"));
    match &config.output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Failure::usage(format!("cannot create {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            w.write_all(text.as_bytes()).map_err(io_failure)?;
            w.flush().map_err(io_failure)
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(io_failure)?;
            out.flush().map_err(io_failure)
        }
    }
}
