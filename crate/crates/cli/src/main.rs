//! `zdg`: structure, spectra, verification and export for the zero-divisor
//! graphs of `Z_p[x]/<x^c>`.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage error,
//! 3 budget exceeded.

mod config;
mod export;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use zdg_core::numeric::{numeric_spectrum, symmetric_eigensolve_with_budget, DENSE_BUDGET};
use zdg_core::structure::{closed_form_report, structure_report};
use zdg_core::verify::QuotientFault;
use zdg_core::{
    a_alpha_spectrum, adjacency_spectrum, assemble_matrix, build_graph_by_rule, compare_spectra,
    distance_laplacian_spectrum, laplacian_spectrum, level_partition, signless_laplacian_spectrum, verify, CheckResult,
    CheckStatus, Error, LevelPartition, RingParams, Spectrum, VerifyOptions,
};

use config::{check_alpha, check_tolerance, AlphaArg, Format, MatrixArg, Method, RunConfig};

#[derive(Parser)]
#[command(
    name = "zdg",
    version,
    about = "Zero-divisor graphs of Z_p[x]/<x^c> and their spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Prime characteristic.
    #[arg(long)]
    p: u64,
    /// Nilpotency index of x; the ring is Z_p[x]/<x^c>.
    #[arg(long)]
    c: u32,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest graph order for explicit graphs and dense eigensolves.
    #[arg(long, env = "ZDG_DENSE_BUDGET", default_value_t = DENSE_BUDGET)]
    dense_budget: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Order, size, level table and structural invariants.
    Structure {
        #[command(flatten)]
        common: Common,
    },
    /// Eigenvalues with multiplicities.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "laplacian")]
        matrix: MatrixArg,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        /// Weight for a-alpha, as num/den or a decimal.
        #[arg(long)]
        alpha: Option<AlphaArg>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Runs every closed-form check against explicit computation.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Alpha values for the a-alpha checks (repeatable); defaults to 0, 1/4, 1/2, 3/4, 1.
        #[arg(long)]
        alpha: Vec<AlphaArg>,
        /// Shift quotient entry (ROW, COL), 0-based, by DELTA before checking.
        #[arg(long, hide = true, value_name = "ROW,COL,DELTA", value_parser = parse_fault)]
        corrupt_quotient: Option<QuotientFault>,
    },
    /// Writes the graph as an edge list or DOT.
    Export {
        #[command(flatten)]
        common: Common,
    },
}

fn parse_fault(s: &str) -> Result<QuotientFault, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [row, col, delta] = parts[..] else {
        return Err("expected ROW,COL,DELTA".into());
    };
    Ok(QuotientFault {
        row: row.parse().map_err(|e| format!("row: {e}"))?,
        col: col.parse().map_err(|e| format!("col: {e}"))?,
        delta: delta.parse().map_err(|e| format!("delta: {e}"))?,
    })
}

/// How a command ended, with whatever output it produced.
struct Outcome {
    output: String,
    code: u8,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TooLarge { .. } => 3,
        Error::NotPrime(_)
        | Error::ExponentTooSmall(_)
        | Error::OrderOverflow { .. }
        | Error::InvalidElement(_)
        | Error::LevelOutOfRange { .. }
        | Error::AlphaOutOfRange(_)
        | Error::InvalidTolerance(_)
        | Error::Domain(_) => 2,
        _ => 1,
    }
}

fn resolve_alpha(arg: &AlphaArg) -> Result<zdg_core::Rational, Failure> {
    if arg.from_decimal {
        eprintln!(
            "warning: alpha read as the exact decimal {}; pass num/den to give any other rational exactly",
            arg.value
        );
    }
    check_alpha(&arg.value).map_err(Failure::Usage)?;
    Ok(arg.value.clone())
}

fn config(common: &Common, default_format: Format, allowed: &[Format], command: &str) -> Result<RunConfig, Failure> {
    let params = RingParams::new(common.p, common.c)?;
    let format = common.format.unwrap_or(default_format);
    if !allowed.contains(&format) {
        return Err(Failure::Usage(format!("format {format} is not supported by {command}")));
    }
    Ok(RunConfig {
        params,
        alpha: None,
        matrix: MatrixArg::Laplacian,
        method: Method::Closed,
        tol: 1e-8,
        format,
        out: common.out.clone(),
        dense_budget: common.dense_budget,
    })
}

const REPORT_FORMATS: [Format; 3] = [Format::Json, Format::Csv, Format::Text];

fn run(cli: Cli) -> Result<(Outcome, Option<PathBuf>), Failure> {
    match cli.command {
        Command::Structure { common } => {
            let cfg = config(&common, Format::Json, &REPORT_FORMATS, "structure")?;
            let out = cfg.out.clone();
            Ok((cmd_structure(&cfg)?, out))
        }
        Command::Spectrum {
            common,
            matrix,
            method,
            alpha,
            tol,
        } => {
            let mut cfg = config(&common, Format::Json, &REPORT_FORMATS, "spectrum")?;
            cfg.matrix = matrix;
            cfg.method = method;
            cfg.tol = check_tolerance(tol).map_err(Failure::Usage)?;
            cfg.alpha = match (matrix, alpha) {
                (MatrixArg::AAlpha, Some(a)) => Some(resolve_alpha(&a)?),
                (MatrixArg::AAlpha, None) => {
                    return Err(Failure::Usage("--alpha is required with --matrix a-alpha".into()))
                }
                (_, Some(_)) => {
                    eprintln!("warning: --alpha only applies to --matrix a-alpha and is ignored");
                    None
                }
                (_, None) => None,
            };
            let out = cfg.out.clone();
            Ok((cmd_spectrum(&cfg)?, out))
        }
        Command::Verify {
            common,
            tol,
            alpha,
            corrupt_quotient,
        } => {
            let mut cfg = config(&common, Format::Json, &REPORT_FORMATS, "verify")?;
            cfg.tol = check_tolerance(tol).map_err(Failure::Usage)?;
            let mut opts = VerifyOptions {
                tol: cfg.tol,
                dense_budget: cfg.dense_budget,
                quotient_fault: corrupt_quotient,
                ..VerifyOptions::default()
            };
            if !alpha.is_empty() {
                opts.alphas = alpha.iter().map(resolve_alpha).collect::<Result<_, _>>()?;
            }
            let out = cfg.out.clone();
            Ok((cmd_verify(&cfg, &opts)?, out))
        }
        Command::Export { common } => {
            let cfg = config(&common, Format::Edgelist, &[Format::Edgelist, Format::Dot], "export")?;
            let out = cfg.out.clone();
            Ok((cmd_export(&cfg)?, out))
        }
    }
}

fn cmd_structure(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let lp = level_partition(&cfg.params);
    let report = if cfg.params.graph_order() <= cfg.dense_budget as u64 {
        structure_report(&build_graph_by_rule(&cfg.params)?, &lp)?
    } else {
        closed_form_report(&lp)
    };
    let checks = output::structure_checks(&report);
    let output = match cfg.format {
        Format::Json => {
            let method = if report.brute_force.is_some() { "both" } else { "closed" };
            output::envelope(
                &cfg.params,
                method,
                "report",
                output::structure_json(&lp, &report),
                None,
                checks.iter().map(output::check_json).collect(),
            )
        }
        Format::Csv => {
            let mut s = String::from("level,size,degree,kind\n");
            for l in lp.levels() {
                let kind = if lp.is_clique(l.index) { "clique" } else { "independent" };
                s.push_str(&format!("{},{},{},{kind}\n", l.index, l.size, l.degree));
            }
            s
        }
        _ => output::structure_text(&lp, &report),
    };
    Ok(Outcome { output, code: 0 })
}

fn closed_spectrum(cfg: &RunConfig, lp: &LevelPartition) -> Result<Spectrum, Error> {
    match cfg.matrix {
        MatrixArg::Adjacency => adjacency_spectrum(lp),
        MatrixArg::Laplacian => Ok(laplacian_spectrum(lp)),
        MatrixArg::Signless => signless_laplacian_spectrum(lp),
        MatrixArg::AAlpha => a_alpha_spectrum(lp, cfg.alpha.as_ref().expect("alpha checked")),
        MatrixArg::DistanceLaplacian => distance_laplacian_spectrum(lp),
    }
}

fn render_spectrum(cfg: &RunConfig, spec: &Spectrum, residual: Option<f64>, checks: &[(CheckResult, Value)]) -> String {
    match cfg.format {
        Format::Json => output::envelope(
            &cfg.params,
            &cfg.method.to_string(),
            "spectrum",
            output::spectrum_json(spec),
            residual,
            checks.iter().map(|(_, v)| v.clone()).collect(),
        ),
        Format::Csv => output::spectrum_csv(spec),
        _ => {
            let mut s = output::spectrum_text(spec, &cfg.params);
            let plain: Vec<CheckResult> = checks.iter().map(|(c, _)| c.clone()).collect();
            s.push_str(&output::checks_text(&plain));
            s
        }
    }
}

fn cmd_spectrum(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let lp = level_partition(&cfg.params);
    let closed = closed_spectrum(cfg, &lp)?;
    if cfg.method == Method::Closed {
        let output = render_spectrum(cfg, &closed, closed.residual_bound, &[]);
        return Ok(Outcome { output, code: 0 });
    }

    let n = cfg.params.graph_order();
    if n > cfg.dense_budget as u64 {
        eprintln!(
            "error: order {n} exceeds the dense budget {}; emitting the closed-form spectrum only",
            cfg.dense_budget
        );
        let skipped = CheckResult {
            name: "dense-eigensolve".into(),
            status: CheckStatus::Skipped,
            detail: format!("order {n} exceeds the dense budget {}", cfg.dense_budget),
        };
        let v = output::check_json(&skipped);
        let output = render_spectrum(cfg, &closed, closed.residual_bound, &[(skipped, v)]);
        return Ok(Outcome { output, code: 3 });
    }

    let g = build_graph_by_rule(&cfg.params)?;
    let m = assemble_matrix(&g, cfg.matrix_kind())?;
    let numeric = symmetric_eigensolve_with_budget(&m, cfg.tol, cfg.dense_budget)?;
    if cfg.method == Method::Dense {
        let spec = numeric_spectrum(closed.kind, &numeric);
        let output = render_spectrum(cfg, &spec, Some(numeric.residual_bound), &[]);
        return Ok(Outcome { output, code: 0 });
    }

    let report = compare_spectra(&closed, &numeric, cfg.tol)?;
    let check = output::comparison_check(format!("closed-vs-dense-{}", closed.kind), &report);
    let code = if report.passed { 0 } else { 1 };
    if !report.passed {
        eprintln!("closed-vs-dense-{} failed: {}", closed.kind, check.0.detail);
    }
    let residual = Some(numeric.residual_bound.max(closed.residual_bound.unwrap_or(0.0)));
    let output = render_spectrum(cfg, &closed, residual, &[check]);
    Ok(Outcome { output, code })
}

fn cmd_verify(cfg: &RunConfig, opts: &VerifyOptions) -> Result<Outcome, Failure> {
    let report = verify(&cfg.params, opts)?;
    let output = match cfg.format {
        Format::Json => output::envelope(
            &cfg.params,
            "both",
            "report",
            output::verify_json(&report),
            report.residual_bound,
            report.checks.iter().map(output::check_json).collect(),
        ),
        Format::Csv => output::checks_csv(&report.checks),
        _ => output::checks_text(&report.checks),
    };
    let code = if !report.passed() {
        for c in report.failures() {
            eprintln!("check failed: {}: {}", c.name, c.detail);
        }
        1
    } else if report.order > opts.dense_budget as u64 {
        eprintln!(
            "error: order {} exceeds the dense budget {}; only quotient-level checks ran",
            report.order, opts.dense_budget
        );
        3
    } else {
        0
    };
    Ok(Outcome { output, code })
}

fn cmd_export(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let g = build_graph_by_rule(&cfg.params)?;
    let output = match cfg.format {
        Format::Dot => export::dot(&g),
        _ => export::edgelist(&g),
    };
    Ok(Outcome { output, code: 0 })
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((outcome, out)) => {
            if let Err(e) = emit(&outcome.output, out.as_ref()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
