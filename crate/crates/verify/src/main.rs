use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use zeta_core::EvalConfig;
use zeta_verify::eval::{self, EvalArgs};
use zeta_verify::run::ENV_OUT_DIR;
use zeta_verify::{registry, run_suite, Axis, FileConfig, Overrides, ReportFile, SuiteInfo, SuiteSpec, VerifyError};

#[derive(Parser)]
#[command(name = "zeta-verify", version, about = "Numerical verification of zeta-function identities")]
struct Cli {
    /// TOML configuration with [defaults] and [suite.<id>] sections.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Worker threads (overrides ZETA_VERIFY_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval {
        /// zeta, zeta1, chi, gamma, B_N, a_n, q_n, S1, I_k or J_k.
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<f64>,
        #[arg(long = "T")]
        big_t: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long = "N")]
        big_n: Option<u64>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: ListFormat,
    },
    /// Run a registered suite over its grid.
    RunSuite {
        suite: String,
        /// Axis override, `name=a,b,c` or `name=min:max:count[:linear|geometric]`; repeatable.
        #[arg(long = "grid", value_name = "AXIS=SPEC")]
        grid: Vec<String>,
        /// Report file (default: stdout, or $ZETA_VERIFY_OUT_DIR/<suite>.<ext>).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: ReportFormat,
        #[arg(long)]
        tol_abs: Option<f64>,
        #[arg(long)]
        tol_rel: Option<f64>,
        /// Write 0 in the seconds column so reports are bitwise reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// List registered suites.
    ListSuites {
        #[arg(long, value_enum, default_value = "text")]
        format: ListFormat,
    },
}

fn parse_axis(text: &str) -> Result<(String, Axis), VerifyError> {
    let (name, spec) = text.split_once('=').ok_or_else(|| VerifyError::config(format!("--grid expects name=spec, got `{text}`")))?;
    Ok((name.trim().to_string(), Axis::parse(spec)?))
}

fn opt_complex(v: &Option<String>) -> Result<Option<num_complex::Complex64>, VerifyError> {
    v.as_deref().map(eval::parse_complex).transpose()
}

fn load_config(path: &Option<PathBuf>) -> Result<Option<FileConfig>, VerifyError> {
    path.as_deref().map(FileConfig::load).transpose()
}

fn eval_config(file: Option<&FileConfig>) -> EvalConfig {
    let mut cfg = EvalConfig::default();
    if let Some(f) = file {
        f.defaults.eval.apply(&mut cfg);
    }
    cfg
}

fn write_report(report: &ReportFile, format: ReportFormat, path: Option<&Path>) -> Result<(), VerifyError> {
    let sink: Box<dyn Write> = match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            Box::new(BufWriter::new(File::create(p)?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        ReportFormat::Csv => report.write_csv(sink),
        ReportFormat::Json => report.write_json(sink),
    }
}

enum Outcome {
    Ok,
    Breach,
}

fn run(cli: Cli) -> Result<Outcome, VerifyError> {
    let file = load_config(&cli.config)?;
    match cli.command {
        Command::ListSuites { format } => {
            let infos: Vec<SuiteInfo> = registry().iter().map(SuiteInfo::from).collect();
            let mut out = io::stdout().lock();
            match format {
                ListFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&infos)?)?,
                ListFormat::Text => {
                    for s in &infos {
                        let tol = match (s.tol_abs, s.tol_rel) {
                            (Some(a), Some(r)) => format!("abs {a:e} / rel {r:e}"),
                            (Some(a), None) => format!("abs {a:e}"),
                            (None, Some(r)) => format!("rel {r:e}"),
                            (None, None) => "none".into(),
                        };
                        writeln!(out, "{:<48} {:<20} {}", s.label, s.gate, tol)?;
                    }
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Eval { function, s, z, u, v, alpha, sigma, t, big_t, n, big_n, k, format } => {
            let args = EvalArgs { s: opt_complex(&s)?, z: opt_complex(&z)?, u: opt_complex(&u)?, v: opt_complex(&v)?, alpha, sigma, t, big_t, n, big_n, k };
            let value = eval::evaluate(&function, &args, &eval_config(file.as_ref()))?;
            match format {
                ListFormat::Text => println!("{value}"),
                ListFormat::Json => println!("{}", serde_json::to_string(&value)?),
            }
            Ok(Outcome::Ok)
        }
        Command::RunSuite { suite, grid, out, format, tol_abs, tol_rel, no_timing } => {
            let ov = Overrides {
                grid: grid.iter().map(|g| parse_axis(g)).collect::<Result<_, _>>()?,
                tol_abs,
                tol_rel,
                threads: cli.threads,
                no_timing,
            };
            let spec = SuiteSpec::resolve(&suite, file.as_ref(), &ov)?;
            let report = run_suite(&spec)?;
            let ext = match format {
                ReportFormat::Csv => "csv",
                ReportFormat::Json => "json",
            };
            let path = out.or_else(|| std::env::var_os(ENV_OUT_DIR).map(|d| PathBuf::from(d).join(format!("{}.{ext}", spec.suite_id))));
            write_report(&report, format, path.as_deref())?;
            eprintln!("{}: {} rows, {} outside tolerance", report.header.label, report.rows.len(), report.failures());
            Ok(if report.all_pass() { Outcome::Ok } else { Outcome::Breach })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Breach) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_config() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
