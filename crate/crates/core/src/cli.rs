//! Command-line front end: coefficient dumps and verification suites with
//! plain, JSON, and CSV output and CI-friendly exit codes (0 success,
//! 1 identity failure, 2 bad arguments).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalan::{catalan_series, fuss_catalan_series, u_power_series_lambda, Lambda};
use crate::combinatorics::StirlingTriangle;
use crate::identities::{
    self, knuth_rhs, log_pow_direct, log_pow_harmonic, ExpansionRequest, VerificationReport,
    VerifyOptions,
};
use crate::series::Series;

#[derive(Parser)]
#[command(
    name = "catalan-log",
    version,
    about = "Exact coefficients of powers of log of the (generalized) Catalan generating function, with cross-route verification"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print coefficients 0..=order of a series.
    Coeffs(CoeffsArgs),
    /// Run identity verification suites; exits 1 on any failure.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CoeffsArgs {
    /// Which series to expand.
    #[arg(long, value_enum)]
    kind: SeriesKind,
    /// Exponent p of (log C)^p; for u-power, the power m of u.
    #[arg(long, default_value_t = 1)]
    p: u32,
    /// Branching parameter of u = z(1+u)^lambda; 2 is the Catalan case.
    #[arg(long, default_value_t = 2)]
    lambda: u32,
    /// Truncation order N; coefficients 0..=N are printed.
    #[arg(long, default_value_t = 20)]
    order: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Also write the output (same bytes as stdout) to this file.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Largest exponent p in the route sweeps.
    #[arg(long, default_value_t = 5)]
    pmax: u32,
    /// Comma-separated lambda values for the route sweeps.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    lambda: Vec<u32>,
    /// Truncation order for the series comparisons.
    #[arg(long, default_value_t = 20)]
    order: usize,
    /// Upper n for the alternating-sum and grunberg sweeps.
    #[arg(long, default_value_t = 100)]
    nmax: usize,
    /// Upper r for the grunberg sweep.
    #[arg(long, default_value_t = 8)]
    rmax: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Also write the output (same bytes as stdout) to this file.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Self-test hook: add 1 to Stirling entry c(N,K) before verifying,
    /// which must make the affected suites fail.
    #[arg(long, value_name = "N,K", hide = true)]
    corrupt_stirling: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Catalan,
    FussCatalan,
    UPower,
    LogPowDirect,
    LogPowStirling,
    LogPowHarmonic,
    KnuthRhs,
}

impl SeriesKind {
    fn name(self) -> &'static str {
        match self {
            SeriesKind::Catalan => "catalan",
            SeriesKind::FussCatalan => "fuss-catalan",
            SeriesKind::UPower => "u-power",
            SeriesKind::LogPowDirect => "log-pow-direct",
            SeriesKind::LogPowStirling => "log-pow-stirling",
            SeriesKind::LogPowHarmonic => "log-pow-harmonic",
            SeriesKind::KnuthRhs => "knuth-rhs",
        }
    }

    fn uses_p(self) -> bool {
        !matches!(self, SeriesKind::Catalan | SeriesKind::FussCatalan | SeriesKind::KnuthRhs)
    }

    fn uses_lambda(self) -> bool {
        !matches!(self, SeriesKind::Catalan | SeriesKind::KnuthRhs)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Routes,
    Knuth,
    Alternating,
    Grunberg,
    FunctionalEquation,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::All => "all",
            SuiteArg::Routes => "routes",
            SuiteArg::Knuth => "knuth",
            SuiteArg::Alternating => "alternating",
            SuiteArg::Grunberg => "grunberg",
            SuiteArg::FunctionalEquation => "functional-equation",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Json,
    Csv,
}

/// JSON schema of `coeffs`: keys in this fixed order, rationals as
/// lowest-terms strings.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CoeffsJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u32>,
    pub order: usize,
    pub coefficients: Vec<String>,
}

/// JSON schema of `verify`.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct VerifyJson {
    pub suite: String,
    pub reports: Vec<ReportJson>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ReportJson {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FailureJson>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct FailureJson {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Coeffs(args) => run_coeffs(&args),
        Command::Verify(args) => run_verify(&args),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn emit(text: &str, output: &Option<PathBuf>) -> ExitCode {
    print!("{text}");
    if let Some(path) = output {
        if let Err(err) = std::fs::write(path, text) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::SUCCESS
}

fn run_coeffs(args: &CoeffsArgs) -> ExitCode {
    let lambda = match Lambda::new(args.lambda) {
        Ok(l) => l,
        Err(_) => return usage_error("--lambda must be a positive integer"),
    };
    let series = match args.kind {
        SeriesKind::Catalan => catalan_series(args.order),
        SeriesKind::FussCatalan => fuss_catalan_series(lambda, args.order),
        SeriesKind::UPower => u_power_series_lambda(args.p, lambda, args.order),
        SeriesKind::LogPowDirect => log_pow_direct(ExpansionRequest::new(args.p, lambda, args.order)),
        SeriesKind::LogPowStirling => {
            identities::log_pow_stirling(ExpansionRequest::new(args.p, lambda, args.order))
        }
        SeriesKind::LogPowHarmonic => {
            match log_pow_harmonic(ExpansionRequest::new(args.p, lambda, args.order)) {
                Ok(series) => series,
                Err(err) => return usage_error(&err.to_string()),
            }
        }
        SeriesKind::KnuthRhs => knuth_rhs(args.order),
    };
    let text = render_coeffs(args, &series);
    emit(&text, &args.output)
}

fn render_coeffs(args: &CoeffsArgs, series: &Series) -> String {
    let mut text = String::new();
    match args.format {
        OutputFormat::Plain => {
            for (n, coeff) in series.coeffs().iter().enumerate() {
                writeln!(text, "{n}: {coeff}").unwrap();
            }
        }
        OutputFormat::Csv => {
            writeln!(text, "n,coefficient").unwrap();
            for (n, coeff) in series.coeffs().iter().enumerate() {
                writeln!(text, "{n},{coeff}").unwrap();
            }
        }
        OutputFormat::Json => {
            let doc = CoeffsJson {
                kind: args.kind.name().to_string(),
                p: args.kind.uses_p().then_some(args.p),
                lambda: args.kind.uses_lambda().then_some(args.lambda),
                order: args.order,
                coefficients: series.coeffs().iter().map(|c| c.to_string()).collect(),
            };
            writeln!(text, "{}", serde_json::to_string(&doc).unwrap()).unwrap();
        }
    }
    text
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    let mut lambdas = Vec::new();
    for &value in &args.lambda {
        match Lambda::new(value) {
            Ok(l) => lambdas.push(l),
            Err(_) => return usage_error("--lambda values must be positive integers"),
        }
    }
    if lambdas.is_empty() {
        return usage_error("--lambda needs at least one value");
    }
    if args.nmax < 2 {
        return usage_error("--nmax must be at least 2");
    }
    let opts = VerifyOptions {
        pmax: args.pmax,
        lambdas,
        order: args.order,
        nmax: args.nmax,
        rmax: args.rmax,
    };

    let mut triangle = StirlingTriangle::new(opts.required_stirling_rows());
    if let Some(spec) = &args.corrupt_stirling {
        let parsed: Option<(usize, usize)> = spec
            .split_once(',')
            .and_then(|(n, k)| Some((n.trim().parse().ok()?, k.trim().parse().ok()?)));
        match parsed {
            Some((n, k)) if n <= triangle.nmax() && k <= n => triangle.perturb(n, k),
            _ => return usage_error("--corrupt-stirling expects N,K within the table"),
        }
    }

    let reports = match args.suite {
        SuiteArg::All => identities::verify_all(&opts, &triangle),
        SuiteArg::Routes => identities::verify_routes(&opts, &triangle),
        SuiteArg::Knuth => identities::verify_knuth(&opts, &triangle),
        SuiteArg::Alternating => vec![identities::alternating_identity_check(opts.nmax)],
        SuiteArg::Grunberg => identities::verify_grunberg(opts.nmax, opts.rmax, &triangle),
        SuiteArg::FunctionalEquation => identities::verify_functional_equation_suite(&opts),
    };

    let all_passed = reports.iter().all(|r| r.passed);
    let text = render_reports(args.suite, &reports, args.format);
    let emit_code = emit(&text, &args.output);
    if emit_code != ExitCode::SUCCESS {
        return emit_code;
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

pub fn reports_to_json(suite_name: &str, reports: &[VerificationReport]) -> String {
    let doc = VerifyJson {
        suite: suite_name.to_string(),
        reports: reports
            .iter()
            .map(|r| ReportJson {
                name: r.name.clone(),
                passed: r.passed,
                first_failure: r.first_failure.as_ref().map(|f| FailureJson {
                    params: f.params.clone(),
                    lhs: f.lhs.clone(),
                    rhs: f.rhs.clone(),
                }),
            })
            .collect(),
    };
    serde_json::to_string(&doc).unwrap()
}

fn render_reports(suite: SuiteArg, reports: &[VerificationReport], format: OutputFormat) -> String {
    let mut text = String::new();
    match format {
        OutputFormat::Plain => {
            for report in reports {
                let status = if report.passed { "PASS" } else { "FAIL" };
                writeln!(text, "{status} {} ({})", report.name, report.range).unwrap();
                if let Some(failure) = &report.first_failure {
                    writeln!(
                        text,
                        "  first failure at {}: lhs={} rhs={}",
                        failure.params, failure.lhs, failure.rhs
                    )
                    .unwrap();
                }
            }
        }
        OutputFormat::Csv => {
            writeln!(text, "name,passed,params,lhs,rhs").unwrap();
            for report in reports {
                match &report.first_failure {
                    Some(f) => writeln!(
                        text,
                        "{},{},{},{},{}",
                        report.name, report.passed, f.params.replace(',', ";"), f.lhs, f.rhs
                    )
                    .unwrap(),
                    None => writeln!(text, "{},{},,,", report.name, report.passed).unwrap(),
                }
            }
        }
        OutputFormat::Json => {
            writeln!(text, "{}", reports_to_json(suite.name(), reports)).unwrap();
        }
    }
    text
}
