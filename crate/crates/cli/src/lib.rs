//! The `cyclo` command-line tool.
//!
//! Exit codes: 0 when a computation succeeds or every check passes, 1 when a
//! sweep finds a counterexample, 2 on usage and domain errors.

pub mod fixtures;
pub mod json;
pub mod parallel;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclo_core::cyclotomic::{cyclotomic_poly, deriv_at_1, deriv_ratio};
use cyclo_core::lehmer::{self, Route};
use cyclo_core::sweep::{Claim, SweepBounds, Verifier};
use cyclo_core::{ntkernel, Status, VerificationReport};

pub use fixtures::Fixtures;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `k` written by `--emit-fixtures`.
pub const FIXTURE_K_MAX: usize = 12;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] cyclo_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Parser)]
#[command(name = "cyclo", version, about = "Cyclotomic derivatives, Lehmer polynomials and exact verification sweeps")]
struct Cli {
    /// Write the s_k, F_k and Ω_m tables (k ≤ 12) as JSON to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    emit_fixtures: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Φ_N.
    Poly { n: u64 },
    /// Φ_N^(K)(1).
    Deriv { n: u64, k: usize },
    /// Φ_N^(K)(1) / Φ_N(1) as an exact rational.
    Ratio { n: u64, k: usize },
    /// s_K.
    Sk { k: usize },
    /// F_K.
    Fk {
        k: usize,
        #[arg(long, value_enum, default_value_t = RouteArg::Reconstruct)]
        route: RouteArg,
    },
    /// Ω_M.
    Omega { m: usize },
    /// V_N.
    Vn { n: usize },
    /// W_N.
    Wn { n: u64 },
    /// F_{K,N}(x) and whether it has integer coefficients.
    Fkn { k: usize, n: u64 },
    /// Jordan totient J_K(N).
    Totient { k: u32, n: u64 },
    /// Check a claim over a parameter range.
    Verify(VerifyArgs),
    /// Run every claim at its default range.
    Selftest(RunOpts),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RouteArg {
    Partition,
    Series,
    Reconstruct,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Partition => Route::Partition,
            RouteArg::Series => Route::Series,
            RouteArg::Reconstruct => Route::Reconstruction,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClaimArg {
    Lehmer,
    Conjecture,
    Integrality,
    Ak,
    Wmodp,
    Wexpansion,
    Wfactor,
    Routes,
}

impl From<ClaimArg> for Claim {
    fn from(c: ClaimArg) -> Self {
        match c {
            ClaimArg::Lehmer => Claim::Lehmer,
            ClaimArg::Conjecture => Claim::Conjecture,
            ClaimArg::Integrality => Claim::Integrality,
            ClaimArg::Ak => Claim::Ak,
            ClaimArg::Wmodp => Claim::WModP,
            ClaimArg::Wexpansion => Claim::WExpansion,
            ClaimArg::Wfactor => Claim::WFactorization,
            ClaimArg::Routes => Claim::Routes,
        }
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    claim: ClaimArg,
    #[arg(long)]
    n_min: Option<u64>,
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    m_max: Option<usize>,
    /// Read F_k from a fixture file instead of computing it.
    #[arg(long, value_name = "PATH")]
    fk_table: Option<PathBuf>,
    #[command(flatten)]
    opts: RunOpts,
}

#[derive(Debug, Args)]
struct RunOpts {
    /// Worker threads (default: $CYCLO_JOBS, else the number of CPUs).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: bool,
    /// Report elapsed_ms as 0 so output is reproducible.
    #[arg(long)]
    no_timing: bool,
}

/// Runs the tool with `argv` (including the program name), writing to the
/// process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`], with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(path) = &cli.emit_fixtures {
        Fixtures::compute(FIXTURE_K_MAX)?.write(path)?;
    }
    let Some(command) = cli.command else {
        if cli.emit_fixtures.is_some() {
            return Ok(EXIT_OK);
        }
        return Err(CliError::Usage("no command given; see `cyclo --help`".into()));
    };
    let text = match command {
        Command::Poly { n } => cyclotomic_poly(n)?.poly.to_string(),
        Command::Deriv { n, k } => deriv_at_1(n, k)?.to_string(),
        Command::Ratio { n, k } => deriv_ratio(n, k)?.to_string(),
        Command::Sk { k } => lehmer::s_poly(k)?.to_string(),
        Command::Fk { k, route } => f_by_route(k, route.into())?.to_string(),
        Command::Omega { m } => {
            if m == 0 {
                return Err(CliError::Usage("Ω_m is defined for m ≥ 1".into()));
            }
            lehmer::omega_poly(m)?.to_string()
        }
        Command::Vn { n } => lehmer::v_poly(n)?.to_string(),
        Command::Wn { n } => lehmer::w_poly(n)?.to_string(),
        Command::Fkn { k, n } => {
            let p = lehmer::f_kn_poly(k, n)?;
            format!("{p}\nintegral: {}", p.is_integral())
        }
        Command::Totient { k, n } => ntkernel::jordan_totient(k, n)?.to_string(),
        Command::Verify(args) => return verify(args, out),
        Command::Selftest(opts) => return selftest(opts, out),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    writeln!(out, "{text}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

/// `F_k` built along one route.
pub fn f_by_route(k: usize, route: Route) -> Result<cyclo_core::MultiPoly, CliError> {
    Ok(match route {
        Route::Partition => lehmer::f_poly_partition(k)?,
        Route::Series => lehmer::f_polys_series(k)?.swap_remove(k),
        Route::Reconstruction => lehmer::f_poly_reconstruct(k)?,
    })
}

fn default_jobs() -> usize {
    std::env::var("CYCLO_JOBS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&j| j >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn resolve_jobs(jobs: Option<usize>) -> Result<usize, CliError> {
    match jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(j) => Ok(j),
        None => Ok(default_jobs()),
    }
}

/// Bounds for `claim` with the given overrides, validated.
pub fn bounds_for(
    claim: Claim,
    n_min: Option<u64>,
    n_max: Option<u64>,
    k_max: Option<usize>,
    m_max: Option<usize>,
) -> Result<SweepBounds, CliError> {
    let mut b = claim.default_bounds();
    if n_min == Some(0) || n_max == Some(0) || k_max == Some(0) || m_max == Some(0) {
        return Err(CliError::Usage("range bounds must be at least 1".into()));
    }
    b.n_min = n_min.unwrap_or(b.n_min).max(claim.n_floor());
    b.n_max = n_max.unwrap_or(b.n_max);
    b.k_max = k_max.unwrap_or(b.k_max);
    b.m_max = m_max.unwrap_or(b.m_max);
    if claim.uses_n() && b.n_min > b.n_max {
        return Err(CliError::Usage(format!("empty range: n_min {} > n_max {}", b.n_min, b.n_max)));
    }
    Ok(b)
}

/// Runs one sweep and stamps its wall-clock time.
pub fn timed_sweep(
    verifier: &Verifier,
    claim: Claim,
    bounds: &SweepBounds,
    jobs: usize,
    timing: bool,
) -> Result<VerificationReport, CliError> {
    let start = Instant::now();
    let mut report = parallel::sweep(verifier, claim, bounds, jobs)?;
    if timing {
        report.set_elapsed_ms(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn load_verifier(path: Option<&Path>) -> Result<Verifier, CliError> {
    match path {
        Some(p) => Ok(Verifier::with_f_table(Fixtures::read(p)?.f_table()?)),
        None => Ok(Verifier::new()),
    }
}

fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.status() == Status::Fail) {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let claim = Claim::from(args.claim);
    let bounds = bounds_for(claim, args.n_min, args.n_max, args.k_max, args.m_max)?;
    let jobs = resolve_jobs(args.opts.jobs)?;
    let verifier = load_verifier(args.fk_table.as_deref())?;
    let report = timed_sweep(&verifier, claim, &bounds, jobs, !args.opts.no_timing)?;
    let text = if args.opts.json { json::render_report(&report) } else { report.to_string() };
    emit(out, &text)?;
    Ok(exit_code(&[report]))
}

fn selftest(opts: RunOpts, out: &mut dyn Write) -> Result<i32, CliError> {
    let jobs = resolve_jobs(opts.jobs)?;
    let verifier = Verifier::new();
    let mut reports = Vec::new();
    for claim in Claim::ALL {
        let bounds = claim.default_bounds();
        let report = timed_sweep(&verifier, claim, &bounds, jobs, !opts.no_timing)?;
        if !opts.json {
            emit(out, &report.to_string())?;
        }
        reports.push(report);
    }
    if opts.json {
        emit(out, &json::render_reports(&reports))?;
    }
    Ok(exit_code(&reports))
}
