//! Command-line front end: `bounds`, `sweep` and `verify`.
//!
//! Exit status is 0 on success, 1 for argument errors, 2 when a
//! verification check fails and 3 for I/O errors.

pub mod render;
pub mod sweep;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{qubit_lower_audit, report, ChannelKind};
use render::{render_json, render_text};
use sweep::{GridSpec, Range, SweepSpec, Variable};
use verify::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ARGUMENT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Argument(String),
    #[error(transparent)]
    Core(#[from] crate::Error),
    #[error("{context}: {source}")]
    Io { context: String, source: io::Error },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Argument(_) | CliError::Core(_) => EXIT_ARGUMENT,
            CliError::Io { .. } => EXIT_IO,
            CliError::Verification(_) => EXIT_VERIFY,
        }
    }
}

fn io_error(context: impl Into<String>) -> impl FnOnce(io::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Io { context, source }
}

#[derive(Parser, Debug)]
#[command(name = "tacap", version, about = "Quantum capacity bounds for qubit and Gaussian thermal attenuators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lower and upper bounds at one parameter point.
    Bounds(BoundsArgs),
    /// Bounds along a parameter range, written as CSV.
    Sweep(SweepArgs),
    /// Run the seeded property suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Qubit,
    Gaussian,
}

impl From<KindArg> for ChannelKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Qubit => ChannelKind::Qubit,
            KindArg::Gaussian => ChannelKind::Gaussian,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(value_enum)]
    kind: KindArg,
    /// Transmissivity in [0, 1].
    #[arg(long, allow_hyphen_values = true)]
    eta: f64,
    /// Thermal photon number; at most 1/2 for the qubit channel.
    #[arg(long, allow_hyphen_values = true)]
    noise: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Also maximize over coherent inputs on a (p, |gamma|) grid (qubit only, slow).
    #[arg(long)]
    audit: bool,
    #[arg(long, default_value_t = 200, requires = "audit")]
    audit_steps: usize,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(value_enum)]
    kind: KindArg,
    /// Range as var=start:stop:step with var eta or noise; give both for a gap grid.
    #[arg(long = "sweep", required = true, value_name = "VAR=START:STOP:STEP")]
    sweeps: Vec<String>,
    /// Fixed transmissivity when sweeping noise.
    #[arg(long, allow_hyphen_values = true)]
    eta: Option<f64>,
    /// Fixed noise when sweeping eta.
    #[arg(long, allow_hyphen_values = true)]
    noise: Option<f64>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Linalg,
    Qubit,
    Gaussian,
    Bounds,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum, default_value = "all")]
    suite: SuiteArg,
}

fn check_eta(eta: f64) -> Result<(), CliError> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(CliError::Argument(format!("--eta must lie in [0, 1], got {eta}")));
    }
    Ok(())
}

fn check_noise(kind: ChannelKind, noise: f64) -> Result<(), CliError> {
    let ok = match kind {
        ChannelKind::Qubit => (0.0..=0.5).contains(&noise),
        ChannelKind::Gaussian => noise >= 0.0 && noise.is_finite(),
    };
    if !ok {
        let range = if kind == ChannelKind::Qubit { "[0, 0.5]" } else { "[0, inf)" };
        return Err(CliError::Argument(format!("--noise must lie in {range} for the {kind} channel, got {noise}")));
    }
    Ok(())
}

fn check_range(kind: ChannelKind, r: &Range) -> Result<(), CliError> {
    let (lo, hi) = (r.start, r.points().last().copied().unwrap_or(r.start));
    match r.variable {
        Variable::Eta => check_eta(lo).and(check_eta(hi)),
        Variable::Noise => check_noise(kind, lo).and(check_noise(kind, hi)),
    }
    .map_err(|e| CliError::Argument(format!("--sweep {}: {e}", r.variable)))
}

fn cmd_bounds(a: &BoundsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let kind = ChannelKind::from(a.kind);
    check_eta(a.eta)?;
    check_noise(kind, a.noise)?;
    let r = report(kind, a.eta, a.noise)?;
    let audit = if a.audit {
        if kind != ChannelKind::Qubit {
            return Err(CliError::Argument("--audit applies to the qubit channel only".into()));
        }
        if a.audit_steps == 0 {
            return Err(CliError::Argument("--audit-steps must be positive".into()));
        }
        Some((a.audit_steps, qubit_lower_audit(a.eta, a.noise, a.audit_steps)?))
    } else {
        None
    };
    let text = match a.format {
        Format::Json => render_json(&r, audit),
        Format::Text => render_text(&r, audit),
    };
    out.write_all(text.as_bytes()).map_err(io_error("writing report"))
}

fn open_output(path: Option<&Path>, stdout: &mut dyn Write, body: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let ctx = format!("--out {}", p.display());
            let file = File::create(p).map_err(io_error(ctx.clone()))?;
            let mut w = BufWriter::new(file);
            w.write_all(body).and_then(|_| w.flush()).map_err(io_error(ctx))
        }
        None => stdout.write_all(body).map_err(io_error("writing to standard output")),
    }
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let kind = ChannelKind::from(a.kind);
    let ranges: Vec<Range> = a.sweeps.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    for r in &ranges {
        check_range(kind, r)?;
    }
    let mut body = Vec::new();
    match ranges.as_slice() {
        [range] => {
            let fixed = match range.variable {
                Variable::Eta => {
                    let n =
                        a.noise.ok_or_else(|| CliError::Argument("--noise is required when sweeping eta".into()))?;
                    check_noise(kind, n)?;
                    if a.eta.is_some() {
                        return Err(CliError::Argument("--eta conflicts with --sweep eta=...".into()));
                    }
                    n
                }
                Variable::Noise => {
                    let e = a.eta.ok_or_else(|| CliError::Argument("--eta is required when sweeping noise".into()))?;
                    check_eta(e)?;
                    if a.noise.is_some() {
                        return Err(CliError::Argument("--noise conflicts with --sweep noise=...".into()));
                    }
                    e
                }
            };
            let rows = SweepSpec::new(kind, *range, fixed)?.evaluate()?;
            sweep::write_sweep(kind, &rows, &mut body).map_err(io_error("formatting CSV"))?;
        }
        [r1, r2] => {
            let (eta, noise) = match (r1.variable, r2.variable) {
                (Variable::Eta, Variable::Noise) => (*r1, *r2),
                (Variable::Noise, Variable::Eta) => (*r2, *r1),
                _ => return Err(CliError::Argument("two --sweep ranges must cover eta and noise".into())),
            };
            if a.eta.is_some() || a.noise.is_some() {
                return Err(CliError::Argument("--eta/--noise conflict with a two-variable sweep".into()));
            }
            let cells = eta.len() as f64 * noise.len() as f64;
            if cells > sweep::MAX_POINTS {
                return Err(CliError::Argument(format!("--sweep grid has {cells} points, limit is 1e6")));
            }
            let rows = GridSpec { kind, eta, noise }.evaluate()?;
            sweep::write_grid(&rows, &mut body).map_err(io_error("formatting CSV"))?;
        }
        _ => return Err(CliError::Argument("--sweep may be given once or twice".into())),
    }
    open_output(a.out.as_deref(), out, &body)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let suite = match a.suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Linalg => Suite::Linalg,
        SuiteArg::Qubit => Suite::Qubit,
        SuiteArg::Gaussian => Suite::Gaussian,
        SuiteArg::Bounds => Suite::Bounds,
    };
    let mut out = out;
    let checks = verify::run_suite(suite, &mut out).map_err(io_error("writing verification report"))?;
    match checks.iter().find(|c| !c.passed()) {
        Some(c) => Err(CliError::Verification(format!(
            "{}/{}: {}",
            c.suite,
            c.name,
            c.counterexample.as_deref().unwrap_or("")
        ))),
        None => writeln!(out, "all {} checks passed", checks.len()).map_err(io_error("writing verification report")),
    }
}

/// Parse `args` (program name first), run the command against the given
/// streams and return the exit status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ARGUMENT,
            };
            let rendered = e.render().to_string();
            let _ =
                if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Bounds(a) => cmd_bounds(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point used by the binary.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = run_with(args, &mut out, &mut io::stderr());
    let _ = out.flush();
    code
}
