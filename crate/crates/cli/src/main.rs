//! `dchain`: rational extensions, dressing chains and Painlevé solutions.

mod commands;
mod job;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dchain_core::Error;

use job::JobFlags;
use report::{ErrorReport, Format, Render};

#[derive(Parser, Debug)]
#[command(name = "dchain", version, about = "Exact rational solutions of dressing chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List cyclic structures of a period and translation.
    Enum(EnumArgs),
    /// Build the chain solution of a cyclic structure.
    Build(JobArgs),
    /// Build and verify the chain equations exactly.
    Verify(JobArgs),
    /// Painlevé IV (period 3) or V (period 4) solutions.
    Painleve(JobArgs),
    /// Run the acceptance criteria.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EnumArgs {
    #[arg(long)]
    period: usize,
    #[arg(long)]
    shift: Option<usize>,
    #[arg(long, default_value_t = 2)]
    bound: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct JobArgs {
    #[arg(long)]
    period: usize,
    #[arg(long)]
    shift: Option<usize>,
    /// Even-period decomposition `p1,p2`.
    #[arg(long)]
    case: Option<String>,
    /// Okamoto lengths then `λ,μ` pairs, per slot for even periods.
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// Comma list of non-integer rationals.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Step order as indices into the default chain.
    #[arg(long)]
    perm: Option<String>,
    #[command(flatten)]
    output: Output,
}

impl JobArgs {
    fn flags(&self) -> JobFlags {
        JobFlags {
            period: self.period,
            shift: self.shift,
            case: self.case.clone(),
            params: self.params.clone(),
            alpha: self.alpha.clone(),
            perm: self.perm.clone(),
        }
    }
}

#[derive(Args, Debug)]
struct SelftestArgs {
    /// Run a single criterion.
    #[arg(long)]
    criterion: Option<String>,
    #[command(flatten)]
    output: Output,
}

enum Failure {
    Input(ErrorReport),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(ErrorReport::from(&e))
    }
}

fn emit<R: Render>(r: &R, output: &Output) -> Result<(), Failure> {
    let text = r.render(output.format)?;
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(ErrorReport::new("Io", format!("{}: {e}", path.display())))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Enum(a) => {
            let r = commands::enumerate(a.period, a.shift, a.bound)?;
            emit(&r, &a.output)?;
            Ok(true)
        }
        Command::Build(a) => {
            let r = commands::build(&job::resolve(&a.flags())?)?;
            emit(&r, &a.output)?;
            Ok(true)
        }
        Command::Verify(a) => {
            let r = commands::verify(&job::resolve(&a.flags())?)?;
            emit(&r, &a.output)?;
            Ok(r.passed)
        }
        Command::Painleve(a) => {
            let r = commands::painleve(&job::resolve(&a.flags())?)?;
            emit(&r, &a.output)?;
            Ok(r.passed)
        }
        Command::Selftest(a) => {
            let r = commands::selftest(a.criterion.as_deref())?;
            emit(&r, &a.output)?;
            Ok(r.passed)
        }
    }
}

fn fail(report: &ErrorReport) -> ExitCode {
    eprintln!("{}", serde_json::to_string(report).unwrap_or_default());
    ExitCode::from(2)
}

fn configure_threads() -> Result<(), ErrorReport> {
    let Ok(v) = std::env::var("DCHAIN_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| ErrorReport::new("Parse", format!("DCHAIN_THREADS must be a positive integer, got '{v}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| ErrorReport::new("Threads", e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&ErrorReport::new("Usage", e.to_string().trim_end())),
    };
    if let Err(r) = configure_threads() {
        return fail(&r);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(r)) => fail(&r),
    }
}
