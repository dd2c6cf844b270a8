use std::path::PathBuf;
use std::process::ExitCode;

use certhull::Fuel;
use certhull_cli::{run, Mode, RunConfig, RunError, ScalarKind};
use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};

/// Certified convex hulls of planar point sets.
///
/// Exit status: 0 success, 2 fuel exhausted, 3 bad input or usage,
/// 4 certificate verification failed.
#[derive(Parser, Debug)]
#[command(name = "certhull", version)]
struct Args {
    /// Point file: one `x y` pair per line, `#` comments.
    input: PathBuf,

    #[arg(long, value_enum, default_value_t = ModeArg::Constructive)]
    mode: ModeArg,

    /// Refinement budget for the oracle modes.
    #[arg(long, default_value_t = 10_000)]
    fuel: u64,

    /// Write the certificate here.
    #[arg(long, value_name = "PATH")]
    certificate: Option<PathBuf>,

    /// Write an SVG drawing here.
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = ScalarArg::Rational)]
    scalar: ScalarArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Constructive,
    Mpvee,
    Mp,
    OracleCheck,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScalarArg {
    Rational,
    Creal,
}

fn config(args: Args) -> Result<RunConfig, RunError> {
    let fuel = Fuel::new(args.fuel).ok_or_else(|| RunError::Usage("--fuel must be at least 1".into()))?;
    Ok(RunConfig {
        input_path: args.input,
        mode: match args.mode {
            ModeArg::Constructive => Mode::Constructive,
            ModeArg::Mpvee => Mode::Mpvee,
            ModeArg::Mp => Mode::Mp,
            ModeArg::OracleCheck => Mode::OracleCheck,
        },
        fuel,
        emit_certificate: args.certificate,
        emit_svg: args.svg,
        scalar_kind: match args.scalar {
            ScalarArg::Rational => ScalarKind::Rational,
            ScalarArg::Creal => ScalarKind::Creal,
        },
    })
}

fn write(path: &PathBuf, contents: &str) -> Result<(), RunError> {
    std::fs::write(path, contents).map_err(|source| RunError::Io {
        path: path.clone(),
        source,
    })
}

fn execute(args: Args) -> Result<String, RunError> {
    let config = config(args)?;
    let report = run(&config)?;
    if let (Some(path), Some(text)) = (&config.emit_certificate, &report.certificate_text) {
        write(path, text)?;
    }
    if let (Some(path), Some(text)) = (&config.emit_svg, &report.svg) {
        write(path, text)?;
    }
    Ok(report.stdout)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    match execute(args) {
        Ok(stdout) => {
            print!("{stdout}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("certhull: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
