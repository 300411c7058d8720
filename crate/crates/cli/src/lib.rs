//! Command-line front end for the LG-beam field library: radial profiles,
//! waist sweeps, transverse field maps and the on-axis comparison report,
//! emitted as CSV or JSON with deterministic bytes.

pub mod args;
pub mod output;
pub mod plan;
pub mod report;
pub mod run;

use clap::Parser;

/// Process exit codes: 0 success, 1 IO failure, 2 invalid arguments,
/// 3 tolerance failure under `--strict`.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("tolerance failure: {0}")]
    Tolerance(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Tolerance(_) => 3,
        }
    }
}

/// Number of worker threads from `SPIRALFIELD_THREADS`; `None` leaves the
/// choice to the runtime.
fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var("SPIRALFIELD_THREADS") {
        Ok(v) => {
            let n: usize = v
                .parse()
                .map_err(|_| CliError::Usage(format!("SPIRALFIELD_THREADS={v} is not a number")))?;
            if n == 0 {
                return Err(CliError::Usage(
                    "SPIRALFIELD_THREADS must be at least 1".into(),
                ));
            }
            Ok(Some(n))
        }
        Err(_) => Ok(None),
    }
}

/// Parses arguments, configures the thread pool and dispatches; returns
/// the process exit code.
pub fn execute() -> i32 {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match try_execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn try_execute(cli: args::Cli) -> Result<(), CliError> {
    if let Some(n) = thread_cap()? {
        // A second build attempt (e.g. in tests calling this twice) is
        // harmless: the pool is process-global and already sized.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match cli.command {
        args::Command::RadialProfile(a) => run::radial_profile(&plan::radial_plan(&a)?),
        args::Command::RatioSweep(a) => run::ratio_sweep(&plan::ratio_plan(&a)?),
        args::Command::FieldMap(a) => run::field_map(&plan::map_plan(&a)?),
        args::Command::OnAxisReport(a) => report::on_axis_report(&a),
    }
}
