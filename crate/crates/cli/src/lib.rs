//! Command-line front end for `motivic-core`: model files, builtin models,
//! series reports and the randomized identity suites.

pub mod args;
pub mod builtins;
pub mod commands;
pub mod error;
pub mod model_file;
pub mod report;
pub mod verify;

pub use args::{Cli, Command};
pub use error::CliError;
pub use report::SeriesReport;

/// Result of one invocation: a series report, or a model file for `model`.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Report(SeriesReport),
    Model(String),
}

impl Output {
    pub fn render(&self, pretty: bool) -> String {
        match self {
            Output::Report(r) if pretty => r.to_table(),
            Output::Report(r) => r.to_json(),
            Output::Model(m) => m.clone(),
        }
    }
}

/// Runs one parsed invocation.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    Ok(match &cli.command {
        Command::Zeta(a) => Output::Report(commands::zeta(a)?),
        Command::Exponents(a) => Output::Report(commands::exponents(a)?),
        Command::Classes(a) => Output::Report(commands::classes(a)?),
        Command::Verify(a) => Output::Report(commands::verify(a)?),
        Command::Model(a) => Output::Model(commands::model(a)?),
    })
}

/// Process exit code for a successful run: 1 when a `verify` report has
/// failures, 0 otherwise.
pub fn exit_code(cli: &Cli, out: &Output) -> i32 {
    match (&cli.command, out) {
        (Command::Verify(_), Output::Report(r)) if r.failures() > 0 => CliError::VerifyFailed(r.failures()).exit_code(),
        _ => 0,
    }
}
