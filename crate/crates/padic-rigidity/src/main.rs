use std::process::ExitCode;

use clap::Parser;

use padic_rigidity::cli::{run, Cli};

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}
