mod args;
mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, SHORT_BUDGET_CAP};
use error::CliError;

fn run(cli: &Cli) -> Result<output::Report, CliError> {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot start {n} workers: {e}")))?;
    }
    let budget = if cli.long || cli.budget <= SHORT_BUDGET_CAP {
        cli.budget
    } else {
        eprintln!("note: budget clamped to {SHORT_BUDGET_CAP}; pass --long to lift the cap");
        SHORT_BUDGET_CAP
    };
    match &cli.command {
        Command::Spectrum(a) => commands::spectrum(a, budget),
        Command::Designs(a) => commands::designs(a, budget),
        Command::Conjectures(a) => commands::conjectures(a, budget),
        Command::Reproduce(a) => commands::reproduce(a, budget),
        Command::Code(a) => commands::code(a),
        Command::Differential(a) => commands::differential(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { error::DOMAIN } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let result = run(&cli).and_then(|r| r.emit(cli.format, cli.output.as_deref()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Reported(inner, report)) => {
            let _ = report.emit(cli.format, cli.output.as_deref());
            eprintln!("error: {inner}");
            ExitCode::from(inner.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
