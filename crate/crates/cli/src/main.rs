use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ubdkit_cli::{run, write_warnings, Cli, RunConfig, EXIT_VALIDATION};

fn main() -> ExitCode {
    let config = match RunConfig::from_cli(Cli::parse()) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_VALIDATION);
        }
    };
    match run(&config) {
        Ok(outcome) => {
            let mut err = String::new();
            write_warnings(&outcome, &mut err);
            eprint!("{err}");
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
