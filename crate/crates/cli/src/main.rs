use std::process::ExitCode;

use clap::Parser;
use roton_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // Usage errors are config errors under our exit-code contract.
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("roton: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
