use std::io;
use std::process::ExitCode;

use clap::Parser;
use ladder_cli::commands::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match execute(cli.command, &mut stdout.lock()) {
        Ok(status) => ExitCode::from(status.exit_code() as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
