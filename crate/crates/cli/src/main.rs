use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use deuler_cli::{run, Cli, CAP_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = std::env::var(CAP_ENV).ok();
    match run(&cli, cap.as_deref()) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = out.write_all(outcome.stdout.as_bytes());
            let _ = out.flush();
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
