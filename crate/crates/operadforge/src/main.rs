use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use operadforge::{configure_workers, run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("OPERADFORGE_LOG")).init();
    let cli = Cli::parse();
    let result = configure_workers(cli.workers).and_then(|()| run(&cli));
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
