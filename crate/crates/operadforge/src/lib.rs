//! Command-line front end: tree enumeration, link verification sweeps,
//! cell-model computations and the worked examples, with JSON, table and
//! DOT output.
//!
//! Exit codes: 0 success, 1 verification failure (a failed certificate, an
//! invalid model, or a computed value differing from a stated one), 2 usage
//! or domain error.

pub mod cli;
pub mod commands;

pub use cli::Cli;
pub use commands::{load_model, run, Outcome, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

/// Sets the size of the global worker pool; `None` keeps the default.
pub fn configure_workers(workers: Option<usize>) -> anyhow::Result<()> {
    if let Some(n) = workers {
        if n == 0 {
            anyhow::bail!("--workers must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}
