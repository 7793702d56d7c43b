//! Verification harness around [`qsphere_core`]: run configuration, the
//! per-subcommand suites and their JSON/CSV reports.

pub mod config;
pub mod json;
pub mod oracle;
pub mod report;
pub mod suites;

use rayon::prelude::*;

pub use config::{Cli, Command, Format, RunConfig};
pub use report::{Check, Report, Suite};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qsphere_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Maps `f` over `items` keeping input order, on the rayon pool when
/// `parallel` is set.
pub(crate) fn map_items<T, R, F>(items: Vec<T>, parallel: bool, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    if parallel {
        items.into_par_iter().map(f).collect()
    } else {
        items.into_iter().map(f).collect()
    }
}

pub(crate) fn try_map_items<T, R, F>(items: Vec<T>, parallel: bool, f: F) -> Result<Vec<R>, CliError>
where
    T: Send,
    R: Send,
    F: Fn(T) -> Result<R, qsphere_core::Error> + Sync + Send,
{
    map_items(items, parallel, f)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::from)
}
