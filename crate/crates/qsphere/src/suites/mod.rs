mod hwv;
mod path;
mod rep;
mod spectral;
mod supnorm;

use std::time::Instant;

use crate::config::{Command, RunConfig};
use crate::report::{Report, Suite};
use crate::CliError;

pub use hwv::hwv_suite;
pub use path::path_suite;
pub use rep::rep_suite;
pub use spectral::{dim_suite, levels, spectrum_csv, spectrum_suite, zeta_suite, ZetaMode};
pub use supnorm::supnorm_suite;

/// Ranks covered by the spectral dimension criterion.
pub const DIM_RANKS: [usize; 3] = [2, 3, 4];
/// Ranks covered by the highest weight vector criterion.
pub const HWV_RANKS: [usize; 2] = [2, 3];
pub const HWV_LAMBDA_CAP: u32 = 4;
pub const PATH_GAMMA_CAP: u32 = 30;
/// The zeta criterion: rank and the cutoff `K` compared with `2K`.
pub const ZETA_RANK: usize = 2;
pub const ZETA_CUTOFF: u32 = 1000;

pub fn run(command: Command, cfg: &RunConfig) -> Result<Report, CliError> {
    let suites = match command {
        Command::Dim => vec![timed("dim", || dim_suite(cfg, None))?],
        Command::Spectrum => vec![timed("spectrum", || spectrum_suite(cfg))?],
        Command::Zeta => vec![timed("zeta", || zeta_suite(cfg, ZetaMode::Report))?],
        Command::Supnorm => vec![timed("supnorm", || supnorm_suite(cfg))?],
        Command::Hwv => vec![timed("hwv", || hwv_suite(cfg, None))?],
        Command::Path => vec![timed("path", || path_suite(cfg))?],
        Command::VerifyAll => verify_all(cfg)?,
    };
    Ok(Report::new(command.name(), cfg.clone(), suites))
}

/// Runs each acceptance suite with the parameters pinned by its criterion.
/// Seed, grid, refinement and parallelism come from `cfg`.
fn verify_all(cfg: &RunConfig) -> Result<Vec<Suite>, CliError> {
    let mut suites = Vec::new();
    for n in DIM_RANKS {
        let c = cfg.with_rank(n);
        suites.push(timed(&format!("dim n={n}"), || dim_suite(&c, Some(1)))?);
    }
    suites.push(timed("rep", || rep_suite(cfg))?);
    suites.push(timed("supnorm", || supnorm_suite(cfg))?);
    for n in HWV_RANKS {
        let mut c = cfg.with_rank(n);
        c.lambda_cap = HWV_LAMBDA_CAP;
        suites.push(timed(&format!("hwv n={n}"), || hwv_suite(&c, Some(8)))?);
    }
    let mut c = cfg.clone();
    c.gamma_cap = PATH_GAMMA_CAP;
    suites.push(timed("path", || path_suite(&c))?);
    let mut c = cfg.with_rank(ZETA_RANK);
    c.zeta_k = vec![ZETA_CUTOFF];
    suites.push(timed("zeta", || zeta_suite(&c, ZetaMode::Criterion))?);
    Ok(suites)
}

/// Timings go to stderr so reports stay byte-identical across runs.
fn timed<T>(label: &str, f: impl FnOnce() -> Result<T, CliError>) -> Result<T, CliError> {
    let start = Instant::now();
    let out = f();
    eprintln!("[{label}] {:.3}s", start.elapsed().as_secs_f64());
    out
}
