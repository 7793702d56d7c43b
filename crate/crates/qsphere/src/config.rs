use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qsphere_core::supnorm::SearchConfig;
use serde::Serialize;

use crate::json::big_u64;
use crate::CliError;

pub const DEFAULT_SEED: u64 = 20240611;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Exact multiplicity degree and summability evidence.
    Dim,
    /// Level multiplicities M(k) for k = 0..=k-max.
    Spectrum,
    /// Zeta partial sums, tail bounds and divergence growth.
    Zeta,
    /// Sup-norm maximizers, ratio bounds and the cpt inequality.
    Supnorm,
    /// Exact highest weight vector checks and family ranks.
    Hwv,
    /// Paths in Γ and the linear eigenvalue growth bound.
    Path,
    /// Every acceptance suite; exits 1 if any criterion fails.
    VerifyAll,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Dim => "dim",
            Command::Spectrum => "spectrum",
            Command::Zeta => "zeta",
            Command::Supnorm => "supnorm",
            Command::Hwv => "hwv",
            Command::Path => "path",
            Command::VerifyAll => "verify-all",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qsphere",
    version,
    about = "Spectral dimension certificate for quaternion spheres"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Rank n of Sp(2n).
    #[arg(long, global = true, default_value_t = 2)]
    pub rank: usize,
    /// Last level for degree detection and spectrum tables [default: 4n+8].
    #[arg(long, global = true)]
    pub k_max: Option<u32>,
    /// Zeta cutoffs K, comma separated; evidence compares K with 2K.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [1000u32])]
    pub zeta_k: Vec<u32>,
    /// Grid points per axis of the reduced sup-norm search.
    #[arg(long, global = true, default_value_t = 200)]
    pub grid: usize,
    /// Zoom refinement rounds of the sup-norm search.
    #[arg(long, global = true, default_value_t = 3)]
    pub refine: usize,
    /// Largest λ1 for the highest weight vector suite.
    #[arg(long, global = true, default_value_t = 4)]
    pub lambda_cap: u32,
    /// Largest γ1 for the path suite.
    #[arg(long, global = true, default_value_t = 30)]
    pub gamma_cap: u32,
    /// Seed for the random cpt pairs and eigenvalue assignments.
    #[arg(long, global = true, env = "QSPHERE_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Report format. CSV is available for `spectrum` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Report file; stdout when absent.
    #[arg(long, global = true, env = "QSPHERE_OUT")]
    pub out: Option<PathBuf>,
    /// Spread independent items over threads. Output is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,
}

/// Validated run configuration, echoed into every report.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunConfig {
    pub rank: usize,
    pub k_max: u32,
    pub zeta_k: Vec<u32>,
    pub grid: usize,
    pub refine: usize,
    pub lambda_cap: u32,
    pub gamma_cap: u32,
    #[serde(serialize_with = "big_u64")]
    pub seed: u64,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub parallel: bool,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let usage = |msg: String| Err(CliError::Usage(msg));
        if cli.rank < 2 {
            return usage(format!("--rank must be at least 2, got {}", cli.rank));
        }
        let k_min = 4 * cli.rank as u32 + 2;
        let k_max = cli.k_max.unwrap_or(default_k_max(cli.rank));
        if cli.command != Command::Spectrum && k_max < k_min {
            return usage(format!("--k-max must be at least 4n+2 = {k_min} for degree detection"));
        }
        if cli.zeta_k.is_empty() || cli.zeta_k.contains(&0) {
            return usage("--zeta-k needs positive cutoffs".into());
        }
        if cli.lambda_cap < 1 || cli.gamma_cap < 1 {
            return usage("caps must be at least 1".into());
        }
        if cli.format == Format::Csv && cli.command != Command::Spectrum {
            return usage(format!(
                "--format csv is only available for `spectrum`, not `{}`",
                cli.command.name()
            ));
        }
        let cfg = Self {
            rank: cli.rank,
            k_max,
            zeta_k: cli.zeta_k.clone(),
            grid: cli.grid,
            refine: cli.refine,
            lambda_cap: cli.lambda_cap,
            gamma_cap: cli.gamma_cap,
            seed: cli.seed,
            format: cli.format,
            out: cli.out.clone(),
            parallel: cli.parallel,
        };
        cfg.search()
            .validate()
            .map_err(|e| CliError::Usage(format!("--grid/--refine: {e}")))?;
        Ok(cfg)
    }

    pub fn search(&self) -> SearchConfig {
        SearchConfig {
            resolution: self.grid,
            refine_rounds: self.refine,
            ..SearchConfig::default()
        }
    }

    /// Same settings with another rank; `k_max` follows the rank default
    /// unless it was raised above it.
    pub fn with_rank(&self, rank: usize) -> Self {
        let mut cfg = self.clone();
        cfg.rank = rank;
        cfg.k_max = self.k_max.max(default_k_max(rank));
        cfg
    }
}

pub fn default_k_max(rank: usize) -> u32 {
    4 * rank as u32 + 8
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            rank: 2,
            k_max: default_k_max(2),
            zeta_k: vec![1000],
            grid: 200,
            refine: 3,
            lambda_cap: 4,
            gamma_cap: 30,
            seed: DEFAULT_SEED,
            format: Format::Json,
            out: None,
            parallel: false,
        }
    }
}
