use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<u32>),
    #[error("rank mismatch: expected {expected}, got {actual}")]
    RankMismatch { expected: usize, actual: usize },
    #[error("rank {0} is not supported (need n >= 2)")]
    UnsupportedRank(usize),
    #[error("({0}, {1}, {2}) is not in Γ")]
    InvalidGamma(u32, u32, u32),
    #[error("{samples} samples are too few: need at least {required}")]
    InsufficientSamples { samples: usize, required: usize },
    #[error("no finite difference of {samples} samples vanishes; sequence is not polynomial")]
    NonPolynomial { samples: usize },
    #[error("point ({0}, {1}, {2}, {3}) is not on the nonnegative unit octant")]
    OffTheta(f64, f64, f64, f64),
    #[error("(m, n) = (0, 0) has no maximizer")]
    ZeroSurrogate,
    #[error(
        "coarse 4D grid found {grid_value} exceeding the reduced search value {reduced_value} (tolerance {tolerance})"
    )]
    SymmetryViolated {
        reduced_value: f64,
        grid_value: f64,
        tolerance: f64,
    },
    #[error("γ = ({0}, {1}, {2}) violates the region predicate of part {3}")]
    RegionViolated(u32, u32, u32, u8),
    #[error("ratio bound part must be 1..=4, got {0}")]
    InvalidPart(u8),
    #[error("generator convention check failed: {0}")]
    Convention(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("variable u^{row}_{col} is not a coordinate of rank {rank}")]
    ForeignVariable { row: u32, col: u32, rank: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
