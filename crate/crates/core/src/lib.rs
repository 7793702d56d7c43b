//! Computational certificate for the spectral dimension of the quaternion
//! sphere `Sp(2n)/Sp(2n-2)`.
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational:
//!
//! * [`rep`]: type C weights, Weyl dimensions, `Sp(2n) -> Sp(2n-2)` branching,
//!   tensoring with the defining representation and the index set `Γ`.
//! * [`spectrum`]: multiplicities of the equivariant Dirac operator, exact
//!   polynomial degree detection and zeta partial sums.
//! * [`supnorm`]: sup-norms of the highest weight vector surrogates on the
//!   nonnegative octant of the 3-sphere and the ratio bounds built on them.
//! * [`hwv`]: exact polynomial algebra, the Chevalley generator action and
//!   highest weight vector verification.
//! * [`path`]: the constructive paths in `Γ` and the linear eigenvalue growth
//!   bound they imply.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod float;
pub mod hwv;
pub mod path;
pub mod rep;
pub mod spectrum;
pub mod supnorm;

pub use error::{Error, Result};
pub use rep::{GammaIndex, HighestWeight};
