//! Sup-norms of the highest weight vector surrogates over
//! `Θ = {(x,y,z,w) ∈ [0,1]^4 : x²+y²+z²+w² = 1}`.
//!
//! The norm of the highest weight vector `b^γ` is the supremum over `Θ` of
//! `g^γ = z^γ3 w^(γ1-γ2-γ3) (xw+yz)^γ2`. For fixed `(z, w)` the mixed factor
//! is maximised at `(x, y) ∝ (w, z)` with value `√(1-ρ²)·ρ`, `ρ² = z²+w²`,
//! so the search runs over the two parameters `(ρ, φ)` with
//! `z = ρ sin φ`, `w = ρ cos φ`, and is cross-checked on a coarse grid over
//! all of `Θ`.

mod bounds;
mod cpt;
mod search;
mod surrogate;
mod theta;

pub use bounds::{ratio_bound, ratio_bound_sweep, theta_maximizer, RatioBound, RATIO_CAPS};
pub use cpt::{cpt_ratio_check, CptOutcome, CptReport};
pub use search::{sup_norm, sup_norm_preferring, SearchConfig, SupNorm};
pub use surrogate::{eval_g, FmnSurrogate, GammaSurrogate, Target};
pub use theta::ThetaPoint;
