//! Highest weight vectors in the coordinate algebra of the quaternion sphere.
//!
//! Polynomials in the commuting symbols `u^1_j`, `u^(2n)_j` carry the
//! derivation action of the Chevalley generators of `sp(2n)`, read off the
//! defining representation via `f(u^k_l) = Σ_m u^k_m t_ml(f)`. The
//! candidates `b^(λ1,λ2,j) = z^j w^(λ1-λ2-j) (xw - yz)^λ2` are checked exactly.

mod generators;
mod poly;
mod verify;

pub use generators::{
    apply_generator, build_generator_matrices, cartan_entry, check_chevalley, generator_index, GeneratorAction,
    GeneratorLabel, IntMatrix,
};
pub use poly::{CoordinateVariable, Monomial, SymPolynomial};
pub use verify::{hwv_candidate, linear_independence, verify_candidate, verify_highest_weight, HWVReport};
