//! Exact representation theory of the compact symplectic group `Sp(2n)`.

mod branching;
mod gamma;
mod tensor;
mod weight;
mod weyl;

pub use branching::{branching_multiplicity, restriction, trivial_isotypic_multiplicity};
pub use gamma::{gamma_level, gamma_up_to, GammaIndex};
pub use tensor::tensor_with_defining;
pub use weight::{dominant_weights, HighestWeight};
pub use weyl::{weyl_dimension, WeylFormula};
