use num_bigint::BigUint;
use qsphere_core::rep::{
    branching_multiplicity, dominant_weights, restriction, tensor_with_defining, trivial_isotypic_multiplicity,
    weyl_dimension, HighestWeight,
};
use serde_json::json;

use crate::config::RunConfig;
use crate::json::big_uint;
use crate::oracle::king_tableaux;
use crate::report::{Check, Suite};
use crate::CliError;

const WEYL_SAMPLES: [(u32, u32); 6] = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)];
const BRANCHING_CAP: u32 = 3;
const ISOTYPIC_CAP: u32 = 5;
const TENSOR_CAP: u32 = 4;
const RANKS: [usize; 2] = [2, 3];

/// Weyl dimensions, branching and tensoring with the defining module.
pub fn rep_suite(_cfg: &RunConfig) -> Result<Suite, CliError> {
    let mut checks = Vec::new();

    let mut dims = Vec::new();
    let mut dim_failures = Vec::new();
    for (a, b) in WEYL_SAMPLES {
        let w = HighestWeight::two_row(2, a, b)?;
        let d = weyl_dimension(2, &w)?;
        let oracle = king_tableaux(w.entries());
        if d != BigUint::from(oracle) {
            dim_failures.push(w.to_string());
        }
        dims.push(json!({ "lambda": w.to_string(), "dimension": big_uint(&d), "oracle": oracle }));
    }
    checks.push(
        Check::exact("weylDimensions n=2", json!(dim_failures), json!([]))
            .criterion(2)
            .oracle("King symplectic tableaux count"),
    );

    let mut branching_checked = 0;
    let mut branching_failures = Vec::new();
    let mut isotypic_checked = 0;
    let mut isotypic_failures = Vec::new();
    let mut tensor_checked = 0;
    let mut tensor_failures = Vec::new();
    for n in RANKS {
        for lambda in dominant_weights(n, BRANCHING_CAP) {
            branching_checked += 1;
            let sum = restriction(&lambda)?
                .into_iter()
                .try_fold(BigUint::default(), |acc, (mu, m)| {
                    Ok::<_, qsphere_core::Error>(acc + weyl_dimension(n - 1, &mu)? * m)
                })?;
            if sum != weyl_dimension(n, &lambda)? {
                branching_failures.push(format!("n={n} {lambda}"));
            }
        }
        for lambda in dominant_weights(n, ISOTYPIC_CAP) {
            isotypic_checked += 1;
            let m = branching_multiplicity(&lambda, &HighestWeight::zero(n - 1))?;
            if m != trivial_isotypic_multiplicity(&lambda)? {
                isotypic_failures.push(format!("n={n} {lambda}"));
            }
        }
        for lambda in dominant_weights(n, TENSOR_CAP) {
            tensor_checked += 1;
            let parts = tensor_with_defining(n, &lambda)?;
            let total = parts.iter().try_fold(BigUint::default(), |acc, mu| {
                Ok::<_, qsphere_core::Error>(acc + weyl_dimension(n, mu)?)
            })?;
            let leap = parts.iter().all(|mu| mu.first().abs_diff(lambda.first()) <= 1);
            if total != weyl_dimension(n, &lambda)? * (2 * n as u32) || !leap {
                tensor_failures.push(format!("n={n} {lambda}"));
            }
        }
    }
    checks.push(
        Check::exact("branchingDimensionSum", json!(branching_failures), json!([]))
            .criterion(3)
            .oracle("Σ_μ m(λ,μ)·dim μ = dim λ over Sp(2n-2)"),
    );
    checks.push(
        Check::exact("trivialIsotypicRule", json!(isotypic_failures), json!([]))
            .criterion(3)
            .oracle("m(λ,0) = λ1-λ2+1 for two-row λ, else 0"),
    );
    checks.push(
        Check::exact("boundedLeap", json!(tensor_failures), json!([]))
            .criterion(4)
            .oracle("Σ dim μ = 2n·dim λ and |μ1-λ1| <= 1"),
    );

    let data = json!({
        "weylDimensions": dims,
        "branchingChecked": branching_checked,
        "isotypicChecked": isotypic_checked,
        "tensorChecked": tensor_checked,
        "ranks": RANKS,
        "caps": { "branching": BRANCHING_CAP, "isotypic": ISOTYPIC_CAP, "tensor": TENSOR_CAP },
    });
    Ok(Suite::new("rep", checks, data))
}
