use qsphere_core::hwv::{
    apply_generator, build_generator_matrices, generator_index, hwv_candidate, linear_independence, verify_candidate,
    CoordinateVariable, GeneratorLabel, SymPolynomial,
};
use serde_json::json;

use crate::config::RunConfig;
use crate::report::{Check, Suite};
use crate::{try_map_items, CliError};

/// Every `b^(λ1,λ2,j)` with `λ1 <= lambdaCap` in rank `n`, checked exactly,
/// and the rank of each family `{b^(λ1,λ2,j)}_j`.
pub fn hwv_suite(cfg: &RunConfig, criterion: Option<u8>) -> Result<Suite, CliError> {
    let n = cfg.rank;
    let tag = |c: Check| match criterion {
        Some(id) => c.criterion(id),
        None => c,
    };
    // building the generators re-checks the anchored convention
    let gens = build_generator_matrices(n)?;
    let e1 = &gens[generator_index(n, GeneratorLabel::E(1))];
    let z = SymPolynomial::var(CoordinateVariable::z(n));
    let w = SymPolynomial::var(CoordinateVariable::w(n));
    let e1_zw = apply_generator(e1, &z)?.is_zero() && apply_generator(e1, &w)?.is_zero();

    let weights: Vec<(u32, u32)> = (0..=cfg.lambda_cap)
        .flat_map(|l1| (0..=l1).map(move |l2| (l1, l2)))
        .collect();
    let families = try_map_items(weights, cfg.parallel, |(l1, l2)| {
        let mut reports = Vec::new();
        let mut family = Vec::new();
        for j in 0..=l1 - l2 {
            reports.push(verify_candidate(n, l1, l2, j)?);
            family.push(hwv_candidate(n, l1, l2, j)?);
        }
        let (independent, rank) = linear_independence(&family);
        Ok((l1, l2, reports, independent, rank))
    })?;

    let mut failing_candidates = Vec::new();
    let mut rank_failures = Vec::new();
    let mut candidates = Vec::new();
    let mut ranks = Vec::new();
    for (l1, l2, reports, independent, rank) in &families {
        for r in reports {
            let j = r.index.expect("built from a candidate");
            if !r.passed {
                failing_candidates.push(format!("({l1},{l2},{j})"));
            }
            candidates.push(json!({
                "lambda1": l1, "lambda2": l2, "j": j,
                "annihilated": r.annihilated,
                "hEigenvalues": r.h_eigenvalues,
                "expectedEigenvalues": r.expected_eigenvalues(),
                "passed": r.passed,
            }));
        }
        let expected = (l1 - l2 + 1) as usize;
        if *rank != expected || !independent {
            rank_failures.push(format!("({l1},{l2})"));
        }
        ranks.push(json!({
            "lambda1": l1, "lambda2": l2,
            "size": expected, "rank": rank, "independent": independent,
        }));
    }

    let checks = vec![
        Check::exact("generatorConvention", true, true)
            .oracle("Chevalley relations, symplectic form and the fixed action table"),
        Check::exact("e1KillsZAndW", e1_zw, true).oracle("derivation action from the defining representation"),
        tag(
            Check::exact("candidatesAreHighestWeight", json!(failing_candidates), json!([]))
                .oracle("E_i b = 0 for i <= n, H_1 b = (λ1-λ2) b, H_2 b = λ2 b, H_i b = 0 for i >= 3"),
        ),
        tag(Check::exact("familyRank", json!(rank_failures), json!([]))
            .oracle("fraction-free elimination, rank λ1-λ2+1")),
    ];
    let data = json!({
        "rank": n,
        "lambdaCap": cfg.lambda_cap,
        "candidates": candidates,
        "families": ranks,
    });
    Ok(Suite::new(&format!("hwv n={n}"), checks, data))
}
