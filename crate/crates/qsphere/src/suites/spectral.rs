use std::io::Write;

use num_bigint::BigUint;
use qsphere_core::rep::{gamma_level, weyl_dimension};
use qsphere_core::spectrum::{
    degree_of_levels, from_levels, growth_check, tail_check, zeta_partial_sums, Spectrum, SpectrumLevel,
    DIVERGENCE_GROWTH_THRESHOLD,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::json::{big_uint, serialize_big_uint};
use crate::report::{Check, Suite};
use crate::{map_items, try_map_items, CliError};

/// Levels `0..=top`, computed per level so they can be spread over threads.
pub fn levels(rank: usize, top: u32, parallel: bool) -> Result<Vec<SpectrumLevel>, CliError> {
    let spectrum = Spectrum::new(rank)?;
    Ok(map_items((0..=top).collect(), parallel, |k| spectrum.level(k)))
}

fn zeta_top(cfg: &RunConfig) -> u32 {
    cfg.zeta_k.iter().map(|&k| 4 * k).max().unwrap_or(0).max(cfg.k_max)
}

/// Exact degree of `M` and the resulting spectral dimension, with the
/// numerical summability evidence at each `--zeta-k` cutoff.
pub fn dim_suite(cfg: &RunConfig, criterion: Option<u8>) -> Result<Suite, CliError> {
    let n = cfg.rank;
    let table = levels(n, zeta_top(cfg), cfg.parallel)?;
    let r = from_levels(n, cfg.k_max, &table, &cfg.zeta_k)?;
    let tag = |c: Check| match criterion {
        Some(id) => c.criterion(id),
        None => c,
    };
    let mut checks = vec![
        tag(Check::exact("polynomialDegree", r.polynomial_degree, 4 * n - 2)
            .oracle("exact finite differences of M(0..=kMax)")),
        tag(Check::exact("spectralDimension", r.spectral_dimension, 4 * n - 1).oracle("deg M + 1")),
    ];
    for g in &r.divergence {
        checks.push(
            Check::strict_lower_bound(
                &format!("divergenceBlockRatio K={}", g.cutoff),
                g.block_ratio,
                DIVERGENCE_GROWTH_THRESHOLD,
            )
            .oracle("block sums over (2K,4K] against (K,2K] at δ = deg M"),
        );
    }
    for t in &r.convergence {
        checks.push(
            Check::upper_bound(&format!("convergenceTail K={}", t.cutoff), t.tail, t.bound, 0.0)
                .oracle("integral comparison C·K^(p+1-δ)/(δ-p-1) at δ = deg M + 2"),
        );
    }
    let data = json!({
        "rank": n,
        "kMax": r.k_max,
        "polynomialDegree": r.polynomial_degree,
        "spectralDimension": r.spectral_dimension,
        "degreeMatches": r.degree_matches,
        "divergenceEvidenced": r.divergence_evidenced,
        "convergenceEvidenced": r.convergence_evidenced,
        "partialSums": r.partial_sums.iter().map(|p| json!({
            "delta": p.delta, "cutoff": p.cutoff, "value": p.value,
        })).collect::<Vec<_>>(),
        "divergence": r.divergence.iter().map(growth_json).collect::<Vec<_>>(),
        "convergence": r.convergence.iter().map(tail_json).collect::<Vec<_>>(),
    });
    Ok(Suite::new(&format!("dim n={n}"), checks, data))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Row {
    k: u32,
    #[serde(serialize_with = "serialize_big_uint")]
    multiplicity: BigUint,
}

/// `M(k)` for `k <= kMax`, each level checked against a direct sum of Weyl
/// dimensions over `{γ ∈ Γ : γ1 = k}`.
pub fn spectrum_suite(cfg: &RunConfig) -> Result<Suite, CliError> {
    let n = cfg.rank;
    let table = levels(n, cfg.k_max, cfg.parallel)?;
    let direct = try_map_items((0..=cfg.k_max).collect(), cfg.parallel, |k| {
        gamma_level(k).into_iter().try_fold(BigUint::default(), |acc, g| {
            Ok(acc + weyl_dimension(n, &g.highest_weight(n)?)?)
        })
    })?;
    let mismatches: Vec<u32> = table
        .iter()
        .zip(&direct)
        .filter(|(l, d)| &l.multiplicity != *d)
        .map(|(l, _)| l.eigenvalue)
        .collect();
    let checks = vec![Check::exact("levelsMatchGammaSum", json!(mismatches), json!([]))
        .oracle("Σ over γ with γ1 = k of dim(γ1, γ2, 0, ..)")];
    let rows: Vec<Row> = table
        .into_iter()
        .map(|l| Row {
            k: l.eigenvalue,
            multiplicity: l.multiplicity,
        })
        .collect();
    let data = json!({ "rank": n, "kMax": cfg.k_max, "rows": rows });
    Ok(Suite::new(&format!("spectrum n={n}"), checks, data))
}

pub fn spectrum_csv(suite: &Suite, mut w: impl Write) -> std::io::Result<()> {
    writeln!(w, "k,multiplicity")?;
    for row in suite.data["rows"].as_array().into_iter().flatten() {
        let m = match &row["multiplicity"] {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        writeln!(w, "{},{}", row["k"], m)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaMode {
    /// The literal `S(2K) > 1.5·S(K)` comparison is informational.
    Report,
    /// The literal comparison is required and tagged with the criterion.
    Criterion,
}

const ZETA_CRITERION: u8 = 10;

/// Partial sums at `δ ∈ {4n-2, 4n-1, 4n}`, the tail bound at `δ = 4n` and
/// growth at `δ = 4n-2`, between each cutoff `K` and `2K`.
pub fn zeta_suite(cfg: &RunConfig, mode: ZetaMode) -> Result<Suite, CliError> {
    let n = cfg.rank;
    let table = levels(n, zeta_top(cfg), cfg.parallel)?;
    let degree = degree_of_levels(&table[..=cfg.k_max as usize])?;
    let deltas = [degree as f64, degree as f64 + 1.0, degree as f64 + 2.0];
    let cutoffs: Vec<u32> = {
        let mut c: Vec<u32> = cfg.zeta_k.iter().flat_map(|&k| [k, 2 * k]).collect();
        c.sort_unstable();
        c.dedup();
        c
    };
    let mut sums = Vec::new();
    for delta in deltas {
        let values = zeta_partial_sums(&table, delta, &cutoffs)?;
        for (cutoff, value) in cutoffs.iter().zip(values) {
            sums.push(json!({ "delta": delta, "cutoff": cutoff, "value": value }));
        }
    }
    let tag = |c: Check, required: bool| {
        let c = if mode == ZetaMode::Criterion {
            c.criterion(ZETA_CRITERION)
        } else {
            c
        };
        if required {
            c
        } else {
            c.informational()
        }
    };
    let mut checks = vec![tag(
        Check::exact("multiplicityDegree", degree, 4 * n - 2).oracle("exact finite differences"),
        true,
    )];
    let mut tails = Vec::new();
    let mut growths = Vec::new();
    for &k in &cfg.zeta_k {
        let t = tail_check(&table, degree, deltas[2], k)?;
        checks.push(tag(
            Check::upper_bound(&format!("tailBelowIntegralBound K={k}"), t.tail, t.bound, 0.0)
                .oracle("integral comparison C·K^(p+1-δ)/(δ-p-1), C = max M(k)/k^p on (K, 2K]"),
            true,
        ));
        let g = growth_check(&table, deltas[0], k)?;
        checks.push(tag(
            Check::strict_lower_bound(
                &format!("partialSumGrowth K={k}"),
                g.partial_sum_ratio,
                DIVERGENCE_GROWTH_THRESHOLD,
            )
            .oracle("S(2K)/S(K) at δ = 4n-2"),
            mode == ZetaMode::Criterion,
        ));
        checks.push(tag(
            Check::strict_lower_bound(
                &format!("blockGrowth K={k}"),
                g.block_ratio,
                DIVERGENCE_GROWTH_THRESHOLD,
            )
            .oracle("block sums over (2K,4K] against (K,2K] at δ = 4n-2, limit 2"),
            true,
        ));
        tails.push(tail_json(&t));
        growths.push(growth_json(&g));
    }
    let data = json!({
        "rank": n,
        "degree": degree,
        "levelsComputed": table.len(),
        "lastMultiplicity": big_uint(&table.last().expect("nonempty table").multiplicity),
        "partialSums": sums,
        "tails": tails,
        "growth": growths,
    });
    Ok(Suite::new(&format!("zeta n={n}"), checks, data))
}

fn tail_json(t: &qsphere_core::spectrum::TailCheck) -> Value {
    json!({
        "delta": t.delta,
        "cutoff": t.cutoff,
        "tail": t.tail,
        "leadConstant": t.lead_constant,
        "bound": t.bound,
        "withinBound": t.within_bound,
    })
}

fn growth_json(g: &qsphere_core::spectrum::GrowthCheck) -> Value {
    json!({
        "delta": g.delta,
        "cutoff": g.cutoff,
        "sumAtCutoff": g.sum_at_cutoff,
        "sumAtDouble": g.sum_at_double,
        "partialSumRatio": g.partial_sum_ratio,
        "blockAtCutoff": g.block_at_cutoff,
        "blockAtDouble": g.block_at_double,
        "blockRatio": g.block_ratio,
        "threshold": DIVERGENCE_GROWTH_THRESHOLD,
    })
}
