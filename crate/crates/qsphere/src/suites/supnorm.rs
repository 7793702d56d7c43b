use qsphere_core::supnorm::{
    cpt_ratio_check, ratio_bound_sweep, sup_norm, theta_maximizer, CptOutcome, FmnSurrogate, GammaSurrogate, RATIO_CAPS,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::oracle::surrogate_sup;
use crate::report::{Check, Suite};
use crate::{try_map_items, CliError};

pub const MAXIMIZER_RANGE: u32 = 10;
pub const MAXIMIZER_TOLERANCE: f64 = 1e-6;
pub const RATIO_GAMMA_CAP: u32 = 12;
pub const RATIO_SLACK: f64 = 1e-6;
pub const CPT_PAIRS: usize = 100;
pub const CPT_M_MAX: u32 = 5;
pub const CPT_MAX_EXPONENT: u32 = 5;
pub const CPT_TOLERANCE: f64 = 1e-8;
/// Stream of the seeded generator reserved for the cpt pairs.
const CPT_STREAM: u64 = 1;

fn point(p: &qsphere_core::supnorm::ThetaPoint) -> Value {
    json!(p.coords())
}

/// Seeded random surrogate pairs `(f, h)` with exponents in `0..=5`.
pub fn cpt_pairs(seed: u64) -> Vec<(GammaSurrogate, GammaSurrogate)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(CPT_STREAM);
    let mut draw = || {
        GammaSurrogate::new(
            rng.random_range(0..=CPT_MAX_EXPONENT),
            rng.random_range(0..=CPT_MAX_EXPONENT),
            rng.random_range(0..=CPT_MAX_EXPONENT),
        )
    };
    (0..CPT_PAIRS).map(|_| (draw(), draw())).collect()
}

fn exps(g: GammaSurrogate) -> Value {
    json!({ "z": g.z_exp, "w": g.w_exp, "mix": g.mix_exp })
}

pub fn supnorm_suite(cfg: &RunConfig) -> Result<Suite, CliError> {
    let search = cfg.search();
    let mut checks = Vec::new();

    let examples = [
        ("w", GammaSurrogate::new(0, 1, 0), 1.0),
        ("xw+yz", GammaSurrogate::new(0, 0, 1), 0.5),
    ];
    let mut example_rows = Vec::new();
    for (label, g, want) in examples {
        let s = sup_norm(g, &search)?;
        checks.push(
            Check::absolute(&format!("supNorm {label}"), s.value, want, search.tolerance)
                .oracle("coordinate maximum and AM-GM"),
        );
        example_rows.push(json!({ "target": label, "value": s.value, "argmax": point(&s.argmax) }));
    }

    // maximizers of f_(m,n)
    let pairs: Vec<(u32, u32)> = (0..=MAXIMIZER_RANGE)
        .flat_map(|m| (0..=MAXIMIZER_RANGE).map(move |n| (m, n)))
        .filter(|&p| p != (0, 0))
        .collect();
    let rows = try_map_items(pairs, cfg.parallel, |(m, n)| {
        let f = FmnSurrogate::new(m, n)?;
        let theta = theta_maximizer(m, n)?;
        let s = sup_norm(f, &search)?;
        Ok((m, n, s, f.eval(&theta), theta))
    })?;
    let worst = rows.iter().map(|r| (r.2.value - r.3).abs()).fold(0.0, f64::max);
    checks.push(
        Check::absolute("maximizerDeviation", worst, 0.0, MAXIMIZER_TOLERANCE)
            .criterion(5)
            .oracle("f_(m,n) at the closed-form θ_(m,n)"),
    );
    let maximizers: Vec<Value> = rows
        .iter()
        .map(|(m, n, s, at_theta, theta)| {
            json!({
                "m": m, "n": n,
                "sup": s.value,
                "atTheta": at_theta,
                "deviation": (s.value - at_theta).abs(),
                "theta": point(theta),
                "argmax": point(&s.argmax),
                "crossCheck": s.cross_check,
            })
        })
        .collect();

    // ratio bounds
    let sweep = ratio_bound_sweep(RATIO_GAMMA_CAP, &search)?;
    let mut ratio_rows = Vec::new();
    let mut worst_part = [f64::NEG_INFINITY; 4];
    let mut part_one_dev = 0.0f64;
    let mut oracle_dev = 0.0f64;
    for r in &sweep {
        let idx = r.part as usize - 1;
        worst_part[idx] = worst_part[idx].max(r.ratio);
        if r.part == 1 {
            part_one_dev = part_one_dev.max((r.ratio - 2.0).abs());
        }
        let oracle = surrogate_sup(r.gamma.g3(), r.gamma.w_exponent(), r.gamma.g2())
            / surrogate_sup(r.next.g3(), r.next.w_exponent(), r.next.g2());
        oracle_dev = oracle_dev.max((r.ratio - oracle).abs() / oracle);
        ratio_rows.push(json!({
            "part": r.part,
            "gamma": r.gamma.to_string(),
            "next": r.next.to_string(),
            "numerator": r.numerator,
            "denominator": r.denominator,
            "ratio": r.ratio,
            "closedForm": oracle,
            "cap": r.cap,
        }));
    }
    checks.push(
        Check::absolute("ratioPart1", part_one_dev, 0.0, RATIO_SLACK)
            .criterion(6)
            .oracle("‖(xw+yz)^k‖ = 2^-k, ratio exactly 2"),
    );
    for part in 2..=4usize {
        checks.push(
            Check::upper_bound(
                &format!("ratioPart{part}"),
                worst_part[part - 1],
                RATIO_CAPS[part - 1],
                RATIO_SLACK,
            )
            .criterion(6)
            .oracle("per-part cap"),
        );
    }
    checks.push(
        Check::absolute("ratiosMatchClosedForm", oracle_dev, 0.0, 1e-6)
            .oracle("separable closed-form suprema, relative deviation")
            .informational(),
    );

    // cpt inequality
    let results = try_map_items(cpt_pairs(cfg.seed), cfg.parallel, |(f, h)| {
        Ok((f, h, cpt_ratio_check(f, h, CPT_M_MAX, CPT_TOLERANCE, &search)?))
    })?;
    let mut unmet = 0;
    let mut worst_excess = f64::NEG_INFINITY;
    let mut worst_drop = f64::NEG_INFINITY;
    let mut inequality_failures = Vec::new();
    let mut monotone_failures = Vec::new();
    let mut cpt_rows = Vec::new();
    for (i, (f, h, outcome)) in results.iter().enumerate() {
        match outcome {
            CptOutcome::PreconditionUnmet { maximizer } => {
                unmet += 1;
                cpt_rows.push(json!({
                    "index": i, "f": exps(*f), "h": exps(*h),
                    "preconditionMet": false, "maximizer": point(maximizer),
                }));
            }
            CptOutcome::Checked(r) => {
                for ratio in &r.ratios {
                    worst_excess = worst_excess.max(ratio - r.bound);
                }
                for w in r.h_at_maximizers.windows(2) {
                    worst_drop = worst_drop.max(w[0] - w[1]);
                }
                if !r.inequality_holds {
                    inequality_failures.push(i);
                }
                if !r.monotone {
                    monotone_failures.push(i);
                }
                cpt_rows.push(json!({
                    "index": i, "f": exps(*f), "h": exps(*h),
                    "preconditionMet": true,
                    "maximizer": point(&r.maximizer),
                    "bound": r.bound,
                    "ratios": r.ratios,
                    "hAtMaximizers": r.h_at_maximizers,
                }));
            }
        }
    }
    checks.push(
        Check::upper_bound("cptInequality", worst_excess, 0.0, CPT_TOLERANCE)
            .criterion(7)
            .oracle("max over pairs and m = 0..5 of ‖h^m f‖/‖h^(m+1) f‖ - 1/|h(x0)|"),
    );
    checks.push(
        Check::upper_bound("cptMonotone", worst_drop, 0.0, CPT_TOLERANCE)
            .criterion(7)
            .oracle("max over pairs and m of |h(x_m)| - |h(x_(m+1))|"),
    );
    checks.push(Check::strict_lower_bound("cptPairsChecked", (CPT_PAIRS - unmet) as f64, 0.0).informational());

    let data = json!({
        "search": {
            "resolution": search.resolution,
            "refineRounds": search.refine_rounds,
            "crossCheckResolution": search.cross_check_resolution,
            "tolerance": search.tolerance,
        },
        "examples": example_rows,
        "maximizers": maximizers,
        "ratios": ratio_rows,
        "cpt": {
            "pairs": cpt_rows,
            "preconditionUnmet": unmet,
            "inequalityFailures": inequality_failures,
            "monotoneFailures": monotone_failures,
        },
    });
    Ok(Suite::new("supnorm", checks, data))
}
