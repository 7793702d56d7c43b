use std::collections::BTreeMap;

use qsphere_core::path::{build_path, verify_growth, verify_step_bounds, PathReport};
use qsphere_core::rep::{gamma_up_to, GammaIndex};
use qsphere_core::spectrum::EquivariantDirac;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::report::{Check, Suite};
use crate::{try_map_items, CliError};

pub const ASSIGNMENTS: usize = 50;
/// Paths up to this `γ1` are written out in full.
const LISTED_PATHS: u32 = 3;
const ASSIGNMENT_STREAM: u64 = 2;

/// Random eigenvalue assignment on `γ1 <= g1_max`: an affine form in
/// `γ` plus bounded noise, so steps stay bounded.
pub fn random_assignment(rng: &mut ChaCha8Rng, g1_max: u32) -> BTreeMap<GammaIndex, f64> {
    let coeffs: [f64; 3] = std::array::from_fn(|_| rng.random_range(-3.0..3.0));
    let offset = rng.random_range(-5.0..5.0);
    let noise = rng.random_range(0.0..2.0);
    gamma_up_to(g1_max)
        .map(|g| {
            let linear =
                offset + coeffs[0] * f64::from(g.g1()) + coeffs[1] * f64::from(g.g2()) + coeffs[2] * f64::from(g.g3());
            (g, linear + rng.random_range(-noise..=noise))
        })
        .collect()
}

fn path_json(p: &PathReport) -> Value {
    json!({
        "target": p.target.to_string(),
        "length": p.length(),
        "moves": p.moves.iter().map(|m| m.label()).collect::<Vec<_>>(),
        "waypoints": p.waypoints.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

pub fn path_suite(cfg: &RunConfig) -> Result<Suite, CliError> {
    let cap = cfg.gamma_cap;
    let targets: Vec<GammaIndex> = gamma_up_to(cap).collect();
    let total = targets.len();
    let built = try_map_items(targets, cfg.parallel, |g| Ok(build_path(g)))?;
    let invalid: Vec<String> = built
        .iter()
        .filter(|p| !p.is_valid())
        .map(|p| p.target.to_string())
        .collect();
    let longest_slack = built
        .iter()
        .map(|p| i64::from(p.target.g1()) - p.length() as i64)
        .min()
        .unwrap_or(0);

    let eq = verify_step_bounds(&EquivariantDirac, cap);
    let eq_growth = verify_growth(&EquivariantDirac, eq.max(), cap)?;

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(ASSIGNMENT_STREAM);
    let tables: Vec<_> = (0..ASSIGNMENTS).map(|_| random_assignment(&mut rng, cap + 2)).collect();
    let growth = try_map_items(tables, cfg.parallel, |table| {
        let d = |g: GammaIndex| table[&g];
        let bounds = verify_step_bounds(&d, cap);
        let c = bounds.max();
        let report = verify_growth(&d, c, cap)?;
        Ok((bounds, report, d(GammaIndex::ORIGIN)))
    })?;
    let failing: Vec<usize> = growth
        .iter()
        .enumerate()
        .filter(|(_, (_, r, _))| !r.passed())
        .map(|(i, _)| i)
        .collect();
    let worst_slack = growth.iter().map(|(_, r, _)| r.min_slack).fold(f64::INFINITY, f64::min);

    let checks = vec![
        Check::exact("pathsValid", json!(invalid), json!([]))
            .criterion(9)
            .oracle("each move starts inside its region and lands on the next waypoint"),
        Check::lower_bound("pathLengthSlack", longest_slack as f64, 0.0, 0.0)
            .criterion(9)
            .oracle("min over γ of γ1 - path length"),
        Check::exact("equivariantStepSuprema", json!(eq.suprema), json!([1.0, 2.0, 1.0, 1.0]))
            .oracle("γ1 changes by 1, 2, 1, 1 along the four moves"),
        Check::exact("equivariantGrowth", eq_growth.passed(), true).oracle("|d^γ| <= |d^0| + c·γ1 for d^γ = γ1"),
        Check::exact("randomAssignmentGrowth", json!(failing), json!([]))
            .criterion(9)
            .oracle("|d^γ| <= |d^0| + c·γ1 with c the observed step bound"),
        Check::lower_bound("randomAssignmentSlack", worst_slack, 0.0, 0.0)
            .oracle("min over assignments and γ of |d^0| + c·γ1 - |d^γ|"),
    ];
    let data = json!({
        "gammaCap": cap,
        "targetsChecked": total,
        "paths": built.iter().filter(|p| p.target.g1() <= LISTED_PATHS).map(path_json).collect::<Vec<_>>(),
        "equivariant": {
            "suprema": eq.suprema,
            "threshold": eq.threshold(),
            "minSlack": eq_growth.min_slack,
        },
        "assignments": growth.iter().enumerate().map(|(i, (b, r, d0))| json!({
            "index": i,
            "d0": d0,
            "suprema": b.suprema,
            "c": r.c,
            "checked": r.checked,
            "violations": r.violations.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "minSlack": r.min_slack,
        })).collect::<Vec<_>>(),
    });
    Ok(Suite::new("path", checks, data))
}
