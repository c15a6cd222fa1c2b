//! Cross-checks between the cohomological predictions and the geometry,
//! organized as replayable check lists.

pub mod model;
pub mod replay;
pub mod report;
pub mod surfaces;

pub use model::{
    genus_degree, hodge_index_violation, hurwitz_deficit, lefschetz_crosscheck, within_curve_weil_window,
    within_k3_weil_window, Consistency, FixedLocusModel, RamificationProfile,
};
pub use replay::{
    degeneration_report, fix_set_identity_violations, fixed_sets, replay_char2, replay_lemma_50, replay_lemma_no1,
    replay_theorem_normalization, Bounds, EXCLUDED_LIST, REALIZED_LIST,
};
pub use report::{Check, Report, ReportConfig, Status, Summary};

use crate::{Error, Result};

/// Names accepted by [`run`], in execution order.
pub const CHECK_NAMES: [&str; 5] = ["lemma50", "no1", "normalization", "char2", "degeneration"];

/// Rejects unknown check names.
pub fn validate_checks(names: &[String]) -> Result<()> {
    match names.iter().find(|n| !CHECK_NAMES.contains(&n.as_str())) {
        Some(bad) => Err(Error::UnknownCheck(bad.clone())),
        None => Ok(()),
    }
}

/// Runs the selected replays in the order given by [`CHECK_NAMES`].
pub fn run(config: &ReportConfig) -> Result<Report> {
    validate_checks(&config.checks)?;
    let bounds = Bounds { max_q: config.max_q, curve_bound: config.curve_bound };
    let mut checks = Vec::new();
    for name in CHECK_NAMES {
        if !config.checks.iter().any(|c| c == name) {
            continue;
        }
        checks.extend(match name {
            "lemma50" => replay_lemma_50(config.p, &bounds)?,
            "no1" => replay_lemma_no1()?,
            "normalization" => replay_theorem_normalization(1, config.p)?,
            "char2" => replay_char2()?,
            "degeneration" => degeneration_report(config.p, &bounds)?,
            _ => unreachable!(),
        });
    }
    Ok(Report::new(config.clone(), checks))
}
