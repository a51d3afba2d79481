//! All expansions between the built-in algebras, plus the one that fails.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::liealg::ParamMode;

use super::problem::{ExpandOptions, ExpansionProblem};
use super::report::{run_expansion, ExpansionReport, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasArrow {
    pub group: String,
    pub source: String,
    pub target: String,
    pub axis: u8,
}

const ARROWS: [(&str, &str, &str, u8); 13] = [
    ("flat to curved spaces", "euclid3", "so4", 1),
    ("flat to curved spaces", "euclid3", "so31-hyp", 1),
    ("flat to curved spaces", "poincare", "so22", 1),
    ("flat to curved spaces", "poincare", "so31-ds", 1),
    ("centrally extended Galilei to Newton-Hooke", "ext-galilei", "nh-plus", 1),
    ("centrally extended Galilei to Newton-Hooke", "ext-galilei", "nh-minus", 1),
    ("Newton-Hooke to relative time", "nh-plus", "so4", 2),
    ("Newton-Hooke to relative time", "nh-plus", "so22", 2),
    ("Newton-Hooke to relative time", "nh-minus", "so31-hyp", 2),
    ("Newton-Hooke to relative time", "nh-minus", "so31-ds", 2),
    ("Galilei to relative time", "galilei", "euclid3", 2),
    ("Galilei to relative time", "galilei", "poincare", 2),
    ("Galilei without central extension", "galilei", "nh-plus", 1),
];

pub fn atlas_arrows() -> Vec<AtlasArrow> {
    ARROWS
        .iter()
        .map(|(group, source, target, axis)| AtlasArrow {
            group: group.to_string(),
            source: source.to_string(),
            target: target.to_string(),
            axis: *axis,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtlasEntry {
    pub arrow: AtlasArrow,
    pub verdict: Verdict,
    pub report: Option<ExpansionReport>,
    /// Set when the engine itself failed on this arrow.
    pub error: Option<String>,
}

/// Runs every arrow, in parallel; entries come back in arrow order.
pub fn run_atlas(mode: ParamMode, opts: &ExpandOptions) -> Vec<AtlasEntry> {
    atlas_arrows()
        .into_par_iter()
        .map(|arrow| {
            let run = ExpansionProblem::from_keys(&arrow.source, &arrow.target, arrow.axis, mode)
                .and_then(|p| run_expansion(&p, opts));
            match run {
                Ok(r) => AtlasEntry {
                    arrow,
                    verdict: r.verdict,
                    report: Some(r),
                    error: None,
                },
                Err(e) => AtlasEntry {
                    arrow,
                    verdict: Verdict::Fail,
                    report: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect()
}
