//! Executable checks of the inequalities, identities and closed forms for the
//! constants, run one at a time or as a suite with a JSON report.

mod checks;
mod judge;
mod memo;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::search::{GridConfig, MultiStartConfig, Strategy};
use crate::spaces::NormedSpace;
use memo::Memo;

pub use checks::CHECK_IDS;

/// α values used by the suite.
pub const ALPHA_GRID: [f64; 5] = [0.0, 0.1, 0.25, 0.4, 0.5];
/// p values used by the suite.
pub const P_GRID: [f64; 3] = [1.0, 2.0, 3.0];
/// Second exponents for the p–q comparison.
pub const Q_GRID: [f64; 2] = [2.0, 4.0];

/// Slack for comparisons between vertex-exact values.
pub const EXACT_SLACK: f64 = 1e-6;
/// Slack for comparisons involving grid or multi-start values.
pub const APPROX_SLACK: f64 = 1e-3;
/// Slack for one-sided bounds that lower-bound estimates cannot break.
pub const ONE_SIDED_SLACK: f64 = 1e-9;

/// Search effort used by the checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Fast,
    Thorough,
}

impl Profile {
    /// The `auto` strategy with this profile's grid and multi-start settings.
    pub fn strategy(self, seed: u64) -> Strategy {
        let (grid, multistart) = match self {
            Profile::Fast => (
                GridConfig {
                    resolution: 256,
                    refine: 30,
                    radii: 4,
                },
                MultiStartConfig {
                    starts: 32,
                    steps: 200,
                    seed,
                },
            ),
            Profile::Thorough => (
                GridConfig {
                    resolution: 512,
                    refine: 40,
                    radii: 4,
                },
                MultiStartConfig {
                    starts: 128,
                    steps: 400,
                    seed,
                },
            ),
        };
        Strategy::Auto { grid, multistart }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Fast => "fast",
            Profile::Thorough => "thorough",
        })
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Profile::Fast),
            "thorough" => Ok(Profile::Thorough),
            _ => Err(Error::UnknownProfile(s.to_string())),
        }
    }
}

/// Outcome of one check on one space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub space: String,
    pub params: BTreeMap<String, f64>,
    /// Measured quantities and the bounds they were compared with.
    pub values: BTreeMap<String, f64>,
    pub passed: bool,
    /// Declared slack (the largest one when several comparisons are made).
    pub slack: f64,
    /// Largest violation observed before slack; `passed` iff every
    /// comparison's violation is within its own slack.
    pub slack_used: f64,
    /// Wall time, or 0 when timing is off.
    pub runtime_ms: u64,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub spaces: Vec<String>,
    pub alpha_grid: Vec<f64>,
    pub p_grid: Vec<f64>,
    pub q_grid: Vec<f64>,
    pub strategy: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub profile: Profile,
    pub config: SuiteConfig,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs one check at the thorough profile. `params` may carry `alpha`, `p`,
/// `q`, `t`, `seed` and `pairs` as the check requires.
pub fn run_check(check_id: &str, space: &NormedSpace, params: &BTreeMap<String, f64>) -> Result<CheckResult> {
    run_check_with(check_id, space, params, Profile::Thorough, false)
}

/// Runs one check with an explicit profile; `timing` fills `runtime_ms`.
pub fn run_check_with(
    check_id: &str,
    space: &NormedSpace,
    params: &BTreeMap<String, f64>,
    profile: Profile,
    timing: bool,
) -> Result<CheckResult> {
    let memo = Memo::new(profile.strategy(checks::seed_of(params)));
    run_with_memo(check_id, space, params, &memo, timing)
}

fn run_with_memo(
    check_id: &str,
    space: &NormedSpace,
    params: &BTreeMap<String, f64>,
    memo: &Memo,
    timing: bool,
) -> Result<CheckResult> {
    let start = Instant::now();
    let outcome = checks::dispatch(check_id, space, params, memo)?;
    let runtime_ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(CheckResult {
        check_id: check_id.to_string(),
        space: space.to_string(),
        params: params.clone(),
        values: outcome.values,
        passed: outcome.passed,
        slack: outcome.slack,
        slack_used: outcome.slack_used,
        runtime_ms,
        notes: outcome.notes,
    })
}

fn param_cmp(a: &BTreeMap<String, f64>, b: &BTreeMap<String, f64>) -> Ordering {
    let mut ia = a.iter();
    let mut ib = b.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some((ka, va)), Some((kb, vb))) => {
                let o = ka.cmp(kb).then_with(|| va.total_cmp(vb));
                if o != Ordering::Equal {
                    return o;
                }
            }
        }
    }
}

/// Runs the whole catalog over `spaces` on the default parameter grids.
pub fn run_suite(spaces: &[NormedSpace], seed: u64, profile: Profile) -> Result<SuiteReport> {
    run_suite_with(spaces, seed, profile, false)
}

/// [`run_suite`] with optional wall-clock timing. Timed reports are not
/// byte-reproducible.
pub fn run_suite_with(spaces: &[NormedSpace], seed: u64, profile: Profile, timing: bool) -> Result<SuiteReport> {
    run_suite_checks(spaces, seed, profile, timing, &CHECK_IDS)
}

/// [`run_suite_with`] restricted to the checks named in `ids`.
pub fn run_suite_checks(
    spaces: &[NormedSpace],
    seed: u64,
    profile: Profile,
    timing: bool,
    ids: &[&str],
) -> Result<SuiteReport> {
    if spaces.is_empty() {
        return Err(Error::EmptySpaceList);
    }
    if let Some(bad) = ids.iter().find(|id| !CHECK_IDS.contains(id)) {
        return Err(Error::UnknownCheck(bad.to_string()));
    }
    let tasks: Vec<(&'static str, &NormedSpace, BTreeMap<String, f64>)> = spaces
        .iter()
        .flat_map(|space| {
            checks::suite_tasks(space, seed)
                .into_iter()
                .filter(|(id, _)| ids.contains(id))
                .map(move |(id, params)| (id, space, params))
        })
        .collect();

    let memo = Memo::new(profile.strategy(seed));
    let mut results: Vec<CheckResult> = tasks
        .par_iter()
        .map(|(id, space, params)| {
            run_with_memo(id, space, params, &memo, timing).unwrap_or_else(|e| CheckResult {
                check_id: id.to_string(),
                space: space.to_string(),
                params: params.clone(),
                values: BTreeMap::new(),
                passed: false,
                slack: 0.0,
                slack_used: f64::INFINITY,
                runtime_ms: 0,
                notes: vec![format!("error: {e}")],
            })
        })
        .collect();
    results.sort_by(|a, b| {
        a.check_id
            .cmp(&b.check_id)
            .then_with(|| a.space.cmp(&b.space))
            .then_with(|| param_cmp(&a.params, &b.params))
    });

    let passed = results.iter().filter(|r| r.passed).count();
    Ok(SuiteReport {
        seed,
        profile,
        config: SuiteConfig {
            spaces: spaces.iter().map(|s| s.to_string()).collect(),
            alpha_grid: ALPHA_GRID.to_vec(),
            p_grid: P_GRID.to_vec(),
            q_grid: Q_GRID.to_vec(),
            strategy: profile.strategy(seed).to_string(),
        },
        summary: Summary {
            total: results.len(),
            passed,
            failed: results.len() - passed,
        },
        checks: results,
    })
}
