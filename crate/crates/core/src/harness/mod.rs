//! Executable verification of the supported identities.
//!
//! Every check recomputes both sides of an identity over a deterministic
//! parameter grid and records PASS or FAIL per grid tuple, with the first
//! mismatching coefficient on failure. FAIL is a first-class, reportable
//! outcome, not an error: several source displays are checked both
//! as written (`statement`) and in the form their own derivation produces
//! (`proof`), and the report documents which reading holds.
//!
//! Where both variants of an ambiguous identity pass the default grid,
//! the grid is enlarged automatically until they separate or a ceiling is
//! reached; if they never separate, both entries are tagged
//! `indistinguishable-at-scale`.

mod checks_bernoulli;
mod checks_euler;
mod checks_symmetrized;
mod grids;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;

/// Configuration for a verification run.
#[derive(Clone, Debug)]
pub struct HarnessConfig {
    /// Highest index `n` checked on the default grids.
    pub n_max: usize,
    /// Engine truncation order recorded in the report.
    pub order: usize,
    /// Recorded for reproducibility bookkeeping; the grids themselves are
    /// deterministic and do not consume randomness.
    pub seed: u64,
    /// Run checks in parallel (the report is identical either way).
    pub parallel: bool,
    /// How many times an ambiguous check may enlarge its grid while both
    /// variants still pass.
    pub enlargement_ceiling: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            n_max: 8,
            order: 12,
            seed: 0,
            parallel: true,
            enlargement_ceiling: 2,
        }
    }
}

/// Grid scale handed to each check; enlargement bumps `n_max`.
#[derive(Clone, Copy, Debug)]
pub struct GridCfg {
    pub n_max: usize,
}

/// Which reading of an ambiguous identity to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Statement,
    Proof,
}

/// First differing coefficient of a failed case.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Mismatch {
    pub n: usize,
    pub m: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one grid tuple.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub params: BTreeMap<String, String>,
    pub outcome: String,
    pub first_mismatch: Option<Mismatch>,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        self.outcome == "PASS"
    }
}

/// One identity under one reading, with its per-tuple outcomes.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub id: String,
    pub variant: String,
    pub cases: Vec<CaseOutcome>,
}

impl IdentityCheck {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(CaseOutcome::passed)
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

/// The full verification report; serializes to the stable JSON schema.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub engine: String,
    pub order: usize,
    pub checks: Vec<IdentityCheck>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// True iff every identity id has at least one fully passing variant.
    pub fn every_identity_has_passing_variant(&self) -> bool {
        let mut by_id: BTreeMap<&str, bool> = BTreeMap::new();
        for check in &self.checks {
            let entry = by_id.entry(&check.id).or_insert(false);
            *entry = *entry || check.all_passed();
        }
        by_id.values().all(|&ok| ok)
    }

    /// Ids of identities whose as-written form fails somewhere.
    pub fn statement_failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| c.variant.starts_with("statement") && !c.all_passed())
            .map(|c| c.id.clone())
            .collect()
    }
}

/// Helper to assemble a case outcome from rows of
/// `(n, optional m, lhs, rhs)`.
pub(crate) fn case_from_rows(
    params: BTreeMap<String, String>,
    rows: impl IntoIterator<Item = (usize, Option<usize>, Rational, Rational)>,
) -> CaseOutcome {
    for (n, m, lhs, rhs) in rows {
        if lhs != rhs {
            return CaseOutcome {
                params,
                outcome: "FAIL".into(),
                first_mismatch: Some(Mismatch {
                    n,
                    m,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }),
            };
        }
    }
    CaseOutcome {
        params,
        outcome: "PASS".into(),
        first_mismatch: None,
    }
}

pub(crate) fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// A registered check: a single reading or a statement/proof pair.
pub(crate) enum CheckDef {
    Single(&'static str, fn(&GridCfg) -> Vec<CaseOutcome>),
    Dual(&'static str, fn(&GridCfg, Variant) -> Vec<CaseOutcome>),
}

impl CheckDef {
    pub(crate) fn id(&self) -> &'static str {
        match self {
            CheckDef::Single(id, _) => id,
            CheckDef::Dual(id, _) => id,
        }
    }

    fn run(&self, cfg: &HarnessConfig) -> Vec<IdentityCheck> {
        let grid = GridCfg { n_max: cfg.n_max };
        match self {
            CheckDef::Single(id, f) => vec![IdentityCheck {
                id: (*id).to_string(),
                variant: "n/a".to_string(),
                cases: f(&grid),
            }],
            CheckDef::Dual(id, f) => {
                let mut grid = grid;
                let mut statement = f(&grid, Variant::Statement);
                let mut proof = f(&grid, Variant::Proof);
                let mut rounds = 0;
                let all = |cases: &Vec<CaseOutcome>| cases.iter().all(CaseOutcome::passed);
                // variant exclusivity: enlarge while indistinguishable
                while all(&statement) && all(&proof) && rounds < cfg.enlargement_ceiling {
                    grid.n_max += 2;
                    statement = f(&grid, Variant::Statement);
                    proof = f(&grid, Variant::Proof);
                    rounds += 1;
                }
                let suffix = if all(&statement) && all(&proof) {
                    "/indistinguishable-at-scale"
                } else {
                    ""
                };
                vec![
                    IdentityCheck {
                        id: (*id).to_string(),
                        variant: format!("statement{}", suffix),
                        cases: statement,
                    },
                    IdentityCheck {
                        id: (*id).to_string(),
                        variant: format!("proof{}", suffix),
                        cases: proof,
                    },
                ]
            }
        }
    }
}

fn registry() -> Vec<CheckDef> {
    let mut defs = Vec::new();
    defs.extend(checks_euler::defs());
    defs.extend(checks_bernoulli::defs());
    defs.extend(checks_symmetrized::defs());
    defs
}

/// Ids of every registered check, sorted.
pub fn check_ids() -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = registry().iter().map(CheckDef::id).collect();
    ids.sort_unstable();
    ids
}

/// Runs every check (or the selected subset) and assembles the report.
///
/// The report is a deterministic function of the configuration: checks
/// are sorted by id and variant regardless of execution order, so
/// parallel and serial runs serialize identically.
pub fn run(cfg: &HarnessConfig, only_id: Option<&str>) -> Option<VerificationReport> {
    let defs: Vec<CheckDef> = registry()
        .into_iter()
        .filter(|d| only_id.map_or(true, |id| d.id() == id))
        .collect();
    if defs.is_empty() {
        return None;
    }
    let mut checks: Vec<IdentityCheck> = if cfg.parallel {
        defs.par_iter().flat_map_iter(|d| d.run(cfg)).collect()
    } else {
        defs.iter().flat_map(|d| d.run(cfg)).collect()
    };
    checks.sort_by(|a, b| (a.id.as_str(), a.variant.as_str()).cmp(&(b.id.as_str(), b.variant.as_str())));
    let pass = checks
        .iter()
        .map(|c| c.cases.iter().filter(|k| k.passed()).count())
        .sum();
    let fail = checks
        .iter()
        .map(|c| c.cases.iter().filter(|k| !k.passed()).count())
        .sum();
    Some(VerificationReport {
        engine: format!("polybe {}", env!("CARGO_PKG_VERSION")),
        order: cfg.order,
        checks,
        summary: Summary { pass, fail },
    })
}

/// Runs every check with the given configuration.
pub fn run_all(cfg: &HarnessConfig) -> VerificationReport {
    run(cfg, None).expect("registry is nonempty")
}
