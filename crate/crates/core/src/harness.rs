//! Randomized batteries: draw a polynomial and a point per trial, run one
//! check, and aggregate the outcomes into JSON-lines records and a summary.
//!
//! Trial `i` draws from its own stream `sample_rng(seed, i)`, so results do
//! not depend on the thread schedule.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cones::{renegar_nesting_check, sample_in_cone_matrix, sample_in_cone_vector, CONE_TOL};
use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::inequalities::{
    check_diag_corollary, check_fischer_hadamard, check_koteljanskii_all, check_monotone_segment, check_nlc_battery,
    InequalityRecord, Tolerance, DEFAULT_GRID_POINTS,
};
use crate::permwalk::permutation_walk;
use crate::poly::MultiAffinePoly;
use crate::rng;
use crate::spectral::{check_majorization_rescaled_ek, schur_horn_gap, spectral_containment_search};
use crate::symmat::{Partition, SymMatrix};

/// Allowed excess of the orthogonal maximum over the permutation maximum.
pub const SCHUR_HORN_TOL: f64 = 1e-6;
/// Prefix-sum tolerance for root majorization.
pub const MAJORIZATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Fischer,
    Koteljanskii,
    Nlc,
    Diag,
    Monotone,
    Spectral,
    SchurHorn,
    Majorization,
    Permwalk,
    Renegar,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Fischer,
        Check::Koteljanskii,
        Check::Nlc,
        Check::Diag,
        Check::Monotone,
        Check::Spectral,
        Check::SchurHorn,
        Check::Majorization,
        Check::Permwalk,
        Check::Renegar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Fischer => "fischer",
            Check::Koteljanskii => "koteljanskii",
            Check::Nlc => "nlc",
            Check::Diag => "diag",
            Check::Monotone => "monotone",
            Check::Spectral => "spectral",
            Check::SchurHorn => "schur-horn",
            Check::Majorization => "majorization",
            Check::Permwalk => "permwalk",
            Check::Renegar => "renegar",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown check '{s}'")))
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    pub tol: Tolerance,
    pub cone_tol: f64,
    pub out: Option<PathBuf>,
    pub poly_path: Option<PathBuf>,
    pub matrix_path: Option<PathBuf>,
}

impl RunConfig {
    /// Randomized commands always take an explicit seed.
    pub fn new(seed: u64, trials: usize) -> Self {
        Self {
            seed,
            trials,
            tol: Tolerance::default(),
            cone_tol: CONE_TOL,
            out: None,
            poly_path: None,
            matrix_path: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Violation,
    /// The drawn point missed the cone; not evidence about the check.
    Precondition,
    /// A numerical routine gave up.
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatteryRecord {
    pub index: usize,
    pub sample: String,
    pub status: Status,
    pub slack: Option<f64>,
    pub relative_slack: Option<f64>,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatterySummary {
    pub check: Check,
    pub family: Family,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    pub violations: usize,
    pub preconditions: usize,
    pub errors: usize,
    pub min_slack: Option<f64>,
    pub min_relative_slack: Option<f64>,
}

impl BatterySummary {
    pub fn clean(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatteryReport {
    pub records: Vec<BatteryRecord>,
    pub summary: BatterySummary,
}

impl BatteryReport {
    /// One JSON object per record, then `{"summary": …}`.
    pub fn write_jsonl(&self, mut w: impl Write) -> std::io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut w, r)?;
            writeln!(w)?;
        }
        serde_json::to_writer(&mut w, &json!({ "summary": self.summary }))?;
        writeln!(w)
    }
}

struct Outcome {
    slack: f64,
    scale: f64,
    ok: bool,
    detail: Value,
}

impl Outcome {
    fn from_records(records: &[InequalityRecord], detail: Value) -> Self {
        let worst = records
            .iter()
            .min_by(|a, b| a.relative_slack().total_cmp(&b.relative_slack()));
        match worst {
            Some(r) => Outcome {
                slack: r.slack,
                scale: r.lhs.abs().max(r.rhs.abs()),
                ok: records.iter().all(|r| r.verdict),
                detail,
            },
            None => Outcome {
                slack: 0.0,
                scale: 0.0,
                ok: true,
                detail,
            },
        }
    }
}

/// Margin for the cone sample of trial `i`: every fifth point sits on the
/// boundary, the rest inside.
fn margin(i: usize, r: &mut impl Rng) -> f64 {
    if i % 5 == 0 {
        0.0
    } else {
        r.random_range(0.01..0.5)
    }
}

fn run_one(check: Check, p: &MultiAffinePoly<f64>, i: usize, cfg: &RunConfig, r: &mut rng::SampleRng) -> Result<Outcome> {
    let n = p.n();
    let trial_seed = rng::derive_seed(cfg.seed, i as u64);
    let tol = cfg.tol;
    match check {
        Check::Fischer => {
            let a = sample_in_cone_matrix(p, margin(i, r), r)?;
            let part = Partition::random(n, r);
            let rec = check_fischer_hadamard(p, &a, &part, tol)?;
            let detail = json!({ "partition": part.blocks(), "lhs": rec.lhs, "rhs": rec.rhs });
            Ok(Outcome::from_records(&[rec], detail))
        }
        Check::Koteljanskii => {
            let a = sample_in_cone_matrix(p, margin(i, r), r)?;
            let recs = check_koteljanskii_all(p, &a, tol)?;
            let detail = json!({ "pairs": recs.len() });
            Ok(Outcome::from_records(&recs, detail))
        }
        Check::Nlc => {
            let a = sample_in_cone_matrix(p, margin(i, r), r)?;
            let rep = check_nlc_battery(p, &a, tol)?;
            let mut out = Outcome::from_records(&rep.lattice, Value::Null);
            let scale = rep.coefficients.iter().fold(0.0f64, |m, (_, c)| m.max(c.abs()));
            if rep.min_coefficient < out.slack || rep.lattice.is_empty() {
                out.slack = rep.min_coefficient;
                out.scale = scale;
            }
            out.ok &= rep.coefficients_nonnegative;
            out.detail = json!({ "min_coefficient": rep.min_coefficient, "pairs": rep.lattice.len() });
            Ok(out)
        }
        Check::Diag => {
            let a = sample_in_cone_matrix(p, margin(i, r), r)?;
            let rep = check_diag_corollary(p, &a, tol)?;
            let mut out = Outcome::from_records(std::slice::from_ref(&rep.record), Value::Null);
            out.ok = rep.holds();
            out.detail = json!({ "lhs": rep.record.lhs, "rhs": rep.record.rhs, "diagonal_cone": rep.diagonal_cone.verdict });
            Ok(out)
        }
        Check::Monotone => {
            let a = sample_in_cone_matrix(p, margin(i, r), r)?;
            let part = Partition::random(n, r);
            let rep = check_monotone_segment(p, &a, &part, DEFAULT_GRID_POINTS, tol)?;
            Ok(Outcome {
                slack: rep.min_step,
                scale: rep.values.iter().fold(0.0f64, |m, v| m.max(v.abs())),
                ok: rep.holds,
                detail: json!({ "partition": part.blocks(), "start": rep.start(), "end": rep.end() }),
            })
        }
        Check::Spectral => {
            let a = sample_in_cone_matrix(p, margin(i, r), r)?;
            let res = spectral_containment_search(p, &a, cfg.cone_tol, 2000, trial_seed)?;
            let slack = res.cone_report.as_ref().map_or(f64::NEG_INFINITY, |c| c.slack);
            Ok(Outcome {
                slack,
                scale: 0.0,
                ok: res.found(),
                detail: json!({
                    "eigenvalues": res.eigenvalues,
                    "permutation": res.found_permutation,
                    "tested": res.permutations_tested,
                    "retested": res.retested,
                    "confirmed_failure": res.confirmed_failure,
                }),
            })
        }
        Check::SchurHorn => {
            let x = SymMatrix::random_with(n, r);
            let res = schur_horn_gap(p, &x, 20, 60, trial_seed)?;
            let slack = res.perm_max - res.orth_max_lower_bound;
            Ok(Outcome {
                slack,
                scale: res.perm_max.abs(),
                ok: slack >= -SCHUR_HORN_TOL * (1.0 + res.perm_max.abs()),
                detail: json!({
                    "perm_max": res.perm_max,
                    "orth_max_lower_bound": res.orth_max_lower_bound,
                    "search_max": res.search_max,
                }),
            })
        }
        Check::Majorization => {
            let x = SymMatrix::random_with(n, r);
            let d = rng::positive_vec(r, n, 0.5);
            let k = p.degree().max(1);
            let rep = check_majorization_rescaled_ek(&x, &d, k, MAJORIZATION_TOL)?;
            Ok(Outcome {
                slack: 0.0,
                scale: 0.0,
                ok: rep.holds,
                detail: json!({ "k": k, "roots": rep.roots, "diagonal_roots": rep.diagonal_roots }),
            })
        }
        Check::Permwalk => {
            let ed = MultiAffinePoly::elementary(n, p.degree())?;
            let v = sample_in_cone_vector(&ed, margin(i, r), r)?;
            let trace = permutation_walk(p, &v, crate::cones::BOUNDARY_TOL)?;
            let slack = trace.final_report.as_ref().map_or(f64::NEG_INFINITY, |c| c.slack);
            let swaps = trace
                .steps
                .iter()
                .filter(|s| s.action == crate::permwalk::StepAction::Swapped)
                .count();
            Ok(Outcome {
                slack,
                scale: 0.0,
                ok: trace.success,
                detail: json!({ "tau": trace.tau, "swaps": swaps, "steps": trace.steps.len() }),
            })
        }
        Check::Renegar => {
            let rep = renegar_nesting_check(p, 8, trial_seed)?;
            Ok(Outcome {
                slack: rep.min_slack,
                scale: 0.0,
                ok: rep.violations == 0,
                detail: json!({ "samples": rep.samples, "violations": rep.violations }),
            })
        }
    }
}

/// Runs `cfg.trials` independent trials of `check` on polynomials drawn from
/// `family`. Records come back sorted by trial index.
pub fn run_battery(check: Check, family: &FamilySpec, cfg: &RunConfig) -> Result<BatteryReport> {
    if cfg.trials == 0 {
        return Err(Error::Parameter("trials must be positive".into()));
    }
    let records: Vec<BatteryRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let mut r = rng::sample_rng(cfg.seed, i as u64);
            let sample = family.sample(&mut r)?;
            let record = match run_one(check, &sample.poly, i, cfg, &mut r) {
                Ok(o) => BatteryRecord {
                    index: i,
                    sample: sample.label,
                    status: if o.ok { Status::Pass } else { Status::Violation },
                    slack: o.slack.is_finite().then_some(o.slack),
                    relative_slack: o.slack.is_finite().then(|| o.slack / (1.0 + o.scale)),
                    detail: o.detail,
                },
                Err(e) => BatteryRecord {
                    index: i,
                    sample: sample.label,
                    status: if matches!(e, Error::OutsideCone { .. }) {
                        Status::Precondition
                    } else {
                        Status::Error
                    },
                    slack: None,
                    relative_slack: None,
                    detail: json!({ "error": e.to_string() }),
                },
            };
            Ok(record)
        })
        .collect::<Result<_>>()?;
    let count = |s: Status| records.iter().filter(|r| r.status == s).count();
    let min_of = |f: fn(&BatteryRecord) -> Option<f64>| {
        records
            .iter()
            .filter_map(f)
            .fold(None, |m: Option<f64>, v| Some(m.map_or(v, |m| m.min(v))))
    };
    let summary = BatterySummary {
        check,
        family: family.family,
        seed: cfg.seed,
        trials: cfg.trials,
        passed: count(Status::Pass),
        violations: count(Status::Violation),
        preconditions: count(Status::Precondition),
        errors: count(Status::Error),
        min_slack: min_of(|r| r.slack),
        min_relative_slack: min_of(|r| r.relative_slack),
    };
    Ok(BatteryReport { records, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(check: Check, family: Family, trials: usize, seed: u64) -> BatteryReport {
        run_battery(check, &FamilySpec::new(family).with_max_n(5), &RunConfig::new(seed, trials)).unwrap()
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }

    #[test]
    fn fischer_battery_is_clean_and_ordered() {
        let rep = run(Check::Fischer, Family::Ek, 20, 7);
        assert!(rep.summary.clean());
        assert_eq!(rep.summary.passed + rep.summary.preconditions + rep.summary.errors, 20);
        assert!(rep.records.iter().enumerate().all(|(i, r)| r.index == i));
    }

    #[test]
    fn output_is_deterministic() {
        let a = run(Check::Koteljanskii, Family::Tree, 6, 11);
        let b = run(Check::Koteljanskii, Family::Tree, 6, 11);
        let (mut x, mut y) = (Vec::new(), Vec::new());
        a.write_jsonl(&mut x).unwrap();
        b.write_jsonl(&mut y).unwrap();
        assert_eq!(x, y);
        let last = String::from_utf8(x).unwrap().lines().last().unwrap().to_string();
        assert!(last.starts_with("{\"summary\""));
    }

    #[test]
    fn every_check_runs() {
        for c in Check::ALL {
            let rep = run(c, Family::Ek, 3, 5);
            assert!(rep.summary.clean(), "{c}: {:?}", rep.records);
        }
    }

    #[test]
    fn zero_trials_rejected() {
        let cfg = RunConfig::new(1, 0);
        assert!(run_battery(Check::Diag, &FamilySpec::new(Family::Ek), &cfg).is_err());
    }
}
