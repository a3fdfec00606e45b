//! Audits a strategy against the cube, hard instances, and replays on
//! instance pairs built from the requirements it left uncovered.

use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::adversary::{default_pair, requirement_coverage, Requirement};
use super::strategy::{Strategy, Verdict};
use super::{counting_wrapper, explicit_oracle, Transcript};
use crate::cuboid::{cuboid_of, make_hard_instance, Point, PointSet};
use crate::error::{Error, Result};
use crate::polyhedral::{is_cube_ideal, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AuditConfig {
    /// Uncovered requirements replayed, in `(q, p)` order.
    pub requirement_sample: usize,
    /// Hard instances `S_(p:i,j,k)` run; all of them when there are fewer.
    pub hard_sample: usize,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            requirement_sample: 16,
            hard_sample: 8,
            seed: 0,
            limits: Limits::default(),
        }
    }
}

/// One strategy run on one cuboid instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunRecord {
    pub instance: String,
    pub expected: Verdict,
    pub verdict: Option<Verdict>,
    pub correct: bool,
    pub queries: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayResult {
    pub bad: RunRecord,
    pub good: RunRecord,
    pub transcripts_diverge: bool,
    /// The strategy answered wrongly on at least one side of the pair.
    pub caught: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UncoveredEntry {
    pub q: String,
    pub p: String,
    pub replay_result: ReplayResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub strategy: String,
    pub n: usize,
    pub seed: u64,
    pub config: AuditConfig,
    pub verdicts: Vec<RunRecord>,
    pub query_counts: Vec<usize>,
    pub min_queries: usize,
    pub cube_queries: usize,
    pub requirements_total: usize,
    pub requirements_covered: usize,
    pub uncovered_total: usize,
    pub uncovered: Vec<UncoveredEntry>,
    pub pass: bool,
}

struct Outcome {
    record: RunRecord,
    transcript: Transcript,
}

fn run_on(
    strategy: &dyn Strategy,
    label: String,
    s: &PointSet,
    limits: &Limits,
) -> Result<Outcome> {
    let expected = Verdict::from_ideal(is_cube_ideal(s, limits)?.cube_ideal);
    let oracle = counting_wrapper(explicit_oracle(cuboid_of(s)));
    let result = catch_unwind(AssertUnwindSafe(|| strategy.run(&oracle)));
    let (verdict, error) = match result {
        Ok(Ok(v)) => (Some(v), None),
        Ok(Err(e)) => (None, Some(e.to_string())),
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            let crash = Error::StrategyCrash {
                strategy: strategy.name().into(),
                message,
            };
            (None, Some(crash.to_string()))
        }
    };
    let record = RunRecord {
        instance: label,
        expected,
        verdict,
        correct: verdict == Some(expected),
        queries: oracle.count(),
        error,
    };
    Ok(Outcome {
        record,
        transcript: oracle.into_transcript(),
    })
}

/// Hard-instance tuples `(p, i, j, k)` with `i < j < k`: every one when
/// there are at most `sample`, otherwise a seeded sample in sorted order.
pub fn hard_tuples(n: usize, sample: usize, seed: u64) -> Vec<(Point, usize, usize, usize)> {
    let mut all = Vec::new();
    for p in Point::all(n) {
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    all.push((p, i, j, k));
                }
            }
        }
    }
    if all.len() <= sample {
        return all;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<_> = all.choose_multiple(&mut rng, sample).copied().collect();
    picked.sort();
    picked
}

/// Runs `strategy` on `cuboid({0,1}^n)`, measures requirement coverage of
/// that transcript, replays uncovered requirements on their instance
/// pairs, and checks a sample of hard instances.
pub fn audit_strategy(
    strategy: &dyn Strategy,
    n: usize,
    config: &AuditConfig,
) -> Result<AuditReport> {
    if !(3..=5).contains(&n) {
        return Err(Error::BadCoordinates(format!(
            "audits run for 3 <= n <= 5, got {n}"
        )));
    }
    let limits = &config.limits;
    let cube = run_on(strategy, format!("cube({n})"), &PointSet::full(n), limits)?;
    let coverage = requirement_coverage(&cube.transcript, n);

    let replays: Vec<UncoveredEntry> = coverage
        .uncovered
        .iter()
        .take(config.requirement_sample)
        .collect::<Vec<&Requirement>>()
        .par_iter()
        .map(|req| {
            let pair = default_pair(**req)?;
            let tag = format!("p={},i={},j={},k={}", pair.p, pair.i, pair.j, pair.k);
            let bad = run_on(strategy, format!("S({tag})"), &pair.bad, limits)?;
            let good = run_on(strategy, format!("S({tag})+{}", pair.q), &pair.good, limits)?;
            let transcripts_diverge = bad.transcript != good.transcript;
            let caught = !bad.record.correct || !good.record.correct;
            Ok(UncoveredEntry {
                q: req.q.to_string(),
                p: req.p.to_string(),
                replay_result: ReplayResult {
                    bad: bad.record,
                    good: good.record,
                    transcripts_diverge,
                    caught,
                },
            })
        })
        .collect::<Result<_>>()?;

    let hard: Vec<RunRecord> = hard_tuples(n, config.hard_sample, config.seed)
        .par_iter()
        .map(|&(p, i, j, k)| {
            let s = make_hard_instance(n, p, i, j, k)?;
            Ok(run_on(strategy, format!("S(p={p},i={i},j={j},k={k})"), &s, limits)?.record)
        })
        .collect::<Result<_>>()?;

    let mut verdicts = vec![cube.record.clone()];
    verdicts.extend(hard);
    for r in &replays {
        verdicts.push(r.replay_result.bad.clone());
        verdicts.push(r.replay_result.good.clone());
    }
    let query_counts: Vec<usize> = verdicts.iter().map(|r| r.queries).collect();
    let pass = verdicts.iter().all(|r| r.correct);
    Ok(AuditReport {
        strategy: strategy.name().into(),
        n,
        seed: config.seed,
        config: *config,
        min_queries: query_counts.iter().copied().min().unwrap_or(0),
        query_counts,
        verdicts,
        cube_queries: cube.record.queries,
        requirements_total: coverage.covered.len() + coverage.uncovered.len(),
        requirements_covered: coverage.covered.len(),
        uncovered_total: coverage.uncovered.len(),
        uncovered: replays,
        pass,
    })
}
