//! Sweep over the hard family: each `S_(p:i,j,k)` must give a non-ideal
//! cuboid with a Δ3 minor, and each of its 15 proper supersets an ideal one.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cuboid::{claw, cuboid_of, make_hard_instance, Point};
use crate::error::{Error, Result};
use crate::polyhedral::{is_ideal, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremConfig {
    /// Centres `p` checked when `n > 3`; all `2^n` are used at `n = 3`
    /// or when the sample covers the cube.
    pub point_sample: usize,
    pub seed: u64,
    pub limits: Limits,
    /// Negative control: put the claw centre back into the "bad" set, so
    /// that the non-ideal assertion must fail.
    pub inject_fault: bool,
}

impl Default for TheoremConfig {
    fn default() -> Self {
        Self {
            point_sample: 4,
            seed: 0,
            limits: Limits::default(),
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleResult {
    pub p: String,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub bad_ideal: bool,
    pub bad_has_delta3_minor: bool,
    pub supersets_checked: usize,
    pub supersets_ideal: usize,
    pub supersets_with_delta3_minor: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub seed: u64,
    pub config: TheoremConfig,
    pub polyhedral_checks: usize,
    pub tuples: Vec<TupleResult>,
    pub pass: bool,
}

/// Centres for the sweep in code order.
pub fn sweep_points(n: usize, config: &TheoremConfig) -> Vec<Point> {
    let all: Vec<Point> = Point::all(n).collect();
    if n == 3 || config.point_sample >= all.len() {
        return all;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut picked: Vec<Point> = all
        .choose_multiple(&mut rng, config.point_sample)
        .copied()
        .collect();
    picked.sort();
    picked
}

pub fn check_tuple(
    n: usize,
    p: Point,
    ijk: [usize; 3],
    config: &TheoremConfig,
) -> Result<TupleResult> {
    let [i, j, k] = ijk;
    let removed = claw(n, p, i, j, k)?;
    let mut bad = make_hard_instance(n, p, i, j, k)?;
    if config.inject_fault {
        bad = bad.with(p);
    }
    let bad_cuboid = cuboid_of(&bad);
    let bad_ideal = is_ideal(&bad_cuboid, &config.limits)?.ideal;
    let bad_has_delta3_minor = bad_cuboid.has_delta3_minor().is_some();

    let supersets: Vec<u32> = (1u32..16).collect();
    let outcomes: Vec<(bool, bool)> = supersets
        .par_iter()
        .map(|&chosen| {
            let mut s = bad.clone();
            for (idx, q) in removed.iter().enumerate() {
                if chosen >> idx & 1 == 1 {
                    s = s.with(*q);
                }
            }
            let c = cuboid_of(&s);
            Ok((
                is_ideal(&c, &config.limits)?.ideal,
                c.has_delta3_minor().is_some(),
            ))
        })
        .collect::<Result<_>>()?;
    let supersets_ideal = outcomes.iter().filter(|o| o.0).count();
    let supersets_with_delta3_minor = outcomes.iter().filter(|o| o.1).count();
    let pass = !bad_ideal
        && bad_has_delta3_minor
        && supersets_ideal == outcomes.len()
        && supersets_with_delta3_minor == 0;
    Ok(TupleResult {
        p: p.to_string(),
        i,
        j,
        k,
        bad_ideal,
        bad_has_delta3_minor,
        supersets_checked: outcomes.len(),
        supersets_ideal,
        supersets_with_delta3_minor,
        pass,
    })
}

/// Checks every triple `i < j < k` at each sweep centre.
pub fn verify_theorem(n: usize, config: &TheoremConfig) -> Result<TheoremReport> {
    if !(3..=4).contains(&n) {
        return Err(Error::BadCoordinates(format!(
            "theorem sweeps run for n = 3 or 4, got {n}"
        )));
    }
    let mut jobs = Vec::new();
    for p in sweep_points(n, config) {
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    jobs.push((p, [i, j, k]));
                }
            }
        }
    }
    let tuples: Vec<TupleResult> = jobs
        .par_iter()
        .map(|&(p, ijk)| check_tuple(n, p, ijk, config))
        .collect::<Result<_>>()?;
    let pass = tuples.iter().all(|t| t.pass);
    Ok(TheoremReport {
        n,
        seed: config.seed,
        config: *config,
        polyhedral_checks: tuples.iter().map(|t| 1 + t.supersets_checked).sum(),
        tuples,
        pass,
    })
}
