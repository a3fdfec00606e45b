//! Deterministic idealness testers that see their input only through a
//! filter oracle.

use std::fmt;

use super::FilterOracle;
use crate::clutter::{minimal_sets, Clutter, SubsetMask};
use crate::cuboid::{Point, PointSet};
use crate::error::{Error, Result};
use crate::polyhedral::{is_cube_ideal, is_ideal, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Ideal,
    NonIdeal,
}

impl Verdict {
    pub fn from_ideal(ideal: bool) -> Self {
        if ideal {
            Verdict::Ideal
        } else {
            Verdict::NonIdeal
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Ideal => "ideal",
            Verdict::NonIdeal => "non-ideal",
        })
    }
}

/// An algorithm deciding idealness from oracle access alone.
///
/// Implementations must be deterministic: equal oracles yield equal
/// transcripts.
pub trait Strategy: Send + Sync {
    fn name(&self) -> &str;
    fn run(&self, oracle: &dyn FilterOracle) -> Result<Verdict>;
}

/// Queries every subset, rebuilds the clutter from the minimal positive
/// sets and decides idealness exactly. Makes exactly `2^|V|` calls.
#[derive(Clone, Debug)]
pub struct ReferenceTester {
    pub limits: Limits,
    pub max_ground: usize,
}

impl Default for ReferenceTester {
    fn default() -> Self {
        Self {
            limits: Limits::default(),
            max_ground: 12,
        }
    }
}

impl Strategy for ReferenceTester {
    fn name(&self) -> &str {
        "reference"
    }

    fn run(&self, oracle: &dyn FilterOracle) -> Result<Verdict> {
        let ground = oracle.ground_size();
        if ground > self.max_ground {
            return Err(Error::SizeLimit {
                what: "exhaustive oracle reconstruction",
                required: 1u128 << ground,
                budget: 1u128 << self.max_ground,
            });
        }
        let positives: Vec<SubsetMask> = SubsetMask::all(ground)
            .filter(|&x| oracle.query(x))
            .collect();
        let clutter = Clutter::from_minimal(ground, &minimal_sets(&positives));
        Ok(Verdict::from_ideal(is_ideal(&clutter, &self.limits)?.ideal))
    }
}

/// Queries the `|V|` singletons and then answers "ideal" regardless.
#[derive(Clone, Copy, Debug, Default)]
pub struct Cheater;

impl Strategy for Cheater {
    fn name(&self) -> &str {
        "cheater"
    }

    fn run(&self, oracle: &dyn FilterOracle) -> Result<Verdict> {
        let ground = oracle.ground_size();
        for e in 1..=ground {
            oracle.query(SubsetMask::empty(ground).with(e));
        }
        Ok(Verdict::Ideal)
    }
}

/// Treats the input as a cuboid over pairs `{2i-1, 2i}`: queries exactly
/// the sets `C(q)` for all `2^n` points, recovers the point set, and
/// decides cube-idealness through induced clutters. Only correct on cuboids.
#[derive(Clone, Debug, Default)]
pub struct VertexProber {
    pub limits: Limits,
}

impl Strategy for VertexProber {
    fn name(&self) -> &str {
        "vertex-prober"
    }

    fn run(&self, oracle: &dyn FilterOracle) -> Result<Verdict> {
        let ground = oracle.ground_size();
        if !ground.is_multiple_of(2) || ground == 0 {
            return Err(Error::BadCoordinates(format!(
                "vertex prober needs an even, nonzero ground set, got {ground}"
            )));
        }
        let n = ground / 2;
        let points: Vec<Point> = Point::all(n).filter(|q| oracle.query(q.member())).collect();
        let s = PointSet::new(n, points)?;
        Ok(Verdict::from_ideal(
            is_cube_ideal(&s, &self.limits)?.cube_ideal,
        ))
    }
}

pub const BUILTIN_STRATEGIES: [&str; 3] = ["reference", "cheater", "vertex-prober"];

/// Looks up a built-in strategy by its registered name.
pub fn builtin_strategy(name: &str, limits: Limits) -> Option<Box<dyn Strategy>> {
    match name {
        "reference" => Some(Box::new(ReferenceTester {
            limits,
            ..ReferenceTester::default()
        })),
        "cheater" => Some(Box::new(Cheater)),
        "vertex-prober" => Some(Box::new(VertexProber { limits })),
        _ => None,
    }
}
