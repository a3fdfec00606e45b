//! Proof obligations of the adversary argument: requirements, hard instance
//! pairs, and the queries that tell a pair apart.

use std::collections::HashSet;

use super::{explicit_oracle, FilterOracle, Transcript};
use crate::clutter::{SubsetMask, MAX_GROUND};
use crate::cuboid::{cuboid_of, make_hard_instance, partner_element, Point, PointSet};
use crate::error::{Error, Result};

/// A neighbouring pair `(q, p)` of the hypercube: any correct tester must
/// query `C(q)` or `C(q) ∪ C(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Requirement {
    pub q: Point,
    pub p: Point,
}

impl Requirement {
    pub fn new(q: Point, p: Point) -> Result<Self> {
        if q.dim() != p.dim() || q.hamming(p) != 1 {
            return Err(Error::BadCoordinates(format!(
                "{q} and {p} are not neighbours"
            )));
        }
        Ok(Self { q, p })
    }

    /// The coordinate in which `q` and `p` differ.
    pub fn coordinate(&self) -> usize {
        (self.q.code() ^ self.p.code()).trailing_zeros() as usize + 1
    }

    /// `C(q)` and `C(q) ∪ C(p)`, which differ by one element.
    pub fn sets(&self) -> [SubsetMask; 2] {
        let member = self.q.member();
        [
            member,
            member.with(partner_element(self.q, self.coordinate())),
        ]
    }

    /// All `n · 2^n` requirements, ordered by `(q, p)` code.
    pub fn all(n: usize) -> Vec<Requirement> {
        Point::all(n)
            .flat_map(|q| {
                let mut ps: Vec<Point> = q.neighbours().collect();
                ps.sort();
                ps.into_iter().map(move |p| Requirement { q, p })
            })
            .collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coverage {
    pub covered: Vec<Requirement>,
    pub uncovered: Vec<Requirement>,
}

/// Splits the requirements at dimension `n` by whether the transcript
/// queried one of their two sets exactly.
pub fn requirement_coverage(t: &Transcript, n: usize) -> Coverage {
    let queried: HashSet<SubsetMask> = t.queries().filter(|x| x.width() == 2 * n).collect();
    let (covered, uncovered) = Requirement::all(n)
        .into_iter()
        .partition(|r| r.sets().iter().any(|s| queried.contains(s)));
    Coverage { covered, uncovered }
}

/// A non-cube-ideal hard instance and the cube-ideal set one point larger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstancePair {
    pub n: usize,
    pub p: Point,
    pub q: Point,
    /// Sorted claw coordinates; `i` is the one separating `p` and `q`.
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub bad: PointSet,
    pub good: PointSet,
}

impl InstancePair {
    pub fn requirement(&self) -> Requirement {
        Requirement {
            q: self.q,
            p: self.p,
        }
    }
}

/// `bad = S_(p:i,j,k)` with `i` the coordinate where `q` differs from `p`,
/// and `good = bad ∪ {q}`.
pub fn instance_pair(n: usize, p: Point, q: Point, j: usize, k: usize) -> Result<InstancePair> {
    if p.dim() != n || q.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.dim().max(q.dim()),
        });
    }
    let req = Requirement::new(q, p)?;
    let i = req.coordinate();
    if j == i || k == i {
        return Err(Error::BadCoordinates(format!(
            "j and k must differ from {i}"
        )));
    }
    let bad = make_hard_instance(n, p, i, j, k)?;
    let good = bad.with(q);
    Ok(InstancePair {
        n,
        p,
        q,
        i,
        j,
        k,
        bad,
        good,
    })
}

/// The pair for a requirement with `j, k` the two smallest other coordinates.
pub fn default_pair(req: Requirement) -> Result<InstancePair> {
    let n = req.p.dim();
    let i = req.coordinate();
    let mut others = (1..=n).filter(|&c| c != i);
    match (others.next(), others.next()) {
        (Some(j), Some(k)) => instance_pair(n, req.p, req.q, j, k),
        _ => Err(Error::BadCoordinates(format!(
            "hard instances need n >= 3, got {n}"
        ))),
    }
}

/// Every `X ⊆ [2n]` on which the filter oracles of the two cuboids
/// disagree, by exhaustive scan, in ascending bit order.
pub fn distinguishing_queries(pair: &InstancePair, max_ground: usize) -> Result<Vec<SubsetMask>> {
    let ground = 2 * pair.n;
    let cap = max_ground.min(MAX_GROUND - 1);
    if ground > cap {
        return Err(Error::SizeLimit {
            what: "distinguishing-query scan",
            required: 1u128 << ground.min(127),
            budget: 1u128 << cap,
        });
    }
    let bad = explicit_oracle(cuboid_of(&pair.bad));
    let good = explicit_oracle(cuboid_of(&pair.good));
    Ok(SubsetMask::all(ground)
        .filter(|&x| bad.query(x) != good.query(x))
        .collect())
}
