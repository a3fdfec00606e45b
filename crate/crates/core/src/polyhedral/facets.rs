//! Facet enumeration of `conv(S)` for small full-dimensional `S ⊆ {0,1}^n`.

use std::collections::BTreeSet;
use std::fmt;

use num::integer::gcd;

use super::linalg::{self, orthogonal_complement};
use super::{Limits, Rational};
use crate::clutter::binomial;
use crate::cuboid::PointSet;
use crate::error::{Error, Result};

/// `coefficients · x ≥ rhs`, integral with coprime entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct FacetInequality {
    pub coefficients: Vec<i64>,
    pub rhs: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FacetKind {
    /// `x_i ≥ 0` or `x_i ≤ 1`.
    Box,
    /// `Σ_{i∈I} x_i + Σ_{j∈J} (1 - x_j) ≥ 1` for disjoint nonempty-union `I, J`.
    GeneralizedSetCovering,
    Neither,
}

impl FacetInequality {
    pub fn classify(&self) -> FacetKind {
        let nonzero: Vec<i64> = self
            .coefficients
            .iter()
            .copied()
            .filter(|&a| a != 0)
            .collect();
        if let [a] = nonzero[..] {
            if (a == 1 && self.rhs == 0) || (a == -1 && self.rhs == -1) {
                return FacetKind::Box;
            }
        }
        let unit = self.coefficients.iter().all(|a| (-1..=1).contains(a));
        let negatives = self.coefficients.iter().filter(|&&a| a == -1).count() as i64;
        if unit && !nonzero.is_empty() && self.rhs == 1 - negatives {
            FacetKind::GeneralizedSetCovering
        } else {
            FacetKind::Neither
        }
    }

    pub fn holds_at(&self, code: u64) -> bool {
        self.value_at(code) >= self.rhs
    }

    fn value_at(&self, code: u64) -> i64 {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, &a)| a)
            .sum()
    }
}

impl fmt::Display for FacetInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.coefficients.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let sign = if a < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = a.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}x_{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}x_{}", i + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " >= {}", self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ClassifiedFacet {
    pub inequality: FacetInequality,
    pub kind: FacetKind,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FacetAudit {
    pub facets: Vec<ClassifiedFacet>,
    pub all_generalized_set_covering: bool,
}

/// Affine dimension of the hull of `s`.
pub fn affine_rank(s: &PointSet) -> usize {
    let pts: Vec<Vec<i64>> = s.points().map(|p| coords(p.code(), s.dim())).collect();
    let Some(base) = pts.first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(a, b)| Rational::from_integer((a - b).into()))
                .collect()
        })
        .collect();
    linalg::rank(&diffs)
}

fn coords(code: u64, dim: usize) -> Vec<i64> {
    (0..dim).map(|i| (code >> i & 1) as i64).collect()
}

/// Every facet of `conv(s)`, classified, in canonical order.
///
/// Candidate hyperplanes pass through `n` affinely independent points of
/// `s`; a candidate is a facet when all of `s` lies on one side of it.
pub fn facet_audit(s: &PointSet, limits: &Limits) -> Result<FacetAudit> {
    let n = s.dim();
    if n > limits.facet_dim_cap {
        return Err(Error::SizeLimit {
            what: "facet audit dimension",
            required: n as u128,
            budget: limits.facet_dim_cap as u128,
        });
    }
    let rank = affine_rank(s);
    if rank < n || s.len() < n + 1 {
        return Err(Error::NotFullDimensional { rank, dimension: n });
    }
    let required = binomial(s.len() as u64, n as u64);
    if required > limits.max_bases {
        return Err(Error::SizeLimit {
            what: "facet candidates",
            required,
            budget: limits.max_bases,
        });
    }

    let codes = s.codes();
    let pts: Vec<Vec<i64>> = codes.iter().map(|&c| coords(c, n)).collect();
    let mut found: BTreeSet<FacetInequality> = BTreeSet::new();
    let mut chosen: Vec<usize> = (0..n).collect();
    loop {
        if let Some(ineq) = hyperplane(&pts, &chosen) {
            let values: Vec<i64> = codes.iter().map(|&c| ineq.value_at(c)).collect();
            if values.iter().all(|&v| v >= ineq.rhs) {
                found.insert(ineq);
            } else if values.iter().all(|&v| v <= ineq.rhs) {
                found.insert(FacetInequality {
                    coefficients: ineq.coefficients.iter().map(|a| -a).collect(),
                    rhs: -ineq.rhs,
                });
            }
        }
        if !advance(&mut chosen, pts.len()) {
            break;
        }
    }

    let facets: Vec<ClassifiedFacet> = found
        .into_iter()
        .map(|inequality| ClassifiedFacet {
            kind: inequality.classify(),
            inequality,
        })
        .collect();
    let all_generalized_set_covering = facets.iter().all(|f| f.kind != FacetKind::Neither);
    Ok(FacetAudit {
        facets,
        all_generalized_set_covering,
    })
}

/// The hyperplane through the chosen points, normalized to coprime
/// integers; `None` if they are affinely dependent.
fn hyperplane(pts: &[Vec<i64>], chosen: &[usize]) -> Option<FacetInequality> {
    let base = &pts[chosen[0]];
    let diffs: Vec<Vec<i64>> = chosen[1..]
        .iter()
        .map(|&c| pts[c].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let normal = if diffs.is_empty() {
        vec![1]
    } else {
        orthogonal_complement(&diffs)
    };
    let g = normal.iter().fold(0i64, |acc, &a| gcd(acc, a));
    if g == 0 {
        return None;
    }
    let coefficients: Vec<i64> = normal.iter().map(|a| a / g).collect();
    let rhs = coefficients.iter().zip(base).map(|(a, x)| a * x).sum();
    Some(FacetInequality { coefficients, rhs })
}

fn advance(chosen: &mut [usize], n: usize) -> bool {
    let k = chosen.len();
    let Some(pos) = (0..k).rev().find(|&i| chosen[i] < n - k + i) else {
        return false;
    };
    chosen[pos] += 1;
    for i in pos + 1..k {
        chosen[i] = chosen[i - 1] + 1;
    }
    true
}

/// Exact check that an inequality is valid for `s`.
pub fn is_valid_for(ineq: &FacetInequality, s: &PointSet) -> bool {
    s.codes().iter().all(|&c| ineq.holds_at(c))
}
