//! Extreme points of set covering polyhedra by exact basis enumeration.

use std::collections::HashSet;
use std::ops::ControlFlow;

use num::{BigInt, Signed, Zero};

use super::linalg::{self, Solution};
use super::{Limits, Rational};
use crate::clutter::{binomial, minimal_sets, Clutter, SubsetMask};
use crate::error::{Error, Result};

/// `{x ∈ R^V : Σ_{u∈C} x_u ≥ 1 for every row C, x ≥ 0}`.
///
/// Rows are indexed with the covering rows first (`0..m`, in the given
/// order) followed by the nonnegativity rows, `m + u - 1` for `x_u ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringPolyhedron {
    ground: usize,
    rows: Vec<SubsetMask>,
}

/// An exact extreme point together with a basis of tight rows defining it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexCertificate {
    pub coordinates: Vec<Rational>,
    pub basis: Vec<usize>,
    pub integral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexEnumeration {
    /// Sorted by coordinates.
    pub vertices: Vec<VertexCertificate>,
    /// Set when some covering row is empty, i.e. the polyhedron is empty.
    pub infeasible: bool,
}

/// Literal-reading cases of the idealness definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degeneracy {
    /// `{}`: the polyhedron is the nonnegative orthant.
    EmptyClutter,
    /// `{∅}`: the polyhedron is empty.
    EmptyMember,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealnessReport {
    pub ideal: bool,
    /// A fractional vertex when not ideal.
    pub witness: Option<VertexCertificate>,
    pub degenerate: Option<Degeneracy>,
}

impl CoveringPolyhedron {
    pub fn new(clutter: &Clutter) -> Self {
        Self {
            ground: clutter.ground_size(),
            rows: clutter.members().to_vec(),
        }
    }

    /// Any list of covering rows, in any order and with repeats.
    pub fn from_rows(ground: usize, rows: Vec<SubsetMask>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.width() != ground) {
            return Err(Error::WidthMismatch {
                expected: ground,
                found: bad.width(),
            });
        }
        Ok(Self { ground, rows })
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn covering_rows(&self) -> &[SubsetMask] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len() + self.ground
    }

    /// Number of candidate bases, `C(rows, |V|)`.
    pub fn basis_count(&self) -> u128 {
        binomial(self.row_count() as u64, self.ground as u64)
    }

    pub fn is_infeasible(&self) -> bool {
        self.rows.iter().any(|r| r.is_empty())
    }

    /// Coefficients and right-hand side of row `idx`.
    pub fn row(&self, idx: usize) -> (Vec<i64>, i64) {
        if idx < self.rows.len() {
            let r = self.rows[idx];
            ((1..=self.ground).map(|u| r.contains(u) as i64).collect(), 1)
        } else {
            let u = idx - self.rows.len();
            ((0..self.ground).map(|v| (v == u) as i64).collect(), 0)
        }
    }

    fn check_budget(&self, limits: &Limits) -> Result<()> {
        let required = self.basis_count();
        if required > limits.max_bases {
            return Err(Error::SizeLimit {
                what: "basis enumeration",
                required,
                budget: limits.max_bases,
            });
        }
        Ok(())
    }

    /// Streams each distinct extreme point once, in discovery order.
    ///
    /// Every vertex `x` has a basis made of the nonnegativity rows outside
    /// its support `F` plus `|F|` covering rows, and those covering rows
    /// restricted to `F` are inclusionwise minimal among all restrictions
    /// (a row strictly containing another on `F` has slack once `x_F > 0`).
    /// The search therefore runs over supports `F` that meet every row and
    /// over `|F|`-subsets of the distinct minimal restrictions, keeping the
    /// solutions that are strictly positive on `F` and feasible.
    pub fn for_each_vertex<F>(&self, limits: &Limits, mut visit: F) -> Result<()>
    where
        F: FnMut(VertexCertificate) -> ControlFlow<()>,
    {
        self.check_budget(limits)?;
        if self.is_infeasible() {
            return Ok(());
        }
        let m = self.rows.len();
        let mut seen: HashSet<Vec<Rational>> = HashSet::new();
        for support in SubsetMask::full(self.ground).subsets() {
            let restricted: Vec<SubsetMask> =
                self.rows.iter().map(|r| r.intersection(support)).collect();
            if restricted.iter().any(|r| r.is_empty()) {
                continue;
            }
            let candidates: Vec<(SubsetMask, usize)> = minimal_sets(&restricted)
                .into_iter()
                .map(|r| {
                    (
                        r,
                        restricted
                            .iter()
                            .position(|x| *x == r)
                            .expect("restriction"),
                    )
                })
                .collect();
            let elements: Vec<usize> = support.elements().collect();
            let k = elements.len();
            if candidates.len() < k {
                continue;
            }
            let zero_rows: Vec<usize> =
                support.complement().elements().map(|u| m + u - 1).collect();

            let mut chosen: Vec<usize> = (0..k).collect();
            loop {
                let matrix: Vec<Vec<i64>> = chosen
                    .iter()
                    .map(|&c| {
                        elements
                            .iter()
                            .map(|&u| candidates[c].0.contains(u) as i64)
                            .collect()
                    })
                    .collect();
                if let Some(solution) = linalg::solve(&matrix, &vec![1; k]) {
                    if let Some(coordinates) = self.accept(&solution, &elements) {
                        if seen.insert(coordinates.clone()) {
                            let mut basis: Vec<usize> =
                                chosen.iter().map(|&c| candidates[c].1).collect();
                            basis.extend(&zero_rows);
                            basis.sort_unstable();
                            let integral = coordinates.iter().all(|x| x.is_integer());
                            let cert = VertexCertificate {
                                coordinates,
                                basis,
                                integral,
                            };
                            if visit(cert).is_break() {
                                return Ok(());
                            }
                        }
                    }
                }
                if !next_combination(&mut chosen, candidates.len()) {
                    break;
                }
            }
        }
        Ok(())
    }

    /// Full coordinates of a positive, feasible solution on `support`.
    fn accept(&self, solution: &Solution, support: &[usize]) -> Option<Vec<Rational>> {
        match solution {
            Solution::Small {
                numerators,
                denominator,
            } => {
                if numerators.iter().any(|&v| v <= 0) {
                    return None;
                }
                for row in &self.rows {
                    let lhs: i128 = support
                        .iter()
                        .zip(numerators)
                        .filter(|(u, _)| row.contains(**u))
                        .map(|(_, &v)| v)
                        .sum();
                    if lhs < *denominator {
                        return None;
                    }
                }
            }
            Solution::Big(values) => {
                if values.iter().any(|v| !v.is_positive()) {
                    return None;
                }
                let one = Rational::from_integer(BigInt::from(1));
                for row in &self.rows {
                    let lhs: Rational = support
                        .iter()
                        .zip(values)
                        .filter(|(u, _)| row.contains(**u))
                        .map(|(_, v)| v.clone())
                        .sum();
                    if lhs < one {
                        return None;
                    }
                }
            }
        }
        let values = solution.to_rationals();
        let mut coordinates = vec![Rational::zero(); self.ground];
        for (&u, v) in support.iter().zip(values) {
            coordinates[u - 1] = v;
        }
        Some(coordinates)
    }

    pub fn vertices(&self, limits: &Limits) -> Result<VertexEnumeration> {
        let mut vertices = Vec::new();
        self.for_each_vertex(limits, |v| {
            vertices.push(v);
            ControlFlow::Continue(())
        })?;
        vertices.sort_by(|a, b| a.coordinates.cmp(&b.coordinates));
        Ok(VertexEnumeration {
            vertices,
            infeasible: self.is_infeasible(),
        })
    }

    /// First fractional vertex in discovery order, if any.
    pub fn fractional_vertex(&self, limits: &Limits) -> Result<Option<VertexCertificate>> {
        let mut found = None;
        self.for_each_vertex(limits, |v| {
            if v.integral {
                ControlFlow::Continue(())
            } else {
                found = Some(v);
                ControlFlow::Break(())
            }
        })?;
        Ok(found)
    }
}

/// Advances `chosen` to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(chosen: &mut [usize], n: usize) -> bool {
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

/// All extreme points of the set covering polyhedron of `clutter`.
pub fn covering_vertices(clutter: &Clutter, limits: &Limits) -> Result<VertexEnumeration> {
    CoveringPolyhedron::new(clutter).vertices(limits)
}

/// Is the set covering polyhedron integral? On failure a fractional
/// vertex is returned as witness.
pub fn is_ideal(clutter: &Clutter, limits: &Limits) -> Result<IdealnessReport> {
    let degenerate = if clutter.is_empty() {
        Some(Degeneracy::EmptyClutter)
    } else if clutter.has_empty_member() {
        Some(Degeneracy::EmptyMember)
    } else {
        None
    };
    let witness = CoveringPolyhedron::new(clutter).fractional_vertex(limits)?;
    Ok(IdealnessReport {
        ideal: witness.is_none(),
        witness,
        degenerate,
    })
}

/// Re-checks a certificate by direct substitution: every row satisfied,
/// every basis row tight, `|V|` basis rows of full rank, and the
/// integrality flag consistent with the coordinates.
pub fn verify_certificate(
    poly: &CoveringPolyhedron,
    cert: &VertexCertificate,
) -> std::result::Result<(), String> {
    let n = poly.ground_size();
    if cert.coordinates.len() != n {
        return Err(format!(
            "expected {n} coordinates, got {}",
            cert.coordinates.len()
        ));
    }
    let eval = |idx: usize| -> (Rational, Rational) {
        let (coeffs, rhs) = poly.row(idx);
        let lhs = coeffs
            .iter()
            .zip(&cert.coordinates)
            .filter(|(&a, _)| a != 0)
            .map(|(&a, x)| x * Rational::from_integer(a.into()))
            .sum();
        (lhs, Rational::from_integer(rhs.into()))
    };
    for idx in 0..poly.row_count() {
        let (lhs, rhs) = eval(idx);
        if lhs < rhs {
            return Err(format!("row {idx} violated: {lhs} < {rhs}"));
        }
    }
    if cert.basis.len() != n {
        return Err(format!("basis has {} rows, expected {n}", cert.basis.len()));
    }
    let mut basis_rows = Vec::with_capacity(n);
    for &idx in &cert.basis {
        if idx >= poly.row_count() {
            return Err(format!("basis row {idx} out of range"));
        }
        let (lhs, rhs) = eval(idx);
        if lhs != rhs {
            return Err(format!("basis row {idx} is not tight"));
        }
        let (coeffs, _) = poly.row(idx);
        basis_rows.push(
            coeffs
                .into_iter()
                .map(|a| Rational::from_integer(a.into()))
                .collect(),
        );
    }
    if linalg::rank(&basis_rows) != n {
        return Err("basis rows are linearly dependent".into());
    }
    let integral = cert.coordinates.iter().all(|x| x.is_integer());
    if integral != cert.integral {
        return Err("integrality flag does not match coordinates".into());
    }
    Ok(())
}
