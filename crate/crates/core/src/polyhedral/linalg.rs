//! Small exact linear algebra over integer matrices.
//!
//! The hot path runs fraction-free Gauss-Jordan elimination in checked
//! `i128`; any overflow or inexact division falls back to elimination over
//! [`Rational`].

// Row operations index two rows of one matrix at once.
#![allow(clippy::needless_range_loop)]

use num::{BigInt, One, ToPrimitive, Zero};

use super::Rational;

/// Solution of a nonsingular square system as `numerators / denominator`,
/// with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Small {
        numerators: Vec<i128>,
        denominator: i128,
    },
    Big(Vec<Rational>),
}

impl Solution {
    pub fn to_rationals(&self) -> Vec<Rational> {
        match self {
            Solution::Small {
                numerators,
                denominator,
            } => numerators
                .iter()
                .map(|&n| Rational::new(BigInt::from(n), BigInt::from(*denominator)))
                .collect(),
            Solution::Big(values) => values.clone(),
        }
    }
}

/// Solves `a · x = b` for square `a`. Returns `None` when `a` is singular.
pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Solution> {
    match solve_small(a, b) {
        Ok(solution) => solution,
        Err(Overflow) => solve_rational(a, b).map(Solution::Big),
    }
}

#[derive(Debug)]
struct Overflow;

fn solve_small(a: &[Vec<i64>], b: &[i64]) -> Result<Option<Solution>, Overflow> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    if n == 0 {
        return Ok(Some(Solution::Small {
            numerators: Vec::new(),
            denominator: 1,
        }));
    }
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            row.iter()
                .map(|&v| v as i128)
                .chain([rhs as i128])
                .collect()
        })
        .collect();
    let mut prev: i128 = 1;
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&r| m[r][k] != 0) else {
            return Ok(None);
        };
        m.swap(k, pivot_row);
        let pivot = m[k][k];
        for i in 0..n {
            if i == k {
                continue;
            }
            let factor = m[i][k];
            for j in 0..=n {
                if j == k {
                    continue;
                }
                let lhs = pivot.checked_mul(m[i][j]).ok_or(Overflow)?;
                let rhs = factor.checked_mul(m[k][j]).ok_or(Overflow)?;
                let num = lhs.checked_sub(rhs).ok_or(Overflow)?;
                if num % prev != 0 {
                    return Err(Overflow);
                }
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        // Rows above k were scaled by pivot / prev during this pass.
        prev = pivot;
    }
    let den = m[n - 1][n - 1];
    if den == 0 {
        return Ok(None);
    }
    let mut numerators = Vec::with_capacity(n);
    for (i, row) in m.iter().enumerate() {
        if row[i] != den {
            return Err(Overflow);
        }
        numerators.push(row[n]);
    }
    let (numerators, denominator) = if den < 0 {
        (numerators.into_iter().map(|v| -v).collect(), -den)
    } else {
        (numerators, den)
    };
    Ok(Some(Solution::Small {
        numerators,
        denominator,
    }))
}

/// Plain Gauss-Jordan elimination over the rationals.
pub fn solve_rational(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            row.iter()
                .chain([&rhs])
                .map(|&v| Rational::from_integer(v.into()))
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot_row);
        let inv = m[k][k].recip();
        for v in m[k].iter_mut() {
            *v *= &inv;
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].clone();
            for j in 0..=n {
                let delta = &factor * &m[k][j];
                m[i][j] -= delta;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &m[rank][col];
            for j in col..cols {
                let delta = &factor * &m[rank][j];
                m[i][j] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix, by Bareiss elimination.
pub fn determinant(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

/// A nonzero integer vector orthogonal to every row of an `(n-1) × n`
/// matrix of rank `n-1`, via signed maximal minors. Zero when rank-deficient.
pub fn orthogonal_complement(rows: &[Vec<i64>]) -> Vec<i64> {
    let n = rows.len() + 1;
    (0..n)
        .map(|skip| {
            let minor: Vec<Vec<i64>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let det = determinant(&minor);
            let det = if skip % 2 == 0 { det } else { -det };
            det.to_i64().expect("cofactor fits in i64")
        })
        .collect()
}
