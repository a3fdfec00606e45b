//! Point sets in `{0,1}^n` and the cuboid construction.
//!
//! Coordinate `i` (1-based) of a point is bit `i - 1` of its code. The cuboid
//! of an `n`-dimensional point set lives on `2n` elements where coordinate
//! `i` owns the pair `u_i = 2i - 1`, `v_i = 2i`; a point picks `u_i` when its
//! `i`-th coordinate is 0 and `v_i` when it is 1.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::clutter::{minimal_sets, Clutter, SubsetMask};
use crate::error::{Error, Result};

/// Largest dimension whose cuboid fits in a [`SubsetMask`].
pub const MAX_DIMENSION: usize = 32;

/// A vertex of the unit hypercube.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    code: u64,
    dim: u8,
}

impl Point {
    pub fn new(dim: usize, code: u64) -> Result<Self> {
        if dim > MAX_DIMENSION {
            return Err(Error::DimensionMismatch {
                expected: MAX_DIMENSION,
                found: dim,
            });
        }
        if code >> dim != 0 {
            return Err(Error::BadCoordinates(format!(
                "code {code} has more than {dim} bits"
            )));
        }
        Ok(Self {
            code,
            dim: dim as u8,
        })
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(dim, 0).expect("dimension in range")
    }

    /// The unit vector `e_i`, 1-based.
    pub fn unit(dim: usize, i: usize) -> Result<Self> {
        check_coordinate(dim, i)?;
        Self::new(dim, 1 << (i - 1))
    }

    #[inline]
    pub fn code(self) -> u64 {
        self.code
    }

    #[inline]
    pub fn dim(self) -> usize {
        self.dim as usize
    }

    /// Coordinate `i`, 1-based.
    pub fn coord(self, i: usize) -> bool {
        self.code >> (i - 1) & 1 == 1
    }

    /// Coordinate-wise sum mod 2.
    pub fn xor(self, other: Point) -> Point {
        debug_assert_eq!(self.dim, other.dim);
        Point {
            code: self.code ^ other.code,
            ..self
        }
    }

    /// `self △ e_i`.
    pub fn flip(self, i: usize) -> Point {
        Point {
            code: self.code ^ 1 << (i - 1),
            ..self
        }
    }

    pub fn hamming(self, other: Point) -> u32 {
        (self.code ^ other.code).count_ones()
    }

    /// The set of coordinates equal to 1, as a subset of `[n]`.
    pub fn support(self) -> SubsetMask {
        SubsetMask::from_bits(self.dim(), self.code).expect("code fits dimension")
    }

    /// The member `C(p)` of the cuboid.
    pub fn member(self) -> SubsetMask {
        let mut bits = 0u64;
        for i in 0..self.dim() {
            let bit = self.code >> i & 1;
            bits |= 1 << (2 * i as u64 + bit);
        }
        SubsetMask::from_bits(2 * self.dim(), bits).expect("cuboid width fits")
    }

    /// Inverse of [`Point::member`].
    pub fn from_member(member: SubsetMask) -> Result<Self> {
        let width = member.width();
        if !width.is_multiple_of(2) {
            return Err(Error::NotACuboidMember(member));
        }
        let mut code = 0u64;
        for i in 0..width / 2 {
            match member.bits() >> (2 * i) & 0b11 {
                0b01 => {}
                0b10 => code |= 1 << i,
                _ => return Err(Error::NotACuboidMember(member)),
            }
        }
        Point::new(width / 2, code)
    }

    /// All `2^n` points in ascending code order.
    pub fn all(dim: usize) -> impl Iterator<Item = Point> {
        assert!(dim < 64, "dimension too large to enumerate");
        (0..1u64 << dim).map(move |code| Point {
            code,
            dim: dim as u8,
        })
    }

    /// Points at Hamming distance one, in coordinate order.
    pub fn neighbours(self) -> impl Iterator<Item = Point> {
        (1..=self.dim()).map(move |i| self.flip(i))
    }
}

/// Renders coordinates left to right, coordinate 1 first.
impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.dim() {
            f.write_str(if self.coord(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point({self})")
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let dim = s.chars().count();
        let mut code = 0u64;
        for (idx, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => code |= 1 << idx,
                other => {
                    return Err(Error::BadCoordinates(format!(
                        "invalid character {other:?} in point {s:?}"
                    )))
                }
            }
        }
        Point::new(dim, code)
    }
}

/// `C(p)`.
pub fn member_of_point(p: Point) -> SubsetMask {
    p.member()
}

/// `p(C)`; fails unless `m` meets every pair exactly once.
pub fn point_of_member(m: SubsetMask) -> Result<Point> {
    Point::from_member(m)
}

/// The pair element that `p` does not pick in coordinate `i`.
pub fn partner_element(p: Point, i: usize) -> usize {
    if p.coord(i) {
        2 * i - 1
    } else {
        2 * i
    }
}

fn check_coordinate(dim: usize, i: usize) -> Result<()> {
    if i == 0 || i > dim {
        Err(Error::BadCoordinates(format!(
            "coordinate {i} outside 1..={dim}"
        )))
    } else {
        Ok(())
    }
}

/// A subset of `{0,1}^n`, stored deduplicated in ascending code order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    dim: usize,
    codes: Vec<u64>,
}

impl PointSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        if dim == 0 || dim > MAX_DIMENSION {
            return Err(Error::BadCoordinates(format!(
                "dimension {dim} outside 1..=32"
            )));
        }
        let mut codes = Vec::new();
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            codes.push(p.code);
        }
        codes.sort_unstable();
        codes.dedup();
        Ok(Self { dim, codes })
    }

    pub fn from_codes(dim: usize, codes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let points = codes
            .into_iter()
            .map(|c| Point::new(dim, c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, points)
    }

    pub fn empty(dim: usize) -> Self {
        Self::new(dim, []).expect("valid dimension")
    }

    /// `{0,1}^n`.
    pub fn full(dim: usize) -> Self {
        Self {
            dim,
            codes: (0..1u64 << dim).collect(),
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        p.dim() == self.dim && self.codes.binary_search(&p.code).is_ok()
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.codes.iter().map(|&code| Point {
            code,
            dim: self.dim as u8,
        })
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    /// Points of the cube not in this set.
    pub fn complement(&self) -> PointSet {
        let codes = (0..1u64 << self.dim).filter(|c| self.codes.binary_search(c).is_err());
        Self {
            dim: self.dim,
            codes: codes.collect(),
        }
    }

    pub fn with(&self, p: Point) -> PointSet {
        let mut out = self.clone();
        if let Err(pos) = out.codes.binary_search(&p.code) {
            out.codes.insert(pos, p.code);
        }
        out
    }

    pub fn without(&self, p: Point) -> PointSet {
        let mut out = self.clone();
        if let Ok(pos) = out.codes.binary_search(&p.code) {
            out.codes.remove(pos);
        }
        out
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.dim == other.dim && self.points().all(|p| other.contains(p))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points()).finish()
    }
}

/// The cuboid of `s`: one member `C(p)` per point, over `2n` elements.
pub fn cuboid_of(s: &PointSet) -> Clutter {
    let members: Vec<SubsetMask> = s.points().map(Point::member).collect();
    Clutter::new(2 * s.dim, members).expect("cuboid members form an antichain")
}

/// `S △ p`.
pub fn twist(s: &PointSet, p: Point) -> Result<PointSet> {
    if p.dim() != s.dim {
        return Err(Error::DimensionMismatch {
            expected: s.dim,
            found: p.dim(),
        });
    }
    PointSet::new(s.dim, s.points().map(|x| x.xor(p)))
}

/// A partial assignment of coordinates to 0/1, keyed by 1-based coordinate.
pub type Fixing = BTreeMap<usize, bool>;

/// Keeps the points agreeing with `fix` and drops the fixed coordinates.
pub fn restrict(s: &PointSet, fix: &Fixing) -> Result<PointSet> {
    let n = s.dim;
    if let Some((&bad, _)) = fix.iter().find(|(&i, _)| i == 0 || i > n) {
        return Err(Error::BadCoordinates(format!(
            "coordinate {bad} outside 1..={n}"
        )));
    }
    let free: Vec<usize> = (1..=n).filter(|i| !fix.contains_key(i)).collect();
    if free.is_empty() {
        return Err(Error::BadCoordinates(
            "restriction must leave a coordinate free".into(),
        ));
    }
    let kept = s
        .points()
        .filter(|x| fix.iter().all(|(&i, &v)| x.coord(i) == v))
        .map(|x| {
            let code = free
                .iter()
                .enumerate()
                .fold(0u64, |acc, (k, &i)| acc | (x.coord(i) as u64) << k);
            Point {
                code,
                dim: free.len() as u8,
            }
        });
    PointSet::new(free.len(), kept)
}

/// `ind(S △ p)`: minimal supports of the twisted points, over `[n]`.
pub fn induced_clutter(s: &PointSet, p: Point) -> Result<Clutter> {
    let twisted = twist(s, p)?;
    let supports: Vec<SubsetMask> = twisted.points().map(Point::support).collect();
    Ok(Clutter::from_canonical(s.dim, minimal_sets(&supports)))
}

/// Maximum degree of the hypercube skeleton induced on the complement of `s`.
pub fn complement_max_degree(s: &PointSet) -> usize {
    s.complement()
        .points()
        .map(|q| q.neighbours().filter(|r| !s.contains(*r)).count())
        .max()
        .unwrap_or(0)
}

/// `{e_1+e_2, e_2+e_3, e_1+e_3, e_1+e_2+e_3}` in `{0,1}^3`.
pub fn make_s3() -> PointSet {
    let points = ["110", "011", "101", "111"].map(|s| s.parse::<Point>().expect("valid point"));
    PointSet::new(3, points).expect("valid point set")
}

/// The claw `{p, p△e_i, p△e_j, p△e_k}`, centre first.
pub fn claw(n: usize, p: Point, i: usize, j: usize, k: usize) -> Result<[Point; 4]> {
    if n < 3 {
        return Err(Error::BadCoordinates(format!(
            "hard instances need n >= 3, got {n}"
        )));
    }
    if p.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.dim(),
        });
    }
    let mut coords = [i, j, k];
    for &c in &coords {
        check_coordinate(n, c)?;
    }
    coords.sort_unstable();
    if coords[0] == coords[1] || coords[1] == coords[2] {
        return Err(Error::BadCoordinates(format!(
            "coordinates {i}, {j}, {k} are not distinct"
        )));
    }
    Ok([p, p.flip(coords[0]), p.flip(coords[1]), p.flip(coords[2])])
}

/// `S_(p:i,j,k) = {0,1}^n − {p, p△e_i, p△e_j, p△e_k}`.
pub fn make_hard_instance(n: usize, p: Point, i: usize, j: usize, k: usize) -> Result<PointSet> {
    let removed = claw(n, p, i, j, k)?;
    let mut s = PointSet::full(n);
    for q in removed {
        s = s.without(q);
    }
    Ok(s)
}
