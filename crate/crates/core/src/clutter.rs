//! Subsets of a finite ground set, clutters, minors and Δ3 detection.
//!
//! Ground set elements are labeled `1..=n` and stored as bit `e - 1` of a
//! `u64`, so a ground set holds at most [`MAX_GROUND`] elements.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_GROUND: usize = 64;

/// A subset of a ground set of fixed width.
///
/// Ordering is by the bit code first, which is the canonical member order
/// of a [`Clutter`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u64,
    width: u8,
}

fn width_mask(width: usize) -> u64 {
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

fn check_width(width: usize) -> Result<()> {
    if width > MAX_GROUND {
        Err(Error::GroundTooLarge(width))
    } else {
        Ok(())
    }
}

impl SubsetMask {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_GROUND, "ground set too large");
        Self {
            bits: 0,
            width: width as u8,
        }
    }

    pub fn full(width: usize) -> Self {
        assert!(width <= MAX_GROUND, "ground set too large");
        Self {
            bits: width_mask(width),
            width: width as u8,
        }
    }

    pub fn from_bits(width: usize, bits: u64) -> Result<Self> {
        check_width(width)?;
        if bits & !width_mask(width) != 0 {
            let element = 64 - bits.leading_zeros() as usize;
            return Err(Error::ElementOutOfRange {
                element,
                ground: width,
            });
        }
        Ok(Self {
            bits,
            width: width as u8,
        })
    }

    /// Builds a subset from 1-based element labels. Repeated labels are fine.
    pub fn from_elements(width: usize, elements: &[usize]) -> Result<Self> {
        check_width(width)?;
        let mut bits = 0u64;
        for &e in elements {
            if e == 0 || e > width {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    ground: width,
                });
            }
            bits |= 1 << (e - 1);
        }
        Ok(Self {
            bits,
            width: width as u8,
        })
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn width(self) -> usize {
        self.width as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, element: usize) -> bool {
        element >= 1 && element <= self.width() && self.bits >> (element - 1) & 1 == 1
    }

    /// Elements in ascending order, 1-based.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let tz = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(tz + 1)
        })
    }

    #[inline]
    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.bits & other.bits == 0
    }

    #[inline]
    pub fn union(self, other: SubsetMask) -> SubsetMask {
        debug_assert_eq!(self.width, other.width);
        Self {
            bits: self.bits | other.bits,
            ..self
        }
    }

    #[inline]
    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        debug_assert_eq!(self.width, other.width);
        Self {
            bits: self.bits & other.bits,
            ..self
        }
    }

    #[inline]
    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        debug_assert_eq!(self.width, other.width);
        Self {
            bits: self.bits & !other.bits,
            ..self
        }
    }

    #[inline]
    pub fn complement(self) -> SubsetMask {
        Self {
            bits: !self.bits & width_mask(self.width()),
            ..self
        }
    }

    pub fn with(self, element: usize) -> SubsetMask {
        assert!(
            element >= 1 && element <= self.width(),
            "element out of range"
        );
        Self {
            bits: self.bits | 1 << (element - 1),
            ..self
        }
    }

    /// All `2^width` subsets in ascending bit order.
    pub fn all(width: usize) -> impl Iterator<Item = SubsetMask> {
        assert!(
            width < MAX_GROUND,
            "cannot enumerate all subsets of 64 elements"
        );
        (0..1u64 << width).map(move |bits| SubsetMask {
            bits,
            width: width as u8,
        })
    }

    /// All subsets of `self` in ascending bit order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let full = self.bits;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(SubsetMask {
                bits: cur,
                width: self.width,
            })
        })
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, e) in self.elements().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.width)
    }
}

/// Inclusionwise minimal sets of a family, deduplicated, in ascending bit order.
pub fn minimal_sets(sets: &[SubsetMask]) -> Vec<SubsetMask> {
    let mut by_size = sets.to_vec();
    by_size.sort_unstable_by_key(|s| (s.len(), s.bits()));
    by_size.dedup();
    let mut kept: Vec<SubsetMask> = Vec::with_capacity(by_size.len());
    for s in by_size {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// A family of pairwise incomparable subsets of `1..=ground_size`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    ground: usize,
    members: Vec<SubsetMask>,
}

impl Clutter {
    /// Validates widths and the antichain property. Duplicates are dropped.
    pub fn new(ground: usize, sets: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        check_width(ground)?;
        let mut members: Vec<SubsetMask> = sets.into_iter().collect();
        for m in &members {
            if m.width() != ground {
                return Err(Error::WidthMismatch {
                    expected: ground,
                    found: m.width(),
                });
            }
        }
        members.sort_unstable();
        members.dedup();
        for (a_idx, &a) in members.iter().enumerate() {
            for &b in &members[a_idx + 1..] {
                if a.is_subset(b) {
                    return Err(Error::AntichainViolation { outer: b, inner: a });
                }
                if b.is_subset(a) {
                    return Err(Error::AntichainViolation { outer: a, inner: b });
                }
            }
        }
        Ok(Self { ground, members })
    }

    /// Convenience constructor from 1-based element lists.
    pub fn from_lists<L: AsRef<[usize]>>(ground: usize, lists: &[L]) -> Result<Self> {
        let sets = lists
            .iter()
            .map(|l| SubsetMask::from_elements(ground, l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, sets)
    }

    /// Wraps sets already known to be a canonical antichain.
    pub(crate) fn from_canonical(ground: usize, members: Vec<SubsetMask>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { ground, members }
    }

    /// Minimal sets of an arbitrary family, as a clutter.
    pub fn from_minimal(ground: usize, sets: &[SubsetMask]) -> Self {
        Self::from_canonical(ground, minimal_sets(sets))
    }

    pub fn empty(ground: usize) -> Self {
        Self {
            ground,
            members: Vec::new(),
        }
    }

    /// The clutter `{{1,2},{2,3},{3,1}}`.
    pub fn delta3() -> Self {
        Self::from_lists(3, &[[1, 2], [2, 3], [1, 3]]).expect("Δ3 is an antichain")
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.ground
    }

    #[inline]
    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True for the clutter `{∅}`.
    pub fn has_empty_member(&self) -> bool {
        self.members.first().is_some_and(|m| m.is_empty())
    }

    /// Filter-oracle semantics: does `x` contain some member?
    pub fn contains_member(&self, x: SubsetMask) -> bool {
        debug_assert_eq!(x.width(), self.ground);
        self.members.iter().any(|m| m.is_subset(x))
    }

    /// The minor obtained by deleting `delete` and contracting `contract`.
    ///
    /// Surviving elements are relabeled `1..=k` in increasing order; the
    /// returned [`Relabeling`] maps back to the original labels.
    pub fn minor(&self, delete: SubsetMask, contract: SubsetMask) -> Result<Minor> {
        for s in [delete, contract] {
            if s.width() != self.ground {
                return Err(Error::WidthMismatch {
                    expected: self.ground,
                    found: s.width(),
                });
            }
        }
        if !delete.is_disjoint(contract) {
            return Err(Error::Overlap { delete, contract });
        }
        let relabeling = Relabeling::new(delete.union(contract).complement());
        let sets: Vec<SubsetMask> = self
            .members
            .iter()
            .filter(|m| m.is_disjoint(delete))
            .map(|&m| relabeling.compress(m.difference(contract)))
            .collect();
        let clutter = Clutter::from_minimal(relabeling.len(), &sets);
        Ok(Minor {
            clutter,
            relabeling,
        })
    }

    /// True iff the ground set has three elements and the members are
    /// exactly its three 2-element subsets.
    pub fn is_delta3(&self) -> bool {
        self.ground == 3 && self.members.len() == 3 && self.members.iter().all(|m| m.len() == 2)
    }

    /// Exhaustive search for a Δ3 minor. See [`Clutter::find_delta3_minor`].
    pub fn has_delta3_minor(&self) -> Option<MinorWitness> {
        self.find_delta3_minor(u128::MAX).expect("unbounded search")
    }

    /// Searches all disjoint `(I, J)` leaving exactly three elements and
    /// returns the least witness, ordered by `(I, J)` bit codes.
    ///
    /// `budget` caps the number of candidate pairs, `C(n,3) * 2^(n-3)`.
    pub fn find_delta3_minor(&self, budget: u128) -> Result<Option<MinorWitness>> {
        let n = self.ground;
        if n < 3 {
            return Ok(None);
        }
        let required = binomial(n as u64, 3) << (n - 3);
        if required > budget {
            return Err(Error::SizeLimit {
                what: "Δ3 minor search",
                required,
                budget,
            });
        }
        if self.members.len() < 3 || self.has_empty_member() {
            return Ok(None);
        }
        let full = SubsetMask::full(n);
        for delete in full.subsets() {
            let surviving: Vec<SubsetMask> = self
                .members
                .iter()
                .copied()
                .filter(|m| m.is_disjoint(delete))
                .collect();
            if surviving.len() < 3 {
                continue;
            }
            let rest = delete.complement();
            if rest.len() < 3 {
                continue;
            }
            let mut triples: Vec<SubsetMask> = rest.subsets().filter(|t| t.len() == 3).collect();
            // Ascending contract set is descending triple code.
            triples.reverse();
            for triple in triples {
                if triangle_on(&surviving, triple) {
                    return Ok(Some(MinorWitness {
                        delete,
                        contract: rest.difference(triple),
                    }));
                }
            }
        }
        Ok(None)
    }
}

/// Does the contraction onto `triple` of `members` give the three pairs of it?
fn triangle_on(members: &[SubsetMask], triple: SubsetMask) -> bool {
    let mut pairs_seen = 0u8;
    let elems: Vec<usize> = triple.elements().collect();
    for m in members {
        let r = m.intersection(triple);
        match r.len() {
            0 | 1 => return false,
            2 => {
                let missing = triple
                    .difference(r)
                    .elements()
                    .next()
                    .expect("one element left");
                let idx = elems
                    .iter()
                    .position(|&e| e == missing)
                    .expect("element of triple");
                pairs_seen |= 1 << idx;
            }
            _ => {}
        }
    }
    pairs_seen == 0b111
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, m) in self.members.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clutter(n={}, {self})", self.ground)
    }
}

/// The deletion and contraction sets of a minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub delete: SubsetMask,
    pub contract: SubsetMask,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub clutter: Clutter,
    pub relabeling: Relabeling,
}

/// Order-preserving map from a compressed ground set `1..=k` onto the
/// surviving elements of a larger one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    original_ground: usize,
    survivors: Vec<usize>,
}

impl Relabeling {
    pub fn new(survivors: SubsetMask) -> Self {
        Self {
            original_ground: survivors.width(),
            survivors: survivors.elements().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.survivors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.survivors.is_empty()
    }

    pub fn original_ground(&self) -> usize {
        self.original_ground
    }

    /// Original labels, indexed by new label minus one.
    pub fn survivors(&self) -> &[usize] {
        &self.survivors
    }

    pub fn original_label(&self, new_label: usize) -> usize {
        self.survivors[new_label - 1]
    }

    pub fn survivor_mask(&self) -> SubsetMask {
        SubsetMask::from_elements(self.original_ground, &self.survivors).expect("valid survivors")
    }

    /// Restricts an original subset to the survivors and relabels it.
    pub fn compress(&self, set: SubsetMask) -> SubsetMask {
        let mut bits = 0u64;
        for (idx, &e) in self.survivors.iter().enumerate() {
            if set.contains(e) {
                bits |= 1 << idx;
            }
        }
        SubsetMask {
            bits,
            width: self.survivors.len() as u8,
        }
    }

    /// Maps a compressed subset back to original labels.
    pub fn expand(&self, set: SubsetMask) -> SubsetMask {
        let mut bits = 0u64;
        for e in set.elements() {
            bits |= 1 << (self.survivors[e - 1] - 1);
        }
        SubsetMask {
            bits,
            width: self.original_ground as u8,
        }
    }
}

/// Every clutter over `1..=ground` (all antichains of the subset lattice),
/// including `{}` and `{∅}`. Intended for exhaustive checks on tiny ground sets.
pub fn all_antichains(ground: usize) -> Vec<Clutter> {
    assert!(
        ground <= 5,
        "antichain enumeration is only feasible up to 5 elements"
    );
    fn extend(ground: usize, next: u64, chosen: &mut Vec<SubsetMask>, out: &mut Vec<Clutter>) {
        if next == 1 << ground {
            out.push(Clutter::from_canonical(ground, chosen.clone()));
            return;
        }
        extend(ground, next + 1, chosen, out);
        let candidate = SubsetMask {
            bits: next,
            width: ground as u8,
        };
        if chosen
            .iter()
            .all(|c| !c.is_subset(candidate) && !candidate.is_subset(*c))
        {
            chosen.push(candidate);
            extend(ground, next + 1, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    extend(ground, 0, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.members.cmp(&b.members));
    out
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(width: usize, elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(width, elems).unwrap()
    }

    #[test]
    fn make_clutter_examples() {
        let d3 = Clutter::from_lists(3, &[vec![1, 2], vec![2, 3], vec![3, 1]]).unwrap();
        assert_eq!(d3, Clutter::delta3());
        assert_eq!(d3.members(), &[m(3, &[1, 2]), m(3, &[1, 3]), m(3, &[2, 3])]);

        let err = Clutter::from_lists(2, &[vec![1], vec![1, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::AntichainViolation {
                outer: m(2, &[1, 2]),
                inner: m(2, &[1])
            }
        );

        let empty = Clutter::new(3, Vec::new()).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.ground_size(), 3);
    }

    #[test]
    fn duplicates_are_dropped_and_empty_member_allowed() {
        let c = Clutter::from_lists(2, &[vec![1], vec![1]]).unwrap();
        assert_eq!(c.len(), 1);
        let e = Clutter::new(2, [SubsetMask::empty(2)]).unwrap();
        assert!(e.has_empty_member());
        assert!(Clutter::new(2, [SubsetMask::empty(2), m(2, &[1])]).is_err());
        assert!(matches!(
            Clutter::new(3, [m(2, &[1])]),
            Err(Error::WidthMismatch {
                expected: 3,
                found: 2
            })
        ));
        assert!(SubsetMask::from_elements(3, &[4]).is_err());
        assert!(SubsetMask::from_elements(3, &[0]).is_err());
    }

    #[test]
    fn minimal_sets_examples() {
        let f = [m(3, &[1]), m(3, &[1, 2]), m(3, &[2, 3])];
        assert_eq!(minimal_sets(&f), vec![m(3, &[1]), m(3, &[2, 3])]);
        assert!(minimal_sets(&[]).is_empty());
    }

    #[test]
    fn contains_member_examples() {
        let d3 = Clutter::delta3();
        assert!(d3.contains_member(m(3, &[1, 2, 3])));
        assert!(!d3.contains_member(m(3, &[1])));
        let empty = Clutter::empty(3);
        assert!(SubsetMask::all(3).all(|x| !empty.contains_member(x)));
    }

    #[test]
    fn minor_examples() {
        let d3 = Clutter::delta3();
        let del = d3.minor(m(3, &[1]), SubsetMask::empty(3)).unwrap();
        assert_eq!(del.clutter, Clutter::from_lists(2, &[[1, 2]]).unwrap());
        assert_eq!(del.relabeling.survivors(), &[2, 3]);

        let con = d3.minor(SubsetMask::empty(3), m(3, &[1])).unwrap();
        assert_eq!(con.clutter, Clutter::from_lists(2, &[[1], [2]]).unwrap());

        assert!(matches!(
            d3.minor(m(3, &[1]), m(3, &[1, 2])),
            Err(Error::Overlap { .. })
        ));
    }

    #[test]
    fn delta3_recognition() {
        assert!(Clutter::delta3().is_delta3());
        assert!(!Clutter::from_lists(3, &[[1], [2], [3]])
            .unwrap()
            .is_delta3());
        assert!(!Clutter::from_lists(3, &[[1, 2]]).unwrap().is_delta3());
        assert!(!Clutter::from_lists(4, &[[1, 2], [2, 3], [1, 3]])
            .unwrap()
            .is_delta3());
    }

    #[test]
    fn delta3_minor_search() {
        let w = Clutter::delta3().has_delta3_minor().unwrap();
        assert!(w.delete.is_empty() && w.contract.is_empty());
        assert!(Clutter::from_lists(2, &[[1], [2]])
            .unwrap()
            .has_delta3_minor()
            .is_none());
        assert!(Clutter::from_lists(3, &[[1], [2]])
            .unwrap()
            .has_delta3_minor()
            .is_none());

        // Δ3 reached by deleting element 5 and contracting element 2.
        let c =
            Clutter::from_lists(5, &[vec![1, 2, 4], vec![2, 3, 4], vec![1, 3], vec![5]]).unwrap();
        let w = c.has_delta3_minor().unwrap();
        let minor = c.minor(w.delete, w.contract).unwrap();
        assert!(minor.clutter.is_delta3());
        assert_eq!(w.delete, m(5, &[5]));
        assert_eq!(w.contract, m(5, &[2]));

        let err = c.find_delta3_minor(3).unwrap_err();
        assert!(matches!(err, Error::SizeLimit { required: 40, .. }));
    }

    #[test]
    fn delta3_witness_is_least() {
        // Brute force over all (I, J) pairs in (I, J) code order.
        let c =
            Clutter::from_lists(5, &[vec![1, 2], vec![2, 3], vec![1, 3], vec![3, 4, 5]]).unwrap();
        let full = SubsetMask::full(5);
        let mut best = None;
        'outer: for i in full.subsets() {
            for j in i.complement().subsets() {
                if i.union(j).len() != 2 {
                    continue;
                }
                if c.minor(i, j).unwrap().clutter.is_delta3() {
                    best = Some(MinorWitness {
                        delete: i,
                        contract: j,
                    });
                    break 'outer;
                }
            }
        }
        assert_eq!(c.has_delta3_minor(), best);
    }

    #[test]
    fn antichain_counts_match_dedekind_numbers() {
        let counts: Vec<usize> = (0..=4).map(|n| all_antichains(n).len()).collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168]);
    }

    #[test]
    fn relabeling_round_trip() {
        let r = Relabeling::new(m(6, &[2, 3, 6]));
        let s = m(3, &[1, 3]);
        assert_eq!(r.expand(s), m(6, &[2, 6]));
        assert_eq!(r.compress(r.expand(s)), s);
        assert_eq!(r.compress(m(6, &[1, 2, 5])), m(3, &[1]));
    }

    fn family(width: usize) -> impl Strategy<Value = Vec<SubsetMask>> {
        prop::collection::vec(0u64..1 << width, 0..12).prop_map(move |codes| {
            codes
                .into_iter()
                .map(|b| SubsetMask::from_bits(width, b).unwrap())
                .collect()
        })
    }

    fn brute_minimal(sets: &[SubsetMask]) -> Vec<SubsetMask> {
        let mut out: Vec<SubsetMask> = sets
            .iter()
            .copied()
            .filter(|s| !sets.iter().any(|t| t.is_subset(*s) && t != s))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn clutter_on(width: usize) -> impl Strategy<Value = Clutter> {
        family(width).prop_map(move |f| Clutter::from_minimal(width, &f))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn minimal_sets_matches_pairwise_brute_force(
            sets in (1usize..=8).prop_flat_map(family),
        ) {
            let got = minimal_sets(&sets);
            prop_assert_eq!(&got, &brute_minimal(&sets));
            let width = sets.first().map_or(1, |s| s.width());
            prop_assert!(Clutter::new(width, got).is_ok());
        }
    }

    proptest! {
        #[test]
        fn minor_composition(
            c in clutter_on(6),
            assign1 in prop::collection::vec(0u8..3, 6),
            assign2 in prop::collection::vec(0u8..3, 6),
        ) {
            let pick = |assign: &[u8], width: usize, tag: u8| {
                let elems: Vec<usize> = (1..=width).filter(|&e| assign[e - 1] == tag).collect();
                SubsetMask::from_elements(width, &elems).unwrap()
            };
            let (i1, j1) = (pick(&assign1, 6, 1), pick(&assign1, 6, 2));
            let first = c.minor(i1, j1).unwrap();
            let k = first.clutter.ground_size();
            let (i2, j2) = (pick(&assign2, k, 1), pick(&assign2, k, 2));
            let second = first.clutter.minor(i2, j2).unwrap();

            let i = i1.union(first.relabeling.expand(i2));
            let j = j1.union(first.relabeling.expand(j2));
            let direct = c.minor(i, j).unwrap();
            prop_assert_eq!(&second.clutter, &direct.clutter);
            let composed: Vec<usize> = second
                .relabeling
                .survivors()
                .iter()
                .map(|&e| first.relabeling.original_label(e))
                .collect();
            prop_assert_eq!(composed.as_slice(), direct.relabeling.survivors());
        }
    }
}
