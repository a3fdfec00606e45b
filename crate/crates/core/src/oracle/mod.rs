//! Filter oracles, transcripts, and the query lower-bound laboratory.

use std::cell::{Cell, RefCell};

use crate::clutter::{Clutter, Relabeling, SubsetMask};
use crate::error::{Error, Result};

pub mod adversary;
pub mod audit;
pub mod strategy;

pub use adversary::{
    distinguishing_queries, instance_pair, requirement_coverage, Coverage, InstancePair,
    Requirement,
};
pub use audit::{audit_strategy, AuditConfig, AuditReport};
pub use strategy::{
    builtin_strategy, Cheater, ReferenceTester, Strategy, Verdict, VertexProber, BUILTIN_STRATEGIES,
};

/// Answers whether a subset of the ground set contains a member of some
/// hidden clutter. Implementations must be deterministic and monotone.
pub trait FilterOracle {
    fn ground_size(&self) -> usize;
    fn query(&self, x: SubsetMask) -> bool;
}

impl<O: FilterOracle + ?Sized> FilterOracle for &O {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn query(&self, x: SubsetMask) -> bool {
        (**self).query(x)
    }
}

impl<O: FilterOracle + ?Sized> FilterOracle for Box<O> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn query(&self, x: SubsetMask) -> bool {
        (**self).query(x)
    }
}

/// Oracle backed by an explicit member list.
#[derive(Clone, Debug)]
pub struct ExplicitOracle {
    clutter: Clutter,
}

pub fn explicit_oracle(clutter: Clutter) -> ExplicitOracle {
    ExplicitOracle { clutter }
}

impl ExplicitOracle {
    pub fn clutter(&self) -> &Clutter {
        &self.clutter
    }
}

impl FilterOracle for ExplicitOracle {
    fn ground_size(&self) -> usize {
        self.clutter.ground_size()
    }

    fn query(&self, x: SubsetMask) -> bool {
        self.clutter.contains_member(x)
    }
}

/// A recorded answer contradicting an earlier one under monotonicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonotonicityViolation {
    pub earlier: usize,
    pub later: usize,
}

/// Ordered log of oracle calls.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    entries: Vec<(SubsetMask, bool)>,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends an answer, rejecting it if no clutter could produce both it
    /// and the answers already recorded.
    pub fn append(&mut self, x: SubsetMask, answer: bool) -> Result<(), MonotonicityViolation> {
        let later = self.entries.len();
        let conflict = self.entries.iter().position(|&(y, prior)| {
            (prior && !answer && y.is_subset(x)) || (!prior && answer && x.is_subset(y))
        });
        if let Some(earlier) = conflict {
            return Err(MonotonicityViolation { earlier, later });
        }
        self.entries.push((x, answer));
        Ok(())
    }

    pub fn entries(&self) -> &[(SubsetMask, bool)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn queries(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.entries.iter().map(|&(x, _)| x)
    }
}

/// Delegating oracle that logs every call. Repeated queries count each time.
#[derive(Debug)]
pub struct CountingOracle<O> {
    inner: O,
    calls: Cell<usize>,
    transcript: RefCell<Transcript>,
    violation: Cell<Option<MonotonicityViolation>>,
}

pub fn counting_wrapper<O: FilterOracle>(inner: O) -> CountingOracle<O> {
    CountingOracle {
        inner,
        calls: Cell::new(0),
        transcript: RefCell::new(Transcript::new()),
        violation: Cell::new(None),
    }
}

impl<O: FilterOracle> CountingOracle<O> {
    /// Number of calls made, including any rejected from the transcript.
    pub fn count(&self) -> usize {
        self.calls.get()
    }

    pub fn transcript(&self) -> Transcript {
        self.transcript.borrow().clone()
    }

    /// First non-monotone answer seen from the wrapped oracle, if any.
    pub fn violation(&self) -> Option<MonotonicityViolation> {
        self.violation.get()
    }

    pub fn into_transcript(self) -> Transcript {
        self.transcript.into_inner()
    }
}

impl<O: FilterOracle> FilterOracle for CountingOracle<O> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn query(&self, x: SubsetMask) -> bool {
        let answer = self.inner.query(x);
        self.calls.set(self.calls.get() + 1);
        if let Err(v) = self.transcript.borrow_mut().append(x, answer) {
            if self.violation.get().is_none() {
                self.violation.set(Some(v));
            }
        }
        answer
    }
}

/// Oracle for the minor `C \ I / J`, over the compressed ground set.
///
/// `X` contains a member of the minor iff `X ∪ J` contains a member of the
/// original clutter: such a member avoids `I` because `X ∪ J ⊆ V − I`.
#[derive(Debug)]
pub struct MinorOracle<O> {
    inner: O,
    relabeling: Relabeling,
    contract: SubsetMask,
}

pub fn minor_oracle<O: FilterOracle>(
    inner: O,
    delete: SubsetMask,
    contract: SubsetMask,
) -> Result<MinorOracle<O>> {
    let ground = inner.ground_size();
    for s in [delete, contract] {
        if s.width() != ground {
            return Err(Error::WidthMismatch {
                expected: ground,
                found: s.width(),
            });
        }
    }
    if !delete.is_disjoint(contract) {
        return Err(Error::Overlap { delete, contract });
    }
    let relabeling = Relabeling::new(delete.union(contract).complement());
    Ok(MinorOracle {
        inner,
        relabeling,
        contract,
    })
}

impl<O> MinorOracle<O> {
    pub fn relabeling(&self) -> &Relabeling {
        &self.relabeling
    }
}

impl<O: FilterOracle> FilterOracle for MinorOracle<O> {
    fn ground_size(&self) -> usize {
        self.relabeling.len()
    }

    fn query(&self, x: SubsetMask) -> bool {
        self.inner
            .query(self.relabeling.expand(x).union(self.contract))
    }
}
