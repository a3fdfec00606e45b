use thiserror::Error;

use crate::clutter::SubsetMask;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("antichain violation: {inner} is strictly contained in {outer}")]
    AntichainViolation {
        outer: SubsetMask,
        inner: SubsetMask,
    },

    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundTooLarge(usize),

    #[error("element {element} is out of range for a ground set of size {ground}")]
    ElementOutOfRange { element: usize, ground: usize },

    #[error("delete set {delete} and contract set {contract} overlap")]
    Overlap {
        delete: SubsetMask,
        contract: SubsetMask,
    },

    #[error("{0} does not meet every pair {{2i-1, 2i}} exactly once")]
    NotACuboidMember(SubsetMask),

    #[error("bad coordinates: {0}")]
    BadCoordinates(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{what} needs {required} steps, exceeding the budget of {budget}")]
    SizeLimit {
        what: &'static str,
        required: u128,
        budget: u128,
    },

    #[error("convex hull has affine dimension {rank}, expected {dimension}")]
    NotFullDimensional { rank: usize, dimension: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("strategy `{strategy}` crashed: {message}")]
    StrategyCrash { strategy: String, message: String },
}
