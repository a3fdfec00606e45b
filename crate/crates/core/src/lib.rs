//! Exact toolkit for clutters and cuboids.
//!
//! * [`clutter`]: subsets, clutters, minors and Δ3 minor search.
//! * [`cuboid`]: point sets in `{0,1}^n`, cuboids, twisting, restriction,
//!   induced clutters and the hard family `S_(p:i,j,k)`.
//! * [`polyhedral`]: exact vertex enumeration of set covering polyhedra,
//!   idealness, cube-idealness and facet audits.
//! * [`oracle`]: filter oracles, strategies and the query lower-bound audit.
//! * [`theorem`]: the hard-family sweep.
//! * [`io`]: JSON file formats.

pub mod clutter;
pub mod cuboid;
pub mod error;
pub mod io;
pub mod oracle;
pub mod polyhedral;
pub mod theorem;

pub use clutter::{
    all_antichains, minimal_sets, Clutter, Minor, MinorWitness, Relabeling, SubsetMask,
};
pub use cuboid::{
    complement_max_degree, cuboid_of, induced_clutter, make_hard_instance, make_s3, restrict,
    twist, Fixing, Point, PointSet,
};
pub use error::{Error, Result};
pub use polyhedral::{facet_audit, is_cube_ideal, is_ideal, Limits, Rational};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
