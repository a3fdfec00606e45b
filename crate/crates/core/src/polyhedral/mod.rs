//! Exact polyhedral computations: covering-polyhedron vertices, idealness,
//! cube-idealness and facet audits. No floating point is used anywhere.

pub mod facets;
pub mod linalg;
pub mod vertices;

pub use facets::{facet_audit, ClassifiedFacet, FacetAudit, FacetInequality, FacetKind};
pub use vertices::{
    covering_vertices, is_ideal, verify_certificate, CoveringPolyhedron, Degeneracy,
    IdealnessReport, VertexCertificate, VertexEnumeration,
};

use crate::clutter::Clutter;
use crate::cuboid::{induced_clutter, Point, PointSet};
use crate::error::Result;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num::BigRational;

/// Work budgets shared by the enumeration routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Limits {
    /// Cap on `C(rows, |V|)` for vertex enumeration and on facet candidates.
    pub max_bases: u128,
    /// Largest dimension accepted by [`facet_audit`].
    pub facet_dim_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_bases: 100_000_000,
            facet_dim_cap: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeWitness {
    pub point: Point,
    pub induced: Clutter,
    pub vertex: VertexCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeIdealness {
    pub cube_ideal: bool,
    pub witness: Option<CubeWitness>,
}

/// Decides cube-idealness through the induced clutters at every point of
/// the cube, in ascending code order; the first non-ideal one is the witness.
pub fn is_cube_ideal(s: &PointSet, limits: &Limits) -> Result<CubeIdealness> {
    for point in Point::all(s.dim()) {
        if s.contains(point) {
            // induced clutter is {∅}
            continue;
        }
        let induced = induced_clutter(s, point)?;
        let report = is_ideal(&induced, limits)?;
        if let Some(vertex) = report.witness {
            return Ok(CubeIdealness {
                cube_ideal: false,
                witness: Some(CubeWitness {
                    point,
                    induced,
                    vertex,
                }),
            });
        }
    }
    Ok(CubeIdealness {
        cube_ideal: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuboid::{cuboid_of, make_s3};

    #[test]
    fn cube_idealness_examples() {
        let limits = Limits::default();
        for n in 1..=4 {
            assert!(
                is_cube_ideal(&PointSet::full(n), &limits)
                    .unwrap()
                    .cube_ideal
            );
            for p in Point::all(n) {
                let s = PointSet::full(n).without(p);
                assert!(is_cube_ideal(&s, &limits).unwrap().cube_ideal);
            }
        }
        let verdict = is_cube_ideal(&make_s3(), &limits).unwrap();
        assert!(!verdict.cube_ideal);
        let w = verdict.witness.unwrap();
        assert_eq!(w.point, Point::zero(3));
        assert_eq!(w.induced, Clutter::delta3());
    }

    #[test]
    fn s3_cuboid_is_not_ideal() {
        let report = is_ideal(&cuboid_of(&make_s3()), &Limits::default()).unwrap();
        assert!(!report.ideal);
        let poly = CoveringPolyhedron::new(&cuboid_of(&make_s3()));
        verify_certificate(&poly, &report.witness.unwrap()).unwrap();
    }
}
