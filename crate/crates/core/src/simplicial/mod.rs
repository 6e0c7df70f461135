//! Edge-marked, 2-truncated simplicial complexes and lifting problems.
//!
//! Simplices above dimension 2 are implicit: an n-simplex is an edge
//! labelling of Δⁿ whose triangles are all valid.

mod complex;
mod filler;
mod hom;
mod lifting;
mod shapes;

pub use complex::{Complex, ComplexBuilder, Edge, SimplicialMap};
pub use filler::{generic_filler, FillerTrace};
pub use hom::{complex_isomorphism, extensions, hom_maps, Constraint, Plan};
pub use lifting::{
    check_lifting, check_relative_lifting, LiftMode, LiftingCertificate, LiftingReport, RelativeLiftingReport,
    Verdict,
};
pub use shapes::{box_inclusion, make_shape, sigma, simplex, ShapeInclusion};
