//! Constructive procedures producing lattice-free polyhedra with controlled
//! facet counts, together with the witnesses that bound their strength.

pub mod approx;
pub mod cone;
pub mod cubeface;
pub mod inapprox;
pub mod lifting;
pub mod random;
pub mod receding;
mod util;

pub use approx::{approximate_any_f, approximate_fixed_f, prepare_lift, Approximation, LiftInstance, Route};
pub use cone::{caratheodory_facet_subset, caratheodory_subset, truncated_cone_shrink, FacetSubsetResult, ShrinkResult, TruncatedCone};
pub use cubeface::cube_face_construction;
pub use inapprox::{
    cylinder_lift_witness, inapprox_pyramid, shrink_epsilon, simplex_tower, InapproxPyramid, PyramidCheck, SimplexTower,
    TowerCheck,
};
pub use lifting::{lift_to_nplus1, LiftCase, LiftOutcome};
pub use receding::{receding_apex_body, split_slab, triangles_around_half};
pub use util::{embed_at, segment_meets, slice_at};

use latcut_geometry::rat::Rat;
use latcut_geometry::GeomError;
use latcut_lattice::LatticeError;
use latcut_strength::StrengthError;

/// Which precondition of the lifting step failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    GammaRange,
    PointNotInterior,
    BaseNotLatticeFree,
    BaseDimension,
    SliceOutsideBase,
    WidthTooLarge,
    EmptySlice,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("facet count out of range")]
    OutOfRange,
    #[error("decomposition parameter {0} is below 1/3")]
    MuTooSmall(Rat),
    #[error("point lies outside the truncated cone")]
    PointOutside,
    #[error("base of the truncated cone does not span a hyperplane parallel to its copy")]
    DegenerateBase,
    #[error("facet normals do not have the origin in their convex hull; the input is not lattice-free")]
    NotLatticeFreeInput,
    #[error("hypothesis violated: {0:?}")]
    HypothesisViolated(Hypothesis),
    #[error("a witness midpoint is not interior")]
    WitnessOnBoundary,
    #[error("f is not an interior point")]
    NotInterior,
    #[error("f is integral")]
    IntegralPoint,
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("no direction of width at most the flatness bound was found")]
    WidthNotFound,
    #[error("internal check failed: {0}")]
    CheckFailed(&'static str),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Strength(#[from] StrengthError),
}
