//! Relative strength of intersection cuts.

pub mod family;
pub mod rho;

pub use family::{
    inner_polytope_sequence, one_for_all_criterion, rho_family_lower_witness, rho_family_upper, sandwich, LowerWitness,
    OneForAll, SandwichReport,
};
pub use rho::{containment_threshold, rho_f, StrengthReport, StrengthValue, StrengthWitness};

use latcut_cuts::CutError;
use latcut_geometry::GeomError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrengthError {
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("f is not an interior point of L")]
    PointNotInterior,
    #[error("L has no recession directions")]
    NoRays,
    #[error("shrink factor must lie strictly between 0 and 1")]
    InvalidFactor,
    #[error("cut closure is empty")]
    EmptyClosure,
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}
