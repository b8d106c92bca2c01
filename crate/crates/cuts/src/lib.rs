//! Intersection cuts from polyhedra and the distances between them.

pub mod cut;
pub mod gauge;
pub mod metric;

pub use cut::{closure, cut_dominates, cut_point_member, intersection_cut, ClosureSystem, CutSystem};
pub use gauge::{gauge, translate};
pub use metric::{f_metric, gauge_convergence_check, hausdorff_sq, polar_at, sqrt_le_sum, ConvergenceReport, FMetric};

use latcut_geometry::GeomError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CutError {
    #[error("f is not an interior point of the body")]
    PointNotInterior,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error(transparent)]
    Geom(#[from] GeomError),
}
