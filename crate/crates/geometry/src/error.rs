use crate::rat::RatVec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("the set is empty")]
    EmptySet,
    #[error("no half-spaces given: the set is the whole space")]
    WholeSpace,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("interiors intersect; no separating half-space")]
    NotSeparable,
    #[error("objective is unbounded along ray {ray:?}")]
    Unbounded { ray: RatVec },
    #[error("half-space normal is zero")]
    ZeroNormal,
    #[error("scale factor must be positive")]
    NonPositiveFactor,
    #[error("matrix is not unimodular")]
    NotUnimodular,
}
