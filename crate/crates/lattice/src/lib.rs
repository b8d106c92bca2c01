//! Integer-point reasoning over exact polyhedra.

pub mod cert;
pub mod enumerate;
pub mod unimodular;
pub mod width;

pub use cert::{check_lattice_free, maximalize, verify_cert, LatticeFreeCert, LatticeStatus, Maximality};
pub use enumerate::lattice_points_in;
pub use width::{denominator, flatness_bound, lattice_width, width_along, Width, WidthResult};

use latcut_geometry::GeomError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("recession cone is not a linear subspace; enumeration would be infinite")]
    UnboundedEnumeration,
    #[error("recession cone is not a linear subspace")]
    UnsupportedShape,
    #[error("maximalization is only available in dimensions 1 and 2, got {0}")]
    UnsupportedDimension(usize),
    #[error("the set is not full-dimensional")]
    NotFullDimensional,
    #[error("the set is not lattice-free")]
    NotLatticeFree,
    #[error("integer enumeration box is too large")]
    EnumerationTooLarge,
    #[error(transparent)]
    Geom(#[from] GeomError),
}
