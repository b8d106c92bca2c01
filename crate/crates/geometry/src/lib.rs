//! Exact rational polyhedral geometry.
//!
//! Polyhedra carry both an irredundant list of half-spaces and a
//! generator description (vertices plus rays, lines as opposite ray pairs).

pub mod dd;
pub mod error;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod polyhedron;
pub mod rat;
pub mod transform;

pub use error::GeomError;
pub use lp::{lp_solve, separate, LpSolution, Sense};
pub use polyhedron::{contains, dd_convert, polar, vrep_to_hrep, HalfSpace, Polyhedron};
pub use rat::{Rat, RatVec};
pub use transform::{affine_image, homothety, minkowski_scale_shift, transform, UnimodularMap};
