//! Homological invariants of gentle algebras.
//!
//! A gentle algebra is given as a quiver with length-two relations
//! ([`presentation`]). From it the crate computes the permitted and forbidden
//! threads ([`threads`]), the AG-invariant and the marked ribbon surface
//! ([`surface`]), string modules and their syzygies ([`strings`]), and the
//! global and self-injective dimensions, resolutions and Gorenstein
//! projectives ([`homdim`]). Every number can be rechecked by brute-force
//! linear algebra over a finite field ([`oracle`]).

pub mod dimension;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod homdim;
pub mod io;
pub mod oracle;
pub mod presentation;
pub mod strings;
pub mod surface;
pub mod threads;

pub use dimension::Dimension;
pub use error::{CapError, InvariantError};
pub use presentation::{
    validate_gentle, ArrowId, GentlePresentation, PresentationError, RawPresentation, VertexId,
    Violation,
};
pub use strings::{StringSum, StringWord};
pub use surface::{ag_invariant, AgInvariant, SurfaceModel};
pub use threads::{Thread, ThreadSet};
