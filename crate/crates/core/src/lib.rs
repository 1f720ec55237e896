//! Complex tangents of graph embeddings of the Heisenberg group ℍ and the
//! 3-sphere S³ into ℂ³.
//!
//! The symbolic side ([`algebra`], [`cr`], [`transfer`]) builds embedding
//! functions whose complex-tangent sets are prescribed algebraic curves. The
//! floating-point side ([`numgeom`]) checks those constructions without
//! sharing code paths with them: tangent-plane rank tests, Gauss–Newton
//! projection, curve tracing and linking numbers.

pub mod algebra;
pub mod cli;
pub mod cr;
pub mod numgeom;
pub mod transfer;

pub use algebra::{parse_poly, Form, GaussianRational, PointC2, Polynomial};
