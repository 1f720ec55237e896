//! Moving constructions between ℍ and S³∖{(0,1)}.
//!
//! `φ(z,w) = (2z/(w+i), (w−i)/(w+i))` maps ℍ onto the punctured sphere and
//! `ψ(z,w) = (iz/(1−w), i(1+w)/(1−w))` inverts it. Polynomials pulled back
//! along either map become rational functions whose denominators are powers
//! of one holomorphic and one antiholomorphic linear factor; this module
//! keeps those exponents explicit.

mod maps;
mod motion;
mod punctured;

pub use maps::{eval_map, phi, psi, pullback_numerator, MapDirection, Pullback};
pub use motion::{link_product, move_knot, RigidMotionH};
pub use punctured::{apply_cr_punctured, transfer_to_sphere, PuncturedField, PuncturedRational};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::cr::CrError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error("point is within 1e-12 of the pole of {0:?}")]
    PoleHit(MapDirection),
    #[error("smoothness parameter r = {0} is below 2; the transferred embedding needs a continuous derivative at (0,1)")]
    SmoothnessTooLow(u32),
    #[error("rotation matrix is not orthogonal")]
    NonOrthogonal,
    #[error("link product needs at least one polynomial")]
    EmptyLink,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cr(#[from] CrError),
}
