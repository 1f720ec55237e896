//! Floating-point checks that share nothing with the symbolic pipeline
//! except the polynomial coefficients: surface sampling, graph tangent
//! frames in ℝ⁶, the complex-tangency defect, Gauss–Newton projection onto
//! `{ρ = 0, g = 0}`, curve tracing, stereographic projection and Gauss
//! linking numbers.
//!
//! Points of ℂ² are identified with ℝ⁴ as `(Re z, Im z, Re w, Im w)`; the
//! graph coordinate adds `(Re f, Im f)`.

mod frame;
mod io;
mod link;
mod project;
mod stereo;
mod surface;
mod trace;

pub use frame::{tangency_defect, tangent_frame, TangentFrame};
pub use io::{read_traced_curve, write_columnar, write_traced_curve};
pub use link::{linking_number, Polyline};
pub use project::{project_to_variety, ProjectOptions};
pub use stereo::{choose_pole, stereo_project, stereo_unproject};
pub use surface::{sample_surface, SurfaceKind, SurfaceSpec};
pub use trace::{trace_curve, trace_field, CurveComponent, TraceOptions, TracedCurve};

use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{Jet, NumericPoly, PointC2};
use crate::transfer::PuncturedField;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumGeomError {
    #[error("point is off the surface (|rho| = {residual:e})")]
    OffSurface { residual: f64 },
    #[error("defining function has vanishing gradient at the point")]
    VanishingGradient,
    #[error("tangent frame is numerically degenerate")]
    DegenerateFrame,
    #[error("Gauss-Newton did not converge (residual {residual:e})")]
    NonConvergence { residual: f64 },
    #[error("Jacobian of (rho, Re g, Im g) is rank deficient")]
    RankDeficientJacobian,
    #[error("no seed converged onto the curve")]
    NoCurveFound,
    #[error("a traced point lies within 1e-3 of the projection pole")]
    PoleTooClose,
    #[error("linking number needs closed curves")]
    OpenCurve,
    #[error("curves are too close (min distance {distance:e})")]
    CurvesTooClose { distance: f64 },
    #[error("invalid curve document: {0}")]
    Document(String),
}

/// A complex-valued function on ℂ² that can report its Wirtinger jet.
pub trait ComplexField {
    fn jet(&self, x: &PointC2) -> Jet;

    fn value(&self, x: &PointC2) -> Complex64 {
        self.jet(x).value
    }
}

impl ComplexField for NumericPoly {
    fn jet(&self, x: &PointC2) -> Jet {
        NumericPoly::jet(self, x)
    }

    fn value(&self, x: &PointC2) -> Complex64 {
        self.eval(x)
    }
}

impl ComplexField for PuncturedField {
    fn jet(&self, x: &PointC2) -> Jet {
        PuncturedField::jet(self, x)
    }

    fn value(&self, x: &PointC2) -> Complex64 {
        self.eval(x)
    }
}

pub(crate) fn dot4(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm4(a: &[f64; 4]) -> f64 {
    dot4(a, a).sqrt()
}

pub(crate) fn dist4(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Orthonormal basis of `n⊥ ⊂ ℝ⁴`: the last three columns of the
/// Householder reflection mapping `e₁` to `±n/|n|`.
pub(crate) fn complement_basis(n: &[f64; 4]) -> [[f64; 4]; 3] {
    let len = norm4(n);
    let u: [f64; 4] = std::array::from_fn(|i| n[i] / len);
    // v = e1 + u when u₀ > 0, else e1 − u, avoiding cancellation
    let sign = if u[0] > 0.0 { 1.0 } else { -1.0 };
    let mut v = [0.0; 4];
    v[0] = 1.0 + sign * u[0];
    for i in 1..4 {
        v[i] = sign * u[i];
    }
    let vv = dot4(&v, &v);
    std::array::from_fn(|c| {
        let col = c + 1;
        std::array::from_fn(|r| {
            let delta = if r == col { 1.0 } else { 0.0 };
            delta - 2.0 * v[r] * v[col] / vv
        })
    })
}
