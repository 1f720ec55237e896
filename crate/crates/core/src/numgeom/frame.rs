use nalgebra::{Matrix6, Matrix6x3};

use super::{complement_basis, norm4, ComplexField, NumGeomError, SurfaceSpec};
use crate::algebra::{Jet, PointC2};

/// Real tangent 3-plane of the graph `x ↦ (x, f(x))` at a point of `M`,
/// as three vectors in ℝ⁶.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentFrame {
    pub point: PointC2,
    pub basis: [[f64; 6]; 3],
}

impl TangentFrame {
    /// Pushes a basis of `T_x M ⊂ ℝ⁴` forward through `v ↦ (v, df(v))`.
    pub fn from_tangent_basis(point: PointC2, tangent: &[[f64; 4]; 3], jet: &Jet) -> Self {
        let basis = tangent.map(|v| {
            let d = jet.directional(v);
            [v[0], v[1], v[2], v[3], d.re, d.im]
        });
        Self { point, basis }
    }
}

pub fn tangent_frame<F: ComplexField + ?Sized>(
    s: &SurfaceSpec,
    f: &F,
    x: &PointC2,
) -> Result<TangentFrame, NumGeomError> {
    let residual = s.rho(x).abs();
    if residual >= 1e-8 {
        return Err(NumGeomError::OffSurface { residual });
    }
    let grad = s.gradient(x);
    if norm4(&grad) < 1e-12 {
        return Err(NumGeomError::VanishingGradient);
    }
    let tangent = complement_basis(&grad);
    Ok(TangentFrame::from_tangent_basis(*x, &tangent, &f.jet(x)))
}

/// Smallest singular value of `[Q | JQ]`, where `Q` is an orthonormal basis
/// of the frame's span and `J` is multiplication by `i` on each ℂ factor.
///
/// Zero exactly when the 3-plane contains a complex line. Because `Q` is
/// orthonormalised first, the value depends only on the plane.
pub fn tangency_defect(fr: &TangentFrame) -> Result<f64, NumGeomError> {
    let b = Matrix6x3::from_fn(|r, c| fr.basis[c][r]);
    if !b.iter().all(|v| v.is_finite()) {
        return Err(NumGeomError::DegenerateFrame);
    }
    let scale = (0..3).map(|c| b.column(c).norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(NumGeomError::DegenerateFrame);
    }
    let qr = (b / scale).qr();
    let r = qr.r();
    let rmax = (0..3).map(|i| r[(i, i)].abs()).fold(0.0, f64::max);
    if (0..3).any(|i| r[(i, i)].abs() < 1e-8 * rmax.max(1e-300)) {
        return Err(NumGeomError::DegenerateFrame);
    }
    let q = qr.q();
    let m = Matrix6::from_fn(|row, col| {
        if col < 3 {
            q[(row, col)]
        } else {
            // J(a, b) = (−b, a) per complex pair
            let c = col - 3;
            if row % 2 == 0 {
                -q[(row + 1, c)]
            } else {
                q[(row - 1, c)]
            }
        }
    });
    let sv = m.singular_values();
    Ok(sv.iter().cloned().fold(f64::INFINITY, f64::min))
}
