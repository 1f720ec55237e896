use nalgebra::{Matrix3, Matrix3x4, Vector3, Vector4};

use super::{ComplexField, NumGeomError, SurfaceSpec};
use crate::algebra::PointC2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for ProjectOptions {
    fn default() -> Self {
        Self { tol: 1e-10, max_iter: 50 }
    }
}

pub(crate) fn residual<F: ComplexField + ?Sized>(s: &SurfaceSpec, g: &F, x: &PointC2) -> Vector3<f64> {
    let v = g.value(x);
    Vector3::new(s.rho(x), v.re, v.im)
}

/// Jacobian of `(ρ, Re g, Im g)` with respect to `(Re z, Im z, Re w, Im w)`.
pub(crate) fn jacobian<F: ComplexField + ?Sized>(s: &SurfaceSpec, g: &F, x: &PointC2) -> Matrix3x4<f64> {
    let grad = s.gradient(x);
    let [re, im] = g.jet(x).real_jacobian();
    Matrix3x4::from_rows(&[
        nalgebra::RowVector4::from(grad),
        nalgebra::RowVector4::from(re),
        nalgebra::RowVector4::from(im),
    ])
}

fn min_norm_step(j: &Matrix3x4<f64>, r: &Vector3<f64>) -> Option<Vector4<f64>> {
    let jjt: Matrix3<f64> = j * j.transpose();
    let sv = jjt.singular_values();
    let (lo, hi) = (sv.min(), sv.max());
    if hi == 0.0 || lo <= 1e-24 * hi {
        return None;
    }
    let y = jjt.lu().solve(r)?;
    Some(-(j.transpose() * y))
}

fn offset(x: &PointC2, d: &Vector4<f64>, t: f64) -> PointC2 {
    let r = x.to_real();
    PointC2::from_real(std::array::from_fn(|i| r[i] + t * d[i]))
}

/// Gauss–Newton with minimum-norm steps on the underdetermined system
/// `(ρ, Re g, Im g) = 0`, with step halving when the residual grows.
pub fn project_to_variety<F: ComplexField + ?Sized>(
    s: &SurfaceSpec,
    g: &F,
    x0: &PointC2,
    opts: ProjectOptions,
) -> Result<PointC2, NumGeomError> {
    let mut x = *x0;
    let mut r = residual(s, g, &x);
    for _ in 0..opts.max_iter {
        let rn = r.norm();
        if !rn.is_finite() {
            return Err(NumGeomError::NonConvergence { residual: rn });
        }
        if rn < opts.tol {
            return Ok(x);
        }
        let j = jacobian(s, g, &x);
        let Some(step) = min_norm_step(&j, &r) else {
            return Err(NumGeomError::RankDeficientJacobian);
        };
        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..12 {
            let cand = offset(&x, &step, t);
            let rc = residual(s, g, &cand);
            if rc.norm() < rn {
                accepted = Some((cand, rc));
                break;
            }
            t *= 0.5;
        }
        let Some((nx, nr)) = accepted else {
            return Err(NumGeomError::NonConvergence { residual: rn });
        };
        x = nx;
        r = nr;
    }
    if r.norm() < opts.tol {
        Ok(x)
    } else {
        Err(NumGeomError::NonConvergence { residual: r.norm() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Form, NumericPoly};
    use crate::numgeom::sample_surface;
    use num_complex::Complex64;

    fn field(s: &str) -> NumericPoly {
        NumericPoly::new(&parse_poly(s, Form::Ambient).unwrap())
    }

    #[test]
    fn great_circle_projection() {
        let s = SurfaceSpec::sphere();
        let x0 = PointC2::new(Complex64::new(0.1, 0.0), Complex64::new(0.6, 0.75));
        let x = project_to_variety(&s, &field("z"), &x0, ProjectOptions::default()).unwrap();
        assert!(x.z.norm() < 1e-10);
        assert!((x.w.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn trefoil_modulus_identity() {
        let s = SurfaceSpec::sphere();
        let g = field("z^2 + w^3");
        let mut ok = 0;
        for x0 in sample_surface(&s, 40, 5) {
            if let Ok(x) = project_to_variety(&s, &g, &x0, ProjectOptions::default()) {
                let r = residual(&s, &g, &x).norm();
                assert!(r < 1e-10);
                assert!((x.z.norm_sqr() - x.w.norm().powi(3)).abs() < 1e-9);
                ok += 1;
            }
        }
        assert!(ok > 30, "only {ok} seeds converged");
    }

    #[test]
    fn fixed_point_is_returned() {
        let s = SurfaceSpec::sphere();
        let x0 = PointC2::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0));
        let x = project_to_variety(&s, &field("z"), &x0, ProjectOptions::default()).unwrap();
        assert_eq!(x, x0);
    }

    #[test]
    fn constant_target_is_rank_deficient() {
        let s = SurfaceSpec::heisenberg();
        let x0 = sample_surface(&s, 1, 0)[0];
        let e = project_to_variety(&s, &field("i"), &x0, ProjectOptions::default());
        assert_eq!(e, Err(NumGeomError::RankDeficientJacobian));
    }
}
