use super::{complement_basis, dist4, dot4, NumGeomError, SurfaceSpec};
use crate::algebra::PointC2;
use crate::numgeom::sample_surface;

const POLE_CLEARANCE: f64 = 1e-3;
const POLE_CANDIDATES: usize = 100;

fn pole_frame(pole: &PointC2) -> ([f64; 4], [[f64; 4]; 3]) {
    let p = pole.to_real();
    let n = super::norm4(&p);
    let p = p.map(|c| c / n);
    (p, complement_basis(&p))
}

/// Stereographic projection of `S³ ∖ {pole}` onto `pole⊥ ≅ ℝ³`, sending the
/// antipode of `pole` to the origin.
pub fn stereo_project(points: &[[f64; 4]], pole: &PointC2) -> Result<Vec<[f64; 3]>, NumGeomError> {
    let (p, e) = pole_frame(pole);
    points
        .iter()
        .map(|x| {
            if dist4(x, &p) < POLE_CLEARANCE {
                return Err(NumGeomError::PoleTooClose);
            }
            let d = 1.0 - dot4(x, &p);
            Ok([dot4(x, &e[0]) / d, dot4(x, &e[1]) / d, dot4(x, &e[2]) / d])
        })
        .collect()
}

pub fn stereo_unproject(points: &[[f64; 3]], pole: &PointC2) -> Vec<[f64; 4]> {
    let (p, e) = pole_frame(pole);
    points
        .iter()
        .map(|y| {
            let s = y.iter().map(|c| c * c).sum::<f64>();
            std::array::from_fn(|i| {
                (2.0 * (y[0] * e[0][i] + y[1] * e[1][i] + y[2] * e[2][i]) + (s - 1.0) * p[i]) / (s + 1.0)
            })
        })
        .collect()
}

/// Among 100 fixed candidate points of `S³`, the one farthest from `points`.
pub fn choose_pole(points: &[[f64; 4]]) -> PointC2 {
    let candidates = sample_surface(&SurfaceSpec::sphere(), POLE_CANDIDATES, 0x5EED);
    let clearance = |c: &PointC2| {
        let r = c.to_real();
        points.iter().map(|x| dist4(x, &r)).fold(f64::INFINITY, f64::min)
    };
    let mut best = candidates[0];
    let mut best_d = clearance(&best);
    for c in &candidates[1..] {
        let d = clearance(c);
        if d > best_d {
            best = *c;
            best_d = d;
        }
    }
    best
}
