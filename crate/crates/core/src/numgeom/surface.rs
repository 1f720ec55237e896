use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::algebra::{rho_heisenberg, rho_sphere, NumericPoly, PointC2, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Sphere,
    Heisenberg,
}

impl std::fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SurfaceKind::Sphere => write!(f, "sphere"),
            SurfaceKind::Heisenberg => write!(f, "heisenberg"),
        }
    }
}

impl std::str::FromStr for SurfaceKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sphere" => Ok(SurfaceKind::Sphere),
            "heisenberg" => Ok(SurfaceKind::Heisenberg),
            other => Err(format!("unknown surface `{other}` (expected sphere or heisenberg)")),
        }
    }
}

/// Real hypersurface `M = {ρ = 0}` of ℂ².
#[derive(Clone, Debug)]
pub struct SurfaceSpec {
    pub kind: SurfaceKind,
    pub rho: Polynomial,
    compiled: NumericPoly,
}

impl SurfaceSpec {
    pub fn new(kind: SurfaceKind) -> Self {
        let rho = match kind {
            SurfaceKind::Sphere => rho_sphere(),
            SurfaceKind::Heisenberg => rho_heisenberg(),
        };
        let compiled = NumericPoly::new(&rho);
        Self { kind, rho, compiled }
    }

    pub fn sphere() -> Self {
        Self::new(SurfaceKind::Sphere)
    }

    pub fn heisenberg() -> Self {
        Self::new(SurfaceKind::Heisenberg)
    }

    pub fn rho(&self, x: &PointC2) -> f64 {
        self.compiled.eval(x).re
    }

    /// Real gradient of ρ in ℝ⁴: `∂ρ/∂x = 2 Re ρ_z`, `∂ρ/∂y = −2 Im ρ_z`.
    pub fn gradient(&self, x: &PointC2) -> [f64; 4] {
        let j = self.compiled.jet(x);
        [2.0 * j.dz.re, -2.0 * j.dz.im, 2.0 * j.dw.re, -2.0 * j.dw.im]
    }
}

/// Deterministic samples on the surface. Sphere: normalised 4D Gaussians.
/// Heisenberg: `z` uniform in the disc of radius 2, `u` uniform in
/// `[−2, 2]`, lifted by `w = u + i|z|²`.
pub fn sample_surface(s: &SurfaceSpec, n: usize, seed: u64) -> Vec<PointC2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| match s.kind {
            SurfaceKind::Sphere => loop {
                let v: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(&mut rng));
                let len = super::norm4(&v);
                if len > 1e-6 {
                    break PointC2::from_real(v.map(|c| c / len));
                }
            },
            SurfaceKind::Heisenberg => {
                let r = 2.0 * rng.random::<f64>().sqrt();
                let theta = rng.random::<f64>() * std::f64::consts::TAU;
                let u = rng.random_range(-2.0..=2.0);
                let z = Complex64::from_polar(r, theta);
                PointC2::new(z, Complex64::new(u, z.norm_sqr()))
            }
        })
        .collect()
}
