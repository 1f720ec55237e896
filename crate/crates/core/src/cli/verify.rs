use super::CmdError;
use crate::algebra::{NumericPoly, PointC2, Polynomial};
use crate::cr::CrOperator;
use crate::numgeom::{
    project_to_variety, sample_surface, tangency_defect, tangent_frame, ComplexField, ProjectOptions, SurfaceKind,
    SurfaceSpec,
};

/// Defect required at points of `{L f = 0}`.
pub const ON_VARIETY_MAX: f64 = 1e-6;
/// Defect required where `|L f|` is bounded below.
pub const OFF_VARIETY_MIN: f64 = 1e-4;
/// Number of seeds projected onto the variety.
pub const VARIETY_SEEDS: usize = 50;

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyStats {
    pub surface: SurfaceKind,
    pub cr_image: Polynomial,
    pub variety_points: usize,
    pub max_defect_on: Option<f64>,
    pub off_samples: usize,
    pub min_defect_off: Option<f64>,
}

impl VerifyStats {
    pub fn on_pass(&self) -> bool {
        self.max_defect_on.is_none_or(|d| d < ON_VARIETY_MAX)
    }

    pub fn off_pass(&self) -> bool {
        self.min_defect_off.is_none_or(|d| d > OFF_VARIETY_MIN)
    }
}

pub fn operator_for(kind: SurfaceKind) -> CrOperator {
    match kind {
        SurfaceKind::Sphere => CrOperator::sphere(),
        SurfaceKind::Heisenberg => CrOperator::heisenberg(),
    }
}

/// Tangency defect of the graph of `f` at points where `L f` vanishes and
/// at samples where `|L f| > 0.1 (1 + |x|^deg)` after scaling `L f` to unit
/// largest coefficient.
pub fn verify_stats(f: &Polynomial, surface: SurfaceKind, samples: usize, seed: u64) -> Result<VerifyStats, CmdError> {
    let s = SurfaceSpec::new(surface);
    let g = operator_for(surface).apply(f)?;
    let field = NumericPoly::new(f);
    let defect = |x: &PointC2| -> Option<f64> { tangency_defect(&tangent_frame(&s, &field, x).ok()?).ok() };
    let pts = sample_surface(&s, samples.max(1), seed);

    let mut on = Vec::new();
    let mut off = Vec::new();
    if g.is_zero() {
        on.extend(pts.iter().filter_map(&defect));
    } else {
        let gn = NumericPoly::scaled(&g, 1.0 / g.max_coeff_norm());
        let deg = g.total_degree().unwrap_or(0) as i32;
        for x0 in sample_surface(&s, VARIETY_SEEDS, seed.wrapping_add(1)) {
            if let Ok(x) = project_to_variety(&s, &gn, &x0, ProjectOptions::default()) {
                on.extend(defect(&x));
            }
        }
        for x in &pts {
            if gn.value(x).norm() > 0.1 * (1.0 + x.norm().powi(deg)) {
                off.extend(defect(x));
            }
        }
    }
    let fold = |v: &[f64], init: f64, pick: fn(f64, f64) -> f64| (!v.is_empty()).then(|| v.iter().cloned().fold(init, pick));
    Ok(VerifyStats {
        surface,
        cr_image: g,
        variety_points: on.len(),
        max_defect_on: fold(&on, 0.0, f64::max),
        off_samples: off.len(),
        min_defect_off: fold(&off, f64::INFINITY, f64::min),
    })
}
