use num_complex::Complex64;

use super::report::{num, Report};
use super::{EXIT_INPUT, EXIT_NUMERIC, EXIT_OK, EXIT_VERIFY};
use crate::algebra::{parse_poly, Form, NumericPoly, PointC2};
use crate::cr::{solve_heisenberg, CrOperator};
use crate::numgeom::{
    project_to_variety, sample_surface, tangency_defect, tangent_frame, trace_curve, ComplexField, CurveComponent,
    NumGeomError, ProjectOptions, SurfaceKind, SurfaceSpec, TraceOptions, TracedCurve,
};
use crate::transfer::{apply_cr_punctured, phi, psi, transfer_to_sphere, PuncturedRational};

/// Largest allowed distance between a mapped curve point and the nearest
/// zero of the sphere CR image.
pub const MATCH_TOL: f64 = 1e-5;
/// Points closer than this to the pole `(0, 1)` are left out of matching.
const POLE_EXCLUSION: f64 = 1e-2;
const CONVERSE_SEEDS: usize = 64;
const DEFECT_POINTS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealizeOptions {
    pub r: u32,
    pub step: f64,
    pub seeds: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        Self { r: 2, step: 0.01, seeds: 64, samples: 1000, seed: 0 }
    }
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub report: Report,
    pub code: i32,
    pub error: Option<String>,
    /// Image of the traced Heisenberg curve on S³.
    pub curve: Option<TracedCurve>,
}

/// Decay of a punctured function towards `(0, 1)` along several paths
/// `w = 1 − ε e^{iθ}` on S³.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PoleDecay {
    /// Smallest least-squares slope of `log |g|` against `log ε` over
    /// `ε ∈ [1e−4, 1e−1]`.
    pub min_slope: f64,
    /// Largest `|g(ε = 1e−6)| / |g(ε = 0.1)|`.
    pub max_ratio: f64,
}

fn pole_path(eps: f64, theta: f64, phase: f64) -> PointC2 {
    let w = Complex64::new(1.0, 0.0) - Complex64::from_polar(eps, theta);
    let z = Complex64::from_polar((1.0 - w.norm_sqr()).max(0.0).sqrt(), phase);
    PointC2::new(z, w)
}

pub fn pole_decay(g: &PuncturedRational) -> PoleDecay {
    let f = g.compile_normalized();
    let grid: Vec<f64> = (0..25).map(|k| 10f64.powf(-4.0 + 3.0 * k as f64 / 24.0)).collect();
    let mut min_slope = f64::INFINITY;
    let mut max_ratio: f64 = 0.0;
    for theta in [0.0, std::f64::consts::FRAC_PI_4, -std::f64::consts::FRAC_PI_4] {
        for phase in [0.0, 2.1, 4.2] {
            let samples: Vec<(f64, f64)> = grid
                .iter()
                .map(|&e| (e.ln(), f.value(&pole_path(e, theta, phase)).norm()))
                .filter(|(_, v)| *v > 0.0)
                .map(|(x, v)| (x, v.ln()))
                .collect();
            if samples.len() >= 2 {
                let n = samples.len() as f64;
                let mx = samples.iter().map(|s| s.0).sum::<f64>() / n;
                let my = samples.iter().map(|s| s.1).sum::<f64>() / n;
                let sxy: f64 = samples.iter().map(|s| (s.0 - mx) * (s.1 - my)).sum();
                let sxx: f64 = samples.iter().map(|s| (s.0 - mx).powi(2)).sum();
                min_slope = min_slope.min(sxy / sxx);
            }
            let far = f.value(&pole_path(0.1, theta, phase)).norm();
            let near = f.value(&pole_path(1e-6, theta, phase)).norm();
            if far > 0.0 {
                max_ratio = max_ratio.max(near / far);
            } else if near > 0.0 {
                max_ratio = f64::INFINITY;
            }
        }
    }
    PoleDecay { min_slope, max_ratio }
}

fn near_pole(x: &PointC2) -> bool {
    x.dist(&PointC2::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))) < POLE_EXCLUSION
}

struct Failure {
    stage: &'static str,
    code: i32,
    message: String,
}

fn fail(stage: &'static str, code: i32, message: impl ToString) -> Failure {
    Failure { stage, code, message: message.to_string() }
}

fn numeric_code(e: &NumGeomError) -> i32 {
    match e {
        NumGeomError::Document(_) => EXIT_INPUT,
        _ => EXIT_NUMERIC,
    }
}

/// Solves `L_ℍ f = g`, moves `f` to the sphere with smoothness `r`, and
/// checks numerically that the complex tangents of the resulting graph are
/// `φ({g = 0} ∩ ℍ)` plus the pole, with the prescribed flatness at the pole.
pub fn realize(text: &str, opts: &RealizeOptions) -> Realization {
    let mut report = Report::new("realize", opts.seed, &[text]);
    let mut curve = None;
    let result = run_stages(text, opts, &mut report, &mut curve);
    match result {
        Ok(passed) => {
            report.push("result", if passed { "pass" } else { "fail" });
            Realization { report, code: if passed { EXIT_OK } else { EXIT_VERIFY }, error: None, curve }
        }
        Err(f) => {
            report.push("stage_failed", f.stage);
            report.push("result", "error");
            let msg = format!("{}: {}", f.stage, f.message);
            Realization { report, code: f.code, error: Some(msg), curve }
        }
    }
}

fn run_stages(
    text: &str,
    opts: &RealizeOptions,
    report: &mut Report,
    curve_out: &mut Option<TracedCurve>,
) -> Result<bool, Failure> {
    if opts.r < 2 {
        return Err(fail(
            "arguments",
            EXIT_INPUT,
            format!("r = {} is too small: the embedding is C^(r-1) at the pole and needs r >= 2", opts.r),
        ));
    }
    let g = parse_poly(text, Form::Ambient).map_err(|e| fail("parse", EXIT_INPUT, e))?;
    report.push("input", &g);
    report.push("r", opts.r);
    report.push("step", opts.step);

    let f = solve_heisenberg(&g).map_err(|e| fail("solve", EXIT_INPUT, e))?;
    let exact = CrOperator::heisenberg().apply(&f).map_err(|e| fail("solve", EXIT_INPUT, e))? == g;
    report.push("solved", &f);
    report.push("solve_check", if exact { "pass" } else { "fail" });

    let q = transfer_to_sphere(&f, opts.r).map_err(|e| fail("transfer", EXIT_INPUT, e))?;
    let l = apply_cr_punctured(&q).map_err(|e| fail("transfer", EXIT_INPUT, e))?;
    report.push("n", f.total_degree().unwrap_or(0));
    report.push("embedding_alpha", q.alpha());
    report.push("embedding_beta", q.beta());
    report.push("cr_numerator_terms", l.numerator().len());
    report.push("cr_alpha", l.alpha());
    report.push("cr_beta", l.beta());

    let h = SurfaceSpec::heisenberg();
    let sphere = SurfaceSpec::sphere();
    let topts = TraceOptions { step: opts.step, seeds: opts.seeds, seed: opts.seed, ..TraceOptions::default() };
    let traced = trace_curve(&h, &g, topts).map_err(|e| fail("trace", numeric_code(&e), e))?;
    report.push("components", traced.connected_count());
    report.push("branches", traced.components.len());
    let flags: Vec<&str> = traced.components.iter().map(|c| if c.closed { "closed" } else { "open" }).collect();
    report.push("closure", flags.join(","));

    let mut mapped = Vec::new();
    for c in &traced.components {
        let pts = c
            .points
            .iter()
            .map(|p| phi(&PointC2::from_real(*p)).map(|y| y.to_real()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| fail("map", EXIT_NUMERIC, e))?;
        mapped.push(CurveComponent { closed: c.closed, points: pts, singular: c.singular });
    }
    let sphere_curve = TracedCurve {
        surface: SurfaceKind::Sphere,
        polynomial: format!("{}", l.numerator()),
        step: opts.step,
        seed: opts.seed,
        components: mapped,
    };

    // φ(K̃) against the zeros of the CR image
    let lf = l.compile_normalized();
    let popts = ProjectOptions::default();
    let mut forward: f64 = 0.0;
    let mut on_variety = Vec::new();
    let mut failures = 0usize;
    for p in sphere_curve.all_points() {
        let y = PointC2::from_real(*p);
        if near_pole(&y) {
            continue;
        }
        match project_to_variety(&sphere, &lf, &y, popts) {
            Ok(z) => {
                forward = forward.max(z.dist(&y));
                on_variety.push(z);
            }
            Err(_) => failures += 1,
        }
    }
    report.push("match_points", on_variety.len());
    report.push("match_failures", failures);
    report.push("match_max_distance", format!("{forward:e}"));

    // zeros of the CR image against φ(K̃)
    let gh = NumericPoly::scaled(&g, 1.0 / g.max_coeff_norm());
    let mut converse: Option<f64> = None;
    let mut converse_failures = 0usize;
    for x0 in sample_surface(&sphere, CONVERSE_SEEDS, opts.seed.wrapping_add(2)) {
        let Ok(y) = project_to_variety(&sphere, &lf, &x0, popts) else { continue };
        if near_pole(&y) {
            continue;
        }
        let back = psi(&y)
            .ok()
            .and_then(|x| project_to_variety(&h, &gh, &x, popts).ok())
            .and_then(|x| phi(&x).ok());
        match back {
            Some(z) => converse = Some(converse.unwrap_or(0.0).max(z.dist(&y))),
            None => converse_failures += 1,
        }
    }
    report.push("converse_max_distance", num(converse));
    report.push("converse_failures", converse_failures);
    let matched = failures == 0
        && converse_failures == 0
        && forward < MATCH_TOL
        && converse.is_none_or(|d| d < MATCH_TOL)
        && !on_variety.is_empty();
    report.push("match", if matched { "pass" } else { "fail" });
    *curve_out = Some(sphere_curve);

    let decay = pole_decay(&l);
    let flat = decay.min_slope >= opts.r as f64 - 1.1 && decay.max_ratio < 1e-6;
    report.push("pole_slope", format!("{:.4}", decay.min_slope));
    report.push("pole_ratio", format!("{:e}", decay.max_ratio));
    report.push("pole_flatness", if flat { "pass" } else { "fail" });

    // tangency defect of the graph of q on S³
    let qf = q.compile();
    let defect = |x: &PointC2| tangent_frame(&sphere, &qf, x).ok().and_then(|fr| tangency_defect(&fr).ok());
    let stride = on_variety.len().div_ceil(DEFECT_POINTS).max(1);
    let on: Vec<f64> = on_variety.iter().step_by(stride).filter_map(defect).collect();
    let max_on = on.iter().cloned().fold(None, |a: Option<f64>, d| Some(a.map_or(d, |a| a.max(d))));
    let mut min_off: Option<f64> = None;
    for x in sample_surface(&sphere, opts.samples.max(1), opts.seed) {
        if (Complex64::new(1.0, 0.0) - x.w).norm() > 0.1 && lf.value(&x).norm() > 0.1 {
            if let Some(d) = defect(&x) {
                min_off = Some(min_off.map_or(d, |m| m.min(d)));
            }
        }
    }
    report.push("max_defect_on_variety", num(max_on));
    report.push("min_defect_off_variety", num(min_off));
    let defects_ok = max_on.is_some_and(|d| d < 1e-6);
    report.push("defect", if defects_ok { "pass" } else { "fail" });

    Ok(exact && matched && flat && defects_ok)
}
