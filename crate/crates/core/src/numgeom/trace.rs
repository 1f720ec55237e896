use serde::{Deserialize, Serialize};

use super::project::jacobian;
use super::{dist4, project_to_variety, sample_surface, ComplexField, NumGeomError, ProjectOptions, SurfaceKind, SurfaceSpec};
use crate::algebra::{NumericPoly, PointC2, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceOptions {
    pub step: f64,
    pub seeds: usize,
    pub tol: f64,
    pub seed: u64,
    /// Points with `|x| > bound` end a branch (unbounded curves on ℍ).
    pub bound: f64,
    /// Cap on predictor-corrector steps per branch.
    pub max_steps: usize,
}

impl Default for TraceOptions {
    fn default() -> Self {
        Self { step: 0.01, seeds: 64, tol: 1e-10, seed: 0, bound: 20.0, max_steps: 200_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveComponent {
    pub closed: bool,
    pub points: Vec<[f64; 4]>,
    /// Set when continuation stopped at a rank drop of the Jacobian.
    #[serde(default)]
    pub singular: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TracedCurve {
    pub surface: SurfaceKind,
    pub polynomial: String,
    pub step: f64,
    pub seed: u64,
    pub components: Vec<CurveComponent>,
}

impl TracedCurve {
    /// Number of connected pieces of the traced set, joining components that
    /// come within `5 × step` of each other (branches meeting at a singular
    /// point count once).
    pub fn connected_count(&self) -> usize {
        let n = self.components.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let thr = 5.0 * self.step;
        for a in 0..n {
            for b in a + 1..n {
                if min_set_distance(&self.components[a].points, &self.components[b].points) < thr {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    pub fn all_points(&self) -> impl Iterator<Item = &[f64; 4]> {
        self.components.iter().flat_map(|c| c.points.iter())
    }
}

fn min_set_distance(a: &[[f64; 4]], b: &[[f64; 4]]) -> f64 {
    a.iter()
        .flat_map(|p| b.iter().map(move |q| dist4(p, q)))
        .fold(f64::INFINITY, f64::min)
}

/// Unit kernel vector of a 3×4 matrix via the generalized cross product.
fn kernel_direction(j: &nalgebra::Matrix3x4<f64>) -> Option<[f64; 4]> {
    let mut t = [0.0; 4];
    for (i, ti) in t.iter_mut().enumerate() {
        let cols: Vec<usize> = (0..4).filter(|&c| c != i).collect();
        let minor = nalgebra::Matrix3::from_fn(|r, c| j[(r, cols[c])]);
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        *ti = sign * minor.determinant();
    }
    let n = super::norm4(&t);
    let scale = j.norm();
    if n.is_nan() || n <= 1e-12 * scale.powi(3).max(1e-300) {
        return None;
    }
    Some(t.map(|c| c / n))
}

fn oriented(t: [f64; 4]) -> [f64; 4] {
    match t.iter().find(|c| c.abs() > 1e-12) {
        Some(c) if *c < 0.0 => t.map(|v| -v),
        _ => t,
    }
}

fn norm_pt(x: &PointC2) -> f64 {
    super::norm4(&x.to_real())
}

enum BranchEnd {
    Closed,
    Open,
    Singular,
}

struct Tracer<'a, F: ComplexField + ?Sized> {
    s: &'a SurfaceSpec,
    g: &'a F,
    opts: TraceOptions,
}

impl<F: ComplexField + ?Sized> Tracer<'_, F> {
    fn tangent(&self, x: &PointC2) -> Option<[f64; 4]> {
        kernel_direction(&jacobian(self.s, self.g, x))
    }

    fn project(&self, x: &PointC2) -> Result<PointC2, NumGeomError> {
        project_to_variety(self.s, self.g, x, ProjectOptions { tol: self.opts.tol, max_iter: 50 })
    }

    /// Follows the curve from `start` along `dir`. Returns the points after
    /// `start` and how the branch ended.
    fn branch(&self, start: &PointC2, dir: [f64; 4]) -> (Vec<[f64; 4]>, BranchEnd) {
        let h = self.opts.step;
        let x0 = start.to_real();
        let mut pts = Vec::new();
        let mut x = *start;
        let mut t = dir;
        for n in 0..self.opts.max_steps {
            let mut accepted = None;
            let mut hh = h;
            for _ in 0..5 {
                let xr = x.to_real();
                let pred = PointC2::from_real(std::array::from_fn(|i| xr[i] + hh * t[i]));
                if let Ok(xn) = self.project(&pred) {
                    let d = dist4(&xn.to_real(), &xr);
                    if d < 2.0 * h && d > 0.1 * hh {
                        if let Some(tn) = self.tangent(&xn) {
                            let dot: f64 = tn.iter().zip(&t).map(|(a, b)| a * b).sum();
                            if dot > 0.5 {
                                accepted = Some((xn, tn));
                                break;
                            } else if dot < -0.5 {
                                accepted = Some((xn, tn.map(|c| -c)));
                                break;
                            }
                        }
                    }
                }
                hh *= 0.5;
            }
            let Some((xn, tn)) = accepted else {
                return (pts, BranchEnd::Singular);
            };
            let xr = xn.to_real();
            if n >= 10 && dist4(&xr, &x0) < 2.0 * h {
                if dist4(&xr, &x0) > 0.25 * h {
                    pts.push(xr);
                }
                return (pts, BranchEnd::Closed);
            }
            pts.push(xr);
            if norm_pt(&xn) > self.opts.bound {
                return (pts, BranchEnd::Open);
            }
            x = xn;
            t = tn;
        }
        (pts, BranchEnd::Open)
    }

    fn component(&self, seed: &PointC2) -> Option<CurveComponent> {
        let t0 = oriented(self.tangent(seed)?);
        let (fwd, end) = self.branch(seed, t0);
        let mut points = vec![seed.to_real()];
        match end {
            BranchEnd::Closed => {
                points.extend(fwd);
                Some(CurveComponent { closed: true, points, singular: false })
            }
            BranchEnd::Open | BranchEnd::Singular => {
                let (bwd, end_b) = self.branch(seed, t0.map(|c| -c));
                let singular = matches!(end, BranchEnd::Singular) || matches!(end_b, BranchEnd::Singular);
                let mut all: Vec<[f64; 4]> = bwd.into_iter().rev().collect();
                all.append(&mut points);
                all.extend(fwd);
                Some(CurveComponent { closed: false, points: all, singular })
            }
        }
    }
}

/// Traces `{ρ = 0, g = 0}` for any complex field `g`. `label` is stored as
/// the curve's polynomial text.
pub fn trace_field<F: ComplexField + ?Sized>(
    s: &SurfaceSpec,
    g: &F,
    label: &str,
    opts: TraceOptions,
) -> Result<TracedCurve, NumGeomError> {
    let tracer = Tracer { s, g, opts };
    let skip = 5.0 * opts.step;
    let mut components: Vec<CurveComponent> = Vec::new();
    let mut any_converged = false;
    for seed in sample_surface(s, opts.seeds, opts.seed) {
        let Ok(x) = tracer.project(&seed) else { continue };
        if norm_pt(&x) > opts.bound {
            continue;
        }
        any_converged = true;
        let xr = x.to_real();
        if components.iter().flat_map(|c| c.points.iter()).any(|p| dist4(p, &xr) < skip) {
            continue;
        }
        let Some(c) = tracer.component(&x) else { continue };
        // drop a branch that only retraces existing components
        let existing: Vec<[f64; 4]> = components.iter().flat_map(|c| c.points.iter().copied()).collect();
        let duplicate = !existing.is_empty()
            && c.points.iter().all(|p| existing.iter().any(|q| dist4(p, q) < skip));
        if !duplicate {
            components.push(c);
        }
    }
    if !any_converged {
        return Err(NumGeomError::NoCurveFound);
    }
    Ok(TracedCurve { surface: s.kind, polynomial: label.to_string(), step: opts.step, seed: opts.seed, components })
}

/// Traces `{ρ = 0, g = 0}` for a polynomial `g`, rescaled so that its
/// largest coefficient has modulus one.
pub fn trace_curve(s: &SurfaceSpec, g: &Polynomial, opts: TraceOptions) -> Result<TracedCurve, NumGeomError> {
    if g.is_zero() {
        return Err(NumGeomError::RankDeficientJacobian);
    }
    let field = NumericPoly::scaled(g, 1.0 / g.max_coeff_norm());
    trace_field(s, &field, &g.to_string(), opts)
}
