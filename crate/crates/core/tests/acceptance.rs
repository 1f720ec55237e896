//! Acceptance run: each criterion prints one PASS/FAIL line with its
//! measurement and wall time; the process fails if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{random_h_point, random_poly};
use crtangent::algebra::{parse_poly, Form, NumericPoly, PointC2, Polynomial};
use crtangent::cli::{realize, RealizeOptions};
use crtangent::cr::{apply_cr, solve_heisenberg, torus_knot_source, CrOperator};
use crtangent::numgeom::{
    choose_pole, linking_number, project_to_variety, sample_surface, stereo_project, tangency_defect, tangent_frame,
    trace_curve, ComplexField, Polyline, SurfaceKind, SurfaceSpec, TraceOptions,
};
use crtangent::transfer::{apply_cr_punctured, link_product, move_knot, pullback_numerator, transfer_to_sphere, RigidMotionH};
use num_complex::Complex64;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn poly(text: &str) -> Polynomial {
    parse_poly(text, Form::Ambient).unwrap()
}

// 1. Exact surjectivity round trip.
fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let op = CrOperator::heisenberg();
    let mut failures = 0;
    let mut max_terms = 0;
    for _ in 0..200 {
        let p = random_poly(&mut rng, Form::Ambient, 6, 8);
        let f = solve_heisenberg(&p).unwrap();
        max_terms = max_terms.max(f.len());
        if apply_cr(&op, &f).unwrap() != p {
            failures += 1;
        }
    }
    Outcome { pass: failures == 0, detail: format!("200 polynomials, {failures} mismatches, largest solution {max_terms} terms") }
}

// 2. Torus-knot identity.
fn criterion_2() -> Outcome {
    let op = CrOperator::sphere();
    let mut bad = Vec::new();
    for p in 1..=6i64 {
        for q in 1..=6i64 {
            let want = poly(&format!("z^{p} + w^{q}"));
            if apply_cr(&op, &torus_knot_source(p, q).unwrap()).unwrap() != want {
                bad.push(format!("({p},{q})"));
            }
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("36 pairs, mismatches: [{}]", bad.join(" ")) }
}

fn operator(kind: SurfaceKind) -> CrOperator {
    match kind {
        SurfaceKind::Sphere => CrOperator::sphere(),
        SurfaceKind::Heisenberg => CrOperator::heisenberg(),
    }
}

// 3. Complex tangents coincide with zeros of the CR operator.
fn criterion_3() -> Outcome {
    let mut cases: Vec<(String, Polynomial, SurfaceKind)> = Vec::new();
    for (p, q) in [(2, 3), (2, 2), (3, 5)] {
        cases.push((format!("torus({p},{q})"), torus_knot_source(p, q).unwrap(), SurfaceKind::Sphere));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for k in 0..5 {
        let target = random_poly(&mut rng, Form::Ambient, 3, 4);
        cases.push((format!("solved#{k}"), solve_heisenberg(&target).unwrap(), SurfaceKind::Heisenberg));
    }
    cases.push(("zb".into(), poly("zb"), SurfaceKind::Heisenberg));
    cases.push(("z w".into(), poly("z w"), SurfaceKind::Sphere));

    let mut worst_on: f64 = 0.0;
    let mut worst_off = f64::INFINITY;
    let mut failed = Vec::new();
    for (name, f, kind) in &cases {
        let s = SurfaceSpec::new(*kind);
        let g = operator(*kind).apply(f).unwrap();
        let field = NumericPoly::new(f);
        let defect = |x: &PointC2| tangency_defect(&tangent_frame(&s, &field, x).unwrap()).unwrap();
        let mut on = Vec::new();
        let mut off = Vec::new();
        let samples = sample_surface(&s, 1000, 7);
        if g.is_zero() {
            on.extend(samples.iter().take(50).map(defect));
        } else {
            let gn = NumericPoly::scaled(&g, 1.0 / g.max_coeff_norm());
            let deg = g.total_degree().unwrap() as i32;
            for x0 in sample_surface(&s, 200, 8) {
                if on.len() == 50 {
                    break;
                }
                if let Ok(x) = project_to_variety(&s, &gn, &x0, Default::default()) {
                    on.push(defect(&x));
                }
            }
            for x in &samples {
                if gn.value(x).norm() > 0.1 * (1.0 + x.norm().powi(deg)) {
                    off.push(defect(x));
                }
            }
        }
        let max_on = on.iter().cloned().fold(0.0, f64::max);
        let min_off = off.iter().cloned().fold(f64::INFINITY, f64::min);
        worst_on = worst_on.max(max_on);
        worst_off = worst_off.min(min_off);
        let variety_ok = if g.is_zero() || g.total_degree() != Some(0) { !on.is_empty() } else { true };
        if !(variety_ok && max_on < 1e-6 && min_off > 1e-4) {
            failed.push(name.clone());
        }
    }
    Outcome {
        pass: failed.is_empty(),
        detail: format!(
            "{} functions, max on-variety defect {worst_on:.2e}, min off-variety defect {worst_off:.2e}, failed: [{}]",
            cases.len(),
            failed.join(" ")
        ),
    }
}

// 4. Curve topology.
fn criterion_4() -> Outcome {
    let s = SurfaceSpec::sphere();
    let opts = TraceOptions::default();
    let trefoil = trace_curve(&s, &poly("z^2 + w^3"), opts).unwrap();
    let modulus = trefoil
        .all_points()
        .map(|p| {
            let x = PointC2::from_real(*p);
            (x.z.norm_sqr() - x.w.norm().powi(3)).abs()
        })
        .fold(0.0, f64::max);
    let trefoil_ok = trefoil.components.len() == 1 && trefoil.components[0].closed && modulus < 1e-6;

    let hopf = trace_curve(&s, &poly("z^2 + w^2"), opts).unwrap();
    let closed = hopf.components.iter().all(|c| c.closed);
    let lk = if hopf.components.len() == 2 && closed {
        let all: Vec<[f64; 4]> = hopf.all_points().copied().collect();
        let pole = choose_pole(&all);
        let proj = |k: usize| Polyline::closed(stereo_project(&hopf.components[k].points, &pole).unwrap());
        linking_number(&proj(0), &proj(1)).ok()
    } else {
        None
    };
    let hopf_ok = lk.is_some_and(|v| (v.abs() - 1.0).abs() < 0.05);
    Outcome {
        pass: trefoil_ok && hopf_ok,
        detail: format!(
            "trefoil: {} component(s), closed {}, max ||z|^2-|w|^3| {modulus:.1e}; hopf: {} component(s), linking {}",
            trefoil.components.len(),
            trefoil.components.iter().all(|c| c.closed),
            hopf.components.len(),
            lk.map_or("-".to_string(), |v| format!("{v:.4}"))
        ),
    }
}

fn phi_ref(x: &PointC2) -> PointC2 {
    PointC2::new(2.0 * x.z / (x.w + I), (x.w - I) / (x.w + I))
}

// 5. Pullback identity.
fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let p = random_poly(&mut rng, Form::Ambient, 4, 6);
        let pb = pullback_numerator(&p).unwrap();
        for _ in 0..50 {
            let x = random_h_point(&mut rng);
            let lhs = p.evaluate(&phi_ref(&x)) * (I + x.w).powu(pb.m) * (x.w.conj() - I).powu(pb.n);
            let q = pb.numerator.evaluate(&x);
            worst = worst.max((lhs - q).norm() / q.norm().max(1.0));
        }
    }
    Outcome { pass: worst < 1e-9, detail: format!("2500 evaluations, max scaled residual {worst:.2e}") }
}

// 6. Pole flatness.
fn criterion_6() -> Outcome {
    let f = solve_heisenberg(&poly("z^2 + w^3")).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    for r in 2..=4u32 {
        let l = apply_cr_punctured(&transfer_to_sphere(&f, r).unwrap()).unwrap();
        let num = l.numerator().clone();
        let (alpha, beta) = (l.alpha() as i32, l.beta() as i32);
        let value = |eps: f64, theta: f64, phase: f64| {
            let w = ONE - Complex64::from_polar(eps, theta);
            let z = Complex64::from_polar((1.0 - w.norm_sqr()).sqrt(), phase);
            (num.evaluate(&PointC2::new(z, w)) * (ONE - w).powi(alpha) * (ONE - w.conj()).powi(beta)).norm()
        };
        let mut min_slope = f64::INFINITY;
        let mut max_ratio: f64 = 0.0;
        for theta in [0.0, 0.5, -0.5, 1.0] {
            for phase in [0.0, 1.0, 2.5, 4.0] {
                let pts: Vec<(f64, f64)> = (0..31)
                    .map(|k| 10f64.powf(-4.0 + 3.0 * k as f64 / 30.0))
                    .map(|e| (e.ln(), value(e, theta, phase).ln()))
                    .collect();
                let n = pts.len() as f64;
                let (mx, my) = (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n);
                let slope = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
                    / pts.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
                min_slope = min_slope.min(slope);
                max_ratio = max_ratio.max(value(1e-6, theta, phase) / value(0.1, theta, phase));
            }
        }
        let pass = min_slope >= r as f64 - 1.1 && max_ratio < 1e-6;
        ok &= pass;
        parts.push(format!("r={r}: slope {min_slope:.3}, ratio {max_ratio:.1e}"));
    }
    Outcome { pass: ok, detail: parts.join("; ") }
}

// 7. End-to-end realization.
fn criterion_7() -> Outcome {
    let res = realize("z^2 + w^3", &RealizeOptions { r: 2, ..RealizeOptions::default() });
    let get = |k: &str| res.report.get(k).unwrap_or("-").to_string();
    let dist = |k: &str| get(k).parse::<f64>().unwrap_or(f64::INFINITY);
    let forward = dist("match_max_distance");
    let converse = dist("converse_max_distance");
    let components = get("components");
    let pass = res.error.is_none()
        && forward < 1e-5
        && converse < 1e-5
        && get("match_failures") == "0"
        && get("converse_failures") == "0"
        && components == "1";
    Outcome {
        pass,
        detail: format!(
            "components {components}, forward match {forward:.2e}, converse match {converse:.2e}, report result {}",
            get("result")
        ),
    }
}

struct MotionData {
    axis_rot: Vec<(usize, i64, i64, i64)>,
    shift: (i64, i64, i64, i64),
}

impl MotionData {
    fn exact(&self) -> RigidMotionH {
        let mut m = RigidMotionH::identity();
        for &(axis, c, s, d) in &self.axis_rot {
            m = m.then(&RigidMotionH::axis_rotation(axis, c, s, d).unwrap());
        }
        let (a, b, t, den) = self.shift;
        m.then(&RigidMotionH::translation(common::gauss(a, den, b, den), BigRational::new(t.into(), den.into())))
    }

    /// Forward action on ℝ³ = (Re z, Im z, u), written out directly.
    fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        let mut v = v;
        for &(axis, c, s, d) in &self.axis_rot {
            let (c, s) = (c as f64 / d as f64, s as f64 / d as f64);
            let (p, q) = match axis {
                0 => (1, 2),
                1 => (2, 0),
                _ => (0, 1),
            };
            let (a, b) = (v[p], v[q]);
            v[p] = c * a - s * b;
            v[q] = s * a + c * b;
        }
        let (a, b, t, den) = self.shift;
        let den = den as f64;
        [v[0] + a as f64 / den, v[1] + b as f64 / den, v[2] + t as f64 / den]
    }
}

fn lift(v: [f64; 3]) -> PointC2 {
    let z = Complex64::new(v[0], v[1]);
    PointC2::new(z, Complex64::new(v[2], z.norm_sqr()))
}

const CIRCLE: &str = "z zb - 1 + (1/2i) w + (1/2i) wb";

// 8. Knot motions and link products.
fn criterion_8() -> Outcome {
    let h = SurfaceSpec::heisenberg();
    let motions = [
        MotionData { axis_rot: vec![(2, 3, 4, 5)], shift: (1, 2, 1, 4) },
        MotionData { axis_rot: vec![(0, 5, 12, 13), (1, 8, -15, 17)], shift: (-4, 2, -1, 4) },
        MotionData { axis_rot: vec![(1, 0, 1, 1)], shift: (0, 0, 4, 4) },
    ];
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    for text in ["z - 1/2", CIRCLE, "z^2 + w^3"] {
        let g = poly(text);
        let gn = NumericPoly::new(&g);
        let points: Vec<PointC2> = sample_surface(&h, 1000, 81)
            .iter()
            .filter_map(|x0| project_to_variety(&h, &gn, x0, Default::default()).ok())
            .take(100)
            .collect();
        for m in &motions {
            let moved = move_knot(&g, &m.exact()).unwrap();
            for x in &points {
                let y = lift(m.apply([x.z.re, x.z.im, x.w.re]));
                worst = worst.max(moved.evaluate(&y).norm());
                checked += 1;
            }
        }
    }
    let transport_ok = checked == 900 && worst < 1e-8;

    let opts = TraceOptions { seeds: 64, ..TraceOptions::default() };
    let circle = poly(CIRCLE);
    let a = move_knot(&circle, &MotionData { axis_rot: vec![], shift: (0, 0, 1, 2) }.exact()).unwrap();
    let b = move_knot(&circle, &MotionData { axis_rot: vec![(0, 0, 1, 1)], shift: (2, 0, 1, 2) }.exact()).unwrap();
    let count = |g: &Polynomial| trace_curve(&h, g, opts).map(|c| c.connected_count()).unwrap_or(0);
    let (ca, cb) = (count(&a), count(&b));
    let cab = count(&link_product(&[a, b]).unwrap());
    let link_ok = ca >= 1 && cb >= 1 && cab == ca + cb;
    Outcome {
        pass: transport_ok && link_ok,
        detail: format!("{checked} transported points, max residual {worst:.2e}; components {ca} + {cb} -> product {cab}"),
    }
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("exact surjectivity round trip", Duration::from_secs(10), criterion_1),
        ("torus-knot identity", Duration::from_secs(1), criterion_2),
        ("tangency oracle equivalence", Duration::from_secs(60), criterion_3),
        ("curve topology", Duration::from_secs(120), criterion_4),
        ("pullback identity", Duration::from_secs(10), criterion_5),
        ("pole flatness", Duration::from_secs(30), criterion_6),
        ("end-to-end realization", Duration::from_secs(180), criterion_7),
        ("knot motions", Duration::from_secs(60), criterion_8),
    ];
    let mut all = true;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let pass = out.pass && elapsed < *limit;
        all &= pass;
        println!(
            "criterion {} [PRIMARY] {name}: {} ({}; {:.2}s of {}s)",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if !all {
        std::process::exit(1);
    }
}
