use num_rational::BigRational;

use super::report::{num, Report};
use super::verify::operator_for;
use super::{read_input, realize, verify_stats, Cli, CmdError, Command, Outcome, RealizeOptions, TraceArgs, EXIT_OK, EXIT_VERIFY};
use crate::algebra::{parse_poly, Form, GaussianRational, PointC2, Polynomial};
use crate::cr::{solve_heisenberg, torus_knot_source};
use crate::numgeom::{
    choose_pole, linking_number, read_traced_curve, stereo_project, trace_curve, write_columnar, write_traced_curve,
    Polyline, SurfaceKind, SurfaceSpec, TraceOptions, TracedCurve,
};
use crate::transfer::{apply_cr_punctured, move_knot, phi, pullback_numerator, transfer_to_sphere, RigidMotionH};

fn poly_arg(arg: &str) -> Result<(String, Polynomial), CmdError> {
    let text = read_input(arg)?;
    let p = parse_poly(&text, Form::Ambient)?;
    Ok((text, p))
}

fn constant_arg(text: &str) -> Result<GaussianRational, CmdError> {
    let p = parse_poly(text, Form::Ambient)?;
    if p.terms().any(|(m, _)| m.degree() > 0) {
        return Err(CmdError::input(format!("`{text}` is not a constant")));
    }
    Ok(p.constant_term())
}

fn real_arg(text: &str) -> Result<BigRational, CmdError> {
    let c = constant_arg(text)?;
    if !c.is_real() {
        return Err(CmdError::input(format!("`{text}` is not real")));
    }
    Ok(c.re)
}

fn trace_options(tr: &TraceArgs, seed: u64) -> Result<TraceOptions, CmdError> {
    if !(tr.step > 0.0 && tr.step.is_finite()) {
        return Err(CmdError::input("--step must be positive"));
    }
    if tr.seeds == 0 {
        return Err(CmdError::input("--seeds must be at least 1"));
    }
    Ok(TraceOptions { step: tr.step, seeds: tr.seeds, seed, ..TraceOptions::default() })
}

fn write_out(path: &std::path::Path, text: &str) -> Result<(), CmdError> {
    std::fs::write(path, text).map_err(|e| CmdError::input(format!("cannot write {}: {e}", path.display())))
}

fn describe_curve(r: &mut Report, c: &TracedCurve) {
    r.push("components", c.components.len());
    r.push("connected_components", c.connected_count());
    let flags: Vec<&str> = c.components.iter().map(|k| if k.closed { "closed" } else { "open" }).collect();
    r.push("closure", flags.join(","));
    let sizes: Vec<String> = c.components.iter().map(|k| k.points.len().to_string()).collect();
    r.push("points", sizes.join(","));
    r.push("singular", c.components.iter().any(|k| k.singular));
}

/// Points of a curve on S³; Heisenberg curves are carried over by φ.
fn sphere_points(c: &TracedCurve, pts: &[[f64; 4]]) -> Result<Vec<[f64; 4]>, CmdError> {
    match c.surface {
        SurfaceKind::Sphere => Ok(pts.to_vec()),
        SurfaceKind::Heisenberg => pts.iter().map(|p| Ok(phi(&PointC2::from_real(*p))?.to_real())).collect(),
    }
}

struct Projected {
    label: String,
    polyline: Polyline,
}

fn project_components(curves: &[(usize, &TracedCurve)]) -> Result<(PointC2, Vec<Projected>), CmdError> {
    let mut lifted = Vec::new();
    for (file, c) in curves {
        for (k, comp) in c.components.iter().enumerate() {
            lifted.push((format!("{file}.{k}"), comp.closed, sphere_points(c, &comp.points)?));
        }
    }
    let all: Vec<[f64; 4]> = lifted.iter().flat_map(|(_, _, p)| p.iter().copied()).collect();
    let pole = choose_pole(&all);
    let projected = lifted
        .into_iter()
        .map(|(label, closed, pts)| {
            Ok(Projected { label, polyline: Polyline { points: stereo_project(&pts, &pole)?, closed } })
        })
        .collect::<Result<Vec<_>, CmdError>>()?;
    Ok((pole, projected))
}

fn push_linking(r: &mut Report, pairs: &[(&Projected, &Projected)]) -> Result<(), CmdError> {
    for (a, b) in pairs {
        let lk = linking_number(&a.polyline, &b.polyline)?;
        r.push(format!("linking.{}-{}", a.label, b.label), format!("{lk:.6}"));
    }
    Ok(())
}

fn all_pairs(p: &[Projected]) -> Vec<(&Projected, &Projected)> {
    let mut v = Vec::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            v.push((&p[i], &p[j]));
        }
    }
    v
}

pub(super) fn dispatch(cli: &Cli) -> Result<Outcome, CmdError> {
    let seed = cli.seed;
    let porcelain = cli.porcelain;
    match &cli.command {
        Command::SolveH { poly } => {
            let (_, g) = poly_arg(poly)?;
            Ok(Outcome::ok(format!("{}\n", solve_heisenberg(&g)?)))
        }
        Command::Apply { poly, surface } => {
            let (_, f) = poly_arg(poly)?;
            Ok(Outcome::ok(format!("{}\n", operator_for(*surface).apply(&f)?)))
        }
        Command::Pullback { poly } => {
            let (text, p) = poly_arg(poly)?;
            let pb = pullback_numerator(&p)?;
            let mut r = Report::new("pullback", seed, &[&text]);
            r.push("input", &p);
            r.push("numerator", &pb.numerator);
            r.push("M", pb.m);
            r.push("N", pb.n);
            Ok(Outcome::ok(r.render(porcelain)))
        }
        Command::Transfer { poly, r: smooth } => {
            let (text, f) = poly_arg(poly)?;
            let q = transfer_to_sphere(&f, *smooth)?;
            let l = apply_cr_punctured(&q)?;
            let mut r = Report::new("transfer", seed, &[&text]);
            r.push("input", &f);
            r.push("n", f.total_degree().unwrap_or(0));
            r.push("r", smooth);
            r.push("numerator", q.numerator());
            r.push("alpha", q.alpha());
            r.push("beta", q.beta());
            r.push("cr_numerator", l.numerator());
            r.push("cr_alpha", l.alpha());
            r.push("cr_beta", l.beta());
            Ok(Outcome::ok(r.render(porcelain)))
        }
        Command::Torus { p, q, trace, tr, out } => {
            let src = torus_knot_source(*p, *q)?;
            let image = operator_for(SurfaceKind::Sphere).apply(&src)?;
            let mut r = Report::new("torus", seed, &[&format!("{p} {q}")]);
            r.push("p", p);
            r.push("q", q);
            r.push("source", &src);
            r.push("cr_image", &image);
            if *trace || out.is_some() {
                let curve = trace_curve(&SurfaceSpec::sphere(), &image, trace_options(tr, seed)?)?;
                r.push("step", tr.step);
                describe_curve(&mut r, &curve);
                if curve.components.len() > 1 && curve.components.iter().all(|c| c.closed) {
                    let (_, proj) = project_components(&[(0, &curve)])?;
                    push_linking(&mut r, &all_pairs(&proj))?;
                }
                if let Some(path) = out {
                    write_out(path, &write_traced_curve(&curve))?;
                }
            }
            Ok(Outcome::ok(r.render(porcelain)))
        }
        Command::Trace { poly, surface, tr, out } => {
            let (text, g) = poly_arg(poly)?;
            let curve = trace_curve(&SurfaceSpec::new(*surface), &g, trace_options(tr, seed)?)?;
            let mut r = Report::new("trace", seed, &[&text]);
            r.push("surface", surface);
            r.push("polynomial", &g);
            r.push("step", tr.step);
            describe_curve(&mut r, &curve);
            if let Some(path) = out {
                write_out(path, &write_traced_curve(&curve))?;
            }
            Ok(Outcome::ok(r.render(porcelain)))
        }
        Command::Link { files, out } => {
            let texts = files
                .iter()
                .map(|f| std::fs::read_to_string(f).map_err(|e| CmdError::input(format!("cannot read {}: {e}", f.display()))))
                .collect::<Result<Vec<_>, _>>()?;
            let curves = texts.iter().map(|t| read_traced_curve(t)).collect::<Result<Vec<_>, _>>()?;
            let indexed: Vec<(usize, &TracedCurve)> = curves.iter().enumerate().collect();
            let (pole, proj) = project_components(&indexed)?;
            let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
            let mut r = Report::new("link", seed, &refs);
            let p = pole.to_real();
            r.push("pole", format!("{:.6} {:.6} {:.6} {:.6}", p[0], p[1], p[2], p[3]));
            let pairs: Vec<(&Projected, &Projected)> = if curves.len() == 2 {
                let split = curves[0].components.len();
                proj[..split].iter().flat_map(|a| proj[split..].iter().map(move |b| (a, b))).collect()
            } else {
                all_pairs(&proj)
            };
            if pairs.is_empty() {
                return Err(CmdError::input("need at least two curve components"));
            }
            push_linking(&mut r, &pairs)?;
            if let Some(path) = out {
                let blocks: Vec<String> = proj.iter().map(|c| write_columnar(&c.polyline.points)).collect();
                write_out(path, &blocks.join("\n"))?;
            }
            Ok(Outcome::ok(r.render(porcelain)))
        }
        Command::Move { poly, axis, cos, sin, shift_z, shift_u } => {
            let (_, g) = poly_arg(poly)?;
            let mut motion = RigidMotionH::identity();
            if let (Some(axis), Some(c), Some(s)) = (axis, cos, sin) {
                let idx = match axis.as_str() {
                    "x" => 0,
                    "y" => 1,
                    "u" => 2,
                    other => return Err(CmdError::input(format!("unknown axis `{other}` (expected x, y or u)"))),
                };
                motion = RigidMotionH::axis_rotation_exact(idx, real_arg(c)?, real_arg(s)?)?;
            }
            if shift_z.is_some() || shift_u.is_some() {
                let a = shift_z.as_deref().map(constant_arg).transpose()?.unwrap_or_else(num_traits::Zero::zero);
                let t = shift_u.as_deref().map(real_arg).transpose()?.unwrap_or_else(|| BigRational::from_integer(0.into()));
                motion = motion.then(&RigidMotionH::translation(a, t));
            }
            Ok(Outcome::ok(format!("{}\n", move_knot(&g, &motion)?)))
        }
        Command::Verify { poly, surface, samples } => {
            let (text, f) = poly_arg(poly)?;
            let st = verify_stats(&f, *surface, *samples, seed)?;
            let mut r = Report::new("verify", seed, &[&text]);
            r.push("surface", surface);
            r.push("function", &f);
            r.push("cr_image", &st.cr_image);
            r.push("samples", samples);
            r.push("variety_points", st.variety_points);
            r.push("max_defect_on_variety", num(st.max_defect_on));
            r.push("off_variety_samples", st.off_samples);
            r.push("min_defect_off_variety", num(st.min_defect_off));
            r.push("on_variety", if st.on_pass() { "pass" } else { "fail" });
            r.push("off_variety", if st.off_pass() { "pass" } else { "fail" });
            let code = if st.on_pass() && st.off_pass() { EXIT_OK } else { EXIT_VERIFY };
            Ok(Outcome { stdout: r.render(porcelain), stderr: String::new(), code })
        }
        Command::Realize { poly, r, tr, samples, out } => {
            let text = read_input(poly)?;
            let opts = RealizeOptions { r: *r, step: tr.step, seeds: tr.seeds, samples: *samples, seed };
            let res = realize(&text, &opts);
            if let (Some(path), Some(curve)) = (out, &res.curve) {
                write_out(path, &write_traced_curve(curve))?;
            }
            Ok(Outcome {
                stdout: res.report.render(porcelain),
                stderr: res.error.map(|e| format!("error: {e}\n")).unwrap_or_default(),
                code: res.code,
            })
        }
    }
}
