use std::process::Command;

use crtangent::cli::{run, Outcome, EXIT_INPUT, EXIT_NUMERIC, EXIT_OK, EXIT_VERIFY};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("crtangent").chain(args.iter().copied()))
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn solve_h_examples() {
    assert_eq!(cli(&["solve-h", "1"]).stdout, "-i zb\n");
    assert_eq!(cli(&["solve-h", "zb wb"]).stdout, "(-1/2i) zb^2 wb + (1/3) z zb^3\n");
    // L(w^m g) = w^m L(g): the solution of w^3 is w^3 times the solution of 1
    assert_eq!(cli(&["solve-h", "w^3"]).stdout, "-i zb w^3\n");
}

#[test]
fn apply_round_trips_solve() {
    let f = cli(&["solve-h", "z^2 wb + 3 zb"]).stdout;
    assert_eq!(cli(&["apply", f.trim()]).stdout, "3 zb + z^2 wb\n");
}

#[test]
fn parse_errors_exit_with_input_code() {
    let o = cli(&["solve-h", "z^"]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.stderr.contains("parse error"));
    assert_eq!(cli(&["apply", "u", "--surface", "sphere"]).code, EXIT_INPUT);
    assert_eq!(cli(&["torus", "0", "3"]).code, EXIT_INPUT);
    assert_eq!(cli(&["nonsense"]).code, EXIT_INPUT);
}

#[test]
fn file_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "zb wb\n").unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(cli(&["solve-h", &arg]).stdout, "(-1/2i) zb^2 wb + (1/3) z zb^3\n");
    assert_eq!(cli(&["solve-h", "@/nonexistent/file"]).code, EXIT_INPUT);
}

#[test]
fn torus_reports_match_golden_files() {
    for (p, q, file) in [("2", "3", "torus_2_3.txt"), ("2", "2", "torus_2_2.txt"), ("1", "1", "torus_1_1.txt")] {
        let o = cli(&["torus", p, q, "--trace", "--porcelain"]);
        assert_eq!(o.code, EXIT_OK);
        assert_eq!(o.stdout, golden(file), "torus {p} {q}");
    }
    let hopf = golden("torus_2_2.txt");
    let lk: f64 = hopf.lines().find_map(|l| l.strip_prefix("linking.0.0-0.1\t")).unwrap().parse().unwrap();
    assert!((lk.abs() - 1.0).abs() < 0.05);
}

#[test]
fn torus_trace_document_and_link_command() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("hopf.json");
    let xyz = dir.path().join("hopf.xyz");
    let o = cli(&["torus", "2", "2", "--out", doc.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    let curve = crtangent::numgeom::read_traced_curve(&std::fs::read_to_string(&doc).unwrap()).unwrap();
    assert_eq!(curve.components.len(), 2);
    assert_eq!(curve.polynomial, "z^2 + w^2");
    let o = cli(&["link", doc.to_str().unwrap(), "--out", xyz.to_str().unwrap(), "--porcelain"]);
    assert_eq!(o.code, EXIT_OK);
    let lk: f64 = o.stdout.lines().find_map(|l| l.strip_prefix("linking.0.0-0.1\t")).unwrap().parse().unwrap();
    assert!((lk.abs() - 1.0).abs() < 0.05);
    let text = std::fs::read_to_string(&xyz).unwrap();
    assert!(text.lines().filter(|l| !l.is_empty()).all(|l| l.split(' ').count() == 3));
    assert_eq!(cli(&["link", "/nonexistent.json"]).code, EXIT_INPUT);
}

#[test]
fn verify_examples() {
    let o = cli(&["verify", "zb", "--surface", "heisenberg", "--porcelain"]);
    assert_eq!((o.code, o.stdout.clone()), (EXIT_OK, golden("verify_zb_heisenberg.txt")));
    assert!(o.stdout.contains("variety_points\t0\n"));
    let o = cli(&["verify", "w^2 zb - z wb", "--porcelain"]);
    assert_eq!((o.code, o.stdout.clone()), (EXIT_OK, golden("verify_torus_source.txt")));
    let o = cli(&["verify", "z w", "--porcelain"]);
    assert_eq!(o.code, EXIT_OK);
    let max: f64 = o.stdout.lines().find_map(|l| l.strip_prefix("max_defect_on_variety\t")).unwrap().parse().unwrap();
    assert!(max < 1e-8);
}

#[test]
fn verify_failure_exit_code() {
    // a large multiple of z̄ flattens the defect below the off-variety threshold
    let o = cli(&["verify", "1000000 zb", "--porcelain"]);
    assert_eq!(o.code, EXIT_VERIFY);
    assert!(o.stdout.contains("off_variety\tfail"));
}

#[test]
fn empty_curve_is_a_numeric_failure() {
    assert_eq!(cli(&["trace", "z zb + 1", "--seeds", "8"]).code, EXIT_NUMERIC);
}

#[test]
fn realize_reports() {
    let o = cli(&["realize", "z^2 + w^3", "--porcelain"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, golden("realize_trefoil.txt"));
    let o = cli(&["realize", "z", "--porcelain"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, golden("realize_z.txt"));
    let o = cli(&["realize", "z", "--r", "1", "--porcelain"]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.stderr.contains("r >= 2"));
    assert!(o.stdout.contains("stage_failed\targuments\n"));
}

#[test]
fn reports_are_deterministic_and_carry_provenance() {
    let a = cli(&["trace", "z^2 + w^3", "--seed", "5", "--porcelain"]);
    let b = cli(&["trace", "z^2 + w^3", "--seed", "5", "--porcelain"]);
    assert_eq!(a, b);
    assert!(a.stdout.contains("seed\t5\n"));
    assert!(a.stdout.contains(&format!("version\t{}\n", env!("CARGO_PKG_VERSION"))));
    assert!(a.stdout.contains("input_sha256.0\t"));
}

#[test]
fn move_and_transfer_commands() {
    assert_eq!(cli(&["move", "z", "--shift-z", "1"]).stdout, "-1 + z\n");
    assert_eq!(cli(&["move", "z", "--axis", "u", "--cos", "0", "--sin", "1"]).stdout, "-i z\n");
    assert_eq!(cli(&["move", "z", "--axis", "x", "--cos", "1", "--sin", "1"]).code, EXIT_INPUT);
    let o = cli(&["transfer", "zb", "--porcelain"]);
    assert!(o.stdout.contains("numerator\t-i zb\nalpha\t4\nbeta\t-1\n"));
    let o = cli(&["pullback", "w", "--porcelain"]);
    assert!(o.stdout.contains("numerator\t-i + w\nM\t1\nN\t0\n"));
}

#[test]
fn binary_passes_exit_codes_through() {
    let bin = env!("CARGO_BIN_EXE_crtangent");
    let ok = Command::new(bin).args(["solve-h", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "-i zb\n");
    let bad = Command::new(bin).args(["solve-h", "z^"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_INPUT));
}
