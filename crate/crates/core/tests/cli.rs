use std::process::Command;

use quiverlab::cli::run;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn quiverlab(args: &[&str]) -> (i32, String) {
    run(std::iter::once("quiverlab").chain(args.iter().copied()))
}

#[test]
fn pathways_on_two_jordan() {
    let (code, out) = quiverlab(&["pathways", &data("jordan2.quiver")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("7 pathways (1,1): e1, a, c, ca, ac, aca, cac\n"), "{out}");
    assert!(out.contains("at most two pathways: false"));
}

#[test]
fn dw_on_two_kronecker_lists_three_generators() {
    let (code, out) = quiverlab(&["dw", &data("kronecker2.quiver")]);
    assert_eq!(code, 0);
    assert!(out.contains("3 generators:"), "{out}");
    for g in ["a11*a22 - a12*a21", "b11*b22 - b12*b21", "a11*b22 - a12*b21 - a21*b12 + a22*b11"] {
        assert!(out.contains(g), "missing {g} in {out}");
    }
}

#[test]
fn dz_examples_and_automatic_blocks() {
    let (code, out) = quiverlab(&["dz", "--example", "jordan1"]);
    assert_eq!(code, 0);
    assert!(out.contains("a11 + a22"), "{out}");
    let (code, out) = quiverlab(&["dz", &data("affine_a1.quiver"), "--length", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("a11*b11"), "{out}");
}

#[test]
fn euler_uses_alpha_when_present() {
    let (code, out) = quiverlab(&["euler", &data("kronecker2.quiver")]);
    assert_eq!(code, 0);
    assert!(out.contains("<alpha,beta> = 0"), "{out}");
    let (_, out) = quiverlab(&["euler", &data("affine_a1.quiver")]);
    assert!(out.contains("<alpha,beta> = 0") && out.contains("sigma_1(beta) = [1, 1]"), "{out}");
}

#[test]
fn reflect_round_trips_and_output_parses() {
    let (code, out) = quiverlab(&["reflect", &data("a2.quiver"), "--sink", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("dim 2 = 0") && out.ends_with("isomorphic representation: yes\n"), "{out}");
    quiverlab::format::parse_quiver_file(&out).expect("reflected file parses");
    let (code, out) = quiverlab(&["reflect", &data("a2.quiver"), "--source", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("arrow a: 2 -> 1"), "{out}");
}

#[test]
fn gr_reports_the_counterexample() {
    let (code, out) = quiverlab(&["gr", &data("a3_filtered.quiver"), "--sink", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("reflection of gr: [[1, 2, 1], [1, 2, 1]]"), "{out}");
    assert!(out.contains("gr of reflection: [[1, 2, 1], [1, 1, 1]]"), "{out}");
    assert!(out.contains("same dimension data: false"));
}

#[test]
fn bidet_on_the_framed_jordan_space() {
    let (code, out) = quiverlab(&["bidet", &data("framed_jordan1.quiver"), "--tableau", "1 2|1 2@1"]);
    assert_eq!(code, 0);
    assert!(out.contains("value: x11*x22 - x12*x21") && out.contains("unipotent invariant: true"), "{out}");
}

#[test]
fn invariant_check_exit_codes() {
    let (code, out) = quiverlab(&["invariant-check", &data("framed_jordan1.quiver"), "--poly", "x11*x22 - x12*x21"]);
    assert_eq!(code, 0, "{out}");
    let (code, out) = quiverlab(&["invariant-check", &data("framed_jordan1.quiver"), "--poly", "x11"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness:"), "{out}");
}

#[test]
fn invariant_dim_reports_diagonal_count() {
    let (code, out) = quiverlab(&["invariant-dim", &data("jordan2.quiver"), "--degree", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("degree <= 2: invariant dimension 16"), "{out}");
    assert!(out.contains("diagonal-only polynomials: 15"));
    let (_, out) = quiverlab(&["invariant-dim", &data("d4.quiver")]);
    assert!(out.contains("invariant dimension 28") && out.contains("diagonal-only polynomials: 28"), "{out}");
}

#[test]
fn springer_lab_is_seeded() {
    let args = ["springer-lab", "--n", "3", "--samples", "5", "--seed", "4"];
    let (code, first) = quiverlab(&args);
    assert_eq!(code, 0);
    assert_eq!(quiverlab(&args).1, first);
    assert_ne!(quiverlab(&["springer-lab", "--n", "3", "--samples", "5", "--seed", "5"]).1, first);
}

#[test]
fn json_output_is_valid_and_deterministic() {
    let (code, out) = quiverlab(&["dw", &data("kronecker2.quiver"), "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json");
    assert_eq!(v["generators"].as_array().map(Vec::len), Some(3));
    assert_eq!(quiverlab(&["dw", &data("kronecker2.quiver"), "--json"]).1, out);
}

#[test]
fn verify_passes() {
    let (code, out) = quiverlab(&["verify"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("11 of 11 checks passed\n"), "{out}");
}

#[test]
fn parse_errors_carry_locations() {
    let cases = [
        ("bad/non_monotone.quiver", "line 3, column 17: filtration is not monotone"),
        ("bad/dangling.quiver", "line 2, column 15: vertex 3 does not exist"),
        ("bad/syntax.quiver", "line 2, column 1: unknown directive"),
        ("bad/missing_vertices.quiver", "`vertices` must come first"),
        ("bad/map_shape.quiver", "map a must be 1x1"),
        ("bad/not_preserved.quiver", "do not preserve the filtration"),
        ("bad/chain_end.quiver", "filtration must end at dim"),
    ];
    for (file, message) in cases {
        let (code, out) = quiverlab(&["pathways", &data(file)]);
        assert_eq!(code, 2, "{file}");
        assert!(out.contains(message), "{file}: {out}");
    }
}

#[test]
fn usage_and_module_errors_exit_with_two() {
    let cases: Vec<(Vec<String>, &str)> = vec![
        (vec!["nosuch".into()], "unrecognized subcommand"),
        (vec!["pathways".into(), "/nonexistent/file.quiver".into()], "No such file"),
        (vec!["reflect".into(), data("a2.quiver")], "exactly one of --sink or --source"),
        (vec!["reflect".into(), data("a2.quiver"), "--sink".into(), "7".into()], "vertex 7 does not exist"),
        (vec!["reflect".into(), data("jordan2.quiver"), "--sink".into(), "1".into()], "`map` line"),
        (vec!["reflect".into(), data("a2.quiver"), "--sink".into(), "1".into()], "error"),
        (vec!["gr".into(), data("d4.quiver")], "`map` line"),
        (vec!["dw".into(), data("jordan2.quiver")], "`alpha` lines"),
        (vec!["dw".into(), data("kronecker1.quiver")], "Euler form"),
        (vec!["dz".into()], "either a quiver file or --example"),
        (vec!["dz".into(), "--example".into(), "nosuch".into()], "error"),
        (vec!["bidet".into(), data("jordan2.quiver"), "--tableau".into(), "3|1@0".into()], "out of range"),
        (vec!["bidet".into(), data("jordan2.quiver"), "--tableau".into(), "1|".into()], "error"),
        (vec!["invariant-check".into(), data("jordan2.quiver"), "--poly".into(), "a11 +".into()], "error"),
        (vec!["invariant-check".into(), data("jordan2.quiver"), "--poly".into(), "b11".into()], "not a coordinate"),
        (vec!["invariant-dim".into(), data("d4.quiver"), "--degree".into(), "4".into(), "--cap".into(), "10".into()], "error"),
        (vec!["springer-lab".into(), "--n".into(), "0".into()], "between 1 and 8"),
    ];
    for (args, message) in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, out) = quiverlab(&refs);
        assert_eq!(code, 2, "{refs:?}: {out}");
        assert!(out.contains(message), "{refs:?}: {out}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_quiverlab");
    let ok = Command::new(bin).args(["pathways", &data("jordan2.quiver")]).output().expect("runs");
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("7 pathways (1,1)"));
    let fail = Command::new(bin)
        .args(["invariant-check", &data("framed_jordan1.quiver"), "--poly", "x12"])
        .output()
        .expect("runs");
    assert_eq!(fail.status.code(), Some(1));
    let bad = Command::new(bin).args(["pathways", &data("bad/syntax.quiver")]).output().expect("runs");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("unknown directive"));
}
