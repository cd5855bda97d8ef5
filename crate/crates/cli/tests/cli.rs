//! End-to-end runs of every subcommand against frozen outputs.
//!
//! Goldens live in `tests/golden/<name>.out`. Set `CURVEGRAPH_BLESS=1` to
//! rewrite them after an intentional output change.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn fixture(name: &str) -> String {
    manifest_dir()
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let argv: Vec<String> = std::iter::once("curvegraph")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = curvegraph_cli::run(&argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn run(args: &[&str]) -> Output {
    run_with_stdin(args, "")
}

fn check_golden(name: &str, actual: &str) {
    let path = manifest_dir().join("tests/golden").join(format!("{name}.out"));
    if std::env::var_os("CURVEGRAPH_BLESS").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden {name} differs");
}

fn golden(name: &str, args: &[&str], code: i32) {
    let out = run(args);
    assert_eq!(out.code, code, "{name}: stderr was {}", out.stderr);
    check_golden(name, &out.stdout);
}

#[test]
fn gen_families() {
    golden("gen_half_graph", &["gen", "half-graph", "3"], 0);
    golden("gen_bipartite_half_graph", &["gen", "bipartite_half_graph", "3"], 0);
    golden("gen_multipartite", &["gen", "multipartite", "3", "2"], 0);
    golden("gen_marking_path", &["gen", "marking", "0", "6", "--eta", "path"], 0);
    golden("gen_complete_g6", &["gen", "complete", "4", "--format", "graph6"], 0);
    golden("gen_edgeless", &["gen", "edgeless", "3"], 0);
    golden("gen_cycle", &["gen", "cycle", "5"], 0);
    golden(
        "gen_random_g6",
        &["gen", "random", "8", "1/2", "42", "--format", "graph6"],
        0,
    );
}

#[test]
fn gen_multipartite_piped_into_ncl() {
    let generated = run(&["gen", "multipartite", "3", "2"]);
    let out = run_with_stdin(&["ncl", "-"], &generated.stdout);
    assert_eq!((out.code, out.stdout.as_str()), (0, "6\n"));
}

#[test]
fn ncl_outputs() {
    golden("ncl_certificate", &["ncl", &fixture("p4.txt"), "--certificate"], 0);
    golden("ncl_json", &["ncl", &fixture("k3_2.txt"), "--certificate", "--json"], 0);
    golden("ncl_naive", &["ncl", &fixture("c5.txt"), "--naive"], 0);
    // graph6 input is detected automatically.
    let out = run(&["ncl", &fixture("h5.g6")]);
    assert_eq!(out.stdout, "6\n");
}

#[test]
fn ncl_empty_graph_note() {
    let out = run_with_stdin(&["ncl", "-"], "0 0\n");
    assert_eq!((out.code, out.stdout.as_str()), (0, "0\n"));
    assert!(out.stderr.contains("empty graph"), "{}", out.stderr);
}

#[test]
fn invariants_outputs() {
    golden("invariants_c5", &["invariants", &fixture("c5.txt")], 0);
    golden("invariants_h5_json", &["invariants", &fixture("h5.g6"), "--json"], 0);
}

#[test]
fn obstruct_outputs() {
    golden(
        "obstruct_k7_genus2",
        &["obstruct", &fixture("k7.txt"), "--genus", "2", "--punctures", "0"],
        1,
    );
    golden(
        "obstruct_h5",
        &[
            "obstruct",
            &fixture("h5.g6"),
            "--genus",
            "0",
            "--punctures",
            "5",
            "--all-tests",
        ],
        1,
    );
    golden(
        "obstruct_c4",
        &["obstruct", &fixture("c4.g6"), "--genus", "0", "--punctures", "5"],
        1,
    );
    golden(
        "obstruct_c5_json",
        &[
            "obstruct",
            &fixture("c5.txt"),
            "--genus",
            "0",
            "--punctures",
            "5",
            "--json",
        ],
        0,
    );
}

#[test]
fn surface_outputs() {
    golden("surface_2_0", &["surface", "--genus", "2", "--punctures", "0"], 0);
    golden(
        "surface_0_5_json",
        &["surface", "--genus", "0", "--punctures", "5", "--json"],
        0,
    );
    let table = run(&["surface", "--genus", "2", "--punctures", "0"]).stdout;
    let field = |key: &str| {
        table
            .lines()
            .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')).map(str::trim))
            .unwrap()
            .to_string()
    };
    assert_eq!(field("ncl_bound"), "6");
    assert_eq!(field("upper_density"), "1/2");
}

#[test]
fn verify_outputs() {
    golden(
        "verify_valid",
        &["verify", &fixture("p4.txt"), &fixture("p4_cert.json")],
        0,
    );
    golden(
        "verify_tampered",
        &["verify", &fixture("p4.txt"), &fixture("p4_cert_tampered.json")],
        1,
    );
    let out = run(&["verify", &fixture("p4.txt"), &fixture("p4_cert_tampered.json")]);
    assert!(out.stdout.contains("clause 2"), "{}", out.stdout);
}

#[test]
fn experiment_outputs() {
    golden(
        "experiment_exhaustive_4",
        &[
            "experiment",
            "enumerate",
            "--n",
            "4",
            "--genus",
            "0",
            "--punctures",
            "5",
        ],
        0,
    );
    golden(
        "experiment_sampled_json",
        &[
            "experiment",
            "enumerate",
            "--n",
            "10",
            "--genus",
            "0",
            "--punctures",
            "5",
            "--samples",
            "500",
            "--seed",
            "1",
            "--json",
        ],
        0,
    );
}

fn sampled_fraction(n: usize) -> String {
    let n = n.to_string();
    let out = run(&[
        "experiment",
        "enumerate",
        "--n",
        &n,
        "--genus",
        "0",
        "--punctures",
        "5",
        "--samples",
        "500",
        "--seed",
        "1",
        "--edge-probability",
        "1/8",
        "--json",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let summary: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    summary["fraction"].as_str().unwrap().to_string()
}

#[test]
fn sampled_fraction_grows_with_n() {
    // Frozen after the first run; edge probability 1/8 keeps enough sampled
    // graphs triangle-free at these sizes.
    let fractions: Vec<String> = [8, 10, 12].into_iter().map(sampled_fraction).collect();
    assert_eq!(fractions, ["17/463", "3/32", "55/362"]);
    let values: Vec<f64> = fractions
        .iter()
        .map(|f| {
            let (a, b) = f.split_once('/').unwrap();
            a.parse::<f64>().unwrap() / b.parse::<f64>().unwrap()
        })
        .collect();
    assert!(values.windows(2).all(|w| w[0] <= w[1]), "{values:?}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["ncl"],
        &["ncl", "x", "--no-such-flag"],
        &["gen", "dodecahedron", "3"],
        &["gen", "multipartite", "three", "2"],
        &["surface", "--genus", "2"],
    ] {
        let out = run(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stderr.starts_with("error:"), "{args:?}: {}", out.stderr);
    }
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("experiment"));
}

#[test]
fn input_errors_exit_2() {
    let (missing, p4, c5) = (fixture("does_not_exist.txt"), fixture("p4.txt"), fixture("c5.txt"));
    let (bad_vertex, garbage, truncated, h5) = (
        fixture("bad_vertex.txt"),
        fixture("garbage.txt"),
        fixture("truncated_cert.json"),
        fixture("h5.g6"),
    );
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["ncl", &missing], "does_not_exist"),
        (vec!["ncl", &bad_vertex], "out of range"),
        (vec!["ncl", &h5, "--naive"], "10"),
        (vec!["invariants", &garbage], "graph6"),
        (vec!["verify", &p4, &truncated], "truncated_cert"),
        (vec!["verify", &p4, &missing], "does_not_exist"),
        (vec!["surface", "--genus", "0", "--punctures", "4"], "no edges"),
        (
            vec!["obstruct", &c5, "--genus", "1", "--punctures", "0"],
            "not hyperbolic",
        ),
        (vec!["gen", "cycle", "2"], "cycle"),
        (vec!["gen", "random", "5", "3/2", "1"], "probability"),
        (
            vec![
                "experiment",
                "enumerate",
                "--n",
                "7",
                "--genus",
                "0",
                "--punctures",
                "5",
            ],
            "exhaustive",
        ),
    ];
    for (args, needle) in cases {
        let out = run(&args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stdout);
        assert!(out.stderr.starts_with("error: "), "{args:?}: {}", out.stderr);
        assert!(out.stderr.contains(needle), "{args:?}: {}", out.stderr);
    }
}

#[test]
fn write_errors_exit_2() {
    let out = run(&["gen", "cycle", "5", "-o", "/nonexistent-dir/out.txt"]);
    assert_eq!(out.code, 2);
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_curvegraph"))
}

fn binary_output(args: &[&str], stdin: Option<&[u8]>) -> std::process::Output {
    let mut child = binary()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(bytes) = stdin {
        child.stdin.take().unwrap().write_all(bytes).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

#[test]
fn piped_output_matches_file_output() {
    let dir = tempfile::tempdir().unwrap();
    for (family, params) in [
        ("marking", &["1", "3"][..]),
        ("random", &["12", "1/3", "7"]),
        ("half-graph", &["4"]),
    ] {
        for format in ["edgelist", "graph6"] {
            let file = dir.path().join(format!("{family}.{format}"));
            let file_str = file.to_str().unwrap();
            let mut args = vec!["gen", family];
            args.extend_from_slice(params);
            args.extend_from_slice(&["--format", format]);
            let piped = binary_output(&args, None);
            assert!(piped.status.success());
            args.extend_from_slice(&["-o", file_str]);
            let written = binary_output(&args, None);
            assert!(written.status.success() && written.stdout.is_empty());
            assert_eq!(piped.stdout, fs::read(&file).unwrap(), "{family} {format}");

            // Reading the file or the same bytes from stdin gives the same NCL.
            let from_file = binary_output(&["ncl", file_str, "--certificate"], None);
            let from_stdin = binary_output(&["ncl", "-", "--certificate"], Some(&piped.stdout));
            assert_eq!(from_file.stdout, from_stdin.stdout);
        }
    }
}

#[test]
fn process_exit_codes() {
    assert_eq!(
        binary_output(&["surface", "--genus", "2", "--punctures", "0"], None)
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        binary_output(
            &["obstruct", &fixture("k7.txt"), "--genus", "2", "--punctures", "0"],
            None
        )
        .status
        .code(),
        Some(1)
    );
    assert_eq!(binary_output(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(binary_output(&["ncl", "-"], Some(b"3 1\n0 5\n")).status.code(), Some(2));
}

#[test]
fn ncl_cap_env_override() {
    let out = binary()
        .args(["ncl", &fixture("k3_2.txt")])
        .env(curvegraph_cli::NCL_CAP_ENV, "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains('4'));
    let out = binary()
        .args(["ncl", &fixture("k3_2.txt")])
        .env(curvegraph_cli::NCL_CAP_ENV, "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn obstruct_reports_skipped_tests() {
    let out = binary()
        .args(["obstruct", &fixture("c5.txt"), "--genus", "2", "--punctures", "0"])
        .env(curvegraph_cli::NCL_CAP_ENV, "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("ncl                    skipped"), "{text}");
    assert!(text.contains("above the cap of 4"), "{text}");
}

#[test]
fn graph6_header_and_trailing_newline_accepted() {
    let text = fs::read_to_string(fixture("c4.g6")).unwrap();
    let out = run_with_stdin(&["ncl", "-"], &format!(">>graph6<<{text}\n"));
    assert_eq!((out.code, out.stdout.as_str()), (0, "4\n"));
    assert!(Path::new(&fixture("c4.g6")).exists());
}
