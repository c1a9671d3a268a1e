//! End-to-end checks of the command-line interface: pipelines, exit codes,
//! stdin/stdout streaming, and determinism.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_earspan"))
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "earspan-cli-{}-{:?}",
        std::process::id(),
        std::thread::current().id()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_file(dir: &std::path::Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

fn run_with_stdin(cmd: &mut Command, input: &str) -> (String, i32) {
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8_lossy(&out.stdout).to_string(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn analyze_prints_metrics() {
    let dir = tempdir();
    let path = write_file(&dir, "c5.edges", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = bin().args(["analyze", &path]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("rad: 2"));
    assert!(text.contains("eta: 5"));
    assert!(text.contains("zeta: 5"));
    assert!(text.contains("bridges: (none)"));
}

#[test]
fn analyze_reads_stdin() {
    let (text, code) = run_with_stdin(bin().args(["analyze", "-"]), "0 1\n1 2\n2 0\n");
    assert_eq!(code, 0);
    assert!(text.contains("girth: 3"));
}

#[test]
fn orient_then_verify_pipeline() {
    let dir = tempdir();
    let graph = write_file(&dir, "g.edges", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    let orient_path = dir.join("g.orient");
    let trace_path = dir.join("g.trace.json");
    let out = bin()
        .args([
            "orient",
            &graph,
            "-o",
            orient_path.to_str().unwrap(),
            "--trace",
            trace_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    let verify = bin()
        .args(["verify-orientation", &graph, orient_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(verify.status.code(), Some(0));
    let text = String::from_utf8_lossy(&verify.stdout);
    assert!(text.contains("result: PASS"));

    let audited = bin()
        .args([
            "verify-orientation",
            &graph,
            orient_path.to_str().unwrap(),
            "--trace",
            trace_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(audited.status.code(), Some(0));
}

#[test]
fn verify_orientation_flags_a_flipped_arc() {
    let dir = tempdir();
    let graph = write_file(&dir, "c3.edges", "0 1\n1 2\n2 0\n");
    // Directed path orientation with one arc flipped: not strong.
    let orientation = write_file(&dir, "c3.orient", "0 1\n2 1\n2 0\n");
    let out = bin()
        .args(["verify-orientation", &graph, &orientation])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("result: FAIL"));
}

#[test]
fn generate_rainbow_exact_pipeline() {
    let generated = bin()
        .args([
            "generate",
            "extremal_rc",
            "--r",
            "1",
            "--eta",
            "3",
            "--copies",
            "4",
        ])
        .output()
        .unwrap();
    assert_eq!(generated.status.code(), Some(0));
    let edges = String::from_utf8_lossy(&generated.stdout).to_string();
    let (text, code) = run_with_stdin(bin().args(["rainbow", "-", "--verify", "exact"]), &edges);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("colors: 3 (bound 3)"));
    assert!(text.contains("verify exact: PASS"));
}

#[test]
fn rainbow_certificate_verification_via_files() {
    let dir = tempdir();
    let graph = write_file(&dir, "g.edges", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let colors = dir.join("g.colors");
    let trace = dir.join("g.trace.json");
    let out = bin()
        .args([
            "rainbow",
            &graph,
            "-o",
            colors.to_str().unwrap(),
            "--trace",
            trace.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let verify = bin()
        .args([
            "verify-coloring",
            &graph,
            colors.to_str().unwrap(),
            "--verify",
            "certificate",
            "--trace",
            trace.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(verify.status.code(), Some(0), "{verify:?}");
}

#[test]
fn rainbow_emits_certificate_json_lines() {
    let dir = tempdir();
    let graph = write_file(&dir, "g.edges", "0 1\n1 2\n2 3\n3 0\n");
    let certs = dir.join("g.certs.jsonl");
    let out = bin()
        .args(["rainbow", &graph, "--certificates", certs.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = std::fs::read_to_string(&certs)
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect();
    assert_eq!(lines.len(), 6, "one line per vertex pair of C4");
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert!(v["path"].is_array());
        assert!(v["colors"].is_array());
        assert!(v["x"].is_number() && v["y"].is_number());
    }
}

#[test]
fn verify_coloring_exact_rejects_too_many_colors() {
    // A long cycle is one ear, so the construction uses as many colors as
    // edges; exact verification must refuse beyond 18 colors.
    let dir = tempdir();
    let edges: String = (0..40)
        .map(|i| format!("{} {}\n", i, (i + 1) % 40))
        .collect();
    let graph = write_file(&dir, "c40.edges", &edges);
    let colors = dir.join("c40.colors");
    let build = bin()
        .args(["rainbow", &graph, "-o", colors.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(build.status.code(), Some(0));
    let verify = bin()
        .args(["verify-coloring", &graph, colors.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(verify.status.code(), Some(2));
    let err = String::from_utf8_lossy(&verify.stderr);
    assert!(err.contains("certificate"), "stderr: {err}");
}

#[test]
fn verify_coloring_exact_detects_failure() {
    let dir = tempdir();
    let graph = write_file(&dir, "c4.edges", "0 1\n1 2\n2 3\n3 0\n");
    let coloring = write_file(&dir, "c4.colors", "0 1 0\n1 2 0\n2 3 0\n3 0 0\n");
    let out = bin()
        .args(["verify-coloring", &graph, &coloring])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("false"));
}

#[test]
fn exhaustive_and_exact_rc_values() {
    let dir = tempdir();
    let c4 = write_file(&dir, "c4.edges", "0 1\n1 2\n2 3\n3 0\n");
    let out = bin().args(["exhaustive", &c4]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("best oriented diameter: 3"));
    assert!(text.contains("strong: 2"));

    let rc = bin().args(["exact-rc", &c4]).output().unwrap();
    assert_eq!(rc.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&rc.stdout).contains("exact rainbow connection number: 2"));
}

#[test]
fn exact_rc_respects_cap_with_usage_exit() {
    let dir = tempdir();
    let edges: String = (0..12)
        .map(|i| format!("{} {}\n", i, (i + 1) % 12))
        .collect();
    let c12 = write_file(&dir, "c12.edges", &edges);
    let out = bin().args(["exact-rc", &c12]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("too many edges"));
}

#[test]
fn report_runs_and_exits_clean() {
    let dir = tempdir();
    // Octahedron, asserted maximal planar (face length 3).
    let mut edges = String::new();
    for i in 0..6u32 {
        for j in i + 1..6 {
            if i / 2 != j / 2 {
                edges.push_str(&format!("{i} {j}\n"));
            }
        }
    }
    let graph = write_file(&dir, "oct.edges", &edges);
    let json_path = dir.join("report.json");
    let out = bin()
        .args([
            "report",
            &graph,
            "--face-len",
            "3",
            "--json",
            json_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("plane_face_oriented_radius"));
    assert!(!text.contains("FAIL"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(json["graph"]["n"], 6);
}

#[test]
fn generate_is_deterministic_per_seed() {
    let args = [
        "generate",
        "random_bridgeless",
        "--n",
        "20",
        "--extra-ears",
        "3",
        "--seed",
        "9",
    ];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = bin()
        .args([
            "generate",
            "random_bridgeless",
            "--n",
            "20",
            "--extra-ears",
            "3",
            "--seed",
            "10",
        ])
        .output()
        .unwrap();
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn thread_count_does_not_change_output() {
    let dir = tempdir();
    let graph = write_file(&dir, "g.edges", "0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n4 5\n5 0\n");
    let one = bin()
        .args(["--threads", "1", "orient", &graph])
        .output()
        .unwrap();
    let many = bin()
        .args(["--threads", "4", "orient", &graph])
        .output()
        .unwrap();
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn usage_errors_exit_2() {
    let out = bin().args(["no-such-command"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let missing = bin().args(["analyze", "/no/such/file"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
    let unknown_family = bin()
        .args(["generate", "mystery", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(unknown_family.status.code(), Some(2));
    let bad_graph = run_with_stdin(bin().args(["orient", "-"]), "0 1\n1 2\n");
    assert_eq!(bad_graph.1, 2, "bridged input is a precondition error");
}

#[test]
fn disconnected_counterexample_fails_orient_with_usage_exit() {
    let generated = bin()
        .args([
            "generate",
            "disconnected_counterexample",
            "--n",
            "4",
            "--m",
            "4",
        ])
        .output()
        .unwrap();
    assert_eq!(generated.status.code(), Some(0));
    let edges = String::from_utf8_lossy(&generated.stdout).to_string();
    let (_, code) = run_with_stdin(bin().args(["orient", "-"]), &edges);
    assert_eq!(code, 2);
}
