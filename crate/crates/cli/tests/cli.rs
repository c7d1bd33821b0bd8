use std::process::{Command, Output};

fn idpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idpoly"))
        .args(args)
        .output()
        .expect("spawn idpoly")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn coefficients(args: &[&str]) -> Vec<String> {
    let out = idpoly(&[&["compute", "--format", "machine"], args].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn compute_examples() {
    assert_eq!(coefficients(&["--family", "path", "--n", "3"]), ["0", "1", "1"]);
    assert_eq!(coefficients(&["--family", "complete", "--n", "5", "--alg", "brute"]), ["0", "5"]);
    assert_eq!(
        coefficients(&["--family", "cycle", "--n", "7", "--alg", "inclusion-exclusion"]),
        ["0", "0", "0", "7"]
    );
    assert_eq!(
        coefficients(&["--family", "complete-bipartite", "--p", "2", "--q", "3", "--alg", "ie"]),
        ["0", "0", "1", "1"]
    );
}

#[test]
fn compute_text_output() {
    let out = idpoly(&["compute", "--family", "cycle", "--n", "4"]);
    let text = stdout(&out);
    assert!(text.contains("id(G,x)      = 2x^2"), "{text}");
    assert!(text.contains("independent domination number: 2"), "{text}");
    assert!(text.contains("maximal independent sets: 2"), "{text}");
}

#[test]
fn generate_examples() {
    assert_eq!(stdout(&idpoly(&["generate", "--family", "path", "--n", "4"])), "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(stdout(&idpoly(&["generate", "--family", "cycle", "--n", "3"])), "3 3\n0 1\n1 2\n0 2\n");
    let random = ["generate", "--family", "random", "--n", "9", "--prob", "0.4", "--seed", "5"];
    assert_eq!(idpoly(&random).stdout, idpoly(&random).stdout);
}

#[test]
fn file_input_with_loops() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    // Path 0-1-2 with a loop on the middle vertex: only {0, 2} remains.
    std::fs::write(&path, "# looped\n3 3\n0 1\n1 2\n1 1\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(coefficients(&["--input", p, "--alg", "brute"]), ["0", "0", "1"]);
    assert_eq!(coefficients(&["--input", p, "--alg", "recursive"]), ["0", "0", "1"]);
    assert_eq!(idpoly(&["compute", "--input", p, "--alg", "essential"]).status.code(), Some(4));
}

#[test]
fn exit_codes() {
    assert_eq!(idpoly(&["compute", "--family", "star", "--n", "27", "--alg", "brute"]).status.code(), Some(3));
    assert_eq!(idpoly(&["compute", "--family", "wheel", "--n", "5"]).status.code(), Some(2));
    assert_eq!(idpoly(&["compute"]).status.code(), Some(2));
    assert_eq!(idpoly(&["compute", "--family", "path", "--n", "4", "--alg", "magic"]).status.code(), Some(2));
    assert_eq!(idpoly(&["verify", "--corpus", "exhaustive", "--max-n", "30"]).status.code(), Some(3));
    assert_eq!(idpoly(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn verify_exhaustive_small() {
    let out = idpoly(&["verify", "--corpus", "exhaustive", "--max-n", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let summary = text.lines().last().unwrap();
    assert!(summary.starts_with("summary: identities=11"), "{summary}");
    assert!(summary.ends_with("failed=0"), "{summary}");
}

#[test]
fn verify_alternating_sum_on_k1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k1.txt");
    std::fs::write(&path, "1 0\n").unwrap();
    let out = idpoly(&[
        "verify",
        "--scope",
        "alternating-sum",
        "--corpus",
        "files",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().next().unwrap().ends_with("value=1 - x"));
}

#[test]
fn verify_five_way_random_machine() {
    let out = idpoly(&[
        "verify", "--scope", "five-way", "--corpus", "random", "--count", "100", "--n", "10", "--seed", "1",
        "--format", "machine",
    ]);
    assert!(out.status.success());
    let lines: Vec<serde_json::Value> =
        stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 101);
    assert!(lines[..100].iter().all(|l| l["status"] == "pass"));
    assert_eq!(lines[100]["failed"], 0);
    assert_eq!(lines[100]["passed"], 100);
}

#[test]
fn bench_skips_brute_force_on_long_paths() {
    let out = idpoly(&["bench", "--family", "path", "--n", "200", "--alg", "brute,recursive", "--format", "machine"]);
    assert!(out.status.success());
    let rows: Vec<serde_json::Value> =
        stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["status"], "skipped");
    assert_eq!(rows[1]["status"], "ok");
    assert!(rows[1]["memo_entries"].as_u64().unwrap() > 0);
}
