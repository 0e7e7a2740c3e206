use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dlmkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dlmkit"))
        .args(args)
        .env_remove("DLMKIT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn dlmkit_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dlmkit"))
        .args(args)
        .env_remove("DLMKIT_CACHE_DIR")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn spectrum_of_k24_and_family() {
    let k24 = stdout(&dlmkit(&["family", "--name", "complete-multipartite", "--parts", "2,4"]));
    let o = dlmkit(&["spectrum", "--g6", k24.trim(), "--matrix", "dl"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "10×3, 8, 6, 0\n");

    let o = dlmkit(&["spectrum", "--family", "k2-join-empty", "--n", "6", "--matrix", "dl"]);
    assert_eq!(stdout(&o), "10×3, 6×2, 0\n");

    let o = dlmkit(&["spectrum", "--g6", k24.trim(), "--matrix", "l"]);
    assert_eq!(stdout(&o), "6, 4, 2×3, 0\n");
}

#[test]
fn spectrum_json_carries_intervals() {
    let o = dlmkit(&["spectrum", "--g6", "Ch", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let eig = v["eigenvalues"].as_array().unwrap();
    assert_eq!(eig.len(), 4);
    assert_eq!(eig[0]["exact"], false);
    assert!(eig[0]["value"].as_str().unwrap().starts_with('≈'));
    assert!(eig[0]["interval"]["lo"].as_str().unwrap().contains("/2^"));
    assert_eq!(eig[1]["value"], "6");
    assert_eq!(v["char_poly_coefficients"][4], "1");
}

#[test]
fn spectrum_reads_stdin_and_csv() {
    let o = dlmkit_stdin(&["spectrum", "--format", "text"], "Bw\n\nC~\n");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "Bw: 3×2, 0\nC~: 4×3, 0\n");

    let o = dlmkit(&["spectrum", "--g6", "Bw", "--format", "csv"]);
    assert_eq!(stdout(&o), "graph6,value,multiplicity,exact,lo,hi\nBw,3,2,true,3,3\nBw,0,1,true,0,0\n");
}

#[test]
fn spectrum_error_exit_codes() {
    let o = dlmkit(&["spectrum", "--g6", "A?"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("disconnected"));
    // The Laplacian is fine on a disconnected graph.
    assert_eq!(code(&dlmkit(&["spectrum", "--g6", "A?", "--matrix", "l"])), 0);

    assert_eq!(code(&dlmkit(&["spectrum", "--g6", "C~~"])), 1);
    assert_eq!(code(&dlmkit_stdin(&["spectrum"], "Bw\n!!\n")), 1);
    // Two input sources at once.
    assert_eq!(code(&dlmkit(&["spectrum", "--g6", "Bw", "--family", "path", "--n", "3"])), 2);
}

#[test]
fn enumerate_and_family_lines() {
    let o = dlmkit(&["enumerate", "--n", "5"]);
    assert_eq!(stdout(&o).lines().count(), 21);
    let o = dlmkit(&["enumerate", "--n", "5", "--all"]);
    assert_eq!(stdout(&o).lines().count(), 34);
    assert_eq!(code(&dlmkit(&["enumerate", "--n", "10"])), 2);

    let o = dlmkit(&["family", "--name", "classified", "--n", "7"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 4);
    assert_eq!(code(&dlmkit(&["family", "--name", "balanced-tripartite", "--n", "7"])), 2);
    assert_eq!(code(&dlmkit(&["family", "--name", "no-such-family", "--n", "7"])), 2);
    let o = dlmkit(&["family", "--name", "j-graph", "--a", "2", "--b", "1"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    let o = dlmkit(&["enumerate", "--n", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 6);
}

#[test]
fn verify_thm33_small_n() {
    let o = dlmkit(&["verify", "thm33", "--n", "6"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["class_size"], 5);
    assert_eq!(v["count"], 112);
    assert_eq!(v["verdict"], "match");
    assert_eq!(v["missing"].as_array().unwrap().len(), 0);
    assert!(v["suites"].as_array().unwrap().iter().all(|s| s["status"] == "pass"));

    let o = dlmkit(&["verify", "thm33", "--n", "6", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "graph6,largest,multiplicity,diameter,p5_free,complement_components,in_class");
    assert_eq!(lines.clone().count(), 112);
    assert_eq!(lines.filter(|l| l.ends_with(",true")).count(), 5);
}

#[test]
fn verify_output_is_byte_stable_across_workers() {
    let a = dlmkit(&["verify", "thm33", "--n", "7", "--workers", "1"]);
    let b = dlmkit(&["verify", "thm33", "--n", "7", "--workers", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let a = dlmkit(&["verify", "properties", "--max-n", "5", "--samples", "25", "--seed", "3", "--workers", "1"]);
    let b = dlmkit(&["verify", "properties", "--max-n", "5", "--samples", "25", "--seed", "3", "--workers", "3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_remark45_and_formulas() {
    let o = dlmkit(&["verify", "remark45"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["n"], 4);
    assert_eq!(reports[0]["class_size"], 3);
    assert_eq!(reports[1]["class_size"], 5);

    let o = dlmkit(&["verify", "formulas", "--max-n", "14"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verdict"], "match");
}

#[test]
fn verify_cospectral_reports_groups() {
    let o = dlmkit(&["verify", "cospectral", "--n", "7"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["cospectral_groups"].as_array().unwrap().len(), 21);
    let o = dlmkit(&["cospectral", "--n", "6", "--format", "text"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 cospectral groups among 112 graphs"));
}

#[test]
fn verify_failures_and_usage_errors() {
    // A corpus holding only K_{2,4} misses the other members.
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("partial.g6");
    std::fs::write(&corpus, "E]r?\nE~~w\n").unwrap();
    let o = dlmkit(&["verify", "thm33", "--n", "6", "--file", corpus.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["missing"].as_array().unwrap().len(), 4);

    // Disconnected corpus graph is an input error unless filtered.
    std::fs::write(&corpus, "E]r?\nE???\n").unwrap();
    let path = corpus.to_str().unwrap();
    assert_eq!(code(&dlmkit(&["verify", "thm33", "--n", "6", "--file", path])), 2);
    assert_eq!(code(&dlmkit(&["verify", "thm33", "--n", "6", "--file", path, "--connected-only"])), 1);

    assert_eq!(code(&dlmkit(&["verify", "thm33", "--n", "3"])), 2);
    assert_eq!(code(&dlmkit(&["verify", "thm33"])), 2);
    assert_eq!(code(&dlmkit(&["verify", "formulas", "--max-n", "5"])), 2);
    assert_eq!(code(&dlmkit(&["verify", "nonsense"])), 2);
    assert_eq!(code(&dlmkit(&["verify", "thm33", "--n", "6", "--file", "/nonexistent/corpus"])), 2);
}
