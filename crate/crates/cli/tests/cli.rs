use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn pmi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmi"))
        .args(args)
        .output()
        .expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn solve_json(path: &Path, algorithm: &str) -> serde_json::Value {
    let o = pmi(&["solve", path.to_str().unwrap(), "--algorithm", algorithm]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn solve_p2() {
    let v = solve_json(&fixture("P2.json"), "naive");
    assert_eq!(v["segments"].as_array().unwrap().len(), 2);
    assert_eq!(v["stats"]["changepoints_of_y"], 1);
    assert_eq!(v["segments"][0]["most_vital"], 0);
    assert_eq!(v["segments"][1]["value"]["b"], "1");
}

#[test]
fn solvers_write_the_same_segments() {
    let path = fixture("C4P.json");
    let naive = solve_json(&path, "naive");
    for algo in ["intervals", "oracle"] {
        let other = solve_json(&path, algo);
        assert_eq!(naive["segments"], other["segments"]);
        assert_eq!(naive["stats"], other["stats"]);
    }
}

#[test]
fn solve_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sol.json");
    let o = pmi(&[
        "solve",
        fixture("C4.json").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["segments"][0]["value"]["a"], "9");
}

#[test]
fn coloops_exit_2() {
    let o = pmi(&["solve", fixture("bridge.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("e0"));
    let o = pmi(&["check", fixture("bridge.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"type":"graphic","nodes":2,"edges":[{"u":0,"v":5,"a":1,"b":0}],"interval":{"lo":0,"hi":1}}"#).unwrap();
    let o = pmi(&["solve", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("edge 0"));
    let o = pmi(&["solve", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_passes_on_fixtures() {
    for name in ["P2.json", "C4P.json", "C4.json", "C4P.dimacs"] {
        let o = pmi(&["check", fixture(name).to_str().unwrap()]);
        assert!(o.status.success(), "{name}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = pmi(&["check", fixture("P2.json").to_str().unwrap()]);
    assert!(stdout(&o).contains("1 <= 4"));
}

#[test]
fn plot_rows() {
    let o = pmi(&[
        "plot",
        fixture("C4P.json").to_str().unwrap(),
        "--samples",
        "4",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "lambda,y,w,most_vital,y_decimal");
    let lambda_y: Vec<(&str, &str)> = rows[1..]
        .iter()
        .map(|r| {
            let f: Vec<&str> = r.split(',').collect();
            (f[0], f[1])
        })
        .collect();
    assert_eq!(
        lambda_y,
        vec![
            ("0", "6"),
            ("1/2", "6"),
            ("1", "7"),
            ("3/2", "8"),
            ("2", "9")
        ]
    );

    let o = pmi(&[
        "plot",
        fixture("P2.json").to_str().unwrap(),
        "--samples",
        "2",
    ]);
    let ys: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|r| r.split(',').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(ys, vec!["1", "1", "3"]);
}

#[test]
fn plot_rejects_unbounded() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("open.json");
    std::fs::write(&path, r#"{"type":"uniform","m":2,"k":1,"weights":[{"a":0,"b":1},{"a":1,"b":0}],"interval":{"lo":"-inf","hi":"inf"}}"#).unwrap();
    let o = pmi(&["plot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    // solving an unbounded instance is fine
    let v = solve_json(&path, "naive");
    assert_eq!(v["segments"][0]["lo"], "-inf");
}

#[test]
fn double_graphic_and_uniform() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let o = pmi(&[
        "double",
        fixture("C4P.json").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 8);
    for i in 0..4 {
        assert_eq!(edges[i], edges[i + 4]);
    }
    // the doubled instance solves to w of the original: min(2λ+3, 6)
    let sol = solve_json(&out, "naive");
    assert_eq!(
        sol["segments"][0]["value"],
        serde_json::json!({"a": "3", "b": "2"})
    );
    assert_eq!(
        sol["segments"][1]["value"],
        serde_json::json!({"a": "6", "b": "0"})
    );

    let uni = dir.path().join("u.json");
    std::fs::write(&uni, r#"{"type":"uniform","m":3,"k":1,"weights":[{"a":0,"b":1},{"a":1,"b":0},{"a":2,"b":-1}],"interval":{"lo":-2,"hi":2}}"#).unwrap();
    let o = pmi(&[
        "double",
        uni.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["type"], "doubled");
    assert!(pmi(&["check", out.to_str().unwrap()]).status.success());
}

#[test]
fn candidates_listing() {
    let o = pmi(&["candidates", fixture("C4P.json").to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.starts_with("1/2\te3 -> e0\tRankIncrease"));
    assert!(text.contains("3 candidates at 3 distinct points; bound 2km = 24"));
}

#[test]
fn thread_count_does_not_change_output() {
    let path = fixture("C4P.json");
    let one = pmi(&["--threads", "1", "solve", path.to_str().unwrap()]);
    let many = pmi(&["--threads", "4", "solve", path.to_str().unwrap()]);
    assert_eq!(one.stdout, many.stdout);
}
