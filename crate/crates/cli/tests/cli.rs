use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_permtab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SAMPLE_TABLEAU: &str = r#"{"n":12,"cols":[11,9,6,5,3],"rows":[1,2,4,7,8,10,12],"fill":[[0,1,0,0,1],[0,0,1,0,1],[1,1,1,1],[0,1],[0,1],[1],[]]}"#;
const SAMPLE_BTABLEAU: &str = r#"{"n":8,"k":4,"base_cols":[8,6,3,2],"pos_rows":[1,4,5,7],"fill":[[0],[1,1],[0,0,0],[0,1,0,1],[1,1,1,1],[0,1],[0,0],[1]]}"#;

#[test]
fn counts() {
    let o = run(
        &["enumerate", "--type", "a", "--n", "4", "--format", "count"],
        "",
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "24\n");
    let o = run(
        &["enumerate", "--type", "b", "--n", "2", "--format", "count"],
        "",
    );
    assert_eq!(stdout(&o), "8\n");
}

#[test]
fn jsonl_listing() {
    let o = run(
        &["enumerate", "--type", "a", "--n", "1", "--format", "jsonl"],
        "",
    );
    assert_eq!(
        stdout(&o),
        "{\"n\":1,\"cols\":[],\"rows\":[1],\"fill\":[[]]}\n"
    );
    let o = run(&["enumerate", "--type", "b", "--n", "3"], "");
    assert_eq!(stdout(&o).lines().count(), 48);
}

#[test]
fn cap_needs_override() {
    let o = run(
        &["enumerate", "--type", "b", "--n", "7", "--format", "count"],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["enumerate", "--type", "a", "--n", "11"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn map_examples() {
    let o = run(
        &["map", "--direction", "forward", "--type", "a"],
        &format!("{SAMPLE_TABLEAU}\n"),
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"perm\":[6,5,1,10,4,3,8,9,2,11,7,12]}\n");
    let o = run(
        &["map", "--direction", "forward", "--type", "b"],
        &format!("{SAMPLE_BTABLEAU}\n"),
    );
    assert_eq!(
        stdout(&o),
        "{\"perm\":[8,1,12,4,3,7,11,2,15,6,10,14,13,5,16,9]}\n"
    );
    let o = run(
        &["map", "--direction", "inverse", "--type", "a"],
        "{\"perm\":[1,2,3]}\n",
    );
    assert_eq!(
        stdout(&o),
        "{\"n\":3,\"cols\":[],\"rows\":[1,2,3],\"fill\":[[],[],[]]}\n"
    );
}

#[test]
fn pipelines_reproduce_input() {
    for (kind, n) in [("a", "5"), ("b", "3")] {
        let listing = stdout(&run(&["enumerate", "--type", kind, "--n", n], ""));
        let forward = run(&["map", "--direction", "forward", "--type", kind], &listing);
        assert!(forward.status.success());
        let back = run(
            &["map", "--direction", "inverse", "--type", kind],
            &stdout(&forward),
        );
        assert!(back.status.success());
        assert_eq!(stdout(&back), listing, "type {kind}");
    }
}

#[test]
fn bad_lines_are_reported_and_skipped() {
    let input = "{\"perm\":[2,3,1]}\nnot json\n{\"perm\":[1,1]}\n{\"perm\":[1]}\n";
    let o = run(&["map", "--direction", "inverse", "--type", "a"], input);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("\"line\":2") && err.contains("\"line\":3"));
    let o = run(
        &["map", "--direction", "inverse", "--type", "b"],
        "{\"perm\":[2,3,1,4]}\n",
    );
    assert_eq!(o.status.code(), Some(2));
    let invalid = r#"{"n":2,"cols":[2],"rows":[1],"fill":[[0]]}"#;
    let o = run(&["map", "--direction", "forward", "--type", "a"], invalid);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let o = run(&["verify", "--claim", "thm1.2", "--max-n", "8"], "");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["values"], serde_json::json!([1, 0, -2, -4, -4, 0, 8, 16]));
    let o = run(
        &[
            "verify",
            "--claim",
            "thm3.1",
            "--max-n",
            "5",
            "--threads",
            "2",
        ],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["values"], serde_json::json!([0, 2, 0, 4, 0]));
    let o = run(&["verify", "--claim", "eq1.1", "--max-n", "1"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["values"][0]["lhs"], "1");
    assert_eq!(v["values"][0]["rhs"], "1");
}

#[test]
fn verify_usage_errors() {
    assert_eq!(
        run(&["verify", "--claim", "thm7", "--max-n", "3"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--claim", "lemma2.2", "--max-n", "3"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--claim", "thm3.1", "--max-n", "9"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
}
