use serde_json::Value;
use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn topogen(args: &[&str], input: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_topogen"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(r: &Run) -> Value {
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    serde_json::from_str(&r.stdout).expect("stdout is one JSON document")
}

const SP8_TRIPLE: &str = r#"{"schema": "topogen/1", "group": {"family": "Sp", "n": 8, "p": 0}, "classes": [
    {"semisimple": {"mult_one": 6, "mult_minus_one": 2}},
    {"semisimple": {"mult_one": 6, "mult_minus_one": 2}},
    {"semisimple": {"mult_one": 4, "mult_minus_one": 4}}]}"#;

#[test]
fn decide_reports_table_row() {
    let v = json(&topogen(&["decide"], SP8_TRIPLE));
    assert_eq!(v["schema"], "topogen/1");
    assert_eq!(v["empty"], true);
    assert_eq!(v["reason"], "TableRow");
    assert_eq!(v["row"], "Sp8-r3");
    assert_eq!(v["witnesses"]["sum_d"], 16);
    assert_eq!(v["witnesses"]["bound"], 16);
}

#[test]
fn output_is_deterministic() {
    let a = topogen(&["decide"], SP8_TRIPLE);
    let b = topogen(&["decide"], SP8_TRIPLE);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_file_flag() {
    let path = std::env::temp_dir().join(format!("topogen-cli-{}.json", std::process::id()));
    std::fs::write(&path, SP8_TRIPLE).unwrap();
    let v = json(&topogen(&["decide", "--input", path.to_str().unwrap()], ""));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["row"], "Sp8-r3");
}

#[test]
fn nonempty_verdict_exits_zero() {
    let input = r#"{"group": {"family": "SL", "n": 3, "p": 0}, "classes": [
        {"unipotent": {"partition": [3]}}, {"unipotent": {"partition": [3]}}]}"#;
    let v = json(&topogen(&["decide"], input));
    assert_eq!(v["empty"], false);
    assert_eq!(v["reason"], "Generic");
}

#[test]
fn classdim_values() {
    let input =
        r#"{"group": {"family": "SO", "n": 10, "p": 0}, "class": {"unipotent": {"partition": [2, 2, 2, 2, 1, 1]}}}"#;
    let v = json(&topogen(&["classdim"], input));
    assert_eq!(v["dim_class"], 20);
    assert_eq!(v["dim_centralizer"], 25);
}

#[test]
fn text_format() {
    let input = r#"{"group": {"family": "Sp", "n": 4, "p": 0}, "class": {"unipotent": {"partition": [2, 1, 1]}}}"#;
    let r = topogen(&["classdim", "--format", "text"], input);
    assert_eq!(r.code, 0);
    assert!(r.stdout.lines().any(|l| l == "dim_class: 4"), "{}", r.stdout);
}

#[test]
fn malformed_partition_exits_two() {
    let input = r#"{"group": {"family": "SL", "n": 4, "p": 0}, "class": {"unipotent": {"partition": [3, 3]}}}"#;
    let r = topogen(&["classdim"], input);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("dimension mismatch"), "{}", r.stderr);
}

#[test]
fn odd_multiplicity_of_even_part_exits_two() {
    let input =
        r#"{"group": {"family": "SO", "n": 11, "p": 0}, "class": {"unipotent": {"partition": [2, 2, 2, 2, 2, 1]}}}"#;
    let r = topogen(&["classdim"], input);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("parity"), "{}", r.stderr);
}

#[test]
fn bad_documents_exit_two() {
    assert_eq!(topogen(&["decide"], "not json").code, 2);
    assert_eq!(topogen(&["decide"], r#"{"schema": "topogen/0"}"#).code, 2);
    assert_eq!(topogen(&["decide"], r#"{"group": {"family": "G2", "n": 7}}"#).code, 2);
    let one_class = r#"{"group": {"family": "SL", "n": 3}, "classes": [{"unipotent": {"partition": [3]}}]}"#;
    assert_eq!(topogen(&["decide"], one_class).code, 2);
}

#[test]
fn unsupported_request_exits_three() {
    let r = topogen(&["rslimit"], r#"{"family": "Sp", "n": 4, "p": 0, "r": 3, "s": 3}"#);
    assert_eq!(r.code, 3, "{}", r.stderr);
}

#[test]
fn closure_dot_and_comparison() {
    let v = json(&topogen(&["closure"], r#"{"group": {"family": "SL", "n": 4, "p": 0}}"#));
    let dot = v["dot"].as_str().unwrap();
    assert!(dot.starts_with("digraph"));
    // nontrivial partitions of 4 form a chain of four: three covering edges
    assert_eq!(dot.matches("->").count(), 3);
    let cmp = r#"{"group": {"family": "SL", "n": 4, "p": 0},
        "upper": {"unipotent": {"partition": [3, 1]}}, "lower": {"unipotent": {"partition": [2, 2]}}}"#;
    assert_eq!(json(&topogen(&["closure"], cmp))["in_closure"], true);
}

#[test]
fn genfree_and_rslimit() {
    let v = json(&topogen(&["genfree"], r#"{"exceptional": "G2", "dim_v": 37, "dim_vg": 0}"#));
    assert_eq!(v["generically_free"], true);
    assert_eq!(v["d"], "36");
    let v = json(&topogen(&["rslimit"], r#"{"family": "Sp", "n": 4, "p": 3, "r": 3, "s": 3}"#));
    assert_eq!(v["limit"], "0");
}

#[test]
fn maxclass_takes_q_or_i() {
    let by_q = json(&topogen(&["maxclass"], r#"{"group": {"family": "SL", "n": 3, "p": 2}, "r": 3, "q": 4}"#));
    let by_i = json(&topogen(&["maxclass"], r#"{"group": {"family": "SL", "n": 3, "p": 2}, "r": 3, "i": 1}"#));
    assert_eq!(by_q["dim"], by_i["dim"]);
    assert_eq!(by_q["context"]["i"], 1);
    let both = r#"{"group": {"family": "SL", "n": 3, "p": 2}, "r": 3, "q": 4, "i": 1}"#;
    assert_eq!(topogen(&["maxclass"], both).code, 2);
}

#[test]
fn verify_blocks_suite() {
    let v = json(&topogen(&["verify", "blocks"], ""));
    assert_eq!(v["suite"], "blocks");
    assert_eq!(v["checked"], 320);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
}
