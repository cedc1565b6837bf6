use std::path::Path;
use std::process::{Command, Output};

const NESTED: &[&str] = &["--field", "2^2", "--family", "nested-cartesian", "--factors", r#"[["0","1"],["0","1"],"all"]"#];

fn gmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmd")).args(args).output().expect("the binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn with_nested<'a>(rest: &[&'a str]) -> Vec<&'a str> {
    [NESTED, rest].concat()
}

#[test]
fn reproductions_match_golden_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for ex in ["ex7.1", "ex7.2", "ex7.3", "ex7.4"] {
        for (format, ext) in [("text", "txt"), ("csv", "csv"), ("json", "json")] {
            let expected = std::fs::read_to_string(dir.join(format!("{ex}.{ext}"))).unwrap();
            let got = stdout(&gmd(&["reproduce", ex, "--format", format]));
            assert_eq!(got, expected, "{ex} as {format}");
        }
    }
}

#[test]
fn params_of_the_nested_set() {
    let out = stdout(&gmd(&with_nested(&["params", "--order", "lex", "--priority", "t3,t2,t1"])));
    let h: Vec<&str> = out.lines().find(|l| l.starts_with("H(d)")).unwrap().split_whitespace().collect();
    assert_eq!(h, ["H(d)", "3", "6", "9", "12", "13"], "{out}");
    assert!(out.contains("deg 13, reg 5"), "{out}");
    let json: serde_json::Value = serde_json::from_str(&stdout(&gmd(&with_nested(&["params", "--format", "json"])))).unwrap();
    assert_eq!(json["points"], 13);
    assert_eq!(json["regularity"], 5);
}

#[test]
fn params_of_the_torus() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&gmd(&["params", "--field", "3", "--family", "torus", "--vars", "3", "--format", "json"]))).unwrap();
    assert_eq!(json["points"], 4);
}

#[test]
fn zeros_of_pairs() {
    let pairs = [
        ("t1-t2", "t1-t3", 1),
        ("(t1-t2)(t1-t3)", "(t1-t2)t2", 6),
        ("(t1-t2)(t1-t3)t2", "(t1-t2)t2^2", 9),
        ("(t1-t2)(t1-t3)t2^2", "(t1-t2)(t2-t3)t2t3", 10),
    ];
    for (f, g, expected) in pairs {
        let out = stdout(&gmd(&with_nested(&["zeros", f, g, "--format", "json"])));
        let json: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(json["zeros"], expected, "{f}, {g}");
        assert_eq!(json["nonzeros"], 13 - expected);
    }
    let affine = ["--field", "3", "--family", "affine-cartesian", "--factors", r#"["all","all"]"#];
    let out = stdout(&gmd(&[&affine[..], &["zeros", "t3"]].concat()));
    assert_eq!(out, "|V_X(F)| = 0\n|X \\ V_X(F)| = 9\n");
}

#[test]
fn bad_input_is_rejected() {
    let out = gmd(&with_nested(&["zeros", "t1-t1"]));
    assert!(!out.status.success());
    let out = gmd(&with_nested(&["zeros", "t1 + t7"]));
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 5"), "{err}");
    let out = gmd(&["params", "--field", "2^2", "--family", "nested-cartesian", "--factors", "[["]);
    assert!(!out.status.success());
    let out = gmd(&["params", "--field", "6", "--family", "torus", "--vars", "3"]);
    assert!(!out.status.success());
}

#[test]
fn footprint_matrix_formats() {
    let args = with_nested(&["footprint", "--order", "lex", "--priority", "t3,t2,t1", "--format", "csv"]);
    let out = stdout(&gmd(&args));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "d,1,2,3,4,5,6,7,8,9,10,11,12,13");
    assert_eq!(lines[1], "1,8,12,13,inf,inf,inf,inf,inf,inf,inf,inf,inf,inf");
    let out = stdout(&gmd(&with_nested(&["footprint", "--degrees", "2..3", "--ranks", "1..2"])));
    assert_eq!(out.lines().count(), 3, "{out}");
}

#[test]
fn weights_respect_the_budget() {
    let out = gmd(&with_nested(&["weights", "--budget", "100", "--strict", "--format", "json"]));
    assert_eq!(out.status.code(), Some(3));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["open_cells"].as_u64().unwrap() > 0);
    let out = gmd(&with_nested(&["weights", "--budget", "100", "--format", "json"]));
    assert_eq!(out.status.code(), Some(0));
    let out = stdout(&gmd(&with_nested(&["weights", "--degrees", "1..2", "--ranks", "1..2"])));
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows[1], ["1", "8", "12"]);
    assert_eq!(rows[2], ["2", "4", "7"]);
}

#[test]
fn dumped_configs_reproduce_results() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let args = with_nested(&["footprint", "--order", "lex", "--priority", "t3,t2,t1", "--format", "json", "--degrees", "1..3"]);
    let dumped = stdout(&gmd(&[&args[..], &["--dump-config"]].concat()));
    std::fs::write(&path, &dumped).unwrap();
    let direct = stdout(&gmd(&args));
    let via_file = stdout(&gmd(&["footprint", "--config", path.to_str().unwrap()]));
    assert_eq!(direct, via_file);
    let again = stdout(&gmd(&["footprint", "--config", path.to_str().unwrap(), "--dump-config"]));
    assert_eq!(again, dumped);
}

#[test]
fn verify_small_ranges() {
    let out = gmd(&[
        "verify",
        "--only",
        "pi-bound",
        "--only",
        "conjecture",
        "--pi-max-product",
        "100",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["violations"], 0);
    let notes = json["sections"][1]["notes"].to_string();
    assert!(notes.contains("d=4"), "{notes}");
}
