use std::io::Write;
use std::process::{Command, Output, Stdio};

fn m0n(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_m0n")).args(args).output().expect("binary runs")
}

fn m0n_with_input(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_m0n"))
        .args(args)
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
    o.status.code().unwrap()
}

#[test]
fn relations_listing() {
    let o = m0n(&["relations", "4"]);
    assert_eq!(stdout(&o).trim(), "u[1,3] + u[2,4] = 1");
    assert_eq!(stdout(&m0n(&["relations", "6", "--primitive"])).lines().count(), 9);
    let ext = stdout(&m0n(&["relations", "6", "--extended"]));
    assert_eq!(ext.lines().count(), 15);
    assert!(ext.contains("u[1,3]*u[1,4] + u[2,5]*u[2,6] = 1"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&m0n(&["relations", "6", "--json"]))).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 15);
    assert!(json[0]["cuts"].is_array());
    assert_eq!(code(&m0n(&["relations", "13"])), 3);
    assert_eq!(code(&m0n(&["relations", "3"])), 3);
}

#[test]
fn counts() {
    let o = m0n(&["count", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("extended-consistent 360 = 360"));
    assert!(stdout(&m0n(&["count", "7", "--primitive-only"])).contains("697"));
    assert!(stdout(&m0n(&["count", "5"])).contains("12 = 12"));
    assert!(stdout(&m0n(&["count", "8"])).contains("2520 = 2520"));
    assert_eq!(code(&m0n(&["count", "10"])), 3);
    let json: serde_json::Value = serde_json::from_str(&stdout(&m0n(&["count", "6", "--json"]))).unwrap();
    assert_eq!(json["consistent"], 60);
    assert_eq!(json["agree"], true);
}

#[test]
fn count_writes_patterns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("six.txt");
    let o = m0n(&["count", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 60);
    assert!(text.lines().all(|l| l.len() == 9));
}

#[test]
fn solve_examples() {
    let o = m0n(&["solve", "5", "--pattern", "-++++"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("ordering: 1 3 2 4 5\n"));
    assert!(stdout(&m0n(&["solve", "5", "--pattern", "-----"])).starts_with("ordering: 1 3 5 2 4\n"));
    let o = m0n(&["solve", "6", "--pattern", "--+-+--++"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("inconsistent"));
    assert_eq!(code(&m0n(&["solve", "5", "--pattern", "-+"])), 3);
    assert_eq!(code(&m0n(&["solve", "5", "--pattern", "-+x++"])), 3);
    assert_eq!(code(&m0n(&["solve", "5"])), 3);
}

#[test]
fn sign_of_examples() {
    assert_eq!(stdout(&m0n(&["sign-of", "5", "--ordering", "1,4,2,5,3"])).trim(), "-----");
    assert_eq!(stdout(&m0n(&["sign-of", "5", "--ordering", "1,2,3,4,5"])).trim(), "+++++");
    assert_eq!(code(&m0n(&["sign-of", "5", "--ordering", "1,2,2,4,5"])), 3);
    assert_eq!(code(&m0n(&["sign-of", "5", "--ordering", "1,2,3"])), 3);
}

#[test]
fn json_round_trip() {
    for word in ["1,3,5,2,6,4", "2,6,1,4,3,5", "6,5,4,3,2,1"] {
        let doc = stdout(&m0n(&["sign-of", "6", "--ordering", word, "--json"]));
        let first: serde_json::Value = serde_json::from_str(&doc).unwrap();
        let o = m0n_with_input(&["solve", "6", "--document", "-", "--json"], &doc);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let solved: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(solved["ordering"], first["ordering"], "{word}");
        assert_eq!(solved["signs"], first["signs"]);
        assert!(solved["trace"].is_array());
    }
}

#[test]
fn verify_small_polygons() {
    for n in ["5", "6"] {
        let o = m0n(&["verify", n, "--threads", "1"]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("pass")).count(), 5);
    }
    assert_eq!(code(&m0n(&["verify", "9"])), 3);
}

#[test]
fn diagram_matches_golden_file() {
    let golden = include_str!("golden/pentagon_minus_13.svg");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.svg");
    for _ in 0..2 {
        let o = m0n(&["diagram", "5", "--pattern", "-++++", "--out", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), golden);
    }
    assert!(golden.contains(r#"class="neg" data-chord="1,3""#));
    let plain = stdout(&m0n(&["diagram", "6", "--pattern", "+++++++++"]));
    assert_eq!(plain.matches(r#"class="pos""#).count(), 9);
    assert_eq!(plain.matches(r#"class="neg""#).count(), 0);
    let bad = m0n(&["diagram", "5", "--pattern", "-++++", "--out", "/nonexistent/dir/x.svg"]);
    assert_ne!(code(&bad), 0);
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(code(&m0n(&["--help"])), 0);
    assert_eq!(code(&m0n(&["--version"])), 0);
    assert_eq!(code(&m0n(&["frobnicate"])), 3);
}
