use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn halldisk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_halldisk")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn verify_quiver() {
    let ok = halldisk(&["verify-quiver", "--m", "3", "--shifts", "-1..2", "--q", "2,3"]);
    assert_eq!(code(&ok), 0, "{}", stderr(&ok));
    assert!(stdout(&ok).contains("0 failed"));
    assert_eq!(code(&halldisk(&["verify-quiver", "--m", "2", "--q", "6"])), 2);
    assert_eq!(code(&halldisk(&["verify-quiver", "--m", "1"])), 2);
    assert_eq!(code(&halldisk(&["verify-quiver", "--m", "2", "--shifts", "3..1"])), 2);
}

#[test]
fn verify_disk() {
    let ok = halldisk(&["verify-disk", "--m", "4", "--h", "0,1,0,1", "--q", "2"]);
    assert_eq!(code(&ok), 0, "{}", stderr(&ok));
    let ok = halldisk(&["verify-disk", "--m", "3", "--h", "1,0,0", "--q", "2,3"]);
    assert_eq!(code(&ok), 0, "{}", stderr(&ok));
    let bad = halldisk(&["verify-disk", "--m", "4", "--h", "0,0,0,0", "--q", "2"]);
    assert_eq!(code(&bad), 2);
    assert!(stderr(&bad).contains("m - 2"), "{}", stderr(&bad));
    assert_eq!(code(&halldisk(&["verify-disk", "--m", "5", "--h", "1,0,0"])), 2);
}

#[test]
fn negative_foliation_values_parse() {
    let ok = halldisk(&["verify-disk", "--h", "0,2,-1,1,1", "--q", "2", "--shifts", "0..0", "--jobs", "1"]);
    assert_eq!(code(&ok), 0, "{}", stderr(&ok));
}

#[test]
fn verify_skein_mentions_the_delta_term() {
    let o = halldisk(&["verify-skein", "--q", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    let line = text.lines().find(|l| l.contains("local skein l=1:")).unwrap();
    assert!(line.ends_with("(v - v^-1)*E[2,1] E[4,1]"), "{line}");
}

#[test]
fn multiply() {
    let o = halldisk(&["multiply", "z[1,0]", "z[1,0]", "--m", "2", "--q", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "3*v*[M[1,2)[0] + M[1,2)[0]]");
    let o = halldisk(&["multiply", "1", "z[1,0]"]);
    assert_eq!(stdout(&o).trim(), "[M[1,2)[0]]");
    assert_eq!(code(&halldisk(&["multiply", "z[1,", "z[1,0]"])), 2);
    assert_eq!(code(&halldisk(&["multiply", "E[1,0]", "z[1,0]"])), 2);
}

#[test]
fn multiply_with_assignment_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let assign = write_config(dir.path(), "assign.json", r#"{"E[1,0]": "M[1,3)"}"#);
    let out = dir.path().join("product.json");
    let o = halldisk(&[
        "multiply",
        "E[1,0]",
        "1",
        "--m",
        "3",
        "--assign",
        &assign,
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["display"], "[M[1,3)[0]]");
}

#[test]
fn json_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let p = dir.path().join(name);
        let o = halldisk(&[
            "verify-quiver",
            "--m",
            "3",
            "--q",
            "2",
            "--shifts",
            "0..1",
            "--format",
            "json",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        fs::read_to_string(p).unwrap()
    };
    let a = run("a.json");
    assert_eq!(a, run("b.json"));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["suites"][0]["relations"][0]["results"][0]["status"], "pass");
}

#[test]
fn presentations() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write_config(dir.path(), "tri.json", r#"{"disks":[{"m":3,"h":[1,0,0]}]}"#);
    let o = halldisk(&["presentation", &tri, "--q", "2", "--shifts", "0..1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("R1 E1 n=0 k=1"));

    let annulus = write_config(
        dir.path(),
        "annulus.json",
        r#"{"disks":[{"m":4,"h":[0,1,0,1]},{"m":4,"h":[0,1,0,1]}],
            "gluings":[{"left":0,"arc_i":2,"right":1,"arc_j":4},{"left":0,"arc_i":4,"right":1,"arc_j":2}]}"#,
    );
    let out = dir.path().join("annulus.out.json");
    let o =
        halldisk(&["presentation", &annulus, "--shifts", "0..0", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(v["verification"].is_null());
    let rels = v["presentation"]["relations"].as_array().unwrap();
    assert!(rels.iter().any(|r| r["label"] == "G1 E[2,0] = F[4,0]"));

    let closed = write_config(
        dir.path(),
        "closed.json",
        r#"{"disks":[{"m":2,"h":[0,0]},{"m":2,"h":[0,0]}],
            "gluings":[{"left":0,"arc_i":1,"right":1,"arc_j":1},{"left":0,"arc_i":2,"right":1,"arc_j":2}]}"#,
    );
    let o = halldisk(&["presentation", &closed]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("closed boundary"), "{}", stderr(&o));

    let twice = write_config(
        dir.path(),
        "twice.json",
        r#"{"disks":[{"m":3,"h":[1,0,0]},{"m":3,"h":[1,0,0]}],
            "gluings":[{"left":0,"arc_i":1,"right":1,"arc_j":1},{"left":0,"arc_i":1,"right":1,"arc_j":2}]}"#,
    );
    let o = halldisk(&["presentation", &twice]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("glued twice"), "{}", stderr(&o));
    assert_eq!(code(&halldisk(&["presentation", dir.path().join("missing.json").to_str().unwrap()])), 2);
}
