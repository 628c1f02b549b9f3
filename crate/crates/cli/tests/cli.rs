use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-bi")).args(args).output().expect("spawn cayley-bi")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cayley-bi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn group_commands() {
    let list = stdout(&run(&["group", "list"]));
    assert!(list.lines().any(|l| l.starts_with("[20,3]")));
    let info = stdout(&run(&["group", "info", "[20,3]"]));
    assert!(info.contains("order      20"));
    let o = run(&["group", "info", "[99,9]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn chartable_text_uses_exact_tokens() {
    let text = stdout(&run(&["chartable", "[42,1]"]));
    assert!(text.contains("z3^2") && text.contains("z6^5"), "{text}");
    let v = json(&["chartable", "[20,3]", "--json"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
}

#[test]
fn spectrum_and_pair() {
    let s = temp("s.txt");
    std::fs::write(&s, "# b, a\nb a\n").unwrap();
    let v = json(&["spectrum", "[20,3]", "--set", s.to_str().unwrap(), "--close-inverse"]);
    assert!(v.is_object());

    let (a, b) = (temp("a.txt"), temp("b.txt"));
    std::fs::write(&a, "a a^3\n").unwrap();
    std::fs::write(&b, "a b a^3 b^3\n").unwrap();
    let o = run(&["bi", "pair", "[8,3]", "--s", a.to_str().unwrap(), "--t", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["isomorphic"], false);
}

#[test]
fn witness_reports_replay() {
    let v = json(&["nonbi", "witness", "[8,3]"]);
    assert_eq!(v["nu"], 1);

    let report = stdout(&run(&["ci", "witness", "[20,3]"]));
    let path = temp("ci.json");
    std::fs::write(&path, report).unwrap();
    let replay = json(&["ci", "replay", "--report", path.to_str().unwrap()]);
    assert_eq!(replay["verified"], true);
}

#[test]
fn output_does_not_depend_on_jobs() {
    let one = stdout(&run(&["bi", "group", "[12,1]", "--mode", "full", "--jobs", "1"]));
    let four = stdout(&run(&["bi", "group", "[12,1]", "--mode", "full", "--jobs", "4"]));
    assert_eq!(one, four);
    let v: Value = serde_json::from_str(&one).unwrap();
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn small_budget_is_partial() {
    let o = run(&["bi", "group", "[24,1]", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["complete"], false);
}

#[test]
fn classify_small_orders() {
    let out = temp("classify.json");
    let o = run(&["classify", "--max-order", "12", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    for r in v["rows"].as_array().unwrap() {
        assert_eq!(r["bi_paper"], r["bi_computed"], "{}", r["label"]);
    }
}
