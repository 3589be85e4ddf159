use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreathchar")).args(args).env_remove("WREATHCHAR_CACHE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_standard_form() {
    let o = run(&["eval", "--k", "3", "--n", "3", "--lambda", "[[],[2],[1]]", "--rho", "[[],[1],[1,1]]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-w+w^2\n");
    for method in ["mn", "row", "oracle", "auto"] {
        let o = run(&["eval", "--k", "3", "--n", "3", "--lambda", "[[],[2],[1]]", "--rho", "[[],[1],[1,1]]", "--method", method]);
        assert_eq!(stdout(&o), "-w+w^2\n", "{method}");
    }
}

#[test]
fn numeric_rendering() {
    let o = run(&["eval", "--k", "3", "--n", "3", "--lambda", "[[],[2],[1]]", "--rho", "[[],[1],[1,1]]", "--numeric"]);
    assert_eq!(stdout(&o), "-w+w^2\t0.000000-1.732051i\n");
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["eval", "--k", "3", "--n", "4", "--lambda", "[[],[2],[1]]", "--rho", "[[],[1],[1,1]]"],
        &["eval", "--k", "3", "--n", "3", "--lambda", "[[],[2]]", "--rho", "[[],[1],[1,1]]"],
        &["eval", "--k", "3", "--n", "3", "--lambda", "[[],[2],[1]]", "--rho", "[[],[1],[1,1]]", "--method", "fast"],
        &["eval", "--k", "3", "--n", "3", "--lambda", "[[],[2],[1]]", "--rho", "[[],[1],[1,1]]", "--method", "oracle", "--expand-step"],
        &["eval", "--k", "0", "--n", "0", "--lambda", "[]", "--rho", "[]"],
        &["core-quotient", "--k", "3"],
        &["core-quotient", "--k", "3", "--invert", "--core", "[3]", "--quotient", "[[],[],[]]"],
        &["table", "--k", "3", "--n", "2", "--format", "xml"],
        &["frobnicate"],
    ];
    for args in cases {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn resource_guard_refuses_large_tables() {
    let o = run(&["table", "--k", "6", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("20000"));
}

#[test]
fn table_formats() {
    let o = run(&["table", "--k", "3", "--n", "1", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "character,\"[[],[],[1]]\",\"[[],[1],[]]\",\"[[1],[],[]]\"\n\"[[1],[],[]]\",1,1,1\n\"[[],[1],[]]\",w,w^2,1\n\"[[],[],[1]]\",w^2,w,1\n"
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let o = run(&["table", "--k", "3", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["n"], 2);
    assert_eq!(v["characters"].as_array().unwrap().len(), 9);
    assert_eq!(v["classes"].as_array().unwrap().len(), 9);
    assert_eq!(v["values"].as_array().unwrap().len(), 9);
    assert_eq!(v["centralizers"][0], "18");
    assert_eq!(v["values"][0][0], "1");
    assert!(v.get("values_numeric").is_none());
    let o = run(&["table", "--k", "2", "--n", "1", "--numeric"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["values_numeric"][1][1][0], -1.0);
}

#[test]
fn verify_suites() {
    for suite in ["orthogonality", "degrees", "methods", "all"] {
        let o = run(&["verify", "--k", "2", "--n", "3", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        assert!(stdout(&o).lines().all(|l| l.ends_with(": ok")));
    }
    let o = run(&["verify", "--k", "3", "--n", "2"]);
    assert_eq!(stdout(&o), "orthogonality: ok\ndegrees: ok\nclass_sizes: ok\nconjugation: ok\nmethods: ok\n");
}

#[test]
fn modular_report_output() {
    let o = run(&["modular", "--k", "3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[7,1,1]\t1\t1\t1\t1\t1\t1\t1\n"));
    assert!(text.ends_with("modular relation: ok\n"));
    let o = run(&["modular", "--k", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn core_quotient_both_directions() {
    let o = run(&["core-quotient", "--k", "3", "--partition", "[5,4,3,2]"]);
    assert_eq!(stdout(&o), "core\t[2]\nquotient\t[[1],[1],[2]]\nsign\t-1\n");
    let o = run(&["core-quotient", "--k", "3", "--invert", "--core", "[2]", "--quotient", "[[1],[1],[2]]"]);
    assert_eq!(stdout(&o), "[5,4,3,2]\n");
}

fn cached_run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreathchar")).args(args).env("WREATHCHAR_CACHE", cache).output().unwrap()
}

#[test]
fn persistent_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let args = ["table", "--k", "3", "--n", "2", "--format", "csv"];
    let cold = cached_run(&path, &args);
    assert!(path.exists());
    let warm = cached_run(&path, &args);
    assert_eq!(cold.stdout, warm.stdout);
    let entries: serde_json::Map<String, serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(entries.len(), 81);
    // the flag wins over the environment
    let other = dir.path().join("other.json");
    let o = Command::new(env!("CARGO_BIN_EXE_wreathchar"))
        .args(["--cache", other.to_str().unwrap(), "eval", "--k", "2", "--n", "1", "--lambda", "[[1],[]]", "--rho", "[[],[1]]"])
        .env("WREATHCHAR_CACHE", &path)
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "1\n");
    assert!(other.exists());
    std::fs::write(&path, "not json").unwrap();
    assert_eq!(cached_run(&path, &args).status.code(), Some(2));
}
