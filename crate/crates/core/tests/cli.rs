use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finite-w")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn pyramid_command() {
    let o = run(&["pyramid", "--partition", "6,3,3,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0].find("[13]"), Some(8));

    let o = run(&["pyramid", "--partition", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("[ 1]"));

    let o = run(&["pyramid", "--partition", "1", "--format", "json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["boxes"][0]["col"], "1");

    assert_eq!(run(&["pyramid", "--partition", "0"]).status.code(), Some(2));
    assert_eq!(run(&["pyramid"]).status.code(), Some(2));
}

#[test]
fn gens_command() {
    let dir = std::env::temp_dir().join(format!("finite-w-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for f in [&a, &b] {
        let o = run(&["gens", "--kind", "so", "--partition", "3,1", "--format", "json", "--out", f.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let j: serde_json::Value = serde_json::from_slice(&x).unwrap();
    let recs = j["records"].as_array().unwrap();
    let modes: Vec<&str> = recs.iter().map(|r| r["mode"].as_str().unwrap()).collect();
    assert_eq!(modes, ["L_k", "L_k", "L_k", "L_k;R", "L_k"]);
    assert!(recs.iter().all(|r| r["member"] == true && r["grCheck"] == true));
    assert!(!String::from_utf8(x).unwrap().contains('.'));
    std::fs::remove_dir_all(&dir).unwrap();

    let o = run(&["gens", "--kind", "sp", "--partition", "2,2", "--format", "json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(j["records"].as_array().unwrap().iter().all(|r| r["mode"] == "L_k"));

    let o = run(&["gens", "--kind", "sp", "--partition", "3,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("not admissible"));
    assert_eq!(run(&["gens", "--kind", "su", "--partition", "2"]).status.code(), Some(2));
    assert_eq!(run(&["gens", "--kind", "gl", "--partition", "2", "--p-max", "1/3"]).status.code(), Some(2));
}

#[test]
fn gens_options() {
    let o = run(&["gens", "--kind", "so", "--partition", "3,1", "--p-max", "2", "--floor", "-8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("so(3,1): 4 records (p <= 2, floor z^-4)\n"));
    let o = run(&["gens", "--kind", "gl", "--partition", "3,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("T_main"));
}

#[test]
fn verify_command() {
    let o = run(&["verify", "--check", "zy", "--kind", "so", "--partition", "3,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PASS so(3,1) zy: floor z^-5\nzy: 1/1 checks passed\n");

    let o = run(&["verify", "--suite", "quick", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["passed"], true);

    assert_eq!(run(&["verify", "--suite", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--check", "nosuch", "--kind", "so", "--partition", "3,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--check", "zy"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--kind", "so", "--partition", "3,1"]).status.code(), Some(2));
    // odd gradings fall back to invariance under all of g_{>0}
    assert_eq!(run(&["verify", "--check", "membership", "--kind", "gl", "--partition", "2,1"]).status.code(), Some(0));
}

#[test]
fn standard_suite() {
    let o = run(&["verify", "--suite", "standard"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("standard: 53/53 checks passed\n"));
}

#[test]
fn identities_command() {
    let o = run(&["identities", "--kind", "sp", "--partition", "2,2", "--floor", "-10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS sp(2,2) zy"));
    assert!(text.contains("PASS sp(2,2) skv1"));
    assert!(text.contains("PASS sp(2,2) help"));
    assert_eq!(run(&["identities", "--kind", "sp", "--partition", "3"]).status.code(), Some(2));
}
