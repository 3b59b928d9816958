use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koszulkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn harrison_of_two_points() {
    let o = run(&[
        "harr",
        &fixture("G2.json"),
        "--coaug",
        "(g1+g2)/2",
        "--max-weight",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("ω = -1/8 [y_g1,y_g1]"), "{s}");
    assert!(s.contains("max_weight = 4, reliable_weight = 4"), "{s}");
}

#[test]
fn coaugmentation_must_be_chosen() {
    let o = run(&["harr", &fixture("G2.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--coaug"));
}

#[test]
fn linear_mc_solution() {
    let o = run(&["mc", "solve-linear", &fixture("Lx.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end().lines().last(), Some("-x"));
}

#[test]
fn contraction_of_the_ground_field() {
    let o = run(&[
        "--output",
        "json",
        "lemma410",
        &fixture("A_k.json"),
        "--max-weight",
        "5",
        "--degrees",
        "-1..4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "PASS");
    let dims: Vec<i64> = v["tables"]["homology"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["dim"].as_i64().unwrap())
        .collect();
    assert_eq!(dims, [0, 1, 0, 0, 0, 0]);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["validate", &fixture("P1.json")]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["weq-cog", &fixture("fold_G2_K.json")]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["weq-cog", &fixture("swap_G2.json")]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["validate", "/nonexistent.json"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn manifest_parameters_apply() {
    let m = format!("{}#twist", fixture("twist_Lx.json"));
    let o = run(&["weq-cula", &m]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degrees: -1..3"));
    let o = run(&["weq-cula", &m, "--degrees", "0..1"]);
    assert!(stdout(&o).contains("degrees: 0..1"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--output",
        "json",
        "unit",
        &fixture("G2.json"),
        "--coaug",
        "g1",
        "--max-weight",
        "4",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn printed_objects_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "--output",
        "json",
        "twist",
        &fixture("Lx.json"),
        "--element",
        "-x",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let path = dir.path().join("twisted.json");
    std::fs::write(&path, serde_json::to_string(&v["result"]).unwrap()).unwrap();
    let back = run(&[
        "--output",
        "json",
        "twist",
        path.to_str().unwrap(),
        "--element",
        "0",
    ]);
    let w: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(v["result"], w["result"]);
    assert_eq!(
        run(&["validate", path.to_str().unwrap()]).status.code(),
        Some(0)
    );
}
