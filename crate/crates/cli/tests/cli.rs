use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nodal-k3"))
        .args(args)
        .output()
        .expect("binary should start")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "status {:?}\nstderr:\n{}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout should be JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nodal-k3-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn classify_empty_and_reduced() {
    let base = ["classify", "--h2", "18", "--r", "2", "--d", "1", "--a", "5"];
    let empty = json_of(&run(&[&base[..], &["--cl-ne-pic"]].concat()));
    assert_eq!(empty["outcome"], "empty");
    assert_eq!(empty["survivors"].as_array().unwrap().len(), 2);
    let reduced = json_of(&run(&base));
    assert_eq!(reduced["outcome"], "reduced_point_locally_free");
}

#[test]
fn classify_invalid_exits_two() {
    let out = run(&["classify", "--h2", "4", "--r", "2", "--d", "1", "--a", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("d^2*H^2 - 2*r*a != -2"));
    let out = run(&[
        "classify",
        "--h2",
        "4",
        "--cl-ne-pic",
        "--r",
        "1",
        "--d",
        "1",
        "--a",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn negative_degree_is_accepted() {
    let v = json_of(&run(&[
        "classify", "--h2", "4", "--r", "1", "--d", "-1", "--a", "3",
    ]));
    assert_eq!(v["instance"]["d"], -1);
}

#[test]
fn search_audit_and_bounds() {
    let v = json_of(&run(&[
        "search",
        "--h2",
        "18",
        "--cl-ne-pic",
        "--r",
        "2",
        "--d",
        "1",
        "--a",
        "5",
        "--audit",
    ]));
    assert_eq!(v["bounds"]["k1"], 12);
    assert_eq!(v["bounds"]["e1"], 12);
    let audit = v["audit"].as_array().unwrap();
    let v_itself = audit.iter().find(|c| c["k1"] == 2 && c["e1"] == 4).unwrap();
    assert!(v_itself["failures"]
        .to_string()
        .contains("wall-position: W=W_{-1}"));
    assert!(v["u_survivors"].as_array().unwrap().is_empty());

    let out = run(&[
        "search", "--h2", "18", "--r", "2", "--d", "1", "--a", "5", "--k1-max", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pell_and_descent() {
    let v = json_of(&run(&["pell", "--r", "3", "--bound", "10"]));
    assert_eq!(v["minimal"], true);
    assert!(v["solutions"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([3, 1])));
    assert_eq!(run(&["pell", "--r", "0"]).status.code(), Some(2));

    let v = json_of(&run(&["descent", "--splitting", "2,-2"]));
    assert_eq!(v["descends"], false);
    assert_eq!(v["hom_dim_twist_minus2"], 3);
    let out = run(&["descent", "--splitting", "1,0", "--require-zero-sum"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn walls_are_byte_deterministic() {
    let args = |out: &str| {
        vec![
            "walls".to_string(),
            "--h2=4".into(),
            "--r=3".into(),
            "--d=1".into(),
            "--a=1".into(),
            "--eps=1/100".into(),
            "--epsp=1/1000000".into(),
            "--m-min=-3".into(),
            "--m-max=3".into(),
            format!("--out={out}"),
        ]
    };
    let (a, b) = (scratch("a.svg"), scratch("b.svg"));
    for p in [&a, &b] {
        let argv = args(p.to_str().unwrap());
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        let out = run(&argv);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let (ja, jb) = (a.with_extension("json"), b.with_extension("json"));
    assert_eq!(fs::read(&ja).unwrap(), fs::read(&jb).unwrap());
    let sidecar: Value = serde_json::from_slice(&fs::read(&ja).unwrap()).unwrap();
    assert_eq!(sidecar["walls"].as_array().unwrap().len(), 7);
    let _ = fs::remove_dir_all(a.parent().unwrap());
}

#[test]
fn walls_need_ordered_infinitesimals() {
    let out = run(&[
        "walls",
        "--h2",
        "4",
        "--r",
        "3",
        "--d",
        "1",
        "--a",
        "1",
        "--eps",
        "1/100",
        "--epsp",
        "1/10",
        "--out",
        "/dev/null",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_format_lists_top_level_keys() {
    let out = run(&["pell", "--r", "2", "--bound", "3", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().any(|l| l == "minimal: true"), "{text}");
}
