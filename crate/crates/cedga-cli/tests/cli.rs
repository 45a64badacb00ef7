use std::path::PathBuf;
use std::process::Command;

use assert_cmd::prelude::*;
use serde_json::Value;

fn cedga() -> Command {
    let mut cmd = Command::cargo_bin("cedga").expect("binary is built");
    cmd.env_remove("CEDGA_MAX_LEN");
    cmd
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn json(cmd: &mut Command) -> (i32, Value) {
    let out = cmd.arg("--json").output().expect("runs");
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is json");
    (out.status.code().expect("exit code"), v)
}

#[test]
fn emitted_catalog_feeds_h0_through_stdin() {
    let emitted = cedga().args(["catalog", "unknot_one_handle", "--emit"]).output().unwrap();
    assert!(emitted.status.success());
    let out = assert_cmd::Command::from_std(cedga())
        .args(["h0", "-", "--json"])
        .write_stdin(emitted.stdout)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "h0");
    assert_eq!(v["verdict"]["is_ground_ring"], true);
    assert_eq!(v["verdict"]["dimension"], 1);
    for key in ["certificates", "bounds", "timings"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn missing_file_and_bad_usage_exit_2() {
    cedga().args(["check-d2", "nonexistent.cedga"]).assert().code(2);
    cedga().args(["frobnicate"]).assert().code(2);
    cedga().args(["check-d2", &fixture("trivial.cedga"), "--max-len", "0"]).assert().code(2);
    cedga().args(["catalog", "trefoil"]).assert().code(2);
}

#[test]
fn parse_errors_are_positioned_and_exit_2() {
    let out = cedga().args(["check-d2", &fixture("broken.cedga")]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("broken.cedga:6:16:"), "{err}");
    assert!(err.contains("t0_12*t0_23"), "{err}");
    assert!(!err.contains("panicked"));
}

#[test]
fn obstruct_across_three_files() {
    let (code, v) = json(cedga().args([
        "obstruct",
        &fixture("unknot_edge.cedga"),
        "--codomain",
        &fixture("i3.cedga"),
        "--link-map",
        &fixture("pairing.cedga"),
    ]));
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["status"], "obstructed");
    assert_eq!(v["certificates"]["target"], "E1");
    assert_eq!(v["bounds"]["max_word_length"], 6);
}

#[test]
fn checks_report_pass_and_failure_codes() {
    cedga().args(["check-d2", &fixture("i3.cedga")]).assert().code(0);
    let (code, v) = json(cedga().args(["check-d2", &fixture("bad_square.cedga")]));
    assert_eq!((code, v["verdict"]["generator"].as_str()), (1, Some("a")));
    assert_eq!(v["certificates"]["residual"], "b*b");

    cedga().args(["grade", &fixture("i3.cedga")]).assert().code(0);
    cedga().args(["grade", &fixture("wrong_degree.cedga")]).assert().code(1);
    cedga().args(["parity", &fixture("i3.cedga")]).assert().code(0);
    cedga().args(["parity", &fixture("wrong_degree.cedga")]).assert().code(1);
}

#[test]
fn exactness_and_triviality() {
    let (code, v) = json(cedga().args(["trivial", &fixture("trivial.cedga")]));
    assert_eq!((code, v["certificates"]["witness"].as_str()), (0, Some("a")));
    let (code, v) = json(cedga().args(["trivial", &fixture("i3.cedga"), "--max-len", "5"]));
    assert_eq!(code, 1);
    assert_eq!(v["verdict"]["status"], "not_within_bounds");
    assert_eq!(v["bounds"]["max_word_length"], 5);

    let (code, v) = json(cedga().args(["exact", &fixture("trivial.cedga"), "--target", "2*e"]));
    assert_eq!((code, v["certificates"]["witness"].as_str()), (0, Some("2*a")));
    cedga().args(["exact", &fixture("trivial.cedga"), "--target", "a +"]).assert().code(2);
}

#[test]
fn environment_sets_the_default_length() {
    let mut cmd = Command::cargo_bin("cedga").unwrap();
    cmd.env("CEDGA_MAX_LEN", "3").args(["trivial", &fixture("i3.cedga")]);
    let (_, v) = json(&mut cmd);
    assert_eq!(v["bounds"]["max_word_length"], 3);
    let mut cmd = Command::cargo_bin("cedga").unwrap();
    cmd.env("CEDGA_MAX_LEN", "3").args(["trivial", &fixture("i3.cedga"), "--max-len", "4"]);
    let (_, v) = json(&mut cmd);
    assert_eq!(v["bounds"]["max_word_length"], 4);
}

#[test]
fn ring_override_reinterprets_coefficients() {
    let (code, v) = json(cedga().args(["exact", &fixture("trivial.cedga"), "--target", "2*e", "--ring", "GF2"]));
    // 2 = 0 in GF2, so the target vanishes
    assert_eq!((code, v["certificates"]["witness"].as_str()), (0, Some("0")));
}

#[test]
fn maps_and_augmentations_from_the_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let emit = |name: &str| {
        let path = dir.path().join(format!("{name}.cedga"));
        let out = cedga().args(["catalog", name, "--emit"]).output().unwrap();
        std::fs::write(&path, out.stdout).unwrap();
        path.to_string_lossy().into_owned()
    };
    let saddle = emit("saddle_cobordism");
    let (code, v) = json(cedga().args(["verify-map", &saddle]));
    assert_eq!(code, 0);
    assert_eq!(v["certificates"]["checks"][0]["d_of_image"], "E + y0_12");

    let torus = emit("singular_torus");
    cedga().args(["verify-aug", &torus, "--aug", "eps"]).assert().code(0);
    cedga().args(["verify-aug", &torus, "--aug", "eps_prime"]).assert().code(0);
    let mutated = std::fs::read_to_string(&torus).unwrap().replace("c1_21 -> lam^-1 ;", "c1_21 -> lam ;");
    let path = dir.path().join("mutated.cedga");
    std::fs::write(&path, mutated).unwrap();
    let (code, v) = json(cedga().args(["verify-aug", path.to_str().unwrap(), "--aug", "eps"]));
    assert_eq!((code, v["verdict"]["generator"].as_str()), (1, Some("c1_11")));

    let unknot = emit("unknot_one_handle");
    let out_path = dir.path().join("lin.cedga");
    cedga().args(["linearize", &unknot, "-o", out_path.to_str().unwrap()]).assert().code(0);
    let lin = std::fs::read_to_string(&out_path).unwrap();
    assert!(lin.contains("diff a = 0"), "{lin}");
    cedga().args(["check-d2", out_path.to_str().unwrap()]).assert().code(0);
}

#[test]
fn json_is_deterministic_apart_from_timings() {
    let run = || {
        let (_, mut v) = json(cedga().args(["h0", &fixture("i3.cedga")]));
        v.as_object_mut().unwrap().remove("timings");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run(), run());
    let a = cedga().args(["catalog", "a3_link", "--emit"]).output().unwrap().stdout;
    let b = cedga().args(["catalog", "a3_link", "--emit"]).output().unwrap().stdout;
    assert_eq!(a, b);
}
