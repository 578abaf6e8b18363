//! Runs the binary on the fixture documents and compares against golden output.
//! Set `UPDATE_GOLDEN=1` to rewrite the golden files.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn fixture(name: &str) -> String {
    dir("fixtures").join(name).to_string_lossy().into_owned()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_centralizer"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Absolute fixture paths leak into some messages; golden files use the bare name.
fn normalize(s: &str) -> String {
    s.replace(&format!("{}/", dir("fixtures").to_string_lossy()), "")
}

fn golden(name: &str, args: &[&str]) -> Value {
    let r = run(args);
    assert_eq!(r.code, 0, "{args:?} failed: {}", r.stderr);
    let actual = normalize(&r.stdout);
    let path = dir("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {name}"));
    assert_eq!(actual, expected, "output of {args:?} differs from {name}");
    if name.ends_with(".json") {
        serde_json::from_str(&actual).unwrap()
    } else {
        Value::Null
    }
}

#[test]
fn analyze_nilpotent_jordan_shorthand() {
    let v = golden("analyze_nilpotent_542.json", &["analyze", &fixture("nilpotent_542.json")]);
    let block = &v["structure"]["maximal_divisors"][0];
    assert_eq!(block["power_index_set"], serde_json::json!([2, 4, 5]));
    assert_eq!(v["structure"]["frobenius_dimension"], 27);
    assert_eq!(v["homological"]["rep_finite"], false);
    assert_eq!(v["homological"]["dominant_dimension"], "2");
}

#[test]
fn analyze_permutation_over_f3() {
    let v = golden("analyze_perm_32_f3.json", &["analyze", &fixture("perm_32_f3.json")]);
    assert_eq!(v["homological"]["rep_finite"], true);
    assert_eq!(v["cycle_type"], "(3,2)");
}

#[test]
fn analyze_scalar() {
    let v = golden("analyze_scalar_7.json", &["analyze", &fixture("scalar_7.json")]);
    assert_eq!(v["structure"]["maximal_divisors"][0]["maximal_divisor"], "x - 7");
    assert_eq!(v["structure"]["frobenius_dimension"], 1);
}

#[test]
fn analyze_text_rendering() {
    golden(
        "analyze_nilpotent_542.txt",
        &["analyze", &fixture("nilpotent_542.json"), "--format", "text"],
    );
}

fn holds(v: &Value) -> [bool; 3] {
    ["morita", "derived", "almost_nu_stable_derived"].map(|k| v[k]["holds"].as_bool().unwrap())
}

#[test]
fn compare_morita_pair() {
    let v = golden(
        "compare_mixed.json",
        &["compare", &fixture("mixed_c.json"), &fixture("mixed_d.json")],
    );
    assert_eq!(holds(&v), [true, true, true]);
    assert!(v["morita"]["witness"].is_array());
}

#[test]
fn compare_separating_pair() {
    let v = golden(
        "compare_nilpotent_541_521.json",
        &["compare", &fixture("nilpotent_541.json"), &fixture("nilpotent_521.json")],
    );
    assert_eq!(holds(&v), [false, true, false]);
}

#[test]
fn compare_derived_not_morita() {
    let v = golden(
        "compare_nilpotent_542_531.json",
        &["compare", &fixture("nilpotent_542.json"), &fixture("nilpotent_531.json")],
    );
    assert_eq!(holds(&v), [false, true, true]);
}

#[test]
fn compare_depends_on_the_field() {
    let a = fixture("sigma18_a.json");
    let b = fixture("sigma18_b.json");
    let v = golden("compare_sigma18.json", &["compare", &a, &b]);
    assert_eq!(holds(&v), [false, false, false]);
    let v = golden("compare_sigma18_closure.json", &["compare", &a, &b, "--closure"]);
    assert_eq!(v["mode"], "closure");
    assert_eq!(v["morita"]["holds"], true);
}

#[test]
fn perm_parts() {
    let v = golden("perm_parts_15_4.json", &["perm", "15,4", "--char", "5", "parts", "15,3,2"]);
    let c = &v["closure"];
    assert_eq!(c["regular_parts"]["derived"]["holds"], true);
    assert_eq!(c["singular_parts"]["derived"]["holds"], true);
    assert_eq!(c["full"]["derived"]["holds"], false);
    assert_eq!(v["parts"][0]["regular"], "(4,1^15)");
    assert_eq!(v["parts"][1]["regular"], "(3,2,1^15)");
}

#[test]
fn perm_extend() {
    let v = golden("perm_extend_15_4.json", &["perm", "15,4", "--char", "5", "extend"]);
    assert_eq!(v["extension_morita_equivalent"], true);
    assert_eq!(v["extended"], "(15,4,1)");
}

#[test]
fn perm_closure_census() {
    let v = golden("perm_closure_5_13.json", &["perm", "5,13", "--char", "0", "closure", "7,11"]);
    assert_eq!(v["census"][0]["maximal_divisors"], 17);
    assert_eq!(v["census"][1]["maximal_divisors"], 17);
    assert_eq!(v["closure_verdict"]["morita"]["holds"], true);
}

#[test]
fn perm_analyze_matches_matrix_analyze() {
    let a = run(&["perm", "3,2", "--char", "3", "analyze"]);
    assert_eq!(a.code, 0);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    let m: Value = serde_json::from_str(&run(&["analyze", &fixture("perm_32_f3.json")]).stdout).unwrap();
    assert_eq!(v["report"]["structure"], m["structure"]);
}

#[test]
fn oracles_agree() {
    for (golden_name, file) in [
        ("oracle_nilpotent_21.json", "nilpotent_21.json"),
        ("oracle_identity_4.json", "identity_4.json"),
        ("oracle_random_f3.json", "random_f3.json"),
    ] {
        let v = golden(golden_name, &["oracle", &fixture(file)]);
        assert_eq!(v["all_agree"], true);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["compare", &fixture("mixed_c.json"), &fixture("mixed_d.json")];
    let first = run(&args).stdout;
    for seed in ["0", "0", "7"] {
        let again = run(&[&args[..], &["--seed", seed]].concat());
        let strip = |s: &str| s.replace("\"seed\": 7", "\"seed\": 0");
        assert_eq!(strip(&again.stdout), first);
    }
}

#[test]
fn exit_codes() {
    let bad = run(&["analyze", &fixture("bad_entry.json")]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("entry (2, 1)"), "{}", bad.stderr);

    let ceiling = run(&["analyze", &fixture("nilpotent_65.json")]);
    assert_eq!(ceiling.code, 3, "{}", ceiling.stderr);

    let mismatch = run(&["compare", &fixture("nilpotent_21.json"), &fixture("f5_jordan.json")]);
    assert_eq!(mismatch.code, 2);
    assert!(mismatch.stderr.contains("field mismatch"));

    let closure = run(&["compare", &fixture("nilpotent_21.json"), &fixture("nilpotent_21.json"), "--closure"]);
    assert_eq!(closure.code, 2);

    assert_eq!(run(&["oracle", &fixture("identity_13.json")]).code, 2);
    assert_eq!(run(&["perm", "4,x", "--char", "2", "analyze"]).code, 2);
    assert_eq!(run(&["perm", "4,2", "--char", "4", "analyze"]).code, 2);
    assert_eq!(run(&["perm", "4,2", "--char", "2", "parts"]).code, 2);
    assert_eq!(run(&["analyze", "no-such-file.json"]).code, 2);
}
