use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use spets_core::Multipartition;
use spets_kit::run;

fn kit(args: &[&str]) -> spets_kit::Outcome {
    run(std::iter::once("spets-kit").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = kit(&full);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

/// Compares against `tests/golden/<name>.json`; `UPDATE_GOLDEN=1` rewrites the file.
fn golden(name: &str, args: &[&str]) {
    let got = json(args);
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
    }
    let want: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(got, want, "{name}");
}

#[test]
fn golden_outputs() {
    golden("symbols_g333", &["symbols", "--group", "3,3,3", "--type", "3,0"]);
    golden("families_g333", &["families", "--group", "3,3,3"]);
    golden("springer_g662", &["springer", "--group", "6,6,2", "--lattice", "L0"]);
    golden(
        "fakedeg_g212",
        &["fakedeg", "--group", "2,1,2", "--mp", "1|1", "--check-oracle"],
    );
    golden(
        "jinduce_g3127",
        &["jinduce", "--mp", "3,2,2,1|4,3,1|6,5", "--factor", "2"],
    );
    golden("dihedral_6", &["dihedral", "-e", "6"]);
}

#[test]
fn symbols_of_g313() {
    let v = json(&["symbols", "--group", "3,1,3", "--type", "3,1"]);
    assert_eq!(v["symbols"].as_array().unwrap().len(), 22);
    assert_eq!(v["weight"], serde_json::json!([1, 0, 0]));
    // 12, not 13: (∅,[3],∅) gives 0,3|4|1, which is not monotone (see README).
    assert_eq!(v["distinguished"], 12);
}

#[test]
fn springer_set_of_g2() {
    let out = kit(&["springer", "--group", "6,6,2", "--lattice", "L0"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "chi_0 chi_1 chi_2 chi_3 chi_6");
}

#[test]
fn fake_degree_with_oracle() {
    let out = kit(&["fakedeg", "--group", "2,1,2", "--mp", "1|1", "--check-oracle"]);
    assert_eq!((out.code, out.stdout.trim()), (0, "X + X^3 [oracle OK]"));
}

#[test]
fn empty_components_parse_as_values() {
    let out = kit(&["jinduce", "--mp", "-|2", "--lift", "1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("2|-"));
}

#[test]
fn exit_codes() {
    assert_eq!(kit(&["frobnicate"]).code, 2);
    assert_eq!(kit(&["fakedeg", "--group", "2,1,2", "--mp", "1|1|1"]).code, 2);
    assert_eq!(kit(&["fakedeg", "--group", "2,1,2", "--mp", "a|1"]).code, 2);
    assert_eq!(kit(&["families", "--group", "4,2,2"]).code, 2);
    assert_eq!(kit(&["oracle-check", "--group", "4,1,4"]).code, 2);
    assert_eq!(kit(&["--help"]).code, 0);
    let ok = kit(&["oracle-check", "--group", "2,1,3", "--bound", "48"]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
}

#[test]
fn sampled_oracle_check_depends_only_on_the_seed() {
    let a = kit(&["oracle-check", "--group", "3,1,2", "--samples", "4", "--seed", "7"]);
    let b = kit(&["oracle-check", "--group", "3,1,2", "--samples", "4", "--seed", "7"]);
    assert_eq!(a, b);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout.lines().count(), 5);
}

#[test]
fn multipartition_text_format() {
    let m = Multipartition::parse("2|-|1", Some(3)).unwrap();
    assert_eq!((m.num_components(), m.size(), m.to_string().as_str()), (3, 3, "2|-|1"));
    let m = Multipartition::parse("-|-", Some(2)).unwrap();
    assert_eq!(m.size(), 0);
    let m = Multipartition::parse("1,1|3", None).unwrap();
    assert_eq!((m.num_components(), m.size()), (2, 5));
    assert!(Multipartition::parse("1|1", Some(3)).is_err());
}

#[test]
fn binary_honours_the_bound_variable() {
    let bin = env!("CARGO_BIN_EXE_spets-kit");
    let out = Command::new(bin)
        .args(["fakedeg", "--group", "2,1,2", "--mp", "-|2", "--check-oracle"])
        .env("SPETS_KIT_BOUND", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the bound 5"));
    let out = Command::new(bin).args(["dihedral", "-e", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
