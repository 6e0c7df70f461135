use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fa")).args(args).output().expect("fa runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fa-cli-{name}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn export(dir: &PathBuf, name: &str) -> String {
    let path = dir.join(format!("{}.json", name.replace(['(', ')'], "")));
    let path = path.to_string_lossy().into_owned();
    assert!(fa(&["catalog", "export", name, "--out", &path]).status.success());
    path
}

#[test]
fn homology_of_chain_two() {
    let dir = scratch_dir("homology");
    let f = export(&dir, "chain(2)");
    let o = fa(&["homology", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "universal group: Z\n");
}

#[test]
fn classify_chain_two() {
    let dir = scratch_dir("classify");
    let f = export(&dir, "chain(2)");
    let o = fa(&["classify", &f]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("effect_algebra ✓"), "{text}");
    assert!(text.contains("orthoalgebra ✗ (witness a=1)"), "{text}");
}

#[test]
fn hom_of_chain_one_summary() {
    let dir = scratch_dir("hom");
    let f = export(&dir, "chain(1)");
    let o = fa(&["hom", &f, &f, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"]["summary"]["identity"], "trivial");
    assert_eq!(v["results"]["summary"]["zero"], "chain(1)");
    assert_eq!(v["status"], "pass");
}

#[test]
fn catalog_list_and_show() {
    let v: Value = serde_json::from_str(&stdout(&fa(&["catalog", "list", "--json"]))).unwrap();
    assert!(v["results"]["entries"].as_array().unwrap().len() >= 12);
    let v: Value = serde_json::from_str(&stdout(&fa(&["catalog", "show", "boolean(2)", "--json"]))).unwrap();
    assert_eq!(v["results"]["structure"]["elements"].as_array().unwrap().len(), 4);
    assert_eq!(fa(&["catalog", "show", "nonsense"]).status.code(), Some(2));
}

#[test]
fn exported_files_revalidate_identically() {
    let dir = scratch_dir("export");
    let f = export(&dir, "chain(3)");
    let a = stdout(&fa(&["validate", &f, "--json"]));
    let b = stdout(&fa(&["validate", "catalog:chain(3)", "--json"]));
    let (a, b): (Value, Value) = (serde_json::from_str(&a).unwrap(), serde_json::from_str(&b).unwrap());
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["input_digest"], b["input_digest"]);
    assert_eq!(a["status"], "pass");
}

#[test]
fn exit_codes() {
    let dir = scratch_dir("exit");
    let bad = dir.join("multi.json");
    fs::write(
        &bad,
        r#"{"kind":"effect_algebra","name":"bad","elements":["0","a","b","1"],"zero":"0","one":"1",
            "sum":[["a","b","1"],["a","b","0"]]}"#,
    )
    .unwrap();
    let o = fa(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("multi-valued"));

    let o = fa(&["validate", bad.to_str().unwrap(), "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "input-error");

    // a Frobenius algebra that is not an effect algebra
    let o = fa(&["validate", "catalog:Z/2", "--kind", "effect-algebra"]);
    assert_eq!(o.status.code(), Some(1));
    let o = fa(&["lift", "horn2_1", "catalog:chain(1)", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["certificates"][0]["verdict"], "no-extension");
    assert_eq!(fa(&["lift", "ehorn2_0", "catalog:chain(1)"]).status.code(), Some(0));
    assert_eq!(fa(&["lift", "no-such-shape", "catalog:chain(1)"]).status.code(), Some(2));
    assert_eq!(fa(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn nerve_output_validates_as_nerve() {
    let dir = scratch_dir("nerve");
    let out = dir.join("n.json");
    let out = out.to_str().unwrap();
    assert!(fa(&["nerve", "catalog:boolean(2)", "--out", out]).status.success());
    let o = fa(&["validate", out]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    // recognized as the nerve of an effect algebra
    assert_eq!(stdout(&fa(&["homology", out])), "universal group: Z^2\n");
    let z3 = dir.join("z3.json");
    let z3 = z3.to_str().unwrap();
    assert!(fa(&["nerve", "catalog:Z/3", "--out", z3]).status.success());
    assert_eq!(stdout(&fa(&["homology", z3])), "H1: Z/3\n");
}

#[test]
fn seed_order_relabels_elements() {
    let declared: Value = serde_json::from_str(&stdout(&fa(&["catalog", "show", "S3", "--json"]))).unwrap();
    let sorted: Value =
        serde_json::from_str(&stdout(&fa(&["catalog", "show", "S3", "--json", "--seed-order", "sorted"]))).unwrap();
    let mut names: Vec<String> = declared["results"]["structure"]["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect();
    names.sort();
    let got: Vec<String> = sorted["results"]["structure"]["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect();
    assert_eq!(got, names);
}

#[test]
fn enumerate_emits_files() {
    let dir = scratch_dir("enumerate");
    let d = dir.to_str().unwrap();
    let o = fa(&["enumerate", "--size", "4", "--kind", "effect-algebra", "--emit", d, "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"]["count"], 3);
    for f in v["results"]["written"].as_array().unwrap() {
        assert_eq!(fa(&["validate", f.as_str().unwrap()]).status.code(), Some(0));
    }
}
