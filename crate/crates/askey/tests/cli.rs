use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn askey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_askey")).args(args).env_remove("ASKEY_CATALOG_DIR").output().unwrap()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn verify_fixed_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = askey(&[
        "verify", "--family", "qR", "--relation", "qRI", "--q", "2/5", "--alpha", "1/3", "--beta", "1/7", "--gamma", "1/11",
        "--N", "3", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = read_json(&out);
    assert_eq!(r["summary"], serde_json::json!({"pass": 1, "fail": 0, "skipped": 0}));
    assert_eq!(r["config_echo"]["command"], "verify");
    assert_eq!(r["results"][0]["params"][0]["q"], "2/5");
    assert!(r["version"].as_str().unwrap().starts_with("askey/"));
}

#[test]
fn report_goes_to_stdout_without_out() {
    let o = askey(&["verify", "--relation", "KI", "--N", "4", "--samples", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["summary"]["pass"], 2);
}

#[test]
fn list_b2_entries() {
    let o = askey(&["list", "--family", "qR", "--kind", "B2"]);
    assert_eq!(o.status.code(), Some(0));
    let ids: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(ids.len(), 12);
    assert!(ids.iter().all(|id| id.starts_with("qR")));
}

#[test]
fn sweep_everything() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let o = askey(&["sweep", "--all", "--N", "2..5", "--samples", "3", "--seed", "7", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = read_json(&out);
    assert_eq!(r["summary"]["fail"], 0);
    assert!(r["summary"]["pass"].as_u64().unwrap() > 500);

    let again = askey(&["report", out.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&again.stdout).contains("fail=0"));
}

#[test]
fn sweep_is_reproducible() {
    let run = || {
        let o = askey(&["sweep", "--family", "dqK", "--N", "3..4", "--seed", "11"]);
        serde_json::from_slice::<Value>(&o.stdout).unwrap()["results"].clone()
    };
    assert_eq!(run(), run());
}

#[test]
fn classify_krawtchouk() {
    let o = askey(&["classify", "--family", "K"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    let c = &r["results"][0];
    assert_eq!(c["matched"], serde_json::json!(["identity", "KI", "KII"]));
    assert_eq!(c["unmatched"], serde_json::json!([]));
    assert_eq!(c["discovered"][1]["N_bar"], "N-1");
}

#[test]
fn spectral_checks() {
    let o = askey(&["spectral", "--relation", "RI", "--N", "2..3", "--samples", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["summary"]["pass"], 6);
}

#[test]
fn configuration_errors_exit_2() {
    for args in [
        &["verify", "--relation", "qRI", "--q", "0.4"][..],
        &["verify", "--relation", "noSuchRelation"],
        &["verify", "--relation", "KI", "--gamma", "1/2"],
        &["verify", "--relation", "KI", "--family", "qR"],
        &["verify", "--relation", "qRI", "--q", "1", "--alpha", "1/3", "--beta", "1/7", "--gamma", "1/11"],
        &["sweep", "--family", "XX"],
        &["sweep", "--N", "5..2"],
        &["classify", "--family", "G"],
        &["spectral", "--relation", "qRB2I"],
        &["frobnicate"],
        &["report", "/nonexistent/report.json"],
    ] {
        assert_eq!(askey(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn tampered_report_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    assert_eq!(askey(&["verify", "--relation", "KI", "--out", out.to_str().unwrap()]).status.code(), Some(0));
    let mut r = read_json(&out);
    r["summary"]["pass"] = 99.into();
    std::fs::write(&out, r.to_string()).unwrap();
    assert_eq!(askey(&["report", out.to_str().unwrap()]).status.code(), Some(2));
}

/// A catalog directory with one coefficient doubled makes the relation fail.
#[test]
fn catalog_dir_override() {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog");
    let dir = tempfile::tempdir().unwrap();
    for e in std::fs::read_dir(&src).unwrap() {
        let e = e.unwrap();
        std::fs::copy(e.path(), dir.path().join(e.file_name())).unwrap();
    }
    let kf = dir.path().join("K.json");
    let mut doc = read_json(&kf);
    let entry = doc["entries"].as_array_mut().unwrap().iter_mut().find(|e| e["id"] == "KI").unwrap();
    let coeff = entry["plus"]["terms"][0]["coeff"].take();
    entry["plus"]["terms"][0]["coeff"] = serde_json::json!(["mul", ["const", "2"], coeff]);
    std::fs::write(&kf, serde_json::to_string_pretty(&doc).unwrap()).unwrap();

    let run = |dir: &Path| {
        Command::new(env!("CARGO_BIN_EXE_askey"))
            .args(["verify", "--relation", "KI", "--N", "4"])
            .env("ASKEY_CATALOG_DIR", dir)
            .output()
            .unwrap()
    };
    let o = run(dir.path());
    assert_eq!(o.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!r["results"][0]["residual_locus"].as_array().unwrap().is_empty());
    assert_eq!(run(&src).status.code(), Some(0));

    std::fs::write(&kf, "{not json").unwrap();
    assert_eq!(run(dir.path()).status.code(), Some(2));
}
