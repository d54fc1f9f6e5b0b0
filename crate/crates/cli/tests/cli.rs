use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_morreylab"))
}

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn run(args: &[&str], out: &Path) -> Output {
    bin().args(args).arg("--out").arg(out).output().unwrap()
}

fn write_config(dir: &Path, name: &str, value: &Value) -> String {
    let path = dir.join(name);
    fs::write(&path, value.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn example(name: &str) -> String {
    configs().join(name).to_str().unwrap().to_string()
}

#[test]
fn eval_riesz_indicator() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("eval");
    let o = run(&["eval", "--config", &example("eval.json")], &out);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = fs::read_to_string(out.join("values.csv")).unwrap();
    assert!(csv.starts_with("x,value\n"));
    let at_zero: f64 = csv
        .lines()
        .find_map(|l| l.strip_prefix("0.0,"))
        .expect("a cell centered at 0")
        .parse()
        .unwrap();
    // ∫_{-1}^{1} |y|^{-1/2} dy / γ(1/2) = 4/√(2π)
    let exact = 4.0 / (2.0 * std::f64::consts::PI).sqrt();
    assert!(((at_zero - exact) / exact).abs() <= 1e-3, "{at_zero}");
    let meta = read_json(&out.join("meta.json"));
    assert_eq!(meta["seed"], 0);
    assert_eq!(meta["cells"], 4097);
}

#[test]
fn eval_error_classes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let o = run(
        &["eval", "--config", bad.to_str().unwrap()],
        &dir.path().join("x"),
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("config"));

    let mut cfg = read_json(&configs().join("eval.json"));
    cfg["operator"]["alpha"] = json!(1.0);
    let path = write_config(dir.path(), "alpha.json", &cfg);
    let o = run(&["eval", "--config", &path], &dir.path().join("x"));
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("alpha"), "{}", stderr(&o));

    let mut cfg = read_json(&configs().join("eval.json"));
    cfg["grid"]["resolutoin"] = json!(64);
    let path = write_config(dir.path(), "typo.json", &cfg);
    let o = run(&["eval", "--config", &path], &dir.path().join("x"));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("grid"), "{}", stderr(&o));

    let o = run(
        &["eval", "--config", "/nonexistent/config.json"],
        &dir.path().join("x"),
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn norm_of_a_constant_is_zero_in_bmo() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = json!({
        "grid": { "n": 1, "half_width": 4.0, "resolution": 256 },
        "function": { "shape": "constant", "value": 3.5 },
        "norm": { "space": "bmo", "family": { "kind": "standard" } }
    });
    let path = write_config(dir.path(), "bmo.json", &cfg);
    let out = dir.path().join("norm");
    let o = run(&["norm", "--config", &path], &out);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = read_json(&out.join("report.json"));
    assert_eq!(report["report"]["value"], 0.0);
    assert!(!report["report"]["balls"].as_array().unwrap().is_empty());
    let csv = fs::read_to_string(out.join("report.csv")).unwrap();
    assert!(csv.starts_with("center_x,center_y,radius,value\n"));
}

#[test]
fn example_configs_run() {
    let dir = tempfile::tempdir().unwrap();
    for cmd in ["norm", "apq", "dini"] {
        let out = dir.path().join(cmd);
        let o = run(&[cmd, "--config", &example(&format!("{cmd}.json"))], &out);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", stderr(&o));
        assert!(out.join("report.json").exists() && out.join("report.csv").exists());
    }
    let out = dir.path().join("verify");
    let o = run(
        &[
            "verify",
            "theorem2-dilation",
            "--config",
            &example("verify.json"),
        ],
        &out,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn apq_unit_weight() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = read_json(&configs().join("apq.json"));
    cfg["w"] = json!({ "form": "constant", "c": 1.0 });
    let path = write_config(dir.path(), "apq.json", &cfg);
    let out = dir.path().join("apq");
    let o = run(&["apq", "--config", &path], &out);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = read_json(&out.join("report.json"));
    assert_eq!(report["report"]["constant"], 1.0);
    assert_eq!(report["report"]["divergence_flag"], false);
}

#[test]
fn dini_of_a_constant_kernel() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = json!({ "kernel": { "n": 2, "form": "constant", "c": 2.0 }, "s": 2.0 });
    let path = write_config(dir.path(), "dini.json", &cfg);
    let out = dir.path().join("dini");
    let o = run(&["dini", "--config", &path, "--format", "csv"], &out);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(read_json(&out.join("report.json"))["report"]["value"], 0.0);
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(
        stdout.starts_with("command,divergent,value\ndini,false,0.0"),
        "{stdout}"
    );
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t2");
    let o = bin()
        .args(["verify", "theorem2-dilation", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = read_json(&out.join("report.json"));
    assert!(report["spread"].as_f64().unwrap() <= 1.05);
    let csv = fs::read_to_string(out.join("report.csv")).unwrap();
    assert!(csv.starts_with("sample_id,lambda,numerator,denominator,ratio\n"));
    assert_eq!(csv.lines().count(), 8);

    let out = dir.path().join("u");
    let o = bin()
        .args(["verify", "unboundedness", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let ratios: Vec<f64> = read_json(&out.join("report.json"))["samples"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["ratio"].as_f64().unwrap())
        .collect();
    assert!(ratios.windows(2).all(|w| w[1] > w[0]));

    let o = bin()
        .args(["verify", "theorem9"])
        .arg("--out")
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("study"));

    // tolerance failure still leaves the report behind
    let path = write_config(
        dir.path(),
        "tight.json",
        &json!({ "tolerances": { "spread": 1.0 } }),
    );
    let out = dir.path().join("tight");
    let o = run(&["verify", "theorem2-dilation", "--config", &path], &out);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(read_json(&out.join("report.json"))["pass"], false);

    let path = write_config(
        dir.path(),
        "weight.json",
        &json!({ "w": { "form": "power", "beta": -0.75 } }),
    );
    let o = run(
        &["verify", "theorem2-dilation", "--config", &path],
        &dir.path().join("w"),
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("w:"), "{}", stderr(&o));
}

#[test]
fn resolution_override_and_thread_variable() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("eval");
    let o = bin()
        .args([
            "eval",
            "--config",
            &example("eval.json"),
            "--resolution",
            "513",
            "--out",
        ])
        .arg(&out)
        .env("MORREYLAB_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(read_json(&out.join("meta.json"))["cells"], 513);

    let o = bin()
        .args(["eval", "--config", &example("eval.json"), "--out"])
        .arg(&out)
        .env("MORREYLAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("MORREYLAB_THREADS"));
}
